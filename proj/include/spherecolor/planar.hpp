#pragma once

// Embedded planar graphs given by rotation systems, their faces and duals,
// face posets, and the face-colouring pipeline for Eulerian graphs.
//
// Conventions:
//  * Rotations list incident edges counterclockwise.
//  * A side (dart) is an edge with a direction. From side (e, u->v) the next
//    side of the same face leaves v along the rotation successor of e at v.
//  * Faces are numbered f0, f1, ... by their smallest side, sides ordered by
//    (edge id, tail vertex id). Each boundary starts at that side.
//  * Unless overridden, the root of the dual spanning tree (and the outer
//    face of drawings) is the highest-numbered face.

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "spherecolor/bipartite.hpp"
#include "spherecolor/matching.hpp"
#include "spherecolor/poset.hpp"
#include "spherecolor/sphere_color.hpp"

namespace spherecolor {

struct GraphEdge {
  std::string id;
  std::string u;
  std::string v;
};

class EmbeddedGraph;
EmbeddedGraph make_graph(std::vector<std::string> vertices,
                         std::vector<std::vector<std::string>> rotations, std::vector<GraphEdge> edges);

class EmbeddedGraph {
 public:
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }

  std::size_t vertex_index(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw Error(ErrorKind::UnknownElement, "vertex '" + id + "'");
    return it->second;
  }
  std::size_t edge_index(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw Error(ErrorKind::UnknownElement, "edge '" + id + "'");
    return it->second;
  }

  /// Edge indices around vertex v, counterclockwise.
  const std::vector<std::size_t>& rotation(std::size_t v) const { return rotations_.at(v); }

  std::size_t tail(std::size_t e, bool forward) const { return forward ? u_[e] : v_[e]; }
  std::size_t head(std::size_t e, bool forward) const { return forward ? v_[e] : u_[e]; }
  std::size_t degree(std::size_t v) const { return rotations_.at(v).size(); }

  /// Position of edge e in the rotation at v.
  std::size_t rotation_position(std::size_t v, std::size_t e) const { return position_.at(v).at(e); }

 private:
  friend EmbeddedGraph make_graph(std::vector<std::string>, std::vector<std::vector<std::string>>,
                                  std::vector<GraphEdge>);

  std::vector<std::string> vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<std::size_t> u_, v_;
  std::vector<std::vector<std::size_t>> rotations_;
  std::vector<std::unordered_map<std::size_t, std::size_t>> position_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

/// Validates simplicity, rotations and connectivity. Throws ParseError,
/// NotSimple, BadRotation or Disconnected.
inline EmbeddedGraph make_graph(std::vector<std::string> vertices,
                                std::vector<std::vector<std::string>> rotations,
                                std::vector<GraphEdge> edges) {
  EmbeddedGraph g;
  if (vertices.empty()) throw Error(ErrorKind::ParseError, "graph has no vertices");
  if (rotations.size() != vertices.size()) throw Error(ErrorKind::ParseError, "rotation count");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!g.vertex_index_.emplace(vertices[i], i).second) {
      throw Error(ErrorKind::ParseError, "duplicate vertex '" + vertices[i] + "'");
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> endpoints;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    if (g.vertex_index_.count(edge.id)) {
      throw Error(ErrorKind::ParseError, "edge id '" + edge.id + "' is also a vertex id");
    }
    if (!g.edge_index_.emplace(edge.id, e).second) {
      throw Error(ErrorKind::ParseError, "duplicate edge '" + edge.id + "'");
    }
    auto endpoint = [&](const std::string& id) {
      auto it = g.vertex_index_.find(id);
      if (it == g.vertex_index_.end()) {
        throw Error(ErrorKind::ParseError, "edge '" + edge.id + "' names unknown vertex '" + id + "'");
      }
      return it->second;
    };
    const auto a = endpoint(edge.u), b = endpoint(edge.v);
    if (a == b) throw Error(ErrorKind::NotSimple, "loop '" + edge.id + "'");
    if (!endpoints.emplace(std::min(a, b), std::max(a, b)).second) {
      throw Error(ErrorKind::NotSimple, "parallel edge '" + edge.id + "'");
    }
    g.u_.push_back(a);
    g.v_.push_back(b);
  }
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);

  g.rotations_.assign(g.vertices_.size(), {});
  g.position_.assign(g.vertices_.size(), {});
  for (std::size_t v = 0; v < g.vertices_.size(); ++v) {
    for (const auto& eid : rotations[v]) {
      auto it = g.edge_index_.find(eid);
      if (it == g.edge_index_.end()) {
        throw Error(ErrorKind::BadRotation, "vertex '" + g.vertices_[v] + "' lists unknown edge '" + eid + "'");
      }
      const auto e = it->second;
      if (g.u_[e] != v && g.v_[e] != v) {
        throw Error(ErrorKind::BadRotation, "edge '" + eid + "' is not incident to '" + g.vertices_[v] + "'");
      }
      if (!g.position_[v].emplace(e, g.rotations_[v].size()).second) {
        throw Error(ErrorKind::BadRotation, "edge '" + eid + "' repeated at '" + g.vertices_[v] + "'");
      }
      g.rotations_[v].push_back(e);
    }
  }
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    for (auto v : {g.u_[e], g.v_[e]}) {
      if (!g.position_[v].count(e)) {
        throw Error(ErrorKind::BadRotation,
                    "edge '" + g.edges_[e].id + "' missing from rotation of '" + g.vertices_[v] + "'");
      }
    }
  }

  std::vector<bool> seen(g.vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto e : g.rotations_[v]) {
      const auto w = g.u_[e] == v ? g.v_[e] : g.u_[e];
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != g.vertices_.size()) {
    for (std::size_t v = 0; v < seen.size(); ++v)
      if (!seen[v]) throw Error(ErrorKind::Disconnected, "'" + g.vertices_[v] + "' is unreachable");
  }
  return g;
}

/// Text format:
///   V E
///   <vertex>: <edge> <edge> ...     (V lines, counterclockwise rotation)
///   <edge> <u> <v>                  (E lines)
/// Blank lines are ignored.
inline EmbeddedGraph load_graph(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
  }
  if (lines.empty()) throw Error(ErrorKind::ParseError, "empty input");

  auto tokens = [](const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
  };
  const auto header = tokens(lines[0]);
  std::size_t nv = 0, ne = 0;
  try {
    if (header.size() != 2) throw std::invalid_argument("header");
    std::size_t used = 0;
    nv = std::stoul(header[0], &used);
    if (used != header[0].size()) throw std::invalid_argument("V");
    ne = std::stoul(header[1], &used);
    if (used != header[1].size()) throw std::invalid_argument("E");
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "line 1: expected 'V E'");
  }
  if (lines.size() != 1 + nv + ne) {
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(1 + nv + ne) + " non-blank lines, found " +
                                           std::to_string(lines.size()));
  }

  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> rotations;
  for (std::size_t i = 0; i < nv; ++i) {
    const auto& line = lines[1 + i];
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::ParseError, "vertex line " + std::to_string(i + 1) + ": missing ':'");
    }
    const auto name = tokens(line.substr(0, colon));
    if (name.size() != 1) {
      throw Error(ErrorKind::ParseError, "vertex line " + std::to_string(i + 1) + ": bad vertex id");
    }
    vertices.push_back(name[0]);
    rotations.push_back(tokens(line.substr(colon + 1)));
  }
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < ne; ++i) {
    const auto t = tokens(lines[1 + nv + i]);
    if (t.size() != 3) {
      throw Error(ErrorKind::ParseError, "edge line " + std::to_string(i + 1) + ": expected 'id u v'");
    }
    edges.push_back({t[0], t[1], t[2]});
  }
  return make_graph(std::move(vertices), std::move(rotations), std::move(edges));
}

inline std::string dump_graph(const EmbeddedGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out += g.vertices()[v] + ":";
    for (auto e : g.rotation(v)) out += " " + g.edges()[e].id;
    out += "\n";
  }
  for (const auto& e : g.edges()) out += e.id + " " + e.u + " " + e.v + "\n";
  return out;
}

/// Directed edge side. `forward` means u -> v as the edge is listed.
struct Side {
  std::size_t edge = 0;
  bool forward = true;

  std::size_t index() const noexcept { return 2 * edge + (forward ? 0 : 1); }
  static Side from_index(std::size_t i) { return {i / 2, i % 2 == 0}; }
  friend bool operator==(const Side&, const Side&) = default;
};

struct Face {
  std::string id;
  std::vector<Side> boundary;  // cyclic
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<std::size_t> face_of_side;  // indexed by Side::index()

  std::size_t face_index(const std::string& id) const {
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (faces[f].id == id) return f;
    throw Error(ErrorKind::UnknownElement, "face '" + id + "'");
  }
  std::size_t root_face() const { return faces.size() - 1; }
};

inline Side next_side(const EmbeddedGraph& g, Side s) {
  const auto v = g.head(s.edge, s.forward);
  const auto& rot = g.rotation(v);
  const auto e = rot[(g.rotation_position(v, s.edge) + 1) % rot.size()];
  return {e, g.tail(e, true) == v};
}

/// Orbits of next_side. Throws EulerViolation unless V - E + F = 2.
inline FaceSet trace_faces(const EmbeddedGraph& g) {
  const std::size_t sides = 2 * g.edge_count();
  FaceSet fs;
  fs.face_of_side.assign(sides, npos);

  auto key = [&](Side s) {
    return std::make_pair(g.edges()[s.edge].id, g.vertices()[g.tail(s.edge, s.forward)]);
  };
  std::vector<std::size_t> order(sides);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return key(Side::from_index(a)) < key(Side::from_index(b));
  });

  for (auto start_index : order) {
    if (fs.face_of_side[start_index] != npos) continue;
    Face face;
    face.id = "f" + std::to_string(fs.faces.size());
    auto s = Side::from_index(start_index);
    do {
      fs.face_of_side[s.index()] = fs.faces.size();
      face.boundary.push_back(s);
      s = next_side(g, s);
    } while (s.index() != start_index);
    fs.faces.push_back(std::move(face));
  }
  if (g.edge_count() == 0) fs.faces.push_back({"f0", {}});

  const auto euler = static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) +
                     static_cast<long>(fs.faces.size());
  if (euler != 2) {
    throw Error(ErrorKind::EulerViolation, "V - E + F = " + std::to_string(euler) +
                                               "; rotation system is not planar");
  }
  return fs;
}

/// First vertex of odd degree in input order, if any.
inline std::optional<std::string> odd_degree_vertex(const EmbeddedGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) % 2 != 0) return g.vertices()[v];
  return std::nullopt;
}

inline bool is_eulerian(const EmbeddedGraph& g) { return !odd_degree_vertex(g).has_value(); }

/// BFS tree from the smallest vertex id, neighbours visited in id order.
/// Returns tree edge ids, sorted.
inline std::vector<std::string> spanning_tree(const EmbeddedGraph& g) {
  const auto root = static_cast<std::size_t>(
      std::min_element(g.vertices().begin(), g.vertices().end()) - g.vertices().begin());
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{root};
  seen[root] = true;
  std::vector<std::string> tree;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    std::vector<std::pair<std::string, std::size_t>> next;
    for (auto e : g.rotation(v)) {
      const auto w = g.tail(e, true) == v ? g.head(e, true) : g.tail(e, true);
      next.emplace_back(g.vertices()[w], e);
    }
    std::sort(next.begin(), next.end());
    for (const auto& [name, e] : next) {
      const auto w = g.vertex_index(name);
      if (seen[w]) continue;
      seen[w] = true;
      tree.push_back(g.edges()[e].id);
      queue.push_back(w);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

inline std::string spanning_tree_root(const EmbeddedGraph& g) {
  return *std::min_element(g.vertices().begin(), g.vertices().end());
}

struct DualEdge {
  std::string id;  // the primal edge
  std::string a;   // face on the forward side
  std::string b;   // face on the backward side
};

struct DualGraph {
  std::vector<std::string> vertices;  // face ids
  std::vector<DualEdge> edges;        // primal edge order
};

inline DualGraph dual_graph(const EmbeddedGraph& g, const FaceSet& fs) {
  DualGraph d;
  for (const auto& f : fs.faces) d.vertices.push_back(f.id);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    d.edges.push_back({g.edges()[e].id, fs.faces[fs.face_of_side[Side{e, true}.index()]].id,
                       fs.faces[fs.face_of_side[Side{e, false}.index()]].id});
  }
  return d;
}

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace detail

struct DualWithCotree {
  FaceSet faces;
  DualGraph dual;
  std::vector<std::string> cotree;  // sorted edge ids
};

/// Dual graph together with T* = E \ T. Throws NotATree when `tree` is not a
/// spanning tree of g, CotreeNotTree when T* fails to span the dual.
inline DualWithCotree dual_with_cotree(const EmbeddedGraph& g, const std::vector<std::string>& tree) {
  std::set<std::size_t> in_tree;
  detail::DisjointSets primal(g.vertex_count());
  for (const auto& id : tree) {
    const auto e = g.edge_index(id);
    if (!in_tree.insert(e).second) throw Error(ErrorKind::NotATree, "edge '" + id + "' repeated");
    if (!primal.unite(g.tail(e, true), g.head(e, true))) {
      throw Error(ErrorKind::NotATree, "edge '" + id + "' closes a cycle");
    }
  }
  if (in_tree.size() + 1 != g.vertex_count()) throw Error(ErrorKind::NotATree, "tree does not span");

  DualWithCotree out;
  out.faces = trace_faces(g);
  out.dual = dual_graph(g, out.faces);
  detail::DisjointSets dual_sets(out.faces.faces.size());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (in_tree.count(e)) continue;
    out.cotree.push_back(g.edges()[e].id);
    if (!dual_sets.unite(out.faces.face_of_side[Side{e, true}.index()],
                         out.faces.face_of_side[Side{e, false}.index()])) {
      throw Error(ErrorKind::CotreeNotTree, "dual edge '" + g.edges()[e].id + "' closes a cycle");
    }
  }
  if (out.cotree.size() + 1 != out.faces.faces.size()) {
    throw Error(ErrorKind::CotreeNotTree, "cotree does not span the dual");
  }
  std::sort(out.cotree.begin(), out.cotree.end());
  return out;
}

/// Vertices rank 0, edges rank 1, faces rank 2, ordered by incidence.
/// Face ids must not clash with vertex or edge ids (DuplicateElement).
inline RankedPoset build_face_poset(const EmbeddedGraph& g, const FaceSet& fs) {
  if (g.edge_count() == 0) throw Error(ErrorKind::InvalidInput, "graph has no edges, its face covers nothing");
  std::vector<ElementSpec> elements;
  std::vector<CoverPair> covers;
  for (const auto& v : g.vertices()) elements.push_back({v, 0});
  for (const auto& e : g.edges()) {
    elements.push_back({e.id, 1});
    covers.emplace_back(e.u, e.id);
    covers.emplace_back(e.v, e.id);
  }
  for (const auto& f : fs.faces) elements.push_back({f.id, 2});
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto a = fs.face_of_side[Side{e, true}.index()];
    const auto b = fs.face_of_side[Side{e, false}.index()];
    covers.emplace_back(g.edges()[e].id, fs.faces[a].id);
    if (b != a) covers.emplace_back(g.edges()[e].id, fs.faces[b].id);
  }
  return build_poset(std::move(elements), std::move(covers));
}

inline RankedPoset build_face_poset(const EmbeddedGraph& g) { return build_face_poset(g, trace_faces(g)); }

/// M0 = (tree matching on F(T) rooted at the BFS root) together with the
/// flipped tree matching on F(T*) rooted at `root_face` (default: the
/// highest-numbered face). The result is checked to be an acyclic matching on
/// the face poset that leaves no edge critical.
inline Matching build_matching_m0(const EmbeddedGraph& g, const std::vector<std::string>& tree,
                                  const std::optional<std::string>& root_face = std::nullopt) {
  const auto dc = dual_with_cotree(g, tree);
  const auto& fs = dc.faces;
  const auto root = root_face.value_or(fs.faces[fs.root_face()].id);
  (void)fs.face_index(root);

  std::vector<ElementSpec> t_elems;
  std::vector<CoverPair> t_covers;
  for (const auto& v : g.vertices()) t_elems.push_back({v, 0});
  for (const auto& id : tree) {
    const auto& e = g.edges()[g.edge_index(id)];
    t_elems.push_back({id, 1});
    t_covers.emplace_back(e.u, id);
    t_covers.emplace_back(e.v, id);
  }
  const auto primal_part = tree_matching(build_poset(std::move(t_elems), std::move(t_covers)),
                                         spanning_tree_root(g));

  std::vector<ElementSpec> d_elems;
  std::vector<CoverPair> d_covers;
  for (const auto& f : fs.faces) d_elems.push_back({f.id, 0});
  for (const auto& de : dc.dual.edges) {
    if (!std::binary_search(dc.cotree.begin(), dc.cotree.end(), de.id)) continue;
    d_elems.push_back({de.id, 1});
    d_covers.emplace_back(de.a, de.id);
    d_covers.emplace_back(de.b, de.id);
  }
  const auto dual_part = tree_matching(build_poset(std::move(d_elems), std::move(d_covers)), root);

  Matching m0 = primal_part;
  for (const auto& [face, edge] : dual_part.pairs) m0.pairs.emplace_back(edge, face);
  m0 = m0.normalized();

  const auto poset = build_face_poset(g, fs);
  const auto table = bind_matching(poset, m0);
  if (!is_acyclic(poset, table)) throw Error(ErrorKind::Internal, "M0 is not acyclic");
  if (!classify(poset, table, 1).crit.empty()) throw Error(ErrorKind::Internal, "M0 leaves an edge critical");
  return m0;
}

struct NotEulerian {
  std::string vertex;
  std::size_t degree = 0;
};

struct FaceColoring {
  Coloring coloring;               // from the linear solve
  std::optional<Coloring> morse;   // when requested
  Matching m0;
  std::string root_face;
};

struct TwoFaceOptions {
  bool run_morse = false;
  std::optional<std::string> root_face;
};

/// Face 2-colouring of an Eulerian embedded graph via its face poset.
inline std::variant<FaceColoring, NotEulerian> two_face_color(const EmbeddedGraph& g,
                                                              const TwoFaceOptions& options = {}) {
  if (auto odd = odd_degree_vertex(g)) return NotEulerian{*odd, g.degree(g.vertex_index(*odd))};
  const auto fs = trace_faces(g);
  const auto poset = build_face_poset(g, fs);
  const auto tree = spanning_tree(g);

  FaceColoring out;
  out.root_face = options.root_face.value_or(fs.faces[fs.root_face()].id);
  out.m0 = build_matching_m0(g, tree, out.root_face);
  auto solved = color_by_solve(poset);
  if (!solved) throw Error(ErrorKind::Internal, "Eulerian face system is inconsistent");
  if (auto bad = verify_coloring(poset, *solved)) {
    throw Error(ErrorKind::Internal, "solve colouring not proper at '" + bad->first + "'");
  }
  out.coloring = std::move(*solved);
  if (options.run_morse) out.morse = color_by_morse(poset, out.m0);
  return out;
}

struct DualBipartition {
  std::optional<Coloring> coloring;
  std::vector<std::string> odd_cycle;  // face ids
};

/// BFS 2-colouring of the dual multigraph.
inline DualBipartition dual_bipartition_oracle(const EmbeddedGraph& g) {
  const auto fs = trace_faces(g);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    edges.emplace_back(fs.face_of_side[Side{e, true}.index()], fs.face_of_side[Side{e, false}.index()]);
  }
  const auto bfs = bfs_bipartition(fs.faces.size(), edges);
  DualBipartition out;
  if (bfs.ok()) {
    Coloring c;
    for (std::size_t f = 0; f < fs.faces.size(); ++f) c.psi.emplace(fs.faces[f].id, bfs.colors[f]);
    out.coloring = std::move(c);
  } else {
    for (auto f : bfs.odd_cycle) out.odd_cycle.push_back(fs.faces[f].id);
  }
  return out;
}

}  // namespace spherecolor
