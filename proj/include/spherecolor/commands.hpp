#pragma once

// Command implementations behind the `spherecolor` CLI. Each returns an exit
// code and a JSON report:
//   0  success
//   1  negative mathematical answer (with a counterexample in the report)
//   2  input error

#include <optional>
#include <string>
#include <variant>

#include "spherecolor/io.hpp"
#include "spherecolor/planar.hpp"
#include "spherecolor/sphere_color.hpp"
#include "spherecolor/svg.hpp"

namespace spherecolor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

struct CommandResult {
  int exit_code = kExitOk;
  Json report;
};

inline CommandResult input_error(const std::string& command, const Error& e) {
  return {kExitInputError,
          {{"command", command}, {"error", std::string(to_string(e.kind()))}, {"message", e.what()}}};
}

inline CommandResult input_error(const std::string& command, const std::string& kind,
                                 const std::string& message) {
  return {kExitInputError, {{"command", command}, {"error", kind}, {"message", message}}};
}

inline Json coloring_json(const Coloring& c) { return coloring_to_json(c)["colors"]; }

struct ValidateArgs {
  std::string poset_file;
  std::optional<int> boundary_rank;
};

inline CommandResult cmd_validate(const ValidateArgs& args) {
  try {
    const auto p = parse_poset(read_text_file(args.poset_file));
    Json report = {{"command", "validate"},
                   {"ok", true},
                   {"rank", p.rank_of_poset()},
                   {"ranks", p.rank_counts()},
                   {"elements", p.size()},
                   {"covers", p.cover_count()}};
    if (args.boundary_rank) {
      const auto d = boundary_matrix(p, *args.boundary_rank);
      Json rows = Json::array();
      for (std::size_t r = 0; r < d.rows(); ++r) {
        std::string line;
        for (std::size_t c = 0; c < d.cols(); ++c) line += d.get(r, c) ? '1' : '0';
        rows.push_back(line);
      }
      report["boundary"] = {{"rank", *args.boundary_rank},
                            {"row_ids", p.slice_ids(*args.boundary_rank - 1)},
                            {"col_ids", p.slice_ids(*args.boundary_rank)},
                            {"grid", rows}};
    }
    return {kExitOk, report};
  } catch (const Error& e) {
    return input_error("validate", e);
  }
}

inline Json report_json(const SphereLikeReport& r) {
  auto cover = [](const CoverCountCheck& c) {
    Json j = {{"verdict", to_string(c.verdict)}};
    if (c.counterexample) {
      j["counterexample"] = *c.counterexample;
      j["observed"] = c.observed;
    }
    return j;
  };
  Json ii = {{"verdict", to_string(r.cond_ii.verdict)}};
  if (r.cond_ii.counterexample) {
    ii["counterexample"] = {{"y", r.cond_ii.counterexample->first}, {"z", r.cond_ii.counterexample->second}};
    ii["observed"] = r.cond_ii.observed;
  }
  Json iii = {{"verdict", to_string(r.cond_iii.verdict)}, {"source", r.cond_iii.source}};
  if (r.cond_iii.witness) iii["witness"] = matching_to_json(*r.cond_iii.witness)["pairs"];
  if (!r.cond_iii.criticals.empty()) iii["criticals"] = r.cond_iii.criticals;
  if (!r.cond_iii.closed_path.empty()) iii["closed_path"] = r.cond_iii.closed_path;
  if (!r.cond_iii.reason.empty()) iii["reason"] = r.cond_iii.reason;
  return {{"k", r.k},
          {"cond_i", cover(r.cond_i)},
          {"cond_ii", ii},
          {"cond_iii", iii},
          {"hypothesis_even", cover(r.hypothesis_even)},
          {"sphere_like", r.sphere_like()},
          {"all_pass", r.all_pass()}};
}

struct CheckArgs {
  std::string poset_file;
  std::optional<std::string> matching_file;
  std::size_t exhaustive_limit = 30;
};

inline CommandResult cmd_check(const CheckArgs& args) {
  try {
    const auto p = parse_poset(read_text_file(args.poset_file));
    std::optional<Matching> m;
    if (args.matching_file) m = parse_matching(read_text_file(*args.matching_file));
    const auto r = check_sphere_like(p, m, CheckOptions{args.exhaustive_limit});
    Json report = report_json(r);
    report["command"] = "check";
    return {r.all_pass() ? kExitOk : kExitNegative, report};
  } catch (const Error& e) {
    return input_error("check", e);
  }
}

enum class Route { Solve, Morse, Both };

struct ColorArgs {
  std::string poset_file;
  Route route = Route::Solve;
  std::optional<std::string> matching_file;
};

namespace detail {

inline Json odd_cycle_json(const RankedPoset& p) {
  const Rank k = p.rank_of_poset();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [a, b] : adjacent_index_pairs(p, k)) edges.emplace_back(p.slice_position(a), p.slice_position(b));
  const auto bfs = bfs_bipartition(p.slice(k).size(), edges);
  Json cycle = Json::array();
  for (auto i : bfs.odd_cycle) cycle.push_back(p.id(p.slice(k)[i]));
  return cycle;
}

}  // namespace detail

inline CommandResult cmd_color(const ColorArgs& args) {
  const std::string name = "color";
  RankedPoset p;
  std::optional<Matching> m;
  try {
    p = parse_poset(read_text_file(args.poset_file));
    if (args.route != Route::Solve && !args.matching_file) {
      return input_error(name, "MissingMatching", "the morse route needs --matching");
    }
    if (args.matching_file) m = parse_matching(read_text_file(*args.matching_file));
    if (p.rank_of_poset() < 1) throw Error(ErrorKind::RankTooSmall, "rank 0 poset");
  } catch (const Error& e) {
    return input_error(name, e);
  }

  Json report = {{"command", name}};
  report["route"] = args.route == Route::Solve ? "solve" : args.route == Route::Morse ? "morse" : "both";
  int exit_code = kExitOk;
  auto negative = [&](Json& section, const Error& e) {
    section["ok"] = false;
    section["error"] = std::string(to_string(e.kind()));
    section["message"] = e.what();
    exit_code = kExitNegative;
  };

  if (args.route != Route::Morse) {
    Json section;
    try {
      if (auto c = color_by_solve(p)) {
        const auto bad = verify_coloring(p, *c);
        section["ok"] = !bad;
        section["colors"] = coloring_json(*c);
        section["verified"] = !bad;
        if (bad) exit_code = kExitNegative;
      } else {
        section["ok"] = false;
        section["error"] = "NotTwoColorable";
        section["odd_cycle"] = detail::odd_cycle_json(p);
        exit_code = kExitNegative;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PreconditionFailed) return input_error(name, e);
      negative(section, e);
    }
    report["solve"] = section;
  }
  if (args.route != Route::Solve) {
    Json section;
    try {
      const auto c = color_by_morse(p, *m);
      const auto bad = verify_coloring(p, c);
      section["ok"] = !bad;
      section["colors"] = coloring_json(c);
      section["verified"] = !bad;
      if (bad) exit_code = kExitNegative;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PreconditionFailed) return input_error(name, e);
      negative(section, e);
    }
    report["morse"] = section;
  }
  return {exit_code, report};
}

struct PlanarArgs {
  std::string graph_file;
  std::optional<std::string> svg_file;
  bool oracle = false;
  bool morse = false;
  std::optional<std::string> root_face;
};

namespace detail {

/// True when a and b agree, or are complementary, on every component of the
/// adjacency graph on the top rank.
inline bool equal_up_to_complement(const RankedPoset& p, const Coloring& a, const Coloring& b) {
  const Rank k = p.rank_of_poset();
  const auto slice = p.slice(k);
  spherecolor::detail::DisjointSets comps(slice.size());
  for (auto [x, y] : adjacent_index_pairs(p, k)) comps.unite(p.slice_position(x), p.slice_position(y));
  std::map<std::size_t, int> flip;
  for (std::size_t j = 0; j < slice.size(); ++j) {
    const auto& id = p.id(slice[j]);
    const int diff = a.psi.at(id) ^ b.psi.at(id);
    auto [it, fresh] = flip.emplace(comps.find(j), diff);
    if (!fresh && it->second != diff) return false;
  }
  return true;
}

}  // namespace detail

inline CommandResult cmd_planar(const PlanarArgs& args) {
  const std::string name = "planar";
  try {
    const auto g = load_graph(read_text_file(args.graph_file));
    const auto fs = trace_faces(g);
    Json report = {{"command", name},
                   {"vertices", g.vertex_count()},
                   {"edges", g.edge_count()},
                   {"faces", fs.faces.size()}};
    const auto result = two_face_color(g, TwoFaceOptions{args.morse, args.root_face});
    if (const auto* bad = std::get_if<NotEulerian>(&result)) {
      report["eulerian"] = false;
      report["error"] = "NotEulerian";
      report["vertex"] = bad->vertex;
      report["degree"] = bad->degree;
      return {kExitNegative, report};
    }
    const auto& fc = std::get<FaceColoring>(result);
    const auto poset = build_face_poset(g, fs);
    report["eulerian"] = true;
    report["root_face"] = fc.root_face;
    report["colors"] = coloring_json(fc.coloring);
    report["verified"] = !verify_coloring(poset, fc.coloring);
    report["m0"] = matching_to_json(fc.m0)["pairs"];
    int exit_code = kExitOk;
    if (fc.morse) {
      const bool ok = !verify_coloring(poset, *fc.morse);
      report["morse"] = {{"colors", coloring_json(*fc.morse)}, {"verified", ok}};
    }
    if (args.oracle) {
      const auto dual = dual_bipartition_oracle(g);
      Json o;
      if (dual.coloring) {
        o["colors"] = coloring_json(*dual.coloring);
        o["agree"] = detail::equal_up_to_complement(poset, fc.coloring, *dual.coloring);
      } else {
        o["agree"] = false;
        o["odd_cycle"] = dual.odd_cycle;
      }
      if (!o["agree"].get<bool>()) exit_code = kExitNegative;
      report["oracle"] = o;
    }
    if (args.svg_file) {
      std::ofstream out(*args.svg_file, std::ios::binary);
      if (!out) throw Error(ErrorKind::InvalidInput, "cannot write '" + *args.svg_file + "'");
      out << render_svg(g, fs, fc.coloring, fs.face_index(fc.root_face));
      report["svg"] = *args.svg_file;
    }
    return {exit_code, report};
  } catch (const Error& e) {
    return input_error(name, e);
  }
}

struct OracleArgs {
  std::string file;
  bool graph = false;
};

inline CommandResult cmd_oracle(const OracleArgs& args) {
  const std::string name = "oracle";
  try {
    if (args.graph) {
      const auto dual = dual_bipartition_oracle(load_graph(read_text_file(args.file)));
      Json report = {{"command", name}, {"kind", "dual_bipartition"}, {"bipartite", dual.coloring.has_value()}};
      if (dual.coloring) report["colors"] = coloring_json(*dual.coloring);
      else report["odd_cycle"] = dual.odd_cycle;
      return {dual.coloring ? kExitOk : kExitNegative, report};
    }
    const auto p = parse_poset(read_text_file(args.file));
    const auto bf = brute_force_color(p);
    Json report = {{"command", name}, {"kind", "brute_force"}, {"colorable", bf.coloring.has_value()}};
    if (bf.coloring) report["colors"] = coloring_json(*bf.coloring);
    else report["odd_cycle"] = bf.odd_cycle;
    return {bf.coloring ? kExitOk : kExitNegative, report};
  } catch (const Error& e) {
    return input_error(name, e);
  }
}

}  // namespace spherecolor::cli
