#pragma once

// SVG rendering of a face-coloured embedded graph. Vertices are placed by a
// Tutte barycentric embedding: the root face's boundary vertices sit on a
// regular polygon, every other vertex at the average of its neighbours.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "spherecolor/planar.hpp"

namespace spherecolor {

struct Point {
  double x = 0;
  double y = 0;
};

struct SvgStyle {
  double size = 400;
  double margin = 20;
  std::string colors[2] = {"#f2c14e", "#3c6e9f"};
};

inline std::vector<Point> tutte_layout(const EmbeddedGraph& g, const FaceSet& fs, std::size_t outer,
                                       const SvgStyle& style = {}) {
  const std::size_t n = g.vertex_count();
  std::vector<Point> pos(n);
  std::vector<bool> fixed(n, false);
  const double c = style.size / 2;
  const double radius = style.size / 2 - style.margin;

  std::vector<std::size_t> ring;
  for (const auto& s : fs.faces.at(outer).boundary) {
    const auto v = g.tail(s.edge, s.forward);
    if (!fixed[v]) {
      fixed[v] = true;
      ring.push_back(v);
    }
  }
  if (ring.empty()) {
    fixed[0] = true;
    ring.push_back(0);
  }
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(i) /
                                                    static_cast<double>(ring.size());
    pos[ring[i]] = ring.size() == 1 ? Point{c, c} : Point{c + radius * std::cos(angle), c - radius * std::sin(angle)};
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!fixed[v]) pos[v] = {c, c};

  // Gauss-Seidel sweeps in vertex order.
  for (int sweep = 0; sweep < 100000; ++sweep) {
    double change = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (fixed[v] || g.degree(v) == 0) continue;
      Point sum;
      for (auto e : g.rotation(v)) {
        const auto w = g.tail(e, true) == v ? g.head(e, true) : g.tail(e, true);
        sum.x += pos[w].x;
        sum.y += pos[w].y;
      }
      const double d = static_cast<double>(g.degree(v));
      const Point next{sum.x / d, sum.y / d};
      change = std::max(change, std::abs(next.x - pos[v].x) + std::abs(next.y - pos[v].y));
      pos[v] = next;
    }
    if (change < 1e-10) break;
  }
  return pos;
}

namespace detail {
inline std::string fmt_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  return s == "-0.00" ? "0.00" : s;
}
}  // namespace detail

/// The root face fills the background; every other face is a filled polygon.
inline std::string render_svg(const EmbeddedGraph& g, const FaceSet& fs, const Coloring& coloring,
                              std::size_t outer, const SvgStyle& style = {}) {
  const auto pos = tutte_layout(g, fs, outer, style);
  auto colour_of = [&](std::size_t f) {
    return style.colors[coloring.psi.at(fs.faces[f].id) & 1];
  };
  const auto size = detail::fmt_coord(style.size);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + size + "\" height=\"" + size + "\" fill=\"" +
         colour_of(outer) + "\" data-face=\"" + fs.faces[outer].id + "\"/>\n";
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    if (f == outer) continue;
    out += "  <polygon points=\"";
    bool first = true;
    for (const auto& s : fs.faces[f].boundary) {
      const auto v = g.tail(s.edge, s.forward);
      if (!first) out += " ";
      out += detail::fmt_coord(pos[v].x) + "," + detail::fmt_coord(pos[v].y);
      first = false;
    }
    out += "\" fill=\"" + colour_of(f) + "\" data-face=\"" + fs.faces[f].id + "\"/>\n";
  }
  for (const auto& e : g.edges()) {
    const auto& a = pos[g.vertex_index(e.u)];
    const auto& b = pos[g.vertex_index(e.v)];
    out += "  <line x1=\"" + detail::fmt_coord(a.x) + "\" y1=\"" + detail::fmt_coord(a.y) + "\" x2=\"" +
           detail::fmt_coord(b.x) + "\" y2=\"" + detail::fmt_coord(b.y) +
           "\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out += "  <circle cx=\"" + detail::fmt_coord(pos[v].x) + "\" cy=\"" + detail::fmt_coord(pos[v].y) +
           "\" r=\"4\" fill=\"#222222\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace spherecolor
