#pragma once

// JSON file formats:
//   poset     { "elements": [ {"id": "a", "rank": 0}, ... ], "covers": [ ["a", "ab"], ... ] }
//   matching  { "pairs": [ ["a", "ab"], ... ] }          lower element first
//   colouring { "colors": { "f_in": 1, "f_out": 0 } }
// Unknown keys are rejected.

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "spherecolor/matching.hpp"
#include "spherecolor/poset.hpp"
#include "spherecolor/sphere_color.hpp"

namespace spherecolor {

using Json = nlohmann::json;

namespace detail {

inline Json parse_json_text(std::string_view text, std::string_view what) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": empty input");
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
  }
}

inline void require_keys(const Json& j, std::initializer_list<std::string_view> allowed,
                         std::string_view what) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw Error(ErrorKind::ParseError, std::string(what) + ": unknown key '" + key + "'");
  }
  for (auto a : allowed) {
    if (!j.contains(std::string(a))) {
      throw Error(ErrorKind::ParseError, std::string(what) + ": missing key '" + std::string(a) + "'");
    }
  }
}

inline std::vector<CoverPair> parse_pairs(const Json& j, std::string_view what) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an array");
  std::vector<CoverPair> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
      throw Error(ErrorKind::ParseError, std::string(what) + ": entries must be [lower, upper] id pairs");
    }
    out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
  }
  return out;
}

}  // namespace detail

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline RankedPoset poset_from_json(const Json& j) {
  detail::require_keys(j, {"elements", "covers"}, "poset");
  if (!j["elements"].is_array()) throw Error(ErrorKind::ParseError, "poset: 'elements' must be an array");
  std::vector<ElementSpec> elements;
  for (const auto& e : j["elements"]) {
    detail::require_keys(e, {"id", "rank"}, "element");
    if (!e["id"].is_string()) throw Error(ErrorKind::ParseError, "element: 'id' must be a string");
    if (!e["rank"].is_number_integer() || e["rank"].get<long long>() < 0) {
      throw Error(ErrorKind::ParseError, "element: 'rank' must be a non-negative integer");
    }
    elements.push_back({e["id"].get<std::string>(), e["rank"].get<int>()});
  }
  return build_poset(std::move(elements), detail::parse_pairs(j["covers"], "poset covers"));
}

inline RankedPoset parse_poset(std::string_view text) {
  return poset_from_json(detail::parse_json_text(text, "poset"));
}

inline Json poset_to_json(const RankedPoset& p) {
  Json elements = Json::array();
  Json covers = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    elements.push_back({{"id", p.id(i)}, {"rank", p.rank(i)}});
    for (auto z : p.down(i)) covers.push_back({p.id(z), p.id(i)});
  }
  return {{"elements", elements}, {"covers", covers}};
}

inline Matching matching_from_json(const Json& j) {
  detail::require_keys(j, {"pairs"}, "matching");
  return Matching{detail::parse_pairs(j["pairs"], "matching pairs")};
}

inline Matching parse_matching(std::string_view text) {
  return matching_from_json(detail::parse_json_text(text, "matching"));
}

inline Json matching_to_json(const Matching& m) {
  Json pairs = Json::array();
  for (const auto& [lo, hi] : m.normalized().pairs) pairs.push_back({lo, hi});
  return {{"pairs", pairs}};
}

inline Json coloring_to_json(const Coloring& c) {
  Json colors = Json::object();
  for (const auto& [id, colour] : c.psi) colors[id] = colour;
  return {{"colors", colors}};
}

inline Coloring coloring_from_json(const Json& j) {
  detail::require_keys(j, {"colors"}, "colouring");
  if (!j["colors"].is_object()) throw Error(ErrorKind::ParseError, "colouring: 'colors' must be an object");
  Coloring c;
  for (const auto& [id, colour] : j["colors"].items()) {
    if (!colour.is_number_integer()) throw Error(ErrorKind::ParseError, "colouring: colour of '" + id + "'");
    c.psi.emplace(id, colour.get<int>());
  }
  return c;
}

inline Coloring parse_coloring(std::string_view text) {
  return coloring_from_json(detail::parse_json_text(text, "colouring"));
}

}  // namespace spherecolor
