// spherecolor: validate ranked posets, check sphere-likeness, 2-colour top-rank
// elements and face-colour embedded planar graphs.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "spherecolor/commands.hpp"

namespace sc = spherecolor;
namespace cli = spherecolor::cli;

namespace {

// One "key: value" line per top-level report entry, values in compact JSON.
void print_text(const sc::Json& report, std::ostream& out) {
  for (const auto& [key, value] : report.items()) {
    if (key == "command") continue;
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper 2-colourings of top-rank elements of sphere-like ranked posets"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print the report as JSON");

  cli::ValidateArgs validate;
  int boundary = 0;
  auto* v = app.add_subcommand("validate", "Validate a poset file and count elements per rank");
  v->add_option("poset", validate.poset_file, "Poset JSON file")->required();
  v->add_option("--boundary", boundary, "Also dump the boundary matrix d_q as a 0/1 grid");

  cli::CheckArgs check;
  std::string check_matching;
  auto* c = app.add_subcommand("check", "Check sphere-likeness and the even-covering hypothesis");
  c->add_option("poset", check.poset_file, "Poset JSON file")->required();
  c->add_option("--matching", check_matching, "Matching JSON file used as witness");
  c->add_option("--exhaustive-limit", check.exhaustive_limit,
                "Largest poset for exhaustive matching search (0 disables)");

  cli::ColorArgs color;
  std::string route = "solve";
  std::string color_matching;
  auto* col = app.add_subcommand("color", "2-colour the top-rank elements");
  col->add_option("poset", color.poset_file, "Poset JSON file")->required();
  col->add_option("--route", route, "solve, morse or both")->check(CLI::IsMember({"solve", "morse", "both"}));
  col->add_option("--matching", color_matching, "Matching JSON file (required by the morse route)");

  cli::PlanarArgs planar;
  std::string svg;
  std::string root_face;
  auto* pl = app.add_subcommand("planar", "Face-colour an embedded Eulerian planar graph");
  pl->add_option("graph", planar.graph_file, "Graph text file")->required();
  pl->add_option("--svg", svg, "Write an SVG rendering");
  pl->add_flag("--oracle", planar.oracle, "Cross-check against BFS bipartition of the dual");
  pl->add_flag("--morse", planar.morse, "Also colour by the Morse route with M0");
  pl->add_option("--root-face", root_face, "Root of the dual spanning tree and outer face of the drawing");

  cli::OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Brute-force colouring oracle (poset) or dual bipartition (--graph)");
  o->add_option("file", oracle.file, "Poset JSON file, or graph text file with --graph")->required();
  o->add_flag("--graph", oracle.graph, "Treat the input as a graph file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInputError;
  }

  cli::CommandResult result;
  if (*v) {
    if (v->count("--boundary")) validate.boundary_rank = boundary;
    result = cli::cmd_validate(validate);
  } else if (*c) {
    if (!check_matching.empty()) check.matching_file = check_matching;
    result = cli::cmd_check(check);
  } else if (*col) {
    color.route = route == "morse" ? cli::Route::Morse : route == "both" ? cli::Route::Both : cli::Route::Solve;
    if (!color_matching.empty()) color.matching_file = color_matching;
    result = cli::cmd_color(color);
  } else if (*pl) {
    if (!svg.empty()) planar.svg_file = svg;
    if (!root_face.empty()) planar.root_face = root_face;
    result = cli::cmd_planar(planar);
  } else if (*o) {
    result = cli::cmd_oracle(oracle);
  }

  if (json) {
    std::cout << result.report.dump(2) << "\n";
  } else if (result.exit_code == cli::kExitInputError) {
    std::cerr << result.report.value("message", std::string("input error")) << "\n";
  } else {
    print_text(result.report, std::cout);
  }
  return result.exit_code;
}
