#include <gtest/gtest.h>

#include "test_support.hpp"

namespace sc = spherecolor;
using namespace spherecolor::testing;

namespace {

sc::ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const sc::Error& e) {
    return e.kind();
  }
  return sc::ErrorKind::Internal;
}

sc::Coloring colors(std::initializer_list<std::pair<const std::string, int>> c) { return sc::Coloring{c}; }

std::vector<std::size_t> down_matched_columns(const sc::RankedPoset& p, const sc::MateTable& t, sc::Rank q) {
  std::vector<std::size_t> cols;
  const auto slice = p.slice(q);
  for (std::size_t j = 0; j < slice.size(); ++j) {
    const auto mate = t.mate(slice[j]);
    if (mate != sc::npos && p.rank(mate) == q - 1) cols.push_back(j);
  }
  return cols;
}

}  // namespace

TEST(CheckSphereLike, TriangleWithM0AllPass) {
  const auto r = sc::check_sphere_like(c3(), c3_m0());
  EXPECT_EQ(r.k, 2);
  EXPECT_EQ(r.cond_i.verdict, sc::Verdict::Pass);
  EXPECT_EQ(r.cond_ii.verdict, sc::Verdict::Pass);
  EXPECT_EQ(r.cond_iii.verdict, sc::Verdict::Pass);
  EXPECT_EQ(r.cond_iii.source, "supplied");
  EXPECT_EQ(r.hypothesis_even.verdict, sc::Verdict::Pass);
  EXPECT_TRUE(r.all_pass());
}

TEST(CheckSphereLike, TriangleWithoutWitnessUsesCoreduction) {
  const auto r = sc::check_sphere_like(c3());
  EXPECT_EQ(r.cond_iii.verdict, sc::Verdict::Pass);
  EXPECT_EQ(r.cond_iii.source, "greedy");
  ASSERT_TRUE(r.cond_iii.witness.has_value());
  EXPECT_TRUE(sc::is_acyclic(c3(), *r.cond_iii.witness));
}

TEST(CheckSphereLike, CyclicWitnessFailsCondIii) {
  const sc::Matching cyclic{{{"ab", "f_in"}, {"bc", "f_out"}}};
  const auto r = sc::check_sphere_like(c3(), cyclic);
  EXPECT_EQ(r.cond_iii.verdict, sc::Verdict::Fail);
  EXPECT_FALSE(r.cond_iii.closed_path.empty());
  EXPECT_FALSE(r.sphere_like());
}

TEST(CheckSphereLike, IncompleteWitnessFailsCondIii) {
  const auto r = sc::check_sphere_like(c3(), sc::Matching{{{"a", "ab"}}});
  EXPECT_EQ(r.cond_iii.verdict, sc::Verdict::Fail);
  EXPECT_EQ(r.cond_iii.criticals, (std::vector<std::string>{"bc", "ca"}));
}

TEST(CheckSphereLike, TetrahedronFailsEvenHypothesisOnly) {
  const auto r = sc::check_sphere_like(tetrahedron());
  EXPECT_TRUE(r.sphere_like());
  EXPECT_EQ(r.hypothesis_even.verdict, sc::Verdict::Fail);
  EXPECT_EQ(r.hypothesis_even.observed, 3u);
  EXPECT_FALSE(r.all_pass());
}

TEST(CheckSphereLike, CrossPolytopesAllPass) {
  EXPECT_TRUE(sc::check_sphere_like(cross_polytope(3)).all_pass());
  EXPECT_TRUE(sc::check_sphere_like(cross_polytope(4)).all_pass());
}

TEST(CheckSphereLike, CondFailuresCarryCounterexamples) {
  // One face over a single edge: the edge has one cover, and the face sees
  // each endpoint once.
  const auto p = sc::build_poset({{"a", 0}, {"b", 0}, {"ab", 1}, {"f", 2}}, {{"a", "ab"}, {"b", "ab"}, {"ab", "f"}});
  const auto r = sc::check_sphere_like(p);
  EXPECT_EQ(r.cond_i.verdict, sc::Verdict::Fail);
  EXPECT_EQ(r.cond_i.counterexample, "ab");
  EXPECT_EQ(r.cond_i.observed, 1u);
  EXPECT_EQ(r.cond_ii.verdict, sc::Verdict::Fail);
  EXPECT_EQ(r.cond_ii.counterexample, (std::pair<std::string, std::string>{"f", "a"}));
  EXPECT_EQ(r.cond_ii.observed, 1u);
  EXPECT_EQ(kind_of([] { sc::check_sphere_like(sc::build_poset({{"a", 0}}, {})); }), sc::ErrorKind::RankTooSmall);
}

TEST(CheckSphereLike, UnknownWhenSearchDisabled) {
  // Coreduction cannot clear rank 1 here, and exhaustive search is off.
  const auto p = sc::build_poset({{"z", 0}, {"x1", 1}, {"x2", 1}, {"x3", 1}, {"y", 2}},
                                 {{"z", "x1"}, {"z", "x2"}, {"z", "x3"}, {"x1", "y"}, {"x2", "y"}, {"x3", "y"}});
  EXPECT_EQ(sc::check_sphere_like(p, std::nullopt, {0}).cond_iii.verdict, sc::Verdict::Unknown);
  EXPECT_EQ(sc::check_sphere_like(p).cond_iii.verdict, sc::Verdict::Fail);
}

TEST(VerifyColoring, Examples) {
  const auto p = c3();
  EXPECT_FALSE(sc::verify_coloring(p, colors({{"f_in", 1}, {"f_out", 0}})));
  EXPECT_EQ(sc::verify_coloring(p, colors({{"f_in", 0}, {"f_out", 0}})),
            (std::pair<std::string, std::string>{"f_in", "f_out"}));
  EXPECT_EQ(kind_of([&] { sc::verify_coloring(p, colors({{"f_in", 0}})); }), sc::ErrorKind::IncompleteColoring);
  EXPECT_EQ(kind_of([&] { sc::verify_coloring(p, colors({{"f_in", 0}, {"f_out", 1}, {"ab", 0}})); }),
            sc::ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { sc::verify_coloring(p, colors({{"f_in", 2}, {"f_out", 1}})); }),
            sc::ErrorKind::InvalidInput);
}

TEST(ColorBySolve, TriangleIsExact) {
  const auto c = sc::color_by_solve(c3());
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, colors({{"f_in", 1}, {"f_out", 0}}));
}

TEST(ColorBySolve, TetrahedronIsInconsistent) { EXPECT_FALSE(sc::color_by_solve(tetrahedron()).has_value()); }

TEST(ColorBySolve, PreconditionFailure) {
  const auto p = sc::build_poset({{"a", 0}, {"b", 0}, {"ab", 1}, {"f", 2}}, {{"a", "ab"}, {"b", "ab"}, {"ab", "f"}});
  EXPECT_EQ(kind_of([&] { sc::color_by_solve(p); }), sc::ErrorKind::PreconditionFailed);
}

TEST(ColorBySolve, CrossPolytopesAreProper) {
  for (int dim : {3, 4}) {
    const auto p = cross_polytope(dim);
    const auto c = sc::color_by_solve(p);
    ASSERT_TRUE(c.has_value());
    EXPECT_FALSE(sc::verify_coloring(p, *c));
    EXPECT_TRUE(proper_by_definition(p, *c));
  }
}

TEST(ColorByMorse, TriangleWithM0) {
  EXPECT_EQ(sc::morse_chain(c3(), c3_m0()).to_bits(), (std::vector<int>{1, 0}));
  EXPECT_EQ(sc::color_by_morse(c3(), c3_m0()), colors({{"f_in", 1}, {"f_out", 0}}));
}

TEST(ColorByMorse, PreconditionsAreEnforced) {
  EXPECT_EQ(kind_of([] { sc::color_by_morse(c3(), {{{"ab", "f_in"}, {"bc", "f_out"}}}); }),
            sc::ErrorKind::PreconditionFailed);
  const auto tet = tetrahedron();
  const auto witness = *sc::check_sphere_like(tet).cond_iii.witness;
  EXPECT_EQ(kind_of([&] { sc::color_by_morse(tet, witness); }), sc::ErrorKind::PreconditionFailed);
}

TEST(ColorByMorse, CrossPolytopesWithCoreductionWitness) {
  for (int dim : {3, 4}) {
    const auto p = cross_polytope(dim);
    const auto witness = *sc::check_sphere_like(p).cond_iii.witness;
    const auto c = sc::color_by_morse(p, witness);
    EXPECT_TRUE(proper_by_definition(p, c));
    EXPECT_TRUE(same_up_to_complement(p, c, *sc::color_by_solve(p)));
  }
}

TEST(BruteForceColor, Examples) {
  const auto tri = sc::brute_force_color(c3());
  ASSERT_TRUE(tri.coloring.has_value());
  EXPECT_EQ(*tri.coloring, colors({{"f_in", 0}, {"f_out", 1}}));

  const auto tet = sc::brute_force_color(tetrahedron());
  EXPECT_FALSE(tet.coloring.has_value());
  EXPECT_EQ(tet.odd_cycle.size(), 3u);

  EXPECT_TRUE(sc::brute_force_color(cross_polytope(4)).coloring.has_value());
  EXPECT_EQ(kind_of([] { sc::brute_force_color(cross_polytope(4), 8); }), sc::ErrorKind::TooLarge);
}

TEST(SphereColorProperties, SolveAgreesWithBruteForceOnTwoCoverPosets) {
  Rng rng(23);
  int colourable = 0, not_colourable = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_two_cover_poset(rng);
    const auto solved = sc::color_by_solve(p);
    const auto brute = sc::brute_force_color(p);
    ASSERT_EQ(solved.has_value(), brute.coloring.has_value());
    if (solved) {
      ++colourable;
      EXPECT_TRUE(proper_by_definition(p, *solved));
      EXPECT_TRUE(proper_by_definition(p, *brute.coloring));
    } else {
      ++not_colourable;
    }
  }
  EXPECT_GT(colourable, 0);
  EXPECT_GT(not_colourable, 0);
}

TEST(SphereColorProperties, DdZeroWheneverCondIiHolds) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poset(rng);
    const sc::Rank k = p.rank_of_poset();
    if (k < 2) continue;
    const auto r = sc::check_sphere_like(p, sc::Matching{});
    EXPECT_EQ(r.cond_ii.verdict == sc::Verdict::Pass, sc::dd_zero_check(p, k));
  }
}

TEST(SphereColorProperties, DownMatchedColumnsAreIndependent) {
  Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poset(rng);
    const auto table = sc::bind_matching(p, random_acyclic_matching(p, rng));
    for (sc::Rank q = 1; q <= p.rank_of_poset(); ++q) {
      const auto cols = down_matched_columns(p, table, q);
      EXPECT_EQ(sc::gf2_rank(sc::boundary_matrix(p, q).select_columns(cols)), cols.size());
    }
  }
}

TEST(SphereColorProperties, MorseChainBoundsAllOnes) {
  // On planar face posets with coreduction and M0 witnesses.
  Rng rng(43);
  int ran = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_eulerian_planar(rng, 12);
    const auto p = sc::build_face_poset(g);
    for (const auto& m : {sc::greedy_morse_matching(p), sc::build_matching_m0(g, sc::spanning_tree(g))}) {
      if (!sc::check_sphere_like(p, m).all_pass()) continue;
      const auto xi = sc::morse_chain(p, m);
      EXPECT_EQ(sc::apply(sc::boundary_matrix(p, 2), xi), sc::Gf2Vector::ones(p.slice(1).size()));
      ++ran;
    }
  }
  EXPECT_GT(ran, 60);
}

TEST(ColoringJson, RoundTrip) {
  const auto c = colors({{"f_in", 1}, {"f_out", 0}});
  EXPECT_EQ(sc::coloring_to_json(c).dump(), R"({"colors":{"f_in":1,"f_out":0}})");
  EXPECT_EQ(sc::parse_coloring(sc::coloring_to_json(c).dump()), c);
}
