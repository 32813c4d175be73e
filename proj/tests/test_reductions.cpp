#include <doctest.h>

#include "misgeo/commands.hpp"
#include "misgeo/exact_solvers.hpp"
#include "misgeo/generators.hpp"
#include "misgeo/reductions.hpp"
#include "oracles.hpp"

using namespace misgeo;

namespace {

overlap_rep ov(std::vector<interval> ivs) { return overlap_rep{std::move(ivs), {}}; }

}  // namespace

TEST_CASE("circle_to_overlap") {
  auto one = circle_to_overlap(circle_rep{{{0, 1, 0}}, {}});
  REQUIRE(one.intervals == std::vector<interval>{{0, 1, 0}});

  auto two = circle_to_overlap(circle_rep{{{0, 2, 0}, {1, 3, 1}}, {}});
  REQUIRE(build_intersection_graph(two).edges().size() == 1);

  circle_rep three{{{0, 4, 0}, {1, 2, 1}, {3, 5, 2}}, {}};
  auto g = build_intersection_graph(circle_to_overlap(three));
  REQUIRE(g.edges() == std::vector<std::pair<shape_id, shape_id>>{{0, 2}});
}

TEST_CASE("overlap_to_grounded_segments relabels by rank") {
  auto g = overlap_to_grounded_segments(ov({{10, 40, 0}, {25, 70, 1}}));
  REQUIRE(g.intervals == std::vector<interval>{{0, 2, 0}, {1, 3, 1}});
  auto s0 = denoted_segment(g.intervals[0]);
  auto s1 = denoted_segment(g.intervals[1]);
  REQUIRE(s0.b == point{2, 4});
  REQUIRE(s1.b == point{3, 8});
  REQUIRE(oracle::segments_meet(s0.a, s0.b, s1.a, s1.b));
}

TEST_CASE("grounded_segments_intersect in both modes") {
  auto g = overlap_to_grounded_segments(ov({{0, 2, 0}, {1, 3, 1}}));
  REQUIRE(grounded_segments_intersect(g, 0, 1, gseg_mode::implicit));
  REQUIRE(grounded_segments_intersect(g, 0, 1, gseg_mode::exact));

  auto nest = overlap_to_grounded_segments(ov({{0, 3, 0}, {1, 2, 1}}));
  REQUIRE_FALSE(grounded_segments_intersect(nest, 0, 1, gseg_mode::implicit));
  REQUIRE_FALSE(grounded_segments_intersect(nest, 0, 1, gseg_mode::exact));

  auto apart = overlap_to_grounded_segments(ov({{0, 1, 0}, {2, 3, 1}}));
  REQUIRE_FALSE(grounded_segments_intersect(apart, 0, 1, gseg_mode::implicit));
  REQUIRE_FALSE(grounded_segments_intersect(apart, 0, 1, gseg_mode::exact));

  REQUIRE_THROWS_AS(grounded_segments_intersect(g, 0, 9, gseg_mode::exact), std::out_of_range);
}

TEST_CASE("exact mode agrees with the rational oracle on denoted segments") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = overlap_to_grounded_segments(random_overlap(10, seed));
    for (const auto& a : g.intervals)
      for (const auto& b : g.intervals) {
        if (a.id >= b.id) continue;
        auto sa = denoted_segment(a), sb = denoted_segment(b);
        REQUIRE(grounded_segments_intersect(g, a.id, b.id, gseg_mode::exact) ==
                oracle::segments_meet(sa.a, sa.b, sb.a, sb.b));
      }
  }
}

TEST_CASE("overlap_to_square_l examples") {
  auto one = overlap_to_square_l(ov({{0, 1, 0}}));
  REQUIRE(one.rep.shapes == std::vector<square_l>{{0, 1, 0}});
  REQUIRE(one.shifts.empty());

  auto two = overlap_to_square_l(ov({{0, 2, 0}, {1, 3, 1}}));
  REQUIRE(two.rep.shapes == std::vector<square_l>{{0, 2, 0}, {1, 3, 1}});
  REQUIRE(two.shifts.empty());
  REQUIRE(square_ls_intersect(two.rep.shapes[0], two.rep.shapes[1]));

  auto apart = overlap_to_square_l(ov({{1, 2, 0}, {3, 4, 1}}));
  REQUIRE(apart.shifts == shift_list{{0, 2}});
  REQUIRE(apart.rep.shapes == std::vector<square_l>{{1, 2, 0}, {5, 6, 1}});
  REQUIRE_FALSE(square_ls_intersect(apart.rep.shapes[0], apart.rep.shapes[1]));
}

TEST_CASE("square-L reduction preserves the graph") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto o = random_overlap(1 + seed % 40, seed);
    auto red = overlap_to_square_l(o);
    REQUIRE(red.queries <= 2 * o.n());
    REQUIRE(red.full_graph_checked);
    REQUIRE(graphs_equal(build_intersection_graph(o), build_intersection_graph(red.rep)));
    REQUIRE(square_l_certificate(o, red.rep));
  }
}

TEST_CASE("square_l_certificate rejects a perturbed arm") {
  auto o = ov({{1, 2, 0}, {3, 4, 1}});
  auto red = overlap_to_square_l(o);
  auto bad = red.rep;
  bad.shapes[0].arm += 10;
  REQUIRE_FALSE(square_l_certificate(o, bad));
}

TEST_CASE("negative endpoints are rejected") {
  REQUIRE_THROWS_AS(overlap_to_square_l(ov({{-2, 1, 0}})), std::invalid_argument);
}

TEST_CASE("cnf_to_outerstring examples") {
  cnf_formula f{2, {{1, 2}}};
  auto [rep, layout] = cnf_to_outerstring(f);
  REQUIRE(rep.n() == expected_gadget_strings(f));
  REQUIRE(outerstring_mwis_exact(rep).value == 1);
  REQUIRE(sat_brute_force(f));
  REQUIRE(layout.clause_points == std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 2 * layout.alpha + 1}});

  cnf_formula g{2, {{1}, {-1}}};
  auto [rep2, layout2] = cnf_to_outerstring(g);
  REQUIRE(rep2.n() == 2);
  for (const auto& [id, info] : layout2.strings) REQUIRE(info.side == gadget_side::A);
  REQUIRE(polyline_intersect(rep2.strings[0], rep2.strings[1]));
  REQUIRE(outerstring_mwis_exact(rep2).value == 1);
  REQUIRE_FALSE(sat_brute_force(g));

  cnf_formula empty{2, {}};
  auto [rep3, layout3] = cnf_to_outerstring(empty);
  REQUIRE(rep3.n() == 0);
  REQUIRE(sat_brute_force(empty));
}

TEST_CASE("gadget pads odd variable counts and guards large ones") {
  cnf_formula odd{3, {{1, -3}, {2}}};
  auto [rep, layout] = cnf_to_outerstring(odd);
  REQUIRE(layout.padded_vars == 4);
  REQUIRE(rep.n() == expected_gadget_strings(odd));
  cnf_formula big{17, {{1}}};
  REQUIRE_THROWS_WITH_AS(cnf_to_outerstring(big), "too many variables", std::invalid_argument);
}

TEST_CASE("gadget strings are simple, grounded and bend at most four times") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto f = random_cnf(4, 1 + seed % 6, 1 + static_cast<int>(seed % 3), seed);
    auto [rep, layout] = cnf_to_outerstring(f);
    REQUIRE(validate(rep).empty());
    for (const auto& s : rep.strings) {
      REQUIRE(bend_count(s.vertices) <= 4);
      REQUIRE(s.vertices.front().y == 0);
      const auto& info = layout.strings.at(s.id);
      REQUIRE(s.vertices.back() == point{layout.clause_points[info.clause - 1].first,
                                         layout.clause_points[info.clause - 1].second});
    }
  }
}

TEST_CASE("sat_brute_force") {
  REQUIRE_FALSE(sat_brute_force(cnf_formula{1, {{1}, {-1}}}));
  REQUIRE(sat_brute_force(cnf_formula{3, {}}));
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto f = random_cnf(4, 4 + seed % 12, 1 + static_cast<int>(seed % 3), seed);
    REQUIRE(sat_brute_force(f) == oracle::dpll(f.clauses));
  }
  REQUIRE_THROWS_AS(sat_brute_force(cnf_formula{25, {{1}}}), size_guard_error);
}
