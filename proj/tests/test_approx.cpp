#include <doctest.h>

#include <cmath>

#include "misgeo/approx.hpp"
#include "misgeo/exact_solvers.hpp"
#include "misgeo/generators.hpp"

using namespace misgeo;

namespace {

lshape ul(shape_id id, std::int64_t x, std::int64_t y, std::int64_t v, std::int64_t h) {
  return lshape{l_kind::UL, x, y, v, h, id};
}

double guarantee(weight_t opt, double factor) {
  return static_cast<double>(opt) / (factor * std::max(1.0, opt > 0 ? std::log2(static_cast<double>(opt)) : 0.0));
}

}  // namespace

TEST_CASE("order_shapes") {
  lshape_set s{{ul(0, 3, 0, 1, 1), ul(1, 1, 0, 1, 1), ul(2, 2, 0, 1, 1)}, {}};
  auto o = order_shapes(s);
  REQUIRE(o.ids == std::vector<shape_id>{1, 2, 0});
  REQUIRE(o.lines.size() == 4);

  lshape_set tie{{ul(7, 5, 0, 1, 1), ul(2, 5, 3, 1, 1)}, {}};
  REQUIRE(order_shapes(tie).ids == std::vector<shape_id>{2, 7});

  lshape_set mixed{{ul(0, 0, 0, 1, 1), lshape{l_kind::LR, 0, 0, 1, 1, 1}}, {}};
  REQUIRE_THROWS_WITH_AS(order_shapes(mixed), "mixed kinds", std::invalid_argument);
}

TEST_CASE("dummy line lies right of every shape") {
  auto s = random_lshapes(12, 3, 20, quadrant_mix::ul_only);
  auto o = order_shapes(s);
  for (const auto& l : s.shapes) REQUIRE_FALSE(crosses_vertical_line(l, o.lines.back()));
  REQUIRE(restricted_set(s, o, 1, 12).size() == 12);
}

TEST_CASE("restricted_set and crossing_set") {
  // the middle shape reaches past the line of the third
  lshape_set s{{ul(0, 0, 0, 1, 1), ul(1, 2, 5, 1, 4), ul(2, 4, 0, 1, 1)}, {}};
  auto o = order_shapes(s);
  REQUIRE(restricted_set(s, o, 1, 3).size() == 3);
  REQUIRE(restricted_set(s, o, 1, 2) == std::vector<shape_id>{0});
  REQUIRE(crossing_set(s, o, 1, 3, 3) == std::vector<shape_id>{1, 2});

  lshape_set none{{ul(0, 0, 0, 1, 1), ul(1, 3, 0, 1, 1), ul(2, 6, 0, 1, 1)}, {}};
  REQUIRE(crossing_set(none, order_shapes(none), 1, 3, 2) == std::vector<shape_id>{1});

  lshape_set all{{ul(0, 0, 0, 1, 9), ul(1, 3, 1, 1, 9), ul(2, 6, 2, 1, 9)}, {}};
  REQUIRE(crossing_set(all, order_shapes(all), 1, 3, 3).size() == 3);

  auto r = random_rectangles(10, 4, 12);
  auto ro = order_shapes(r);
  for (std::size_t k = 1; k <= 10; ++k) {
    std::vector<shape_id> want;
    for (std::size_t p = 1; p <= 10; ++p) {
      const auto& shape = *std::find_if(r.shapes.begin(), r.shapes.end(),
                                        [&](const rectangle& x) { return x.id == ro.ids[p - 1]; });
      if (crosses_vertical_line(shape, ro.lines[k - 1])) want.push_back(shape.id);
    }
    REQUIRE(crossing_set(r, ro, 1, 10, k) == want);
  }
}

TEST_CASE("small_opt_exact") {
  intersection_graph clique({0, 1, 2, 3, 4, 5});
  for (shape_id i = 0; i < 6; ++i)
    for (shape_id j = i + 1; j < 6; ++j) clique.add_edge(i, j);
  weight_map w{{3, 9}};
  auto r = small_opt_exact(clique, clique.ids(), w);
  REQUIRE(r.has_value());
  REQUIRE(r->value == 9);

  intersection_graph apart({0, 1, 2, 3, 4});
  REQUIRE_FALSE(small_opt_exact(apart, apart.ids(), {}).has_value());

  // two triangles and an isolated vertex: independence number 3
  intersection_graph g({0, 1, 2, 3, 4, 5, 6});
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}) g.add_edge(a, b);
  weight_map w2{{0, 2}, {4, 5}, {6, 3}};
  auto s = small_opt_exact(g, g.ids(), w2);
  REQUIRE(s.has_value());
  REQUIRE(s->value == brute_force_mwis(g, w2).value);
}

TEST_CASE("approx_quadrant small cases") {
  lshape_set four{{ul(0, 0, 0, 1, 1), ul(1, 5, 0, 1, 1), ul(2, 10, 0, 1, 1), ul(3, 15, 0, 1, 1)}, {}};
  auto a = approx_quadrant(four, {});
  REQUIRE(a.result.value == 4);
  REQUIRE(a.exact);
  lshape_set one{{ul(0, 0, 0, 1, 1)}, {}};
  REQUIRE(approx_quadrant(one, {}).result.value == 1);
}

TEST_CASE("approx_quadrant works on any single kind") {
  for (l_kind k : {l_kind::UR, l_kind::LL, l_kind::LR}) {
    auto s = random_lshapes(12, 9, 14, quadrant_mix::ul_only);
    for (auto& l : s.shapes) l.kind = k;
    auto g = build_intersection_graph(s);
    auto a = approx_quadrant(s, {});
    REQUIRE(g.is_independent(a.result.chosen));
    auto opt = brute_force_mwis(g).value;
    REQUIRE(a.result.value <= opt);
    REQUIRE(static_cast<double>(a.result.value) >= guarantee(opt, 1));
  }
}

TEST_CASE("reflect_to_ul preserves intersections within a kind") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto s = random_lshapes(10, seed, 10, quadrant_mix::ul_only);
    for (l_kind k : {l_kind::UR, l_kind::LL, l_kind::LR}) {
      lshape_set t = s, back;
      for (auto& l : t.shapes) l.kind = k;
      for (const auto& l : t.shapes) back.shapes.push_back(reflect_to_ul(l));
      REQUIRE(graphs_equal(build_intersection_graph(t), build_intersection_graph(back)));
    }
  }
}

TEST_CASE("approx_all_quadrants") {
  auto s = random_lshapes(12, 5, 14, quadrant_mix::ul_only);
  REQUIRE(approx_all_quadrants(s, {}).result.value == approx_quadrant(s, {}).result.value);

  lshape_set four{{lshape{l_kind::UL, 0, 0, 1, 1, 0}, lshape{l_kind::UR, 10, 0, 1, 1, 1},
                   lshape{l_kind::LL, 20, 0, 1, 1, 2}, lshape{l_kind::LR, 30, 0, 1, 1, 3}},
                  {}};
  auto a = approx_all_quadrants(four, {});
  REQUIRE(a.result.value >= 1);
  REQUIRE(build_intersection_graph(four).is_independent(a.result.chosen));

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto m = random_lshapes(12, seed, 14, quadrant_mix::mixed);
    auto g = build_intersection_graph(m);
    auto opt = brute_force_mwis(g).value;
    auto v = approx_all_quadrants(m, {}).result.value;
    REQUIRE(v <= opt);
    REQUIRE(static_cast<double>(v) >= guarantee(opt, 4));
  }
}

TEST_CASE("approx_rectangles") {
  rectangle_set four{{{0, 0, 1, 1, 0}, {3, 0, 4, 1, 1}, {6, 0, 7, 1, 2}, {9, 0, 10, 1, 3}}, {}};
  auto a = approx_rectangles(four, {});
  REQUIRE(a.result.value == 4);
  REQUIRE(a.exact);

  // every rectangle meets x = 5; OPT is the interval optimum of the y-projections
  rectangle_set stabbed;
  seeded_rng rng(4);
  std::vector<interval> proj;
  for (shape_id i = 0; i < 12; ++i) {
    std::int64_t y = rng.uniform(0, 30), h = rng.uniform(0, 3);
    stabbed.shapes.push_back(rectangle{5 - rng.uniform(0, 2), y, 5 + rng.uniform(0, 2), y + h, i});
    proj.push_back(interval{y, y + h, i});
  }
  REQUIRE(approx_rectangles(stabbed, {}).result.value == interval_mwis(proj).value);

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto r = random_rectangles(12, seed, 14);
    auto w = random_weights(ids_of(r), 1, 10, seed);
    auto g = build_intersection_graph(r);
    auto opt = brute_force_mwis(g, w).value;
    auto res = approx_rectangles(r, w);
    REQUIRE(g.is_independent(res.result.chosen));
    REQUIRE(res.result.value <= opt);
    REQUIRE(static_cast<double>(res.result.value) >= guarantee(opt, 1));
  }
}
