#include "misgeo/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace misgeo {

std::int64_t seeded_rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % range);
}

circle_rep random_circle(std::size_t n, std::uint64_t seed) {
  seeded_rng rng(seed);
  std::vector<std::int64_t> pos(2 * n);
  std::iota(pos.begin(), pos.end(), 0);
  rng.shuffle(pos);
  circle_rep c;
  for (std::size_t i = 0; i < n; ++i) {
    auto [p, q] = std::minmax(pos[2 * i], pos[2 * i + 1]);
    c.chords.push_back(chord{p, q, static_cast<shape_id>(i)});
  }
  return c;
}

overlap_rep random_overlap(std::size_t n, std::uint64_t seed, std::int64_t span) {
  if (span <= 0) span = static_cast<std::int64_t>(4 * n);
  if (span < static_cast<std::int64_t>(2 * n)) throw std::invalid_argument("span too small");
  seeded_rng rng(seed);
  // 2n distinct values by partial Fisher-Yates over [0, span)
  std::vector<std::int64_t> values(static_cast<std::size_t>(span));
  std::iota(values.begin(), values.end(), 0);
  for (std::size_t i = 0; i < 2 * n; ++i)
    std::swap(values[i], values[static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(i), span - 1))]);
  values.resize(2 * n);
  overlap_rep o;
  for (std::size_t i = 0; i < n; ++i) {
    auto [lo, hi] = std::minmax(values[2 * i], values[2 * i + 1]);
    o.intervals.push_back(interval{lo, hi, static_cast<shape_id>(i)});
  }
  return o;
}

lshape_set random_lshapes(std::size_t n, std::uint64_t seed, std::int64_t box, quadrant_mix mix) {
  seeded_rng rng(seed);
  lshape_set s;
  const std::int64_t arm = std::max<std::int64_t>(1, box / 2);
  for (std::size_t i = 0; i < n; ++i) {
    lshape l;
    l.id = static_cast<shape_id>(i);
    l.kind = mix == quadrant_mix::ul_only ? l_kind::UL : static_cast<l_kind>(rng.uniform(0, 3));
    l.cx = rng.uniform(0, box);
    l.cy = rng.uniform(0, box);
    l.vlen = rng.uniform(1, arm);
    l.hlen = rng.uniform(1, arm);
    s.shapes.push_back(l);
  }
  return s;
}

rectangle_set random_rectangles(std::size_t n, std::uint64_t seed, std::int64_t box) {
  seeded_rng rng(seed);
  rectangle_set s;
  const std::int64_t side = std::max<std::int64_t>(0, box / 3);
  for (std::size_t i = 0; i < n; ++i) {
    rectangle r;
    r.id = static_cast<shape_id>(i);
    r.x1 = rng.uniform(0, box);
    r.y1 = rng.uniform(0, box);
    r.x2 = r.x1 + rng.uniform(0, side);
    r.y2 = r.y1 + rng.uniform(0, side);
    s.shapes.push_back(r);
  }
  return s;
}

bounded_string_rep random_bounded_strings(std::size_t n, std::int64_t kappa, std::uint64_t seed,
                                          std::int64_t width) {
  if (kappa < 1) throw std::invalid_argument("kappa must be positive");
  if (width <= 0) width = static_cast<std::int64_t>(2 * n) + kappa;
  seeded_rng rng(seed);
  bounded_string_rep r;
  r.kappa = kappa;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t x = rng.uniform(0, width - 1), y = 0;
    const std::int64_t steps = rng.uniform(1, kappa);
    grounded_string s;
    s.id = static_cast<shape_id>(i);
    s.vertices.push_back(point{x, y});
    int last = 0;  // 0 up, -1 left, +1 right
    for (std::int64_t k = 0; k < steps; ++k) {
      int move = 0;
      if (k > 0) {
        move = static_cast<int>(rng.uniform(-1, 1));
        if (move != 0 && move == -last) move = 0;  // no horizontal reversal
      }
      if (move == 0) ++y;
      else x += move;
      point p{x, y};
      // extend the last segment when the direction repeats
      if (k > 0 && move == last) s.vertices.back() = p;
      else s.vertices.push_back(p);
      last = move;
    }
    r.strings.push_back(std::move(s));
  }
  return r;
}

cnf_formula random_cnf(int vars, std::size_t clauses, int k, std::uint64_t seed) {
  if (vars < 1 || k < 1 || k > vars) throw std::invalid_argument("need 1 <= k <= vars");
  seeded_rng rng(seed);
  cnf_formula f;
  f.var_count = vars;
  std::vector<int> pool(static_cast<std::size_t>(vars));
  for (std::size_t c = 0; c < clauses; ++c) {
    std::iota(pool.begin(), pool.end(), 1);
    rng.shuffle(pool);
    std::vector<int> clause(pool.begin(), pool.begin() + k);
    for (int& lit : clause)
      if (rng.coin()) lit = -lit;
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

weight_map random_weights(const std::vector<shape_id>& ids, weight_t lo, weight_t hi, std::uint64_t seed) {
  seeded_rng rng(seed);
  weight_map w;
  for (shape_id id : ids) w[id] = rng.uniform(lo, hi);
  return w;
}

}  // namespace misgeo
