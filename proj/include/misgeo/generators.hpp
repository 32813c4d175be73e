#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "misgeo/cnf.hpp"
#include "misgeo/representations.hpp"

namespace misgeo {

/// Portable seeded generator: mt19937_64 with rejection sampling, so the same
/// seed gives the same stream with any standard library.
class seeded_rng {
 public:
  explicit seeded_rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, i - 1))]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform random perfect matching of the 2n boundary positions.
circle_rep random_circle(std::size_t n, std::uint64_t seed);
/// Random matching placed on 2n distinct endpoints drawn from [0, span).
overlap_rep random_overlap(std::size_t n, std::uint64_t seed, std::int64_t span = 0);

enum class quadrant_mix { ul_only, mixed };

/// Corners uniform in [0, box]^2, arm lengths uniform in [1, box/2].
lshape_set random_lshapes(std::size_t n, std::uint64_t seed, std::int64_t box, quadrant_mix mix);
/// Corners uniform in [0, box]^2, sides uniform in [0, box/3].
rectangle_set random_rectangles(std::size_t n, std::uint64_t seed, std::int64_t box);

/// Ground points uniform in [0, width); each string is a random walk of
/// 1..kappa unit steps, first step up, no horizontal reversal.
bounded_string_rep random_bounded_strings(std::size_t n, std::int64_t kappa, std::uint64_t seed,
                                          std::int64_t width = 0);

/// Clauses of k distinct variables with random signs.
cnf_formula random_cnf(int vars, std::size_t clauses, int k, std::uint64_t seed);

/// Weights uniform in [lo, hi] for the given ids.
weight_map random_weights(const std::vector<shape_id>& ids, weight_t lo, weight_t hi, std::uint64_t seed);

}  // namespace misgeo
