#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "misgeo/graph.hpp"
#include "misgeo/representations.hpp"

namespace misgeo {

/// Exact MWIS of an overlap graph via the O(n^2) endpoint-range DP.
mis_result circle_mwis(const overlap_rep& o, const weight_map& w);
inline mis_result circle_mwis(const overlap_rep& o) { return circle_mwis(o, o.weights); }

/// Maximum-weight set of pairwise disjoint closed intervals.
mis_result interval_mwis(const std::vector<interval>& intervals, const weight_map& w = {});

/// Branch and bound: isolated vertices are taken, branching is on the
/// maximum-degree vertex, and a greedy weighted clique cover bounds.
mis_result outerstring_mwis_exact(const intersection_graph& g, const weight_map& w = {});
mis_result outerstring_mwis_exact(const outerstring_rep& r, const weight_map& w);
inline mis_result outerstring_mwis_exact(const outerstring_rep& r) { return outerstring_mwis_exact(r, r.weights); }

enum class step { up, left, right };

struct separator_segment {
  step dir;
  std::int64_t length;

  friend bool operator==(const separator_segment&, const separator_segment&) = default;
};

/// Integral y-monotone path from (origin, 0) up to y = kappa.
struct separator_path {
  std::int64_t origin = 0;
  std::vector<separator_segment> segments;

  std::vector<point> vertices() const;
  std::int64_t height() const;
  friend bool operator==(const separator_path&, const separator_path&) = default;
};

/// Number of separators per ground point: (2 kappa + 1)^(kappa + 1).
std::uint64_t separator_count(std::int64_t kappa);

/// All separators from (q, 0): horizontal runs and upward runs alternate,
/// every run has length 1..kappa, upward runs total exactly kappa.
std::vector<separator_path> enumerate_separators(std::int64_t q, std::int64_t kappa);

/// Occupied x-range of a monotone rectilinear curve at each level
/// t = 0..2 kappa: even t is height t/2, odd t the open band above it.
struct level_profile {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
  std::vector<char> present;
};

level_profile profile_of(const std::vector<point>& vertices, std::int64_t kappa);

/// s lies strictly right of ma and weakly left of (or on) mb.
bool string_between(const grounded_string& s, const separator_path& ma, const separator_path& mb);

/// Exact MWIS of bounded monotone strings via the separator DP. Weights
/// default to 1. stats.subproblems counts memoized states.
mis_result bounded_monotone_mis(const bounded_string_rep& r);

}  // namespace misgeo
