#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "misgeo/cnf.hpp"
#include "misgeo/representations.hpp"

namespace misgeo {

/// Cuts the circle between positions 2n-1 and 0; chord (p, q) becomes [p, q].
overlap_rep circle_to_overlap(const circle_rep& c);

/// Order-preserving relabel of all endpoints to 0..2n-1.
gseg_rep overlap_to_grounded_segments(const overlap_rep& o);

/// Throws std::out_of_range for an unknown id.
bool grounded_segments_intersect(const gseg_rep& rep, shape_id u, shape_id v, gseg_mode mode);

struct shift_entry {
  shape_id interval_id;
  big_int offset;

  friend bool operator==(const shift_entry&, const shift_entry&) = default;
};

using shift_list = std::vector<shift_entry>;

struct square_l_reduction {
  square_l_rep rep;
  shift_list shifts;
  std::uint64_t queries = 0;        // binary searches for the closest disjoint left interval
  bool full_graph_checked = false;  // pairwise comparison ran in addition to the certificate
};

/// Pairwise graph comparison is added to the certificate up to this size.
inline constexpr std::size_t k_full_check_limit = 256;

/// Endpoints must be nonnegative. Each interval [l, r] is shifted to
/// [l', r'] and emitted as square-L (l', r'). Throws
/// std::runtime_error("construction mismatch") if the result does not
/// reproduce the overlap graph.
square_l_reduction overlap_to_square_l(const overlap_rep& o);

/// Exact check that the square-L graph of the shifted intervals equals the
/// overlap graph of the originals, in O(n log n).
bool square_l_certificate(const overlap_rep& o, const square_l_rep& s);

enum class gadget_side { A, B };

struct gadget_string_info {
  gadget_side side;
  std::uint32_t assignment;  // half-assignment index; bit t is the value of the t-th variable of the half
  std::uint32_t clause;      // 1-based

  friend bool operator==(const gadget_string_info&, const gadget_string_info&) = default;
};

struct gadget_layout {
  std::int64_t alpha = 0;
  int padded_vars = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> clause_points;  // (0, 2 alpha + i)
  std::vector<std::pair<std::int64_t, std::int64_t>> blocks_a;       // ground intervals, x < 0
  std::vector<std::pair<std::int64_t, std::int64_t>> blocks_b;       // mirrored, x > 0
  std::map<shape_id, gadget_string_info> strings;
};

inline constexpr int k_gadget_var_limit = 16;

/// Throws std::invalid_argument("too many variables") above 16 variables
/// after padding, and for malformed formulas.
std::pair<outerstring_rep, gadget_layout> cnf_to_outerstring(const cnf_formula& f);

/// Σ over both sides and all half-assignments of the clauses each satisfies.
std::size_t expected_gadget_strings(const cnf_formula& f);

}  // namespace misgeo
