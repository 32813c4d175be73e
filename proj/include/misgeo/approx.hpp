#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "misgeo/graph.hpp"
#include "misgeo/representations.hpp"

namespace misgeo {

/// Shapes sorted by the x of their vertical segment (rectangles: left side),
/// ties by id. lines[p] is that x for position p; lines[n] is the dummy line
/// strictly right of every shape.
struct shape_order {
  std::vector<shape_id> ids;
  std::vector<std::int64_t> lines;
};

/// Throws std::invalid_argument("mixed kinds") unless all shapes share a kind.
shape_order order_shapes(const lshape_set& s);
shape_order order_shapes(const rectangle_set& s);

// Positions are 1-based: 1 <= i <= j <= n.

/// Shapes at positions i..j that do not cross the line of position j+1.
std::vector<shape_id> restricted_set(const lshape_set& s, const shape_order& o, std::size_t i, std::size_t j);
std::vector<shape_id> restricted_set(const rectangle_set& s, const shape_order& o, std::size_t i, std::size_t j);

/// Shapes at positions i..j that cross the line of position k.
std::vector<shape_id> crossing_set(const lshape_set& s, const shape_order& o, std::size_t i, std::size_t j,
                                   std::size_t k);
std::vector<shape_id> crossing_set(const rectangle_set& s, const shape_order& o, std::size_t i, std::size_t j,
                                   std::size_t k);

/// Exact MWIS over independent sets of at most 4 shapes, or nothing when an
/// independent set of 5 exists.
std::optional<mis_result> small_opt_exact(const intersection_graph& g, const std::vector<shape_id>& subset,
                                          const weight_map& w);

struct approx_outcome {
  mis_result result;
  bool exact = false;  // the whole input fell into the small case
};

/// Single-quadrant divide and conquer; value >= OPT / max(1, log2 OPT).
approx_outcome approx_quadrant(const lshape_set& s, const weight_map& w);
/// Best of the four reflected quadrant classes; value >= OPT / (4 max(1, log2 OPT)).
approx_outcome approx_all_quadrants(const lshape_set& s, const weight_map& w);
/// Same recurrence, crossing sets solved exactly on their y-projections.
approx_outcome approx_rectangles(const rectangle_set& s, const weight_map& w);

/// Reflection that maps shapes of kind k onto UL.
lshape reflect_to_ul(const lshape& l);

}  // namespace misgeo
