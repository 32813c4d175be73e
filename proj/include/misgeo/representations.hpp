#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "misgeo/geometry.hpp"
#include "misgeo/graph.hpp"

namespace misgeo {

struct circle_rep {
  std::vector<chord> chords;
  weight_map weights;

  std::size_t n() const { return chords.size(); }
  friend bool operator==(const circle_rep&, const circle_rep&) = default;
};

struct overlap_rep {
  std::vector<interval> intervals;
  weight_map weights;

  std::size_t n() const { return intervals.size(); }
  friend bool operator==(const overlap_rep&, const overlap_rep&) = default;
};

/// Implicit grounded-segment representation: interval [i, j] stands for the
/// segment (i, 0)-(j, 2^j). Endpoints are relabeled to 0..2n-1.
struct gseg_rep {
  std::vector<interval> intervals;
  weight_map weights;

  std::size_t n() const { return intervals.size(); }
  friend bool operator==(const gseg_rep&, const gseg_rep&) = default;
};

struct square_l_rep {
  std::vector<square_l> shapes;
  weight_map weights;

  std::size_t n() const { return shapes.size(); }
  friend bool operator==(const square_l_rep&, const square_l_rep&) = default;
};

struct lshape_set {
  std::vector<lshape> shapes;
  weight_map weights;

  std::size_t n() const { return shapes.size(); }
  friend bool operator==(const lshape_set&, const lshape_set&) = default;
};

struct rectangle_set {
  std::vector<rectangle> shapes;
  weight_map weights;

  std::size_t n() const { return shapes.size(); }
  friend bool operator==(const rectangle_set&, const rectangle_set&) = default;
};

/// Half-plane outerstring model: strings live in y >= 0 and start on y = 0.
struct outerstring_rep {
  std::vector<grounded_string> strings;
  weight_map weights;

  std::size_t n() const { return strings.size(); }
  friend bool operator==(const outerstring_rep&, const outerstring_rep&) = default;
};

/// Rectilinear y-monotone integral strings of total length at most kappa.
/// Only the first vertex lies on y = 0, so the first segment points up.
struct bounded_string_rep {
  std::vector<grounded_string> strings;
  std::int64_t kappa = 1;
  weight_map weights;

  std::size_t n() const { return strings.size(); }
};

using any_rep =
    std::variant<circle_rep, overlap_rep, gseg_rep, square_l_rep, lshape_set, rectangle_set, outerstring_rep>;

struct violation {
  shape_id id;  // offending shape, or -1 for whole-representation issues
  std::string what;

  friend bool operator==(const violation&, const violation&) = default;
};

std::vector<violation> validate(const circle_rep& r);
std::vector<violation> validate(const overlap_rep& r);
std::vector<violation> validate(const gseg_rep& r);
std::vector<violation> validate(const square_l_rep& r);
std::vector<violation> validate(const lshape_set& r);
std::vector<violation> validate(const rectangle_set& r);
std::vector<violation> validate(const outerstring_rep& r);
std::vector<violation> validate(const bounded_string_rep& r);
std::vector<violation> validate(const any_rep& r);

/// Thrown by operations that require a valid representation.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(std::vector<violation> v);
  const std::vector<violation>& violations() const { return violations_; }

 private:
  std::vector<violation> violations_;
};

template <class Rep>
void require_valid(const Rep& r) {
  auto v = validate(r);
  if (!v.empty()) throw validation_error(std::move(v));
}

/// Which predicate decides adjacency of implicit grounded segments.
enum class gseg_mode { implicit, exact };

/// Segment (lo, 0)-(hi, 2^hi) denoted by an implicit grounded-segment record.
segment denoted_segment(const interval& iv);

intersection_graph build_intersection_graph(const circle_rep& r);
intersection_graph build_intersection_graph(const overlap_rep& r);
intersection_graph build_intersection_graph(const gseg_rep& r, gseg_mode mode = gseg_mode::implicit);
intersection_graph build_intersection_graph(const square_l_rep& r);
intersection_graph build_intersection_graph(const lshape_set& r);
intersection_graph build_intersection_graph(const rectangle_set& r);
intersection_graph build_intersection_graph(const outerstring_rep& r);
intersection_graph build_intersection_graph(const bounded_string_rep& r);
intersection_graph build_intersection_graph(const any_rep& r);

const weight_map& weights_of(const any_rep& r);
std::vector<shape_id> ids_of(const any_rep& r);

}  // namespace misgeo
