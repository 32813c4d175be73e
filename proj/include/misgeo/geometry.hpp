#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace misgeo {

using big_int = boost::multiprecision::cpp_int;
using shape_id = std::int64_t;
using weight_t = std::int64_t;

struct point {
  big_int x;
  big_int y;

  friend bool operator==(const point&, const point&) = default;
};

struct segment {
  point a;
  point b;

  friend bool operator==(const segment&, const segment&) = default;
};

/// Closed interval [lo, hi] on the line, lo < hi.
struct interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  shape_id id = 0;

  friend bool operator==(const interval&, const interval&) = default;
};

/// Chord between two of the 2n boundary positions of a circle, p < q.
struct chord {
  std::int64_t p = 0;
  std::int64_t q = 0;
  shape_id id = 0;

  friend bool operator==(const chord&, const chord&) = default;
};

/// Orientation of an L-shape, named by the quadrant its corner occupies:
/// UL has its vertical arm below the corner and its horizontal arm to the
/// right, UR vertical below / horizontal left, LL vertical above /
/// horizontal right, LR vertical above / horizontal left.
enum class l_kind { UL, UR, LL, LR };

std::string_view to_string(l_kind k);
l_kind parse_l_kind(std::string_view s);

struct lshape {
  l_kind kind = l_kind::UL;
  std::int64_t cx = 0;
  std::int64_t cy = 0;
  std::int64_t vlen = 1;
  std::int64_t hlen = 1;
  shape_id id = 0;

  friend bool operator==(const lshape&, const lshape&) = default;
};

/// Grounded square-L: vertical arm (g,0)-(g,arm), horizontal arm
/// (g,arm)-(g+arm,arm).
struct square_l {
  big_int ground_x;
  big_int arm;
  shape_id id = 0;

  friend bool operator==(const square_l&, const square_l&) = default;
};

/// Solid closed axis-parallel rectangle.
struct rectangle {
  std::int64_t x1 = 0;
  std::int64_t y1 = 0;
  std::int64_t x2 = 0;
  std::int64_t y2 = 0;
  shape_id id = 0;

  friend bool operator==(const rectangle&, const rectangle&) = default;
};

/// Polyline whose first vertex lies on the grounding line y = 0.
struct grounded_string {
  std::vector<point> vertices;
  shape_id id = 0;

  friend bool operator==(const grounded_string&, const grounded_string&) = default;
};

// Exact predicates. All point sets are closed: touching counts.

bool segments_intersect(const segment& s1, const segment& s2);
bool polyline_intersect(std::span<const point> p1, std::span<const point> p2);
bool polyline_intersect(const grounded_string& p1, const grounded_string& p2);

bool proper_overlap(const interval& i1, const interval& i2);
/// outer strictly contains inner: outer.lo < inner.lo and inner.hi < outer.hi.
bool contains(const interval& outer, const interval& inner);

bool crosses_vertical_line(const lshape& l, std::int64_t x);
bool crosses_vertical_line(const rectangle& r, std::int64_t x);

bool chords_cross(const chord& c1, const chord& c2);

bool lshapes_intersect(const lshape& a, const lshape& b);
bool rectangles_intersect(const rectangle& a, const rectangle& b);
bool square_ls_intersect(const square_l& a, const square_l& b);

/// Polyline with its segments pre-converted for repeated pairwise tests.
class prepared_polyline {
 public:
  explicit prepared_polyline(std::span<const point> vertices);

  friend bool intersect(const prepared_polyline& a, const prepared_polyline& b);

 private:
  bool small_ = true;
  std::vector<point> vertices_;
  std::vector<std::int64_t> small_coords_;  // ax, ay, bx, by per segment
  std::int64_t bbox_[4] = {0, 0, 0, 0};      // valid when small_
};

/// x-extent [min, max] of an L-shape.
std::pair<std::int64_t, std::int64_t> x_extent(const lshape& l);

// Polyline views, used by the generic predicate and by rendering.
std::vector<point> polyline_of(const lshape& l);
std::vector<point> polyline_of(const square_l& s);
std::vector<point> polyline_of(const rectangle& r);  // closed boundary

/// Number of interior vertices where the direction changes.
std::size_t bend_count(std::span<const point> vertices);
/// True when no two non-adjacent segments meet and adjacent segments share
/// only their common vertex.
bool is_simple(std::span<const point> vertices);

}  // namespace misgeo
