#include "misgeo/geometry.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace misgeo {

namespace {

const big_int k_small_limit = big_int(1) << 62;

bool fits_small(const big_int& v) { return v < k_small_limit && v > -k_small_limit; }

template <class T>
int sign_of(const T& v) {
  return (v > 0) - (v < 0);
}

// Coordinates of one segment in a uniform numeric type.
template <class T>
struct seg_t {
  T ax, ay, bx, by;
};

// Wide is the product type: __int128 for |coords| < 2^62, big_int otherwise.
template <class T, class Wide>
int orient(const T& px, const T& py, const T& qx, const T& qy, const T& rx, const T& ry) {
  Wide d = Wide(qx - px) * Wide(ry - py) - Wide(qy - py) * Wide(rx - px);
  return sign_of(d);
}

template <class T>
bool in_box(const T& px, const T& py, const T& qx, const T& qy, const T& rx, const T& ry) {
  // r collinear with pq; is r within the bounding box of pq
  return std::min(px, qx) <= rx && rx <= std::max(px, qx) && std::min(py, qy) <= ry &&
         ry <= std::max(py, qy);
}

template <class T, class Wide>
bool seg_intersect(const seg_t<T>& s, const seg_t<T>& t) {
  // bounding-box rejection first
  if (std::max(s.ax, s.bx) < std::min(t.ax, t.bx) || std::max(t.ax, t.bx) < std::min(s.ax, s.bx) ||
      std::max(s.ay, s.by) < std::min(t.ay, t.by) || std::max(t.ay, t.by) < std::min(s.ay, s.by))
    return false;
  int o1 = orient<T, Wide>(s.ax, s.ay, s.bx, s.by, t.ax, t.ay);
  int o2 = orient<T, Wide>(s.ax, s.ay, s.bx, s.by, t.bx, t.by);
  int o3 = orient<T, Wide>(t.ax, t.ay, t.bx, t.by, s.ax, s.ay);
  int o4 = orient<T, Wide>(t.ax, t.ay, t.bx, t.by, s.bx, s.by);
  if (o1 == 0 && in_box(s.ax, s.ay, s.bx, s.by, t.ax, t.ay)) return true;
  if (o2 == 0 && in_box(s.ax, s.ay, s.bx, s.by, t.bx, t.by)) return true;
  if (o3 == 0 && in_box(t.ax, t.ay, t.bx, t.by, s.ax, s.ay)) return true;
  if (o4 == 0 && in_box(t.ax, t.ay, t.bx, t.by, s.bx, s.by)) return true;
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool all_small(std::span<const point> pts) {
  return std::all_of(pts.begin(), pts.end(),
                     [](const point& p) { return fits_small(p.x) && fits_small(p.y); });
}

std::vector<seg_t<std::int64_t>> small_segments(std::span<const point> pts) {
  std::vector<seg_t<std::int64_t>> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    out.push_back({static_cast<std::int64_t>(pts[i].x), static_cast<std::int64_t>(pts[i].y),
                   static_cast<std::int64_t>(pts[i + 1].x), static_cast<std::int64_t>(pts[i + 1].y)});
  }
  return out;
}

std::vector<seg_t<big_int>> big_segments(std::span<const point> pts) {
  std::vector<seg_t<big_int>> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    out.push_back({pts[i].x, pts[i].y, pts[i + 1].x, pts[i + 1].y});
  return out;
}

template <class T, class Wide>
bool any_pair(const std::vector<seg_t<T>>& a, const std::vector<seg_t<T>>& b) {
  for (const auto& s : a)
    for (const auto& t : b)
      if (seg_intersect<T, Wide>(s, t)) return true;
  return false;
}

// Axis-parallel segments and boxes intersect iff both coordinate ranges meet.
template <class T>
struct box {
  T x1, y1, x2, y2;
};

template <class T>
bool boxes_meet(const box<T>& a, const box<T>& b) {
  return a.x1 <= b.x2 && b.x1 <= a.x2 && a.y1 <= b.y2 && b.y1 <= a.y2;
}

std::pair<box<std::int64_t>, box<std::int64_t>> arms(const lshape& l) {
  auto [xlo, xhi] = x_extent(l);
  box<std::int64_t> horiz{xlo, l.cy, xhi, l.cy};
  box<std::int64_t> vert{};
  if (l.kind == l_kind::UL || l.kind == l_kind::UR)
    vert = {l.cx, l.cy - l.vlen, l.cx, l.cy};
  else
    vert = {l.cx, l.cy, l.cx, l.cy + l.vlen};
  return {vert, horiz};
}

}  // namespace

std::string_view to_string(l_kind k) {
  switch (k) {
    case l_kind::UL: return "UL";
    case l_kind::UR: return "UR";
    case l_kind::LL: return "LL";
    case l_kind::LR: return "LR";
  }
  return "UL";
}

l_kind parse_l_kind(std::string_view s) {
  if (s == "UL") return l_kind::UL;
  if (s == "UR") return l_kind::UR;
  if (s == "LL") return l_kind::LL;
  if (s == "LR") return l_kind::LR;
  throw std::invalid_argument("unknown L-shape kind '" + std::string(s) + "'");
}

bool segments_intersect(const segment& s1, const segment& s2) {
  std::array<point, 2> a{s1.a, s1.b};
  std::array<point, 2> b{s2.a, s2.b};
  return polyline_intersect(a, b);
}

bool polyline_intersect(std::span<const point> p1, std::span<const point> p2) {
  if (p1.size() == 1 && p2.size() == 1) return p1[0] == p2[0];
  // A single vertex is treated as a zero-length segment.
  std::vector<point> one1, one2;
  if (p1.size() == 1) {
    one1 = {p1[0], p1[0]};
    p1 = one1;
  }
  if (p2.size() == 1) {
    one2 = {p2[0], p2[0]};
    p2 = one2;
  }
  if (all_small(p1) && all_small(p2))
    return any_pair<std::int64_t, __int128>(small_segments(p1), small_segments(p2));
  return any_pair<big_int, big_int>(big_segments(p1), big_segments(p2));
}

bool polyline_intersect(const grounded_string& p1, const grounded_string& p2) {
  return polyline_intersect(std::span<const point>(p1.vertices), std::span<const point>(p2.vertices));
}

prepared_polyline::prepared_polyline(std::span<const point> vertices)
    : vertices_(vertices.begin(), vertices.end()) {
  if (vertices_.size() == 1) vertices_.push_back(vertices_[0]);
  small_ = all_small(vertices_);
  if (!small_) return;
  for (const auto& s : small_segments(vertices_)) {
    small_coords_.insert(small_coords_.end(), {s.ax, s.ay, s.bx, s.by});
  }
  bbox_[0] = bbox_[2] = small_coords_.empty() ? 0 : small_coords_[0];
  bbox_[1] = bbox_[3] = small_coords_.empty() ? 0 : small_coords_[1];
  for (std::size_t i = 0; i < small_coords_.size(); i += 2) {
    bbox_[0] = std::min(bbox_[0], small_coords_[i]);
    bbox_[2] = std::max(bbox_[2], small_coords_[i]);
    bbox_[1] = std::min(bbox_[1], small_coords_[i + 1]);
    bbox_[3] = std::max(bbox_[3], small_coords_[i + 1]);
  }
}

bool intersect(const prepared_polyline& a, const prepared_polyline& b) {
  if (!a.small_ || !b.small_) return polyline_intersect(a.vertices_, b.vertices_);
  if (a.bbox_[2] < b.bbox_[0] || b.bbox_[2] < a.bbox_[0] || a.bbox_[3] < b.bbox_[1] || b.bbox_[3] < a.bbox_[1])
    return false;
  const auto& ac = a.small_coords_;
  const auto& bc = b.small_coords_;
  for (std::size_t i = 0; i < ac.size(); i += 4) {
    seg_t<std::int64_t> s{ac[i], ac[i + 1], ac[i + 2], ac[i + 3]};
    for (std::size_t j = 0; j < bc.size(); j += 4) {
      seg_t<std::int64_t> t{bc[j], bc[j + 1], bc[j + 2], bc[j + 3]};
      if (seg_intersect<std::int64_t, __int128>(s, t)) return true;
    }
  }
  return false;
}

bool proper_overlap(const interval& i1, const interval& i2) {
  return (i1.lo < i2.lo && i2.lo < i1.hi && i1.hi < i2.hi) ||
         (i2.lo < i1.lo && i1.lo < i2.hi && i2.hi < i1.hi);
}

bool contains(const interval& outer, const interval& inner) {
  return outer.lo < inner.lo && inner.hi < outer.hi;
}

std::pair<std::int64_t, std::int64_t> x_extent(const lshape& l) {
  if (l.kind == l_kind::UL || l.kind == l_kind::LL) return {l.cx, l.cx + l.hlen};
  return {l.cx - l.hlen, l.cx};
}

bool crosses_vertical_line(const lshape& l, std::int64_t x) {
  auto [lo, hi] = x_extent(l);
  return lo <= x && x <= hi;
}

bool crosses_vertical_line(const rectangle& r, std::int64_t x) { return r.x1 <= x && x <= r.x2; }

bool chords_cross(const chord& c1, const chord& c2) {
  auto strictly_inside = [&](std::int64_t v) { return c1.p < v && v < c1.q; };
  return strictly_inside(c2.p) != strictly_inside(c2.q);
}

bool lshapes_intersect(const lshape& a, const lshape& b) {
  auto [av, ah] = arms(a);
  auto [bv, bh] = arms(b);
  return boxes_meet(av, bv) || boxes_meet(av, bh) || boxes_meet(ah, bv) || boxes_meet(ah, bh);
}

bool rectangles_intersect(const rectangle& a, const rectangle& b) {
  return boxes_meet(box<std::int64_t>{a.x1, a.y1, a.x2, a.y2}, box<std::int64_t>{b.x1, b.y1, b.x2, b.y2});
}

bool square_ls_intersect(const square_l& a, const square_l& b) {
  const square_l& left = a.ground_x <= b.ground_x ? a : b;
  const square_l& right = a.ground_x <= b.ground_x ? b : a;
  if (left.ground_x == right.ground_x) return true;  // shared ground point
  // The right shape's vertical arm must reach the left shape's horizontal arm;
  // the right horizontal arm starts past the left vertical arm.
  return right.ground_x <= left.ground_x + left.arm && left.arm <= right.arm;
}

std::vector<point> polyline_of(const lshape& l) {
  auto [v, h] = arms(l);
  point corner{l.cx, l.cy};
  point vend = (v.y1 == l.cy) ? point{v.x2, v.y2} : point{v.x1, v.y1};
  point hend = (h.x1 == l.cx) ? point{h.x2, h.y2} : point{h.x1, h.y1};
  return {vend, corner, hend};
}

std::vector<point> polyline_of(const square_l& s) {
  return {point{s.ground_x, 0}, point{s.ground_x, s.arm}, point{s.ground_x + s.arm, s.arm}};
}

std::vector<point> polyline_of(const rectangle& r) {
  return {point{r.x1, r.y1}, point{r.x2, r.y1}, point{r.x2, r.y2}, point{r.x1, r.y2}, point{r.x1, r.y1}};
}

std::size_t bend_count(std::span<const point> v) {
  std::size_t bends = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    big_int cross = (v[i].x - v[i - 1].x) * (v[i + 1].y - v[i].y) - (v[i].y - v[i - 1].y) * (v[i + 1].x - v[i].x);
    big_int dot = (v[i].x - v[i - 1].x) * (v[i + 1].x - v[i].x) + (v[i].y - v[i - 1].y) * (v[i + 1].y - v[i].y);
    if (cross != 0 || dot < 0) ++bends;
  }
  return bends;
}

bool is_simple(std::span<const point> v) {
  if (v.size() < 2) return true;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    for (std::size_t j = i + 1; j + 1 < v.size(); ++j) {
      std::span<const point> si = v.subspan(i, 2);
      std::span<const point> sj = v.subspan(j, 2);
      if (j == i + 1) {
        // adjacent: backtracking along the same line is the only failure
        const point& a = v[i];
        const point& b = v[i + 1];
        const point& c = v[i + 2];
        big_int cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
        big_int dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
        if (cross == 0 && dot < 0) return false;
        continue;
      }
      if (polyline_intersect(si, sj)) return false;
    }
  }
  return true;
}

}  // namespace misgeo
