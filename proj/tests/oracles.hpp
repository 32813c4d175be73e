#pragma once

// Independent reference implementations used only by tests. None of these
// call into the library code they are checked against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "misgeo/cnf.hpp"
#include "misgeo/exact_solvers.hpp"
#include "misgeo/geometry.hpp"

namespace oracle {

using rational = boost::multiprecision::cpp_rational;
using misgeo::big_int;
using misgeo::point;

// Segment intersection by solving the two parametric equations over the
// rationals; the parallel case falls back to projected interval overlap.
inline bool segments_meet(const point& a, const point& b, const point& c, const point& d) {
  const rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y), dx(d.x), dy(d.y);
  const rational rx = bx - ax, ry = by - ay, sx = dx - cx, sy = dy - cy;
  const rational denom = rx * sy - ry * sx;
  if (denom != 0) {
    const rational t = ((cx - ax) * sy - (cy - ay) * sx) / denom;
    const rational u = ((cx - ax) * ry - (cy - ay) * rx) / denom;
    return t >= 0 && t <= 1 && u >= 0 && u <= 1;
  }
  // parallel or degenerate: must be collinear
  auto on_line = [](const rational& px, const rational& py, const rational& qx, const rational& qy,
                    const rational& zx, const rational& zy) { return (qx - px) * (zy - py) == (qy - py) * (zx - px); };
  const bool ab_point = rx == 0 && ry == 0, cd_point = sx == 0 && sy == 0;
  if (ab_point && cd_point) return ax == cx && ay == cy;
  if (ab_point) return on_line(cx, cy, dx, dy, ax, ay) && std::min(cx, dx) <= ax && ax <= std::max(cx, dx) &&
                       std::min(cy, dy) <= ay && ay <= std::max(cy, dy);
  if (cd_point) return on_line(ax, ay, bx, by, cx, cy) && std::min(ax, bx) <= cx && cx <= std::max(ax, bx) &&
                       std::min(ay, by) <= cy && cy <= std::max(ay, by);
  if (!on_line(ax, ay, bx, by, cx, cy)) return false;
  const bool use_x = rx != 0;
  rational p0 = use_x ? ax : ay, p1 = use_x ? bx : by, q0 = use_x ? cx : cy, q1 = use_x ? dx : dy;
  if (p0 > p1) std::swap(p0, p1);
  if (q0 > q1) std::swap(q0, q1);
  return std::max(p0, q0) <= std::min(p1, q1);
}

inline bool polylines_meet(const std::vector<point>& p, const std::vector<point>& q) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    for (std::size_t j = 0; j + 1 < q.size(); ++j)
      if (segments_meet(p[i], p[i + 1], q[j], q[j + 1])) return true;
  return false;
}

// Walks the arc from p to q one position at a time.
inline bool chords_interleave(std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2) {
  int inside = 0;
  for (std::int64_t x = p1 + 1; x < q1; ++x)
    if (x == p2 || x == q2) ++inside;
  return inside == 1;
}

// Maximum weight over all subsets, adjacency given as a predicate.
inline std::int64_t subset_mwis(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& adjacent,
                                const std::vector<std::int64_t>& w) {
  std::vector<std::uint32_t> conflict(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && adjacent(i, j)) conflict[i] |= 1u << j;
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::int64_t v = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (mask >> i & 1u) {
        if (conflict[i] & mask) ok = false;
        v += w[i];
      }
    if (ok) best = std::max(best, v);
  }
  return best;
}

// DPLL with unit propagation.
inline bool dpll(std::vector<std::vector<int>> clauses) {
  for (;;) {
    int unit = 0;
    for (const auto& c : clauses) {
      if (c.empty()) return false;
      if (c.size() == 1) {
        unit = c[0];
        break;
      }
    }
    if (unit == 0) break;
    std::vector<std::vector<int>> next;
    for (const auto& c : clauses) {
      if (std::find(c.begin(), c.end(), unit) != c.end()) continue;
      std::vector<int> r;
      for (int l : c)
        if (l != -unit) r.push_back(l);
      next.push_back(std::move(r));
    }
    clauses = std::move(next);
  }
  if (clauses.empty()) return true;
  const int v = clauses.front().front();
  for (int lit : {v, -v}) {
    auto branch = clauses;
    branch.push_back({lit});
    if (dpll(branch)) return true;
  }
  return false;
}

// Separators as unit-step move strings over U, L, R: exactly kappa U moves,
// no L next to R, and no horizontal run longer than kappa.
inline std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> unit_separators(std::int64_t q,
                                                                                     std::int64_t kappa) {
  std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> out;
  std::vector<char> moves;
  std::function<void(std::int64_t, std::int64_t)> grow = [&](std::int64_t ups, std::int64_t run) {
    if (ups == kappa) {
      // trailing horizontal run allowed after the last up move
      std::vector<std::pair<std::int64_t, std::int64_t>> pts{{q, 0}};
      for (char m : moves) {
        auto [x, y] = pts.back();
        pts.emplace_back(m == 'L' ? x - 1 : m == 'R' ? x + 1 : x, m == 'U' ? y + 1 : y);
      }
      out.insert(pts);
    }
    for (char m : {'U', 'L', 'R'}) {
      if (m == 'U' && ups == kappa) continue;
      char last = moves.empty() ? 'U' : moves.back();
      if ((m == 'L' && last == 'R') || (m == 'R' && last == 'L')) continue;
      std::int64_t r = m == 'U' ? 0 : (last == m ? run + 1 : 1);
      if (r > kappa) continue;
      moves.push_back(m);
      grow(ups + (m == 'U'), r);
      moves.pop_back();
    }
  };
  grow(0, 0);
  return out;
}

// Every lattice point of a separator path, unit spacing.
inline std::vector<std::pair<std::int64_t, std::int64_t>> unit_points(const misgeo::separator_path& p) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pts{{p.origin, 0}};
  for (const auto& s : p.segments)
    for (std::int64_t k = 0; k < s.length; ++k) {
      auto [x, y] = pts.back();
      if (s.dir == misgeo::step::up) pts.emplace_back(x, y + 1);
      else pts.emplace_back(s.dir == misgeo::step::left ? x - 1 : x + 1, y);
    }
  return pts;
}

// Region test by sampling every half-integral point of s. The region between
// ma and mb at height y is the x-range (max x of ma, max x of mb].
inline bool sampled_between(const misgeo::grounded_string& s, const misgeo::separator_path& ma,
                            const misgeo::separator_path& mb) {
  auto max_x_at = [](const misgeo::separator_path& m, std::int64_t y2) {
    // y2 is twice the height
    std::int64_t best = INT64_MIN;
    auto pts = unit_points(m);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (2 * pts[i].second == y2) best = std::max(best, pts[i].first);
      if (i + 1 < pts.size() && pts[i].first == pts[i + 1].first && 2 * pts[i].second < y2 &&
          y2 < 2 * pts[i + 1].second)
        best = std::max(best, pts[i].first);
    }
    return best;
  };
  for (std::size_t i = 0; i + 1 < s.vertices.size(); ++i) {
    auto x0 = s.vertices[i].x.convert_to<std::int64_t>(), y0 = s.vertices[i].y.convert_to<std::int64_t>();
    auto x1 = s.vertices[i + 1].x.convert_to<std::int64_t>(), y1 = s.vertices[i + 1].y.convert_to<std::int64_t>();
    const std::int64_t steps = 2 * (std::abs(x1 - x0) + std::abs(y1 - y0));
    for (std::int64_t k = 0; k <= steps; ++k) {
      // doubled coordinates
      std::int64_t X = 2 * x0 + (x1 > x0 ? k : x1 < x0 ? -k : 0);
      std::int64_t Y = 2 * y0 + (y1 > y0 ? k : y1 < y0 ? -k : 0);
      std::int64_t a = max_x_at(ma, Y), b = max_x_at(mb, Y);
      if (!(X > 2 * a && X <= 2 * b)) return false;
    }
  }
  return true;
}

}  // namespace oracle
