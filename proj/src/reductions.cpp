#include "misgeo/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace misgeo {

overlap_rep circle_to_overlap(const circle_rep& c) {
  overlap_rep o;
  o.weights = c.weights;
  o.intervals.reserve(c.chords.size());
  for (const auto& ch : c.chords) o.intervals.push_back(interval{ch.p, ch.q, ch.id});
  return o;
}

gseg_rep overlap_to_grounded_segments(const overlap_rep& o) {
  std::vector<std::int64_t> ends;
  ends.reserve(2 * o.intervals.size());
  for (const auto& iv : o.intervals) {
    ends.push_back(iv.lo);
    ends.push_back(iv.hi);
  }
  std::sort(ends.begin(), ends.end());
  auto rank = [&](std::int64_t e) {
    return static_cast<std::int64_t>(std::lower_bound(ends.begin(), ends.end(), e) - ends.begin());
  };
  gseg_rep g;
  g.weights = o.weights;
  g.intervals.reserve(o.intervals.size());
  for (const auto& iv : o.intervals) g.intervals.push_back(interval{rank(iv.lo), rank(iv.hi), iv.id});
  return g;
}

bool grounded_segments_intersect(const gseg_rep& rep, shape_id u, shape_id v, gseg_mode mode) {
  auto find = [&](shape_id id) -> const interval& {
    for (const auto& iv : rep.intervals)
      if (iv.id == id) return iv;
    throw std::out_of_range("unknown id " + std::to_string(id));
  };
  const interval& a = find(u);
  const interval& b = find(v);
  if (mode == gseg_mode::implicit) return proper_overlap(a, b);
  return segments_intersect(denoted_segment(a), denoted_segment(b));
}

square_l_reduction overlap_to_square_l(const overlap_rep& o) {
  const std::size_t n = o.intervals.size();
  for (const auto& iv : o.intervals)
    if (iv.lo < 0) throw std::invalid_argument("square-L reduction needs nonnegative endpoints");

  square_l_reduction out;
  std::vector<std::size_t> by_r(n);
  std::iota(by_r.begin(), by_r.end(), 0);
  std::sort(by_r.begin(), by_r.end(), [&](auto a, auto b) { return o.intervals[a].hi < o.intervals[b].hi; });
  std::vector<std::int64_t> rights(n);
  for (std::size_t k = 0; k < n; ++k) rights[k] = o.intervals[by_r[k]].hi;

  std::vector<std::int64_t> breakpoints;  // right endpoint of each tuple's interval
  // Shifted position of an endpoint: offset of the last tuple whose breakpoint lies strictly below it.
  auto shifted = [&](std::int64_t e) -> big_int {
    auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), e);
    if (it == breakpoints.begin()) return big_int(e);
    return e + out.shifts[static_cast<std::size_t>(it - breakpoints.begin()) - 1].offset;
  };

  std::vector<std::size_t> by_l(n);
  std::iota(by_l.begin(), by_l.end(), 0);
  std::sort(by_l.begin(), by_l.end(), [&](auto a, auto b) { return o.intervals[a].lo < o.intervals[b].lo; });

  big_int reach = -1;     // max of l' + r' over intervals swept so far
  std::size_t swept = 0;  // prefix of by_r folded into reach
  for (std::size_t q : by_l) {
    // closest interval lying entirely left of Q
    ++out.queries;
    auto pos = std::lower_bound(rights.begin(), rights.end(), o.intervals[q].lo) - rights.begin();
    if (pos == 0) continue;
    const std::size_t j = by_r[static_cast<std::size_t>(pos) - 1];
    if (!out.shifts.empty() && out.shifts.back().interval_id == o.intervals[j].id) continue;
    const std::int64_t jr = o.intervals[j].hi;
    for (; swept < n && rights[swept] <= jr; ++swept) {
      const interval& p = o.intervals[by_r[swept]];
      big_int v = shifted(p.lo) + shifted(p.hi);
      if (v > reach) reach = v;
    }
    out.shifts.push_back(shift_entry{o.intervals[j].id, reach - jr + 1});
    breakpoints.push_back(jr);
  }

  out.rep.weights = o.weights;
  out.rep.shapes.reserve(n);
  for (const auto& iv : o.intervals) out.rep.shapes.push_back(square_l{shifted(iv.lo), shifted(iv.hi), iv.id});

  if (!square_l_certificate(o, out.rep)) throw std::runtime_error("construction mismatch");
  if (n <= k_full_check_limit) {
    out.full_graph_checked = true;
    if (!graphs_equal(build_intersection_graph(o), build_intersection_graph(out.rep)))
      throw std::runtime_error("construction mismatch");
  }
  return out;
}

bool square_l_certificate(const overlap_rep& o, const square_l_rep& s) {
  const std::size_t n = o.intervals.size();
  if (s.shapes.size() != n) return false;
  std::map<shape_id, const square_l*> by_id;
  for (const auto& sq : s.shapes) by_id[sq.id] = &sq;
  if (by_id.size() != n) return false;

  struct row {
    std::int64_t lo, hi;
    const square_l* sq;
  };
  std::vector<row> rows;
  rows.reserve(n);
  for (const auto& iv : o.intervals) {
    auto it = by_id.find(iv.id);
    if (it == by_id.end()) return false;
    rows.push_back({iv.lo, iv.hi, it->second});
  }

  // The shift must be strictly order-preserving on all endpoints and nonnegative.
  std::vector<std::pair<std::int64_t, const big_int*>> ends;
  ends.reserve(2 * n);
  for (const auto& r : rows) {
    ends.emplace_back(r.lo, &r.sq->ground_x);
    ends.emplace_back(r.hi, &r.sq->arm);
  }
  std::sort(ends.begin(), ends.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 0; k < ends.size(); ++k) {
    if (k == 0 ? *ends[k].second < 0 : *ends[k].second <= *ends[k - 1].second) return false;
    if (k > 0 && ends[k].first == ends[k - 1].first) return false;
  }

  // With an order-preserving nonnegative shift, overlapping pairs intersect and
  // nested pairs do not; disjoint pairs need l'_j > l'_i + r'_i.
  std::sort(rows.begin(), rows.end(), [](const row& a, const row& b) { return a.hi < b.hi; });
  std::vector<big_int> prefix(n);
  std::vector<std::int64_t> rights(n);
  for (std::size_t k = 0; k < n; ++k) {
    big_int v = rows[k].sq->ground_x + rows[k].sq->arm;
    prefix[k] = (k == 0 || v > prefix[k - 1]) ? v : prefix[k - 1];
    rights[k] = rows[k].hi;
  }
  for (const auto& r : rows) {
    auto cnt = std::lower_bound(rights.begin(), rights.end(), r.lo) - rights.begin();
    if (cnt > 0 && r.sq->ground_x <= prefix[static_cast<std::size_t>(cnt) - 1]) return false;
  }
  return true;
}

namespace {

// Whether the half-assignment satisfies the clause through the variables
// first..first+count-1 (1-based).
bool half_satisfies(const std::vector<int>& clause, std::uint32_t assignment, int first, int count) {
  for (int lit : clause) {
    int v = std::abs(lit);
    if (v < first || v >= first + count) continue;
    bool value = (assignment >> (v - first)) & 1u;
    if ((lit > 0) == value) return true;
  }
  return false;
}

struct gadget_params {
  int padded = 0;
  int half = 0;
  std::int64_t blocks = 1;
};

gadget_params gadget_shape(const cnf_formula& f) {
  if (auto p = cnf_problem(f); !p.empty()) throw std::invalid_argument(p);
  gadget_params g;
  g.padded = f.var_count + (f.var_count % 2);
  if (g.padded > k_gadget_var_limit) throw std::invalid_argument("too many variables");
  g.half = g.padded / 2;
  g.blocks = std::int64_t{1} << g.half;
  return g;
}

}  // namespace

std::size_t expected_gadget_strings(const cnf_formula& f) {
  gadget_params g = gadget_shape(f);
  std::size_t total = 0;
  for (int side = 0; side < 2; ++side)
    for (std::int64_t a = 0; a < g.blocks; ++a)
      for (const auto& clause : f.clauses)
        if (half_satisfies(clause, static_cast<std::uint32_t>(a), 1 + side * g.half, g.half)) ++total;
  return total;
}

std::pair<outerstring_rep, gadget_layout> cnf_to_outerstring(const cnf_formula& f) {
  gadget_params g = gadget_shape(f);
  const std::int64_t m = static_cast<std::int64_t>(f.clauses.size());
  const std::int64_t B = g.blocks;

  gadget_layout layout;
  layout.padded_vars = g.padded;
  layout.alpha = B * (m + 1);
  const std::int64_t alpha = layout.alpha;
  for (std::int64_t c = 1; c <= m; ++c) layout.clause_points.emplace_back(0, 2 * alpha + c);

  outerstring_rep rep;
  shape_id next_id = 0;
  for (int side = 0; side < 2; ++side) {
    const std::int64_t sign = side == 0 ? 1 : -1;  // B mirrors A across x = 0
    for (std::int64_t i = 1; i <= B; ++i) {
      const std::int64_t left = -(i + 1) * (m + 1);
      auto& blocks = side == 0 ? layout.blocks_a : layout.blocks_b;
      if (side == 0) blocks.emplace_back(left, left + m);
      else blocks.emplace_back(-(left + m), -left);
      const auto assignment = static_cast<std::uint32_t>(i - 1);
      for (std::int64_t c = 1; c <= m; ++c) {
        if (!half_satisfies(f.clauses[c - 1], assignment, 1 + side * g.half, g.half)) continue;
        // Lower blocks turn higher, so strings of different blocks cross.
        const std::int64_t x0 = left + m - c;
        const std::int64_t turn = alpha + (B - i) * (m + 1) + c;
        const std::int64_t top = 2 * alpha + c;
        grounded_string s;
        s.id = next_id++;
        for (auto [x, y] : {std::pair{x0, std::int64_t{0}}, {x0, turn}, {-c, turn}, {-c, top}, {std::int64_t{0}, top}})
          s.vertices.push_back(point{sign * x, y});
        layout.strings[s.id] = gadget_string_info{side == 0 ? gadget_side::A : gadget_side::B, assignment,
                                                  static_cast<std::uint32_t>(c)};
        rep.strings.push_back(std::move(s));
      }
    }
  }

  // Structural properties, checked against the exact geometry.
  if (rep.strings.size() != expected_gadget_strings(f)) throw std::logic_error("gadget string count");
  std::vector<prepared_polyline> prepared;
  prepared.reserve(rep.strings.size());
  for (const auto& s : rep.strings) {
    if (bend_count(s.vertices) > 4 || !is_simple(s.vertices)) throw std::logic_error("gadget string shape");
    prepared.emplace_back(s.vertices);
  }
  for (std::size_t a = 0; a < rep.strings.size(); ++a) {
    const auto& ia = layout.strings[rep.strings[a].id];
    for (std::size_t b = a + 1; b < rep.strings.size(); ++b) {
      const auto& ib = layout.strings[rep.strings[b].id];
      bool expected = ia.side != ib.side ? ia.clause == ib.clause : ia.assignment != ib.assignment;
      if (intersect(prepared[a], prepared[b]) != expected) throw std::logic_error("gadget intersection pattern");
    }
  }
  return {std::move(rep), std::move(layout)};
}

}  // namespace misgeo
