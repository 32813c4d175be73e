#include "misgeo/representations.hpp"

#include <algorithm>
#include <set>

namespace misgeo {

namespace {

template <class Shapes>
std::vector<shape_id> collect_ids(const Shapes& shapes) {
  std::vector<shape_id> ids;
  ids.reserve(shapes.size());
  for (const auto& s : shapes) ids.push_back(s.id);
  return ids;
}

// Id uniqueness and weight sanity, shared by every representation.
template <class Shapes>
void check_common(const Shapes& shapes, const weight_map& w, weight_t min_weight, std::vector<violation>& out) {
  std::set<shape_id> seen;
  for (const auto& s : shapes)
    if (!seen.insert(s.id).second) out.push_back({s.id, "duplicate id"});
  for (const auto& [id, wt] : w) {
    if (!seen.count(id)) out.push_back({id, "weight for unknown id"});
    else if (wt < min_weight) out.push_back({id, min_weight == 1 ? "weight below 1" : "negative weight"});
  }
}

std::string joined_violations(const std::vector<violation>& v) {
  std::string s = "invalid representation:";
  for (const auto& x : v) s += " [" + std::to_string(x.id) + ": " + x.what + "]";
  return s;
}

bool is_permutation_of_range(std::vector<std::int64_t> vals) {
  std::sort(vals.begin(), vals.end());
  for (std::size_t i = 0; i < vals.size(); ++i)
    if (vals[i] != static_cast<std::int64_t>(i)) return false;
  return true;
}

template <class Shapes, class Pred>
intersection_graph pairwise_graph(const Shapes& shapes, Pred pred) {
  intersection_graph g(collect_ids(shapes));
  std::vector<std::size_t> idx(shapes.size());
  for (std::size_t i = 0; i < shapes.size(); ++i) idx[i] = g.index_of(shapes[i].id);
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (std::size_t j = i + 1; j < shapes.size(); ++j)
      if (pred(shapes[i], shapes[j])) g.add_edge_index(idx[i], idx[j]);
  return g;
}

void check_string_basics(const grounded_string& s, std::vector<violation>& out) {
  if (s.vertices.size() < 2) {
    out.push_back({s.id, "too few vertices"});
    return;
  }
  if (s.vertices.front().y != 0) out.push_back({s.id, "not grounded"});
  for (const auto& p : s.vertices)
    if (p.y < 0) {
      out.push_back({s.id, "below ground line"});
      break;
    }
  if (!is_simple(s.vertices)) out.push_back({s.id, "not simple"});
}

}  // namespace

validation_error::validation_error(std::vector<violation> v)
    : std::runtime_error(joined_violations(v)), violations_(std::move(v)) {}

std::vector<violation> validate(const circle_rep& r) {
  std::vector<violation> out;
  check_common(r.chords, r.weights, 0, out);
  std::vector<std::int64_t> pos;
  for (const auto& c : r.chords) {
    pos.push_back(c.p);
    pos.push_back(c.q);
    if (c.p >= c.q) out.push_back({c.id, "chord endpoints out of order"});
  }
  if (!is_permutation_of_range(pos)) out.push_back({-1, "positions not a permutation"});
  return out;
}

std::vector<violation> validate(const overlap_rep& r) {
  std::vector<violation> out;
  check_common(r.intervals, r.weights, 0, out);
  std::vector<std::int64_t> ends;
  for (const auto& iv : r.intervals) {
    ends.push_back(iv.lo);
    ends.push_back(iv.hi);
    if (iv.lo >= iv.hi) out.push_back({iv.id, "empty interval"});
  }
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) out.push_back({-1, "endpoints not distinct"});
  return out;
}

std::vector<violation> validate(const gseg_rep& r) {
  std::vector<violation> out;
  check_common(r.intervals, r.weights, 0, out);
  std::vector<std::int64_t> ends;
  for (const auto& iv : r.intervals) {
    ends.push_back(iv.lo);
    ends.push_back(iv.hi);
    if (iv.lo >= iv.hi) out.push_back({iv.id, "empty interval"});
  }
  if (!is_permutation_of_range(ends)) out.push_back({-1, "endpoints not relabeled"});
  return out;
}

std::vector<violation> validate(const square_l_rep& r) {
  std::vector<violation> out;
  check_common(r.shapes, r.weights, 0, out);
  std::vector<big_int> grounds;
  for (const auto& s : r.shapes) {
    grounds.push_back(s.ground_x);
    if (s.arm <= 0) out.push_back({s.id, "arm not positive"});
  }
  std::sort(grounds.begin(), grounds.end());
  if (std::adjacent_find(grounds.begin(), grounds.end()) != grounds.end())
    out.push_back({-1, "ground points not distinct"});
  return out;
}

std::vector<violation> validate(const lshape_set& r) {
  std::vector<violation> out;
  check_common(r.shapes, r.weights, 1, out);
  for (const auto& s : r.shapes)
    if (s.vlen <= 0 || s.hlen <= 0) out.push_back({s.id, "arm not positive"});
  return out;
}

std::vector<violation> validate(const rectangle_set& r) {
  std::vector<violation> out;
  check_common(r.shapes, r.weights, 1, out);
  for (const auto& s : r.shapes)
    if (s.x1 > s.x2 || s.y1 > s.y2) out.push_back({s.id, "corners out of order"});
  return out;
}

std::vector<violation> validate(const outerstring_rep& r) {
  std::vector<violation> out;
  check_common(r.strings, r.weights, 0, out);
  for (const auto& s : r.strings) check_string_basics(s, out);
  return out;
}

std::vector<violation> validate(const bounded_string_rep& r) {
  std::vector<violation> out;
  check_common(r.strings, r.weights, 0, out);
  if (r.kappa < 1) out.push_back({-1, "kappa not positive"});
  // coordinates are kept far from int64 overflow so the DP can use machine ints
  const big_int coord_limit = big_int(1) << 40;
  for (const auto& s : r.strings) {
    check_string_basics(s, out);
    if (s.vertices.size() < 2) continue;
    big_int length = 0;
    bool rectilinear = true, monotone = true, range_ok = true;
    for (std::size_t i = 0; i + 1 < s.vertices.size(); ++i) {
      const point& a = s.vertices[i];
      const point& b = s.vertices[i + 1];
      if (a.x != b.x && a.y != b.y) rectilinear = false;
      if (b.y < a.y) monotone = false;
      length += abs(b.x - a.x) + abs(b.y - a.y);
    }
    for (const auto& p : s.vertices)
      if (abs(p.x) > coord_limit) range_ok = false;
    if (!rectilinear) out.push_back({s.id, "not rectilinear"});
    if (!monotone) out.push_back({s.id, "not y-monotone"});
    if (length > r.kappa) out.push_back({s.id, "length bound"});
    if (!range_ok) out.push_back({s.id, "coordinate out of range"});
    for (std::size_t i = 1; i < s.vertices.size(); ++i)
      if (s.vertices[i].y == 0) {
        out.push_back({s.id, "touches ground line"});
        break;
      }
  }
  return out;
}

std::vector<violation> validate(const any_rep& r) {
  return std::visit([](const auto& x) { return validate(x); }, r);
}

segment denoted_segment(const interval& iv) {
  return segment{point{iv.lo, 0}, point{iv.hi, big_int(1) << iv.hi}};
}

intersection_graph build_intersection_graph(const circle_rep& r) {
  return pairwise_graph(r.chords, [](const chord& a, const chord& b) { return chords_cross(a, b); });
}

intersection_graph build_intersection_graph(const overlap_rep& r) {
  return pairwise_graph(r.intervals, [](const interval& a, const interval& b) { return proper_overlap(a, b); });
}

intersection_graph build_intersection_graph(const gseg_rep& r, gseg_mode mode) {
  if (mode == gseg_mode::implicit)
    return pairwise_graph(r.intervals, [](const interval& a, const interval& b) { return proper_overlap(a, b); });
  std::vector<segment> segs;
  segs.reserve(r.intervals.size());
  for (const auto& iv : r.intervals) segs.push_back(denoted_segment(iv));
  intersection_graph g(collect_ids(r.intervals));
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      if (segments_intersect(segs[i], segs[j])) g.add_edge(r.intervals[i].id, r.intervals[j].id);
  return g;
}

intersection_graph build_intersection_graph(const square_l_rep& r) {
  return pairwise_graph(r.shapes, [](const square_l& a, const square_l& b) { return square_ls_intersect(a, b); });
}

intersection_graph build_intersection_graph(const lshape_set& r) {
  return pairwise_graph(r.shapes, [](const lshape& a, const lshape& b) { return lshapes_intersect(a, b); });
}

intersection_graph build_intersection_graph(const rectangle_set& r) {
  return pairwise_graph(r.shapes,
                        [](const rectangle& a, const rectangle& b) { return rectangles_intersect(a, b); });
}

namespace {

intersection_graph string_graph(const std::vector<grounded_string>& strings) {
  std::vector<prepared_polyline> prepared;
  prepared.reserve(strings.size());
  for (const auto& s : strings) prepared.emplace_back(s.vertices);
  intersection_graph g(collect_ids(strings));
  for (std::size_t i = 0; i < strings.size(); ++i)
    for (std::size_t j = i + 1; j < strings.size(); ++j)
      if (intersect(prepared[i], prepared[j])) g.add_edge(strings[i].id, strings[j].id);
  return g;
}

}  // namespace

intersection_graph build_intersection_graph(const outerstring_rep& r) { return string_graph(r.strings); }
intersection_graph build_intersection_graph(const bounded_string_rep& r) { return string_graph(r.strings); }

intersection_graph build_intersection_graph(const any_rep& r) {
  return std::visit([](const auto& x) { return build_intersection_graph(x); }, r);
}

const weight_map& weights_of(const any_rep& r) {
  return std::visit([](const auto& x) -> const weight_map& { return x.weights; }, r);
}

std::vector<shape_id> ids_of(const any_rep& r) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, circle_rep>) return collect_ids(x.chords);
        else if constexpr (std::is_same_v<T, overlap_rep> || std::is_same_v<T, gseg_rep>)
          return collect_ids(x.intervals);
        else if constexpr (std::is_same_v<T, outerstring_rep>) return collect_ids(x.strings);
        else return collect_ids(x.shapes);
      },
      r);
}

}  // namespace misgeo
