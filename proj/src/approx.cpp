#include "misgeo/approx.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "misgeo/exact_solvers.hpp"

namespace misgeo {

namespace {

std::int64_t line_of(const lshape& l) { return l.cx; }
std::int64_t line_of(const rectangle& r) { return r.x1; }
std::int64_t reach_of(const lshape& l) { return x_extent(l).second; }
std::int64_t reach_of(const rectangle& r) { return r.x2; }

template <class Shape>
shape_order order_of(const std::vector<Shape>& shapes) {
  std::vector<std::size_t> idx(shapes.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) {
    return std::pair{line_of(shapes[a]), shapes[a].id} < std::pair{line_of(shapes[b]), shapes[b].id};
  });
  shape_order o;
  std::int64_t far = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    o.ids.push_back(shapes[idx[k]].id);
    o.lines.push_back(line_of(shapes[idx[k]]));
    far = k == 0 ? reach_of(shapes[idx[k]]) : std::max(far, reach_of(shapes[idx[k]]));
  }
  o.lines.push_back(far + 1);
  return o;
}

template <class Shape>
const Shape& shape_by_id(const std::vector<Shape>& shapes, shape_id id) {
  for (const auto& s : shapes)
    if (s.id == id) return s;
  throw std::out_of_range("unknown id " + std::to_string(id));
}

template <class Shape>
std::vector<shape_id> restricted_of(const std::vector<Shape>& shapes, const shape_order& o, std::size_t i,
                                    std::size_t j) {
  std::vector<shape_id> out;
  for (std::size_t p = i; p <= j; ++p) {
    const Shape& s = shape_by_id(shapes, o.ids[p - 1]);
    if (!crosses_vertical_line(s, o.lines[j])) out.push_back(s.id);
  }
  return out;
}

template <class Shape>
std::vector<shape_id> crossing_of(const std::vector<Shape>& shapes, const shape_order& o, std::size_t i,
                                  std::size_t j, std::size_t k) {
  std::vector<shape_id> out;
  for (std::size_t p = i; p <= j; ++p) {
    const Shape& s = shape_by_id(shapes, o.ids[p - 1]);
    if (crosses_vertical_line(s, o.lines[k - 1])) out.push_back(s.id);
  }
  return out;
}

// Depth-bounded search over independent sets of size <= limit.
struct small_search {
  small_search(const intersection_graph& graph, const std::vector<std::size_t>& v, const std::vector<weight_t>& wt,
               std::size_t lim)
      : g(graph), verts(v), w(wt), limit(lim) {}

  const intersection_graph& g;
  const std::vector<std::size_t>& verts;
  const std::vector<weight_t>& w;
  std::size_t limit;
  bool found_limit = false;
  weight_t best = -1;
  std::vector<std::size_t> best_set, cur;

  void run(std::size_t from, weight_t value) {
    if (value > best) {
      best = value;
      best_set = cur;
    }
    if (cur.size() == limit) {
      found_limit = true;
      return;
    }
    for (std::size_t a = from; a < verts.size() && !found_limit; ++a) {
      bool ok = true;
      for (std::size_t c : cur)
        if (g.adjacent_index(c, verts[a])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(verts[a]);
      run(a + 1, value + w[a]);
      cur.pop_back();
    }
  }
};

// Divide and conquer over the shape order. Positions are 1-based; each table
// entry holds an independent subset of I[i, j].
template <class Shape>
class divide_and_conquer {
 public:
  using exact_fn = std::function<std::vector<shape_id>(const std::vector<shape_id>&)>;

  divide_and_conquer(const std::vector<Shape>& shapes, const intersection_graph& g, const weight_map& w,
                     exact_fn exact)
      : shapes_(shapes), g_(g), w_(w), exact_(std::move(exact)), order_(order_of(shapes)) {
    for (const auto& s : shapes) by_id_[s.id] = &s;
    for (shape_id id : order_.ids) by_pos_.push_back(by_id_.at(id));
  }

  approx_outcome run() {
    auto start = std::chrono::steady_clock::now();
    approx_outcome out;
    const std::size_t n = shapes_.size();
    std::vector<shape_id> chosen;
    if (n > 0) {
      chosen = solve(1, n).ids;
      out.exact = root_small_;
    } else {
      out.exact = true;
    }
    solver_stats stats;
    stats.subproblems = table_.size();
    stats.nodes = crossing_cache_.size();
    stats.queries = small_checks_;
    out.result = make_result(g_, w_, std::move(chosen), stats);
    out.result.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
  }

 private:
  struct entry {
    weight_t value = 0;
    std::vector<shape_id> ids;
  };

  weight_t value_of(const std::vector<shape_id>& ids) const {
    weight_t v = 0;
    for (shape_id id : ids) v += weight_of(w_, id);
    return v;
  }

  std::vector<shape_id> restricted(std::size_t i, std::size_t j) const {
    std::vector<shape_id> out;
    for (std::size_t p = i; p <= j; ++p)
      if (!crosses_vertical_line(*by_pos_[p - 1], order_.lines[j])) out.push_back(by_pos_[p - 1]->id);
    return out;
  }

  const entry& solve(std::size_t i, std::size_t j) {
    static const entry empty;
    if (i > j) return empty;
    auto key = std::pair{i, j};
    if (auto it = table_.find(key); it != table_.end()) return it->second;

    entry best;
    const auto members = restricted(i, j);
    if (!members.empty()) {
      ++small_checks_;
      if (auto small = small_opt_exact(g_, members, w_)) {
        best.value = small->value;
        best.ids = small->chosen;
        if (i == 1 && j == shapes_.size()) root_small_ = true;
      } else {
        for (std::size_t k = i + 1; k < j; ++k) {
          const entry& left = solve(i, k - 1);
          const entry& right = solve(k + 1, j);
          std::vector<shape_id> ids = left.ids;
          ids.insert(ids.end(), right.ids.begin(), right.ids.end());
          // the line of position k separates the two halves
          if (!g_.is_independent(ids)) throw std::logic_error("split halves intersect");
          if (left.value + right.value > best.value || best.ids.empty()) {
            best.value = left.value + right.value;
            best.ids = std::move(ids);
          }
          const entry& cross = crossing(members, k);
          if (cross.value > best.value) best = cross;
        }
      }
    }
    return table_.emplace(key, std::move(best)).first->second;
  }

  // Exact optimum of the members of I[i, j] that meet the line of position k.
  const entry& crossing(const std::vector<shape_id>& members, std::size_t k) {
    std::vector<shape_id> set;
    for (shape_id id : members)
      if (crosses_vertical_line(*by_id_.at(id), order_.lines[k - 1])) set.push_back(id);
    if (auto it = crossing_cache_.find(set); it != crossing_cache_.end()) return it->second;
    entry e;
    e.ids = exact_(set);
    e.value = value_of(e.ids);
    return crossing_cache_.emplace(std::move(set), std::move(e)).first->second;
  }

  const std::vector<Shape>& shapes_;
  const intersection_graph& g_;
  const weight_map& w_;
  exact_fn exact_;
  shape_order order_;
  std::map<shape_id, const Shape*> by_id_;
  std::vector<const Shape*> by_pos_;
  std::map<std::pair<std::size_t, std::size_t>, entry> table_;
  std::map<std::vector<shape_id>, entry> crossing_cache_;
  std::uint64_t small_checks_ = 0;
  bool root_small_ = false;
};

std::vector<std::size_t> indices_of(const intersection_graph& g, const std::vector<shape_id>& ids) {
  std::vector<std::size_t> idx;
  idx.reserve(ids.size());
  for (shape_id id : ids) idx.push_back(g.index_of(id));
  return idx;
}

}  // namespace

shape_order order_shapes(const lshape_set& s) {
  for (const auto& l : s.shapes)
    if (l.kind != s.shapes.front().kind) throw std::invalid_argument("mixed kinds");
  return order_of(s.shapes);
}

shape_order order_shapes(const rectangle_set& s) { return order_of(s.shapes); }

std::vector<shape_id> restricted_set(const lshape_set& s, const shape_order& o, std::size_t i, std::size_t j) {
  return restricted_of(s.shapes, o, i, j);
}

std::vector<shape_id> restricted_set(const rectangle_set& s, const shape_order& o, std::size_t i, std::size_t j) {
  return restricted_of(s.shapes, o, i, j);
}

std::vector<shape_id> crossing_set(const lshape_set& s, const shape_order& o, std::size_t i, std::size_t j,
                                   std::size_t k) {
  return crossing_of(s.shapes, o, i, j, k);
}

std::vector<shape_id> crossing_set(const rectangle_set& s, const shape_order& o, std::size_t i, std::size_t j,
                                   std::size_t k) {
  return crossing_of(s.shapes, o, i, j, k);
}

std::optional<mis_result> small_opt_exact(const intersection_graph& g, const std::vector<shape_id>& subset,
                                          const weight_map& w) {
  const auto verts = indices_of(g, subset);
  std::vector<weight_t> wt;
  for (shape_id id : subset) wt.push_back(std::max<weight_t>(0, weight_of(w, id)));

  small_search probe(g, verts, wt, 5);
  probe.run(0, 0);
  if (probe.found_limit) return std::nullopt;
  // no independent 5-set, so the search above already saw every independent set
  std::vector<shape_id> chosen;
  for (std::size_t v : probe.best_set) chosen.push_back(g.id(v));
  return make_result(g, w, std::move(chosen));
}

lshape reflect_to_ul(const lshape& l) {
  lshape r = l;
  if (l.kind == l_kind::UR || l.kind == l_kind::LR) r.cx = -l.cx;
  if (l.kind == l_kind::LL || l.kind == l_kind::LR) r.cy = -l.cy;
  r.kind = l_kind::UL;
  return r;
}

approx_outcome approx_quadrant(const lshape_set& s, const weight_map& w) {
  lshape_set canon;
  for (const auto& l : s.shapes) {
    if (l.kind != s.shapes.front().kind) throw std::invalid_argument("mixed kinds");
    canon.shapes.push_back(reflect_to_ul(l));
  }
  const auto g = build_intersection_graph(canon);
  divide_and_conquer<lshape> dc(canon.shapes, g, w, [&](const std::vector<shape_id>& set) {
    auto sub = g.induced(indices_of(g, set));
    return outerstring_mwis_exact(sub, w).chosen;
  });
  return dc.run();
}

approx_outcome approx_all_quadrants(const lshape_set& s, const weight_map& w) {
  const auto g = build_intersection_graph(s);
  approx_outcome best;
  // a small optimum is solved exactly across all classes at once
  if (auto small = small_opt_exact(g, g.ids(), w)) {
    best.result = std::move(*small);
    best.exact = true;
    return best;
  }
  bool have = false;
  for (l_kind k : {l_kind::UL, l_kind::UR, l_kind::LL, l_kind::LR}) {
    lshape_set part;
    for (const auto& l : s.shapes)
      if (l.kind == k) part.shapes.push_back(l);
    if (part.shapes.empty()) continue;
    auto r = approx_quadrant(part, w);
    if (!have || r.result.value > best.result.value) {
      best = std::move(r);
      have = true;
    }
  }
  best.exact = false;
  auto stats = best.result.stats;
  best.result = make_result(g, w, best.result.chosen, stats);
  return best;
}

approx_outcome approx_rectangles(const rectangle_set& s, const weight_map& w) {
  const auto g = build_intersection_graph(s);
  divide_and_conquer<rectangle> dc(s.shapes, g, w, [&](const std::vector<shape_id>& set) {
    std::vector<interval> proj;
    for (shape_id id : set) {
      const rectangle& r = shape_by_id(s.shapes, id);
      proj.push_back(interval{r.y1, r.y2, id});
    }
    return interval_mwis(proj, w).chosen;
  });
  return dc.run();
}

}  // namespace misgeo
