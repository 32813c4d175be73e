#include "misgeo/exact_solvers.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace misgeo {

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

weight_t clamped(const weight_map& w, shape_id id) { return std::max<weight_t>(0, weight_of(w, id)); }

}  // namespace

mis_result circle_mwis(const overlap_rep& o, const weight_map& w) {
  auto start = clock_type::now();
  const std::size_t n = o.intervals.size();
  const std::int64_t N = static_cast<std::int64_t>(2 * n);

  std::vector<std::int64_t> ends;
  for (const auto& iv : o.intervals) {
    ends.push_back(iv.lo);
    ends.push_back(iv.hi);
  }
  std::sort(ends.begin(), ends.end());
  auto rank = [&](std::int64_t e) {
    return static_cast<std::int64_t>(std::lower_bound(ends.begin(), ends.end(), e) - ends.begin());
  };
  std::vector<std::int64_t> partner(N, -1);
  std::vector<std::size_t> owner(N, 0);
  for (std::size_t c = 0; c < n; ++c) {
    std::int64_t l = rank(o.intervals[c].lo), r = rank(o.intervals[c].hi);
    partner[l] = r;
    partner[r] = l;
    owner[r] = c;
  }

  // Triangular table: M(i, j) for 0 <= i <= j < N, row j holds i = 0..j.
  std::vector<weight_t> table(static_cast<std::size_t>(N * (N + 1) / 2), 0);
  auto at = [&](std::int64_t i, std::int64_t j) -> weight_t {
    if (i > j) return 0;
    return table[static_cast<std::size_t>(j * (j + 1) / 2 + i)];
  };
  for (std::int64_t j = 0; j < N; ++j) {
    const std::int64_t k = partner[j];
    const weight_t wj = k < j ? clamped(w, o.intervals[owner[j]].id) : 0;
    weight_t* row = &table[static_cast<std::size_t>(j * (j + 1) / 2)];
    for (std::int64_t i = 0; i <= j; ++i) {
      weight_t v = at(i, j - 1);
      if (k < j && k >= i) v = std::max(v, at(i, k - 1) + at(k + 1, j - 1) + wj);
      row[i] = v;
    }
  }

  std::vector<shape_id> chosen;
  std::vector<std::pair<std::int64_t, std::int64_t>> stack;
  if (N > 0) stack.emplace_back(0, N - 1);
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    if (i >= j) continue;
    if (at(i, j) == at(i, j - 1)) {
      stack.emplace_back(i, j - 1);
      continue;
    }
    const std::int64_t k = partner[j];
    chosen.push_back(o.intervals[owner[j]].id);
    stack.emplace_back(i, k - 1);
    stack.emplace_back(k + 1, j - 1);
  }

  solver_stats stats;
  stats.subproblems = static_cast<std::uint64_t>(table.size());
  auto result = make_result(build_intersection_graph(o), w, std::move(chosen), stats);
  result.stats.wall_ms = elapsed_ms(start);
  return result;
}

mis_result interval_mwis(const std::vector<interval>& intervals, const weight_map& w) {
  auto start = clock_type::now();
  const std::size_t n = intervals.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    const auto &x = intervals[a], &y = intervals[b];
    return std::tie(x.hi, x.lo, x.id) < std::tie(y.hi, y.lo, y.id);
  });
  std::vector<std::int64_t> his(n);
  for (std::size_t k = 0; k < n; ++k) his[k] = intervals[order[k]].hi;

  // best[k]: optimum over the first k intervals in order of right endpoint
  std::vector<weight_t> best(n + 1, 0);
  std::vector<std::size_t> pred(n);
  for (std::size_t k = 0; k < n; ++k) {
    const interval& iv = intervals[order[k]];
    pred[k] = static_cast<std::size_t>(std::lower_bound(his.begin(), his.end(), iv.lo) - his.begin());
    best[k + 1] = std::max(best[k], best[pred[k]] + clamped(w, iv.id));
  }
  std::vector<shape_id> chosen;
  for (std::size_t k = n; k > 0;) {
    if (best[k] == best[k - 1]) {
      --k;
    } else {
      chosen.push_back(intervals[order[k - 1]].id);
      k = pred[k - 1];
    }
  }

  // disjointness check in O(n log n): consecutive chosen intervals must be separated
  std::vector<interval> picked;
  for (const auto& iv : intervals)
    if (std::find(chosen.begin(), chosen.end(), iv.id) != chosen.end()) picked.push_back(iv);
  std::sort(picked.begin(), picked.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  for (std::size_t k = 1; k < picked.size(); ++k)
    if (picked[k - 1].hi >= picked[k].lo) throw std::logic_error("solver returned a dependent set");

  mis_result r;
  std::sort(chosen.begin(), chosen.end());
  for (shape_id c : chosen) r.value += weight_of(w, c);
  r.chosen = std::move(chosen);
  r.stats.subproblems = n;
  r.stats.wall_ms = elapsed_ms(start);
  return r;
}

namespace {

using bits = boost::dynamic_bitset<std::uint64_t>;

struct branch_and_bound {
  explicit branch_and_bound(const intersection_graph& graph) : g(graph) {}

  const intersection_graph& g;
  std::vector<weight_t> w;
  std::vector<std::size_t> by_weight;  // vertex indices, heaviest first
  weight_t best = -1;
  std::vector<std::size_t> best_set;
  std::vector<std::size_t> current;
  std::uint64_t nodes = 0;

  // Greedy clique cover of P; the heaviest vertex of each clique bounds it.
  weight_t cover_bound(const bits& p) const {
    std::vector<bits> common;
    weight_t bound = 0;
    for (std::size_t v : by_weight) {
      if (!p.test(v)) continue;
      bool placed = false;
      for (auto& c : common)
        if (c.test(v)) {
          c &= g.neighbors(v);
          placed = true;
          break;
        }
      if (!placed) {
        common.push_back(g.neighbors(v));
        bound += w[v];
      }
    }
    return bound;
  }

  void search(bits p, weight_t cur) {
    ++nodes;
    const std::size_t mark = current.size();
    for (auto v = p.find_first(); v != bits::npos; v = p.find_next(v))
      if (!g.neighbors(v).intersects(p)) {
        current.push_back(v);
        cur += w[v];
        p.reset(v);
      }
    if (p.none()) {
      if (cur > best) {
        best = cur;
        best_set = current;
      }
      current.resize(mark);
      return;
    }
    if (cur + cover_bound(p) <= best) {
      current.resize(mark);
      return;
    }
    std::size_t pick = bits::npos, pick_deg = 0;
    for (auto v = p.find_first(); v != bits::npos; v = p.find_next(v)) {
      std::size_t d = (g.neighbors(v) & p).count();
      if (pick == bits::npos || d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    bits with = p - g.neighbors(pick);
    with.reset(pick);
    current.push_back(pick);
    search(std::move(with), cur + w[pick]);
    current.pop_back();
    p.reset(pick);
    search(std::move(p), cur);
    current.resize(mark);
  }
};

}  // namespace

mis_result outerstring_mwis_exact(const intersection_graph& g, const weight_map& w) {
  auto start = clock_type::now();
  branch_and_bound bb(g);
  const std::size_t n = g.size();
  bb.w.resize(n);
  for (std::size_t i = 0; i < n; ++i) bb.w[i] = clamped(w, g.id(i));
  bb.by_weight.resize(n);
  std::iota(bb.by_weight.begin(), bb.by_weight.end(), 0);
  std::stable_sort(bb.by_weight.begin(), bb.by_weight.end(), [&](auto a, auto b) { return bb.w[a] > bb.w[b]; });
  bits all(n);
  all.set();
  bb.search(all, 0);

  std::vector<shape_id> chosen;
  for (auto v : bb.best_set) chosen.push_back(g.id(v));
  solver_stats stats;
  stats.nodes = bb.nodes;
  auto result = make_result(g, w, std::move(chosen), stats);
  result.stats.wall_ms = elapsed_ms(start);
  return result;
}

mis_result outerstring_mwis_exact(const outerstring_rep& r, const weight_map& w) {
  return outerstring_mwis_exact(build_intersection_graph(r), w);
}

std::vector<point> separator_path::vertices() const {
  std::vector<point> out{point{origin, 0}};
  std::int64_t x = origin, y = 0;
  for (const auto& s : segments) {
    if (s.dir == step::up) y += s.length;
    else if (s.dir == step::left) x -= s.length;
    else x += s.length;
    out.push_back(point{x, y});
  }
  return out;
}

std::int64_t separator_path::height() const {
  std::int64_t h = 0;
  for (const auto& s : segments)
    if (s.dir == step::up) h += s.length;
  return h;
}

std::uint64_t separator_count(std::int64_t kappa) {
  std::uint64_t f = 1;
  for (std::int64_t i = 0; i <= kappa; ++i) f *= static_cast<std::uint64_t>(2 * kappa + 1);
  return f;
}

namespace {

enum class last_run { none, horizontal, up };

void grow(std::int64_t kappa, std::int64_t remaining, last_run last, separator_path& cur,
          std::vector<separator_path>& out) {
  auto with_horizontal = [&](auto&& next) {
    for (step d : {step::left, step::right})
      for (std::int64_t len = 1; len <= kappa; ++len) {
        cur.segments.push_back({d, len});
        next();
        cur.segments.pop_back();
      }
  };
  auto with_up = [&]() {
    for (std::int64_t len = 1; len <= remaining; ++len) {
      cur.segments.push_back({step::up, len});
      grow(kappa, remaining - len, last_run::up, cur, out);
      cur.segments.pop_back();
    }
  };
  if (last == last_run::up && remaining == 0) {
    out.push_back(cur);
    with_horizontal([&] { out.push_back(cur); });
    return;
  }
  if (last == last_run::none) {
    with_horizontal([&] { grow(kappa, remaining, last_run::horizontal, cur, out); });
    with_up();
  } else if (last == last_run::horizontal) {
    with_up();
  } else {
    with_horizontal([&] { grow(kappa, remaining, last_run::horizontal, cur, out); });
  }
}

}  // namespace

std::vector<separator_path> enumerate_separators(std::int64_t q, std::int64_t kappa) {
  if (kappa < 1) throw std::invalid_argument("kappa must be positive");
  std::vector<separator_path> out;
  separator_path cur;
  cur.origin = q;
  grow(kappa, kappa, last_run::none, cur, out);
  return out;
}

level_profile profile_of(const std::vector<point>& vertices, std::int64_t kappa) {
  const std::size_t levels = static_cast<std::size_t>(2 * kappa + 1);
  level_profile p;
  p.lo.assign(levels, 0);
  p.hi.assign(levels, 0);
  p.present.assign(levels, 0);
  auto mark = [&](std::int64_t t, std::int64_t x1, std::int64_t x2) {
    if (t < 0 || t >= static_cast<std::int64_t>(levels)) throw std::invalid_argument("curve leaves the strip");
    auto k = static_cast<std::size_t>(t);
    if (!p.present[k]) {
      p.present[k] = 1;
      p.lo[k] = x1;
      p.hi[k] = x2;
    } else {
      p.lo[k] = std::min(p.lo[k], x1);
      p.hi[k] = std::max(p.hi[k], x2);
    }
  };
  std::vector<std::int64_t> xs, ys;
  for (const auto& v : vertices) {
    xs.push_back(static_cast<std::int64_t>(v.x));
    ys.push_back(static_cast<std::int64_t>(v.y));
  }
  if (!xs.empty()) mark(2 * ys[0], xs[0], xs[0]);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i] == xs[i + 1]) {
      std::int64_t y1 = std::min(ys[i], ys[i + 1]), y2 = std::max(ys[i], ys[i + 1]);
      for (std::int64_t t = 2 * y1; t <= 2 * y2; ++t) mark(t, xs[i], xs[i]);
    } else if (ys[i] == ys[i + 1]) {
      mark(2 * ys[i], std::min(xs[i], xs[i + 1]), std::max(xs[i], xs[i + 1]));
    } else {
      throw std::invalid_argument("curve is not rectilinear");
    }
  }
  return p;
}

bool string_between(const grounded_string& s, const separator_path& ma, const separator_path& mb) {
  const std::int64_t kappa = ma.height();
  if (mb.height() != kappa) throw std::invalid_argument("separators of different height");
  for (const auto& v : s.vertices)
    if (v.y < 0 || v.y > kappa) return false;
  auto ps = profile_of(s.vertices, kappa);
  auto pa = profile_of(ma.vertices(), kappa);
  auto pb = profile_of(mb.vertices(), kappa);
  for (std::size_t t = 0; t < ps.present.size(); ++t) {
    if (!ps.present[t]) continue;
    if (ps.lo[t] <= pa.hi[t] || ps.hi[t] > pb.hi[t]) return false;
  }
  return true;
}

namespace {

// Separator DP over the median split tree of the distinct ground points.
// A state is a tree node (a, b] plus the strings near its two boundaries that
// earlier separators excluded; strings farther than `zone` from both
// boundaries are unaffected by any separator at a or b.
class separator_dp {
 public:
  explicit separator_dp(const bounded_string_rep& r) : rep_(r), kappa_(r.kappa) {
    zone_ = kappa_ * (kappa_ + 2);
    const std::size_t n = r.strings.size();
    profiles_.reserve(n);
    for (const auto& s : r.strings) {
      profiles_.push_back(profile_of(s.vertices, kappa_));
      ground_.push_back(static_cast<std::int64_t>(s.vertices.front().x));
      weight_.push_back(clamped(r.weights, s.id));
    }
    grounds_ = ground_;
    std::sort(grounds_.begin(), grounds_.end());
    grounds_.erase(std::unique(grounds_.begin(), grounds_.end()), grounds_.end());
    ground_rank_.resize(n);
    by_ground_.resize(grounds_.size());
    for (std::size_t s = 0; s < n; ++s) {
      ground_rank_[s] = static_cast<int>(std::lower_bound(grounds_.begin(), grounds_.end(), ground_[s]) -
                                         grounds_.begin());
      by_ground_[static_cast<std::size_t>(ground_rank_[s])].push_back(static_cast<std::uint32_t>(s));
    }
    for (const auto& sep : enumerate_separators(0, kappa_)) sep_hi_.push_back(profile_of(sep.vertices(), kappa_).hi);
  }

  mis_result solve() {
    auto start = clock_type::now();
    const int top = static_cast<int>(grounds_.size()) - 1;
    std::vector<shape_id> chosen;
    if (top >= 0) {
      evaluate(-1, top, {});
      collect(-1, top, {}, chosen);
    }
    solver_stats stats;
    stats.subproblems = memo_.size();
    stats.queries = separator_tests_;
    auto result = make_result(build_intersection_graph(rep_), rep_.weights, std::move(chosen), stats);
    result.stats.wall_ms = elapsed_ms(start);
    return result;
  }

 private:
  using excluded = std::vector<std::uint32_t>;

  struct key {
    int a;
    int b;
    excluded e;
    auto operator<=>(const key&) const = default;
  };

  struct entry {
    weight_t value = 0;
    int pick = -1;  // base case: chosen string
    excluded left, right;
  };

  bool is_excluded(const excluded& e, std::uint32_t s) const { return std::binary_search(e.begin(), e.end(), s); }

  bool weakly_left(std::uint32_t s, std::int64_t q, const std::vector<std::int64_t>& hi) const {
    const auto& p = profiles_[s];
    for (std::size_t t = 0; t < hi.size(); ++t)
      if (p.present[t] && p.hi[t] > q + hi[t]) return false;
    return true;
  }

  bool strictly_right(std::uint32_t s, std::int64_t q, const std::vector<std::int64_t>& hi) const {
    const auto& p = profiles_[s];
    for (std::size_t t = 0; t < hi.size(); ++t)
      if (p.present[t] && p.lo[t] <= q + hi[t]) return false;
    return true;
  }

  // Ground ranks a < g <= b form the node; a = -1 is the open left end.
  weight_t evaluate(int a, int b, const excluded& e) {
    key k{a, b, e};
    if (auto it = memo_.find(k); it != memo_.end()) return it->second.value;
    entry out;
    const int count = b - a;
    if (count == 1) {
      for (std::uint32_t s : by_ground_[static_cast<std::size_t>(b)])
        if (!is_excluded(e, s) && (out.pick < 0 || weight_[s] > out.value)) {
          out.pick = static_cast<int>(s);
          out.value = weight_[s];
        }
      weight_t value = out.value;
      memo_.emplace(std::move(k), std::move(out));
      return value;
    }

    const int qr = a + 1 + (count - 1) / 2;
    const std::int64_t q = grounds_[static_cast<std::size_t>(qr)];
    // strings whose side of a separator at q is not fixed in advance
    std::vector<std::uint32_t> near;
    for (int r = a + 1; r <= b; ++r) {
      const std::int64_t g = grounds_[static_cast<std::size_t>(r)];
      if (g <= q - zone_ || g > q + zone_) continue;
      for (std::uint32_t s : by_ground_[static_cast<std::size_t>(r)])
        if (!is_excluded(e, s)) near.push_back(s);
    }
    excluded base_left, base_right;
    for (std::uint32_t s : e) (ground_rank_[s] <= qr ? base_left : base_right).push_back(s);

    std::set<std::pair<excluded, excluded>> seen;
    bool have = false;
    for (const auto& hi : sep_hi_) {
      excluded left = base_left, right = base_right;
      for (std::uint32_t s : near) {
        ++separator_tests_;
        if (ground_rank_[s] <= qr) {
          if (!weakly_left(s, q, hi)) left.push_back(s);
        } else if (!strictly_right(s, q, hi)) {
          right.push_back(s);
        }
      }
      std::sort(left.begin(), left.end());
      std::sort(right.begin(), right.end());
      if (!seen.emplace(left, right).second) continue;
      weight_t v = evaluate(a, qr, left) + evaluate(qr, b, right);
      if (!have || v > out.value) {
        have = true;
        out.value = v;
        out.left = std::move(left);
        out.right = std::move(right);
      }
    }
    weight_t value = out.value;
    memo_.emplace(std::move(k), std::move(out));
    return value;
  }

  void collect(int a, int b, const excluded& e, std::vector<shape_id>& chosen) const {
    const entry& en = memo_.at(key{a, b, e});
    if (b - a == 1) {
      if (en.pick >= 0) chosen.push_back(rep_.strings[static_cast<std::size_t>(en.pick)].id);
      return;
    }
    const int qr = a + 1 + (b - a - 1) / 2;
    collect(a, qr, en.left, chosen);
    collect(qr, b, en.right, chosen);
  }

  const bounded_string_rep& rep_;
  std::int64_t kappa_;
  std::int64_t zone_;
  std::vector<level_profile> profiles_;
  std::vector<std::int64_t> ground_;
  std::vector<weight_t> weight_;
  std::vector<std::int64_t> grounds_;
  std::vector<int> ground_rank_;
  std::vector<std::vector<std::uint32_t>> by_ground_;
  std::vector<std::vector<std::int64_t>> sep_hi_;
  std::map<key, entry> memo_;
  std::uint64_t separator_tests_ = 0;
};

}  // namespace

mis_result bounded_monotone_mis(const bounded_string_rep& r) {
  require_valid(r);
  return separator_dp(r).solve();
}

}  // namespace misgeo
