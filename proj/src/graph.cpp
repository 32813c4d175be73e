#include "misgeo/graph.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace misgeo {

weight_t weight_of(const weight_map& w, shape_id id) {
  auto it = w.find(id);
  return it == w.end() ? weight_t{1} : it->second;
}

intersection_graph::intersection_graph(std::vector<shape_id> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw std::invalid_argument("duplicate vertex id");
  rows_.assign(ids_.size(), row(ids_.size()));
}

std::size_t intersection_graph::index_of(shape_id id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) throw std::out_of_range("unknown id " + std::to_string(id));
  return static_cast<std::size_t>(it - ids_.begin());
}

void intersection_graph::add_edge_index(std::size_t i, std::size_t j) {
  if (i == j) return;
  if (!rows_[i].test(j)) {
    rows_[i].set(j);
    rows_[j].set(i);
    ++edge_count_;
  }
}

std::vector<std::pair<shape_id, shape_id>> intersection_graph::edges() const {
  std::vector<std::pair<shape_id, shape_id>> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < size(); ++i)
    for (auto j = rows_[i].find_next(i); j != row::npos; j = rows_[i].find_next(j))
      out.emplace_back(ids_[i], ids_[j]);
  return out;
}

bool intersection_graph::is_independent(const std::vector<shape_id>& chosen) const {
  std::vector<std::size_t> idx;
  idx.reserve(chosen.size());
  for (shape_id c : chosen) idx.push_back(index_of(c));
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return false;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (adjacent_index(idx[a], idx[b])) return false;
  return true;
}

intersection_graph intersection_graph::induced(const std::vector<std::size_t>& indices) const {
  std::vector<shape_id> sub_ids;
  for (auto i : indices) sub_ids.push_back(ids_[i]);
  intersection_graph g(sub_ids);
  // g sorts its ids; map positions through index_of
  std::vector<std::size_t> pos(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) pos[a] = g.index_of(ids_[indices[a]]);
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a + 1; b < indices.size(); ++b)
      if (adjacent_index(indices[a], indices[b])) g.add_edge_index(pos[a], pos[b]);
  return g;
}

bool graphs_equal(const intersection_graph& g1, const intersection_graph& g2) {
  if (g1.ids() != g2.ids()) throw std::invalid_argument("vertex mismatch");
  for (std::size_t i = 0; i < g1.size(); ++i)
    if (g1.neighbors(i) != g2.neighbors(i)) return false;
  return true;
}

std::vector<edge_diff> graph_diff(const intersection_graph& g1, const intersection_graph& g2,
                                  std::size_t limit) {
  if (g1.ids() != g2.ids()) throw std::invalid_argument("vertex mismatch");
  std::vector<edge_diff> out;
  for (std::size_t i = 0; i < g1.size() && out.size() < limit; ++i) {
    auto delta = g1.neighbors(i) ^ g2.neighbors(i);
    for (auto j = delta.find_next(i); j != intersection_graph::row::npos && out.size() < limit;
         j = delta.find_next(j))
      out.push_back({g1.id(i), g1.id(j), g1.adjacent_index(i, j), g2.adjacent_index(i, j)});
  }
  return out;
}

mis_result make_result(const intersection_graph& g, const weight_map& w, std::vector<shape_id> chosen,
                       solver_stats stats) {
  std::sort(chosen.begin(), chosen.end());
  if (!g.is_independent(chosen)) throw std::logic_error("solver returned a dependent set");
  mis_result r;
  r.value = 0;
  for (shape_id c : chosen) r.value += weight_of(w, c);
  r.chosen = std::move(chosen);
  r.stats = stats;
  return r;
}

namespace {

// a < b when the ascending index sequence of a is lexicographically smaller.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  std::uint32_t diff = a ^ b;
  int d = __builtin_ctz(diff);
  // the set containing d is smaller unless the other one ends before d
  bool a_has = (a >> d) & 1u;
  const std::uint32_t other = a_has ? b : a;
  bool other_continues = (other >> d) != 0;
  return a_has ? other_continues : !other_continues;
}

struct brute_search {
  std::size_t n;
  std::vector<std::uint32_t> adj;
  std::vector<weight_t> w;
  std::vector<weight_t> suffix;
  weight_t best = -1;
  std::uint32_t best_mask = 0;
  std::uint64_t nodes = 0;

  void run(std::size_t i, std::uint32_t chosen, std::uint32_t forbidden, weight_t cur) {
    ++nodes;
    if (cur + suffix[i] < best) return;
    if (i == n) {
      if (cur > best || (cur == best && lex_less(chosen, best_mask))) {
        best = cur;
        best_mask = chosen;
      }
      return;
    }
    const std::uint32_t bit = 1u << i;
    if (!(forbidden & bit)) run(i + 1, chosen | bit, forbidden | adj[i], cur + w[i]);
    run(i + 1, chosen, forbidden, cur);
  }
};

}  // namespace

mis_result brute_force_mwis(const intersection_graph& g, const weight_map& w) {
  if (g.size() > k_brute_force_limit)
    throw size_guard_error("too large: brute force is limited to " + std::to_string(k_brute_force_limit) +
                           " vertices");
  auto start = std::chrono::steady_clock::now();
  brute_search s;
  s.n = g.size();
  s.adj.assign(s.n, 0);
  s.w.resize(s.n);
  for (std::size_t i = 0; i < s.n; ++i) {
    s.w[i] = std::max<weight_t>(0, weight_of(w, g.id(i)));
    for (std::size_t j = 0; j < s.n; ++j)
      if (g.adjacent_index(i, j)) s.adj[i] |= 1u << j;
  }
  s.suffix.assign(s.n + 1, 0);
  for (std::size_t i = s.n; i-- > 0;) s.suffix[i] = s.suffix[i + 1] + s.w[i];
  s.run(0, 0, 0, 0);

  std::vector<shape_id> chosen;
  for (std::size_t i = 0; i < s.n; ++i)
    if (s.best_mask & (1u << i)) chosen.push_back(g.id(i));
  solver_stats stats;
  stats.nodes = s.nodes;
  stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return make_result(g, w, std::move(chosen), stats);
}

}  // namespace misgeo
