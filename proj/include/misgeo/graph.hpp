#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "misgeo/geometry.hpp"

namespace misgeo {

/// Missing entries default to weight 1.
using weight_map = std::map<shape_id, weight_t>;

weight_t weight_of(const weight_map& w, shape_id id);

/// Thrown when an exhaustive oracle or guarded construction refuses an input.
class size_guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symmetric, irreflexive adjacency over shape ids. Vertices are kept in
/// ascending id order; index i always refers to ids()[i].
class intersection_graph {
 public:
  using row = boost::dynamic_bitset<std::uint64_t>;

  intersection_graph() = default;
  explicit intersection_graph(std::vector<shape_id> ids);

  std::size_t size() const { return ids_.size(); }
  const std::vector<shape_id>& ids() const { return ids_; }
  shape_id id(std::size_t i) const { return ids_[i]; }
  std::size_t index_of(shape_id id) const;

  void add_edge_index(std::size_t i, std::size_t j);
  void add_edge(shape_id u, shape_id v) { add_edge_index(index_of(u), index_of(v)); }

  bool adjacent_index(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  bool adjacent(shape_id u, shape_id v) const { return adjacent_index(index_of(u), index_of(v)); }

  const row& neighbors(std::size_t i) const { return rows_[i]; }
  std::size_t degree(std::size_t i) const { return rows_[i].count(); }
  std::size_t edge_count() const { return edge_count_; }
  std::vector<std::pair<shape_id, shape_id>> edges() const;

  bool is_independent(const std::vector<shape_id>& chosen) const;

  /// Subgraph induced by the given vertex indices, ids preserved.
  intersection_graph induced(const std::vector<std::size_t>& indices) const;

 private:
  std::vector<shape_id> ids_;
  std::vector<row> rows_;
  std::size_t edge_count_ = 0;
};

/// Differing vertex pair between two graphs on the same id set.
struct edge_diff {
  shape_id u;
  shape_id v;
  bool in_first;
  bool in_second;
};

/// Throws std::invalid_argument("vertex mismatch") when the id sets differ.
bool graphs_equal(const intersection_graph& g1, const intersection_graph& g2);
std::vector<edge_diff> graph_diff(const intersection_graph& g1, const intersection_graph& g2,
                                  std::size_t limit = 10);

struct solver_stats {
  std::uint64_t subproblems = 0;
  std::uint64_t queries = 0;
  std::uint64_t nodes = 0;
  double wall_ms = 0.0;
};

struct mis_result {
  std::vector<shape_id> chosen;  // ascending
  weight_t value = 0;
  solver_stats stats;
};

/// Sorts chosen, sums weights, and throws std::logic_error if the set is not
/// independent in g.
mis_result make_result(const intersection_graph& g, const weight_map& w, std::vector<shape_id> chosen,
                       solver_stats stats = {});

inline constexpr std::size_t k_brute_force_limit = 24;

/// Exhaustive maximum-weight independent set. Among optimal sets the
/// lexicographically smallest ascending id sequence is returned.
/// Throws size_guard_error when the graph has more than 24 vertices.
mis_result brute_force_mwis(const intersection_graph& g, const weight_map& w = {});

}  // namespace misgeo
