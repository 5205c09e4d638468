#pragma once

#include <utility>
#include <vector>

#include "slicebench/bits.hpp"
#include "slicebench/function.hpp"

namespace slicebench {

/// Simple undirected graph on vertices 0..n-1 (n <= 64). Edge {i,j} is the
/// weight-2 string with ones at i and j.
class SliceGraph {
 public:
  explicit SliceGraph(int n = 0);

  int n() const { return n_; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return test_bit(adjacency_[u], v); }
  Mask neighbours(int v) const { return adjacency_[v]; }
  std::size_t edge_count() const;
  /// Edges (u < v) in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  SliceGraph complement() const;

  bool operator==(const SliceGraph&) const = default;

 private:
  int n_;
  std::vector<Mask> adjacency_;
};

/// f({i,j}) = 1 iff {i,j} is an edge; domain slice(n,2), requires n >= 3.
LabeledFunction from_graph(const SliceGraph& g);
/// Inverse of from_graph. Throws DomainError unless f is Boolean on slice(n,2).
SliceGraph to_graph(const LabeledFunction& f);

}  // namespace slicebench
