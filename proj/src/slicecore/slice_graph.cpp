#include "slicebench/slice_graph.hpp"

#include "slicebench/errors.hpp"

namespace slicebench {

SliceGraph::SliceGraph(int n) : n_(n), adjacency_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > 64) throw DomainError("graph vertex count must be in [0, 64]");
}

void SliceGraph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw DomainError("invalid edge " + std::to_string(u) + " " + std::to_string(v));
  }
  adjacency_[u] |= Mask{1} << v;
  adjacency_[v] |= Mask{1} << u;
}

void SliceGraph::remove_edge(int u, int v) {
  adjacency_[u] &= ~(Mask{1} << v);
  adjacency_[v] &= ~(Mask{1} << u);
}

std::size_t SliceGraph::edge_count() const {
  std::size_t twice = 0;
  for (Mask m : adjacency_) twice += static_cast<std::size_t>(popcount(m));
  return twice / 2;
}

std::vector<std::pair<int, int>> SliceGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : positions_of(adjacency_[u] & ~low_bits(u + 1))) out.emplace_back(u, v);
  }
  return out;
}

SliceGraph SliceGraph::complement() const {
  SliceGraph c(n_);
  const Mask all = low_bits(n_);
  for (int v = 0; v < n_; ++v) c.adjacency_[v] = ~adjacency_[v] & all & ~(Mask{1} << v);
  return c;
}

LabeledFunction from_graph(const SliceGraph& g) {
  const Domain d = Domain::slice(g.n(), 2);
  return LabeledFunction::tabulate_boolean(d, [&](Mask x) {
    const int u = std::countr_zero(x);
    const int v = 63 - std::countl_zero(x);
    return g.has_edge(u, v);
  });
}

SliceGraph to_graph(const LabeledFunction& f) {
  const Domain& d = f.domain();
  if (!d.is_slice() || d.k() != 2) throw DomainError("to_graph requires a function on slice(n,2)");
  if (!f.is_boolean()) throw DomainError("to_graph requires a Boolean function");
  SliceGraph g(d.n());
  for (std::uint64_t r = 0; r < d.size(); ++r) {
    if (f.index_at_rank(r) == 1) {
      const Mask x = d.unrank(r);
      g.add_edge(std::countr_zero(x), 63 - std::countl_zero(x));
    }
  }
  return g;
}

}  // namespace slicebench
