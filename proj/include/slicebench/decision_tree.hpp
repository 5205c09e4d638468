#pragma once

#include <cstdint>
#include <vector>

#include "slicebench/bits.hpp"
#include "slicebench/function.hpp"
#include "slicebench/io.hpp"

namespace slicebench {

/// Adaptive query tree stored as a node arena; node 0 is the root once built.
/// Leaves carry alphabet indices of the function the tree was built for.
class DecisionTree {
 public:
  struct Node {
    int position = -1;  // -1 marks a leaf
    int child[2] = {-1, -1};
    std::uint8_t label = 0;
    bool is_leaf() const { return position < 0; }
  };

  DecisionTree() = default;
  static DecisionTree single_leaf(std::uint8_t label);

  int add_leaf(std::uint8_t label);
  int add_query(int position, int zero_child, int one_child);
  void set_root(int node) { root_ = node; }

  int root() const { return root_; }
  const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  std::size_t node_count() const { return nodes_.size(); }

  int depth() const;
  /// Alphabet index at the leaf reached by x.
  std::uint8_t evaluate(Mask x) const;
  /// Number of queries made on x.
  int cost(Mask x) const;
  /// True when no root-to-leaf path queries a position twice.
  bool paths_valid() const;
  /// True when the tree agrees with f on every member of f's domain.
  bool computes(const LabeledFunction& f) const;
  /// Copy with every position p replaced by positions[p].
  DecisionTree relabeled(const std::vector<int>& positions) const;

  /// Leaf: {"label": L}. Internal node: {"query": i, "0": subtree, "1": subtree}.
  Json to_json(const std::vector<Label>& alphabet) const;
  /// Throws InputError on malformed trees or labels outside the alphabet.
  static DecisionTree from_json(const Json& j, const std::vector<Label>& alphabet);

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace slicebench
