#include "slicebench/decision_tree.hpp"

#include <algorithm>

#include "slicebench/errors.hpp"

namespace slicebench {

DecisionTree DecisionTree::single_leaf(std::uint8_t label) {
  DecisionTree t;
  t.set_root(t.add_leaf(label));
  return t;
}

int DecisionTree::add_leaf(std::uint8_t label) {
  Node node;
  node.label = label;
  nodes_.push_back(node);
  return static_cast<int>(nodes_.size()) - 1;
}

int DecisionTree::add_query(int position, int zero_child, int one_child) {
  Node node;
  node.position = position;
  node.child[0] = zero_child;
  node.child[1] = one_child;
  nodes_.push_back(node);
  return static_cast<int>(nodes_.size()) - 1;
}

int DecisionTree::depth() const {
  if (root_ < 0) return 0;
  std::vector<std::pair<int, int>> stack{{root_, 0}};
  int best = 0;
  while (!stack.empty()) {
    auto [i, d] = stack.back();
    stack.pop_back();
    const Node& nd = node(i);
    if (nd.is_leaf()) {
      best = std::max(best, d);
    } else {
      stack.emplace_back(nd.child[0], d + 1);
      stack.emplace_back(nd.child[1], d + 1);
    }
  }
  return best;
}

std::uint8_t DecisionTree::evaluate(Mask x) const {
  int i = root_;
  while (!node(i).is_leaf()) i = node(i).child[test_bit(x, node(i).position)];
  return node(i).label;
}

int DecisionTree::cost(Mask x) const {
  int i = root_;
  int queries = 0;
  while (!node(i).is_leaf()) {
    i = node(i).child[test_bit(x, node(i).position)];
    ++queries;
  }
  return queries;
}

bool DecisionTree::paths_valid() const {
  if (root_ < 0) return false;
  std::vector<std::pair<int, Mask>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto [i, seen] = stack.back();
    stack.pop_back();
    const Node& nd = node(i);
    if (nd.is_leaf()) continue;
    if (test_bit(seen, nd.position)) return false;
    const Mask next = seen | (Mask{1} << nd.position);
    stack.emplace_back(nd.child[0], next);
    stack.emplace_back(nd.child[1], next);
  }
  return true;
}

bool DecisionTree::computes(const LabeledFunction& f) const {
  const Domain& d = f.domain();
  for (std::uint64_t r = 0; r < d.size(); ++r) {
    if (evaluate(d.unrank(r)) != f.index_at_rank(r)) return false;
  }
  return true;
}

DecisionTree DecisionTree::relabeled(const std::vector<int>& positions) const {
  DecisionTree t = *this;
  for (auto& nd : t.nodes_) {
    if (!nd.is_leaf()) nd.position = positions.at(static_cast<std::size_t>(nd.position));
  }
  return t;
}

namespace {

Json node_json(const DecisionTree& t, int i, const std::vector<Label>& alphabet) {
  const auto& nd = t.node(i);
  if (nd.is_leaf()) return Json{{"label", label_to_json(alphabet.at(nd.label))}};
  Json j;
  j["query"] = nd.position;
  j["0"] = node_json(t, nd.child[0], alphabet);
  j["1"] = node_json(t, nd.child[1], alphabet);
  return j;
}

int parse_node(DecisionTree& t, const Json& j, const std::vector<Label>& alphabet, int depth) {
  if (depth > 64) throw InputError("decision tree deeper than 64");
  if (!j.is_object()) throw InputError("decision tree node must be an object");
  if (j.contains("label")) {
    const Label label = label_from_json(j.at("label"));
    const auto it = std::find(alphabet.begin(), alphabet.end(), label);
    if (it == alphabet.end()) throw InputError("tree leaf label outside the alphabet");
    return t.add_leaf(static_cast<std::uint8_t>(it - alphabet.begin()));
  }
  if (!j.contains("query") || !j.contains("0") || !j.contains("1")) {
    throw InputError("internal tree node needs query, 0 and 1");
  }
  const int zero = parse_node(t, j.at("0"), alphabet, depth + 1);
  const int one = parse_node(t, j.at("1"), alphabet, depth + 1);
  const int position = j.at("query").get<int>();
  if (position < 0 || position >= 64) throw InputError("tree query position out of range");
  return t.add_query(position, zero, one);
}

}  // namespace

Json DecisionTree::to_json(const std::vector<Label>& alphabet) const {
  if (root_ < 0) return nullptr;
  return node_json(*this, root_, alphabet);
}

DecisionTree DecisionTree::from_json(const Json& j, const std::vector<Label>& alphabet) {
  DecisionTree t;
  try {
    t.set_root(parse_node(t, j, alphabet, 0));
  } catch (const Json::exception& e) {
    throw InputError(std::string("decision tree: ") + e.what());
  }
  return t;
}

}  // namespace slicebench
