#include <algorithm>

#include "slicebench/adversary.hpp"
#include "slicebench/depth.hpp"
#include "slicebench/errors.hpp"
#include "slicebench/monochromatic.hpp"
#include "slicebench/slice_graph.hpp"

namespace slicebench {

namespace {

Label weights_result(std::vector<int> weights) {
  std::sort(weights.rbegin(), weights.rend());
  return Label::tuple(std::move(weights));
}

// Shared bookkeeping: the bit seen at each position, -1 while unqueried.
template <typename Derived>
class Recorder : public AlgorithmPlayer {
 public:
  explicit Recorder(int n) : seen_(static_cast<std::size_t>(n), -1) {}

  void observe(int position, int bit) override { seen_[static_cast<std::size_t>(position)] = bit; }

  std::unique_ptr<AlgorithmPlayer> clone() const override {
    return std::make_unique<Derived>(static_cast<const Derived&>(*this));
  }

 protected:
  int seen(int p) const { return seen_[static_cast<std::size_t>(p)]; }
  bool known(int p) const { return seen(p) >= 0; }

 private:
  std::vector<int> seen_;
};

class EqAlgorithm : public Recorder<EqAlgorithm> {
 public:
  explicit EqAlgorithm(int k) : Recorder(4 * k), k_(k) {}
  std::string name() const override { return "eq"; }

  Move next() override {
    const int half = 2 * k_;
    int ones = 0;
    for (int i = 0; i < half - 1; ++i) {
      if (!known(i)) return Move::query(i);
      ones += seen(i);
    }
    const int b = ones >= k_ ? 1 : 0;
    const int frequency = b ? ones : half - 1 - ones;
    if (frequency != k_) return Move::answer(Label::scalar(0));
    for (int i = 0; i < half - 1; ++i) {
      if (seen(i) != b) continue;
      if (!known(half + i)) return Move::query(half + i);
      if (seen(half + i) != b) return Move::answer(Label::scalar(0));
    }
    return Move::answer(Label::scalar(1));
  }

 private:
  int k_;
};

class WeightsA : public Recorder<WeightsA> {
 public:
  WeightsA(int n, int m, int k) : Recorder(n * m), n_(n), m_(m), k_(k) {}
  std::string name() const override { return "weights_a"; }

  Move next() override {
    std::vector<int> weights;
    int total = 0;
    for (int i = 0; i + 1 < n_; ++i) {
      int w = 0;
      for (int j = 0; j < m_; ++j) {
        if (!known(i * m_ + j)) return Move::query(i * m_ + j);
        w += seen(i * m_ + j);
      }
      weights.push_back(w);
      total += w;
    }
    weights.push_back(k_ - total);
    return Move::answer(weights_result(std::move(weights)));
  }

 private:
  int n_, m_, k_;
};

class WeightsB : public Recorder<WeightsB> {
 public:
  WeightsB(int n, int m, int k) : Recorder(n * m), n_(n), m_(m), k_(k) {}
  std::string name() const override { return "weights_b"; }

  Move next() override {
    std::vector<int> partial(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j + 1 < m_; ++j) {
        if (!known(i * m_ + j)) return Move::query(i * m_ + j);
        partial[static_cast<std::size_t>(i)] += seen(i * m_ + j);
      }
    }
    std::vector<int> count(static_cast<std::size_t>(m_), 0);
    for (int w : partial) ++count[static_cast<std::size_t>(w)];
    const int plurality = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());

    std::vector<int> weights;
    int known_total = 0;
    int in_plurality = 0;
    for (int i = 0; i < n_; ++i) {
      const int w = partial[static_cast<std::size_t>(i)];
      if (w == plurality) {
        ++in_plurality;
        continue;
      }
      const int last = i * m_ + m_ - 1;
      if (!known(last)) return Move::query(last);
      weights.push_back(w + seen(last));
      known_total += w + seen(last);
    }
    const int extra = k_ - known_total - plurality * in_plurality;
    for (int i = 0; i < in_plurality; ++i) weights.push_back(plurality + (i < extra ? 1 : 0));
    return Move::answer(weights_result(std::move(weights)));
  }

 private:
  int n_, m_, k_;
};

class WeightsM2 : public Recorder<WeightsM2> {
 public:
  WeightsM2(int n, int k) : Recorder(2 * n), n_(n), k_(k) {}
  std::string name() const override { return "weights_m2"; }

  Move next() override {
    int ones = 0;
    for (int i = 0; i < n_; ++i) {
      if (!known(2 * i)) return Move::query(2 * i);
      ones += seen(2 * i);
    }
    std::vector<int> weights;
    if (ones == 0 || ones == k_) {
      for (int i = 0; i < n_; ++i) weights.push_back(i < k_ ? 1 : 0);
      return Move::answer(weights_result(std::move(weights)));
    }
    int total = 0;
    for (int i = 0; i < n_; ++i) {
      if (seen(2 * i) != 1) continue;
      if (!known(2 * i + 1)) return Move::query(2 * i + 1);
      weights.push_back(1 + seen(2 * i + 1));
      total += 1 + seen(2 * i + 1);
    }
    const int rest = k_ - total;
    for (int i = 0; i < n_ - ones; ++i) weights.push_back(i < rest ? 1 : 0);
    return Move::answer(weights_result(std::move(weights)));
  }

 private:
  int n_, k_;
};

class Weight1 : public Recorder<Weight1> {
 public:
  explicit Weight1(const LabeledFunction& f) : Recorder(f.n()), alphabet_(f.alphabet()) {
    if (!f.domain().is_slice() || f.domain().k() != 1 || !f.is_boolean()) {
      throw DomainError("weight-1 algorithm needs a Boolean function on slice(n, 1)");
    }
    std::vector<int> preimage[2];
    for (int i = 0; i < f.n(); ++i) preimage[f.index_at(Mask{1} << i)].push_back(i);
    const int smaller = preimage[1].size() <= preimage[0].size() ? 1 : 0;
    targets_ = preimage[smaller];
    target_label_ = static_cast<std::uint8_t>(smaller);
  }
  std::string name() const override { return "weight1"; }

  Move next() override {
    for (int p : targets_) {
      if (!known(p)) return Move::query(p);
      if (seen(p) == 1) return Move::answer(alphabet_[target_label_]);
    }
    return Move::answer(alphabet_[1 - target_label_]);
  }

 private:
  std::vector<Label> alphabet_;
  std::vector<int> targets_;
  std::uint8_t target_label_ = 1;
};

class TreeWalker : public Recorder<TreeWalker> {
 public:
  TreeWalker(const LabeledFunction& f, DecisionTree tree)
      : Recorder(f.n()), alphabet_(f.alphabet()), tree_(std::move(tree)) {}
  std::string name() const override { return "tree"; }

  Move next() override {
    int node = tree_.root();
    while (!tree_.node(node).is_leaf()) {
      const auto& nd = tree_.node(node);
      if (!known(nd.position)) return Move::query(nd.position);
      node = nd.child[seen(nd.position)];
    }
    return Move::answer(alphabet_.at(tree_.node(node).label));
  }

 private:
  std::vector<Label> alphabet_;
  DecisionTree tree_;
};

class Weight2 : public Recorder<Weight2> {
 public:
  explicit Weight2(const LabeledFunction& f) : Recorder(f.n()), f_(f) {
    if (!f.domain().is_slice() || f.domain().k() != 2 || !f.is_boolean()) {
      throw DomainError("weight-2 algorithm needs a Boolean function on slice(n, 2)");
    }
    const auto mono = monochromatic_number(to_graph(f));
    outside_ = positions_of(low_bits(f.n()) & ~mono.vertices);
    inside_label_ = mono.clique ? 1 : 0;
  }
  std::string name() const override { return "weight2"; }

  Move next() override {
    Mask zeros = 0;
    for (int p : outside_) {
      if (!known(p)) return Move::query(p);
      if (seen(p) == 1) return fallback(zeros, p);
      zeros |= Mask{1} << p;
    }
    return Move::answer(Label::scalar(inside_label_));
  }

 private:
  // A 1 was seen at `one`: play an optimal tree for the remaining weight-1
  // restriction.
  Move fallback(Mask zeros, int one) {
    if (!tree_) {
      const Restriction r = restrict(f_, Assignment(f_.n(), zeros, Mask{1} << one));
      tree_ = exact_depth(r.function).tree.relabeled(r.positions);
    }
    int node = tree_->root();
    while (!tree_->node(node).is_leaf()) {
      const auto& nd = tree_->node(node);
      if (!known(nd.position)) return Move::query(nd.position);
      node = nd.child[seen(nd.position)];
    }
    return Move::answer(f_.alphabet().at(tree_->node(node).label));
  }

  LabeledFunction f_;
  std::vector<int> outside_;
  int inside_label_ = 0;
  std::optional<DecisionTree> tree_;
};

}  // namespace

std::unique_ptr<AlgorithmPlayer> eq_algorithm(int k) {
  if (k < 1 || k > 16) throw DomainError("eq algorithm needs 1 <= k <= 16");
  return std::make_unique<EqAlgorithm>(k);
}

std::unique_ptr<AlgorithmPlayer> weights_algorithm_a(int n, int m, int k) {
  if (n < 1 || m < 1 || n * m > 64 || k < 0 || k > n * m) throw DomainError("bad weights parameters");
  return std::make_unique<WeightsA>(n, m, k);
}

std::unique_ptr<AlgorithmPlayer> weights_algorithm_b(int n, int m, int k) {
  if (n < 1 || m < 1 || n * m > 64 || k < 0 || k > n * m) throw DomainError("bad weights parameters");
  return std::make_unique<WeightsB>(n, m, k);
}

std::unique_ptr<AlgorithmPlayer> weights_m2_algorithm(int n, int k) {
  if (n < 2 || 2 * n > 64 || k < 2 || k > n / 2) {
    throw DomainError("weights m=2 algorithm needs 2 <= k <= floor(n/2)");
  }
  return std::make_unique<WeightsM2>(n, k);
}

std::unique_ptr<AlgorithmPlayer> weight1_algorithm(const LabeledFunction& f) {
  return std::make_unique<Weight1>(f);
}

std::unique_ptr<AlgorithmPlayer> weight2_algorithm(const LabeledFunction& f) {
  return std::make_unique<Weight2>(f);
}

std::unique_ptr<AlgorithmPlayer> tree_algorithm(const LabeledFunction& f, DecisionTree tree) {
  return std::make_unique<TreeWalker>(f, std::move(tree));
}

}  // namespace slicebench
