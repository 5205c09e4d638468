#include "slicebench/depth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hitting_set.hpp"
#include "slicebench/binomial.hpp"
#include "slicebench/errors.hpp"

namespace slicebench {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct MemoEntry {
  Mask zeros = 0;
  Mask ones = 0;
  std::uint8_t lower = 0;
  std::uint8_t value = 0;
  std::int8_t best = -1;
  bool used = false;
  bool exact = false;
};

// Open addressing, linear probing, load factor <= 1/2.
class MemoTable {
 public:
  MemoTable() : slots_(1 << 12) {}

  MemoEntry* find(Mask zeros, Mask ones) {
    for (std::size_t i = slot(zeros, ones);; i = (i + 1) & (slots_.size() - 1)) {
      MemoEntry& e = slots_[i];
      if (!e.used) return nullptr;
      if (e.zeros == zeros && e.ones == ones) return &e;
    }
  }

  MemoEntry& insert(Mask zeros, Mask ones) {
    if (2 * (used_ + 1) > slots_.size()) grow();
    for (std::size_t i = slot(zeros, ones);; i = (i + 1) & (slots_.size() - 1)) {
      MemoEntry& e = slots_[i];
      if (!e.used) {
        e.used = true;
        e.zeros = zeros;
        e.ones = ones;
        ++used_;
        return e;
      }
      if (e.zeros == zeros && e.ones == ones) return e;
    }
  }

  std::size_t size() const { return used_; }

 private:
  std::size_t slot(Mask zeros, Mask ones) const {
    return mix(zeros * 0x2545f4914f6cdd1dULL ^ mix(ones)) & (slots_.size() - 1);
  }

  void grow() {
    std::vector<MemoEntry> old(slots_.size() * 2);
    old.swap(slots_);
    used_ = 0;
    for (const auto& e : old) {
      if (e.used) insert(e.zeros, e.ones) = e;
    }
  }

  std::vector<MemoEntry> slots_;
  std::size_t used_ = 0;
};

int ceil_log2(int v) {
  int r = 0;
  while ((1 << r) < v) ++r;
  return r;
}

class DepthSolver {
 public:
  DepthSolver(const LabeledFunction& f, const ExactDepthOptions& options)
      : f_(f), options_(options) {
    const Domain& d = f.domain();
    members_ = d.members();
    labels_.assign(f.table().begin(), f.table().end());
    same_weight_ = true;
    for (Mask x : members_) same_weight_ = same_weight_ && popcount(x) == popcount(members_[0]);
  }

  DepthResult run() {
    DepthResult result;
    const std::size_t end = members_.size();
    const Summary s = summarize(0, end);
    if (s.distinct == 1) {
      result.tree = DecisionTree::single_leaf(s.first_label);
      return result;
    }
    const int lower = ceil_log2(s.distinct);
    const int upper = upper_bound(s.varying);
    int value = -1;
    for (int beta = lower + 1; beta <= upper + 1; ++beta) {
      value = solve(0, 0, 0, end, beta);
      if (value < beta) break;
    }
    if (value < 0 || value > upper) throw std::logic_error("exact_depth: search did not converge");
    result.depth = value;
    DecisionTree tree;
    tree.set_root(build(tree, 0, 0, 0, end));
    result.tree = std::move(tree);
    result.stats = stats_;
    result.stats.states = memo_.size();
    return result;
  }

 private:
  struct Summary {
    int distinct = 0;
    Mask varying = 0;
    std::uint8_t first_label = 0;
  };

  Summary summarize(std::size_t begin, std::size_t end) const {
    std::array<std::uint64_t, 4> seen{};
    Summary s;
    const Mask first = members_[begin];
    s.first_label = labels_[begin];
    for (std::size_t i = begin; i < end; ++i) {
      s.varying |= members_[i] ^ first;
      seen[labels_[i] >> 6] |= std::uint64_t{1} << (labels_[i] & 63);
    }
    for (auto w : seen) s.distinct += popcount(w);
    return s;
  }

  // Any function on a same-weight member set extends to a full slice over
  // the varying positions, where n-2 queries suffice for n >= 3 and one
  // query for n = 2.
  int upper_bound(Mask varying) const {
    const int v = popcount(varying);
    if (!same_weight_) return v;
    return v >= 3 ? v - 2 : 1;
  }

  // Appends the members with bit p equal to `bit`; returns the new end.
  std::size_t push_child(std::size_t begin, std::size_t end, int p, int bit) {
    for (std::size_t i = begin; i < end; ++i) {
      const Mask x = members_[i];
      const std::uint8_t label = labels_[i];
      if (static_cast<int>(test_bit(x, p)) == bit) {
        members_.push_back(x);
        labels_.push_back(label);
      }
    }
    return members_.size();
  }

  void pop_to(std::size_t size) {
    members_.resize(size);
    labels_.resize(size);
  }

  // Returns the exact value when it is below beta, otherwise some v >= beta.
  int solve(Mask zeros, Mask ones, std::size_t begin, std::size_t end, int beta) {
    const Summary s = summarize(begin, end);
    if (s.distinct == 1) return 0;
    ++stats_.nodes;
    int lower = ceil_log2(s.distinct);
    if (lower >= beta) return lower;
    if (MemoEntry* e = memo_.find(zeros, ones)) {
      if (e->exact) {
        ++stats_.memo_hits;
        return e->value;
      }
      lower = std::max<int>(lower, e->lower);
      if (lower >= beta) return lower;
    }
    const int upper = upper_bound(s.varying);
    int limit = std::min(beta, upper + 1);
    int best = -1;

    for (Mask rest = s.varying; rest; rest &= rest - 1) {
      const int p = std::countr_zero(rest);
      const Mask bit = Mask{1} << p;
      std::size_t ones_count = 0;
      for (std::size_t i = begin; i < end; ++i) ones_count += test_bit(members_[i], p);
      // Larger side first: it is the likelier cutoff.
      const int first_answer = 2 * ones_count >= end - begin ? 1 : 0;
      int worst = 0;
      bool cut = false;
      for (int pass = 0; pass < 2 && !cut; ++pass) {
        const int answer = pass == 0 ? first_answer : 1 - first_answer;
        const std::size_t mark = members_.size();
        const std::size_t child_end = push_child(begin, end, p, answer);
        const int v = answer ? solve(zeros, ones | bit, mark, child_end, limit - 1)
                             : solve(zeros | bit, ones, mark, child_end, limit - 1);
        pop_to(mark);
        if (v >= limit - 1) cut = true;
        worst = std::max(worst, v);
      }
      if (cut) continue;
      best = p;
      limit = worst + 1;
      if (limit == lower) break;
    }

    MemoEntry& e = memo_.insert(zeros, ones);
    if (memo_.size() > options_.max_states) {
      std::ostringstream msg;
      msg << "exact_depth: memo exceeded " << options_.max_states << " states (estimated "
          << estimate_depth_states(f_.domain()) << " for " << f_.domain().describe() << ")";
      throw ResourceError(msg.str());
    }
    if (best >= 0) {
      e.exact = true;
      e.value = static_cast<std::uint8_t>(limit);
      e.best = static_cast<std::int8_t>(best);
      return limit;
    }
    if (limit != beta) throw std::logic_error("exact_depth: upper bound violated");
    e.lower = static_cast<std::uint8_t>(std::max<int>(e.lower, beta));
    return beta;
  }

  int build(DecisionTree& tree, Mask zeros, Mask ones, std::size_t begin, std::size_t end) {
    const Summary s = summarize(begin, end);
    if (s.distinct == 1) return tree.add_leaf(s.first_label);
    const MemoEntry* e = memo_.find(zeros, ones);
    if (e == nullptr || !e->exact) throw std::logic_error("exact_depth: missing exact memo entry");
    const int p = e->best;
    const Mask bit = Mask{1} << p;
    int child[2];
    for (int answer = 0; answer < 2; ++answer) {
      const std::size_t mark = members_.size();
      const std::size_t child_end = push_child(begin, end, p, answer);
      child[answer] = answer ? build(tree, zeros, ones | bit, mark, child_end)
                             : build(tree, zeros | bit, ones, mark, child_end);
      pop_to(mark);
    }
    return tree.add_query(p, child[0], child[1]);
  }

  const LabeledFunction& f_;
  ExactDepthOptions options_;
  std::vector<Mask> members_;
  std::vector<std::uint8_t> labels_;
  bool same_weight_ = true;
  MemoTable memo_;
  SearchStats stats_;
};

}  // namespace

DepthResult exact_depth(const LabeledFunction& f, const ExactDepthOptions& options) {
  if (f.domain().size() < 1) throw DomainError("exact_depth: empty domain");
  if (f.n() > 64) throw DomainError("exact_depth: n > 64");
  return DepthSolver(f, options).run();
}

double estimate_depth_states(const Domain& d) {
  const int n = d.n();
  if (!d.is_slice()) return std::pow(3.0, n);
  double total = 0;
  for (int a = 0; a <= d.k(); ++a) {
    for (int b = 0; b <= n - d.k(); ++b) {
      total += static_cast<double>(binomial(n, a + b)) * static_cast<double>(binomial(a + b, a));
    }
  }
  return total;
}

NonadaptiveResult nonadaptive_depth(const LabeledFunction& f) {
  if (f.n() > 20) throw ResourceError("nonadaptive_depth: n = " + std::to_string(f.n()) + " > 20");
  const Domain& d = f.domain();
  const auto members = d.members();
  std::vector<Mask> differences;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (f.index_at_rank(i) != f.index_at_rank(j)) differences.push_back(members[i] ^ members[j]);
    }
  }
  const auto hs = detail::min_hitting_set(std::move(differences), low_bits(f.n()));
  return {hs.size, hs.set};
}

}  // namespace slicebench
