#include "slicebench/packing.hpp"

#include <deque>
#include <set>

#include "slicebench/errors.hpp"

namespace slicebench {

namespace {

constexpr std::size_t kMaxSpans = 2'000'000;

struct Span {
  Mask fixed = 0;
  Mask values = 0;
  auto operator<=>(const Span&) const = default;
};

class SpanClosure {
 public:
  explicit SpanClosure(const LabeledFunction& f) : f_(f) {
    const Domain& d = f.domain();
    for (std::uint64_t r = 0; r < d.size(); ++r) {
      if (f.index_at_rank(r) == 1) ones_.push_back(d.unrank(r));
    }
    members_ = d.members();
  }

  const std::vector<Mask>& ones() const { return ones_; }

  // Number of 1-inputs in the subcube, or -1 if it holds a 0-input.
  long long count(const Span& s) const {
    const Assignment a(f_.n(), s.fixed & ~s.values, s.values);
    const int free_bits = popcount(a.free());
    long long count = 0;
    if (free_bits < 63 && (std::uint64_t{1} << free_bits) < members_.size()) {
      const auto free = positions_of(a.free());
      for (Mask c = 0; c < (Mask{1} << free_bits); ++c) {
        const Mask x = s.values | deposit(c, free);
        if (!f_.domain().contains(x)) continue;
        if (f_.index_at(x) != 1) return -1;
        ++count;
      }
      return count;
    }
    for (std::size_t r = 0; r < members_.size(); ++r) {
      if (!a.consistent_with(members_[r])) continue;
      if (f_.index_at_rank(r) != 1) return -1;
      ++count;
    }
    return count;
  }

 private:
  const LabeledFunction& f_;
  std::vector<Mask> members_;
  std::vector<Mask> ones_;
};

}  // namespace

int ceil_log2_ratio(std::uint64_t a, std::uint64_t b) {
  int t = 0;
  while ((static_cast<unsigned __int128>(b) << t) < a) ++t;
  return t;
}

PackingResult packing_lower_bound(const LabeledFunction& f) {
  if (!f.is_boolean()) throw DomainError("packing bound requires a Boolean function");
  const int n = f.n();
  SpanClosure closure(f);
  const auto& ones = closure.ones();
  PackingResult out;
  out.one_inputs = ones.size();
  if (ones.empty()) return out;

  if (ones.size() == f.domain().size()) {
    out.max_intersection = ones.size();
    out.subcube = Assignment(n, 0, 0);
    return out;
  }

  std::set<Span> seen;
  std::set<Span> rejected;
  std::deque<Span> queue;
  const Mask all = low_bits(n);
  for (Mask x : ones) {
    const Span s{all, x};
    if (seen.insert(s).second) queue.push_back(s);
  }
  out.max_intersection = 1;
  out.subcube = Assignment::of_input(n, ones.front(), all);
  while (!queue.empty()) {
    const Span s = queue.front();
    queue.pop_front();
    for (Mask y : ones) {
      if (((y ^ s.values) & s.fixed) == 0) continue;
      const Mask fixed = s.fixed & ~(y ^ s.values);
      const Span next{fixed, s.values & fixed};
      if (seen.count(next) || rejected.count(next)) continue;
      const long long c = closure.count(next);
      if (c < 0) {
        rejected.insert(next);
        continue;
      }
      seen.insert(next);
      if (seen.size() > kMaxSpans) throw ResourceError("packing bound: span closure cap exceeded");
      queue.push_back(next);
      if (static_cast<std::uint64_t>(c) > out.max_intersection) {
        out.max_intersection = static_cast<std::uint64_t>(c);
        out.subcube = Assignment(n, fixed & ~next.values, next.values);
      }
    }
  }
  out.value = ceil_log2_ratio(out.one_inputs, out.max_intersection);
  return out;
}

}  // namespace slicebench
