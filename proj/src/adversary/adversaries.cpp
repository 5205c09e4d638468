#include <random>

#include "slicebench/adversary.hpp"
#include "slicebench/errors.hpp"

namespace slicebench {

namespace {

class InputAdversary : public AdversaryPlayer {
 public:
  explicit InputAdversary(Mask x) : x_(x) {}
  std::string name() const override { return "input"; }
  int answer(int position) override { return test_bit(x_, position) ? 1 : 0; }
  std::unique_ptr<AdversaryPlayer> clone() const override { return std::make_unique<InputAdversary>(*this); }

 private:
  Mask x_;
};

class EqAdversary : public AdversaryPlayer {
 public:
  explicit EqAdversary(int k) : z_(static_cast<std::size_t>(2 * k), -1) {}
  std::string name() const override { return "eq"; }

  int answer(int position) override {
    auto& zi = z_[static_cast<std::size_t>(position) % z_.size()];
    if (zi < 0) {
      zi = b_;
      b_ = 1 - b_;
    }
    return zi;
  }

  std::unique_ptr<AdversaryPlayer> clone() const override { return std::make_unique<EqAdversary>(*this); }

 private:
  std::vector<int> z_;
  int b_ = 0;
};

class RandomAdversary : public AdversaryPlayer {
 public:
  RandomAdversary(const LabeledFunction& f, std::uint64_t seed)
      : members_(f.domain().members()), rng_(seed) {}
  std::string name() const override { return "random"; }

  int answer(int position) override {
    bool possible[2] = {false, false};
    for (Mask x : members_) {
      if ((x & zeros_) == 0 && (x & ones_) == ones_) possible[test_bit(x, position) ? 1 : 0] = true;
    }
    int bit = possible[1] ? 1 : 0;
    if (possible[0] && possible[1]) bit = static_cast<int>(rng_() & 1U);
    (bit ? ones_ : zeros_) |= Mask{1} << position;
    return bit;
  }

  std::unique_ptr<AdversaryPlayer> clone() const override { return std::make_unique<RandomAdversary>(*this); }

 private:
  std::vector<Mask> members_;
  std::mt19937_64 rng_;
  Mask zeros_ = 0;
  Mask ones_ = 0;
};

// Per-block view of the revealed bits of a Weights input.
class BlockState {
 public:
  BlockState(int n, int m, int k) : n_(n), m_(m), k_(k), revealed_(static_cast<std::size_t>(n * m), -1) {}

  int block(int position) const { return position / m_; }
  int revealed_in(int b) const { return count(b, 0) + count(b, 1); }
  int count(int b, int bit) const {
    int c = 0;
    for (int j = 0; j < m_; ++j) c += revealed_[static_cast<std::size_t>(b * m_ + j)] == bit;
    return c;
  }
  int untouched_blocks_except(int b) const {
    int c = 0;
    for (int i = 0; i < n_; ++i) c += i != b && revealed_in(i) == 0;
    return c;
  }
  int ones_left() const { return k_ - ones_; }
  int unrevealed() const { return n_ * m_ - revealed_count_; }

  void reveal(int position, int bit) {
    revealed_[static_cast<std::size_t>(position)] = bit;
    ++revealed_count_;
    ones_ += bit;
  }

  // Zero if that keeps two ones and two zeros unrevealed, else one if that
  // does, else any consistent bit (zero first).
  int basic_answer() const {
    const int r = ones_left();
    const int after = unrevealed() - 1;
    if (r >= 2 && after - r >= 2) return 0;
    if (r - 1 >= 2 && after - (r - 1) >= 2) return 1;
    return r <= after ? 0 : 1;
  }

  int n() const { return n_; }
  int m() const { return m_; }
  int k() const { return k_; }

 private:
  int n_, m_, k_;
  std::vector<int> revealed_;
  int revealed_count_ = 0;
  int ones_ = 0;
};

class WeightsAdversary : public AdversaryPlayer {
 public:
  WeightsAdversary(int n, int m, int k, WeightsMode mode) : state_(n, m, k), mode_(mode) {
    if (mode == WeightsMode::balanced) {
      const auto counts = balanced_weight_counts(n, m);
      assignment_ = spread(counts, n);
      s_size_ = n;
      s_ones_ = n / 2;
    }
  }

  std::string name() const override { return "weights_" + to_string(mode_); }

  int answer(int position) override {
    const int bit = choose(position);
    state_.reveal(position, bit);
    return bit;
  }

  std::unique_ptr<AdversaryPlayer> clone() const override { return std::make_unique<WeightsAdversary>(*this); }

  std::string state_key() const override {
    switch (mode_) {
      case WeightsMode::balanced:
        return std::to_string(abandoned_) + "," + std::to_string(s_size_) + "," + std::to_string(s_ones_);
      case WeightsMode::two_block:
        return std::to_string(first_block_);
      default:
        return {};
    }
  }

 private:
  // Blocks cycle through 0..m-1, skipping values whose count is used up.
  static std::vector<int> spread(std::vector<int> counts, int n) {
    std::vector<int> a;
    for (int j = 0; static_cast<int>(a.size()) < n; j = (j + 1) % static_cast<int>(counts.size())) {
      if (counts[static_cast<std::size_t>(j)] > 0) {
        --counts[static_cast<std::size_t>(j)];
        a.push_back(j);
      }
    }
    return a;
  }

  int choose(int position) {
    switch (mode_) {
      case WeightsMode::basic: return state_.basic_answer();
      case WeightsMode::balanced: return balanced(position);
      case WeightsMode::m2_low: return m2(position, state_.k() - 1);
      case WeightsMode::m2_high: return m2(position, state_.n() / 2);
      case WeightsMode::two_block: return two_block(position);
    }
    return 0;
  }

  int balanced(int position) {
    if (abandoned_) return state_.basic_answer();
    const int b = state_.block(position);
    const int m = state_.m();
    if (state_.revealed_in(b) < m - 1) {
      const int a = assignment_[static_cast<std::size_t>(b)];
      return state_.count(b, 0) < m - 1 - a ? 0 : 1;
    }
    if (s_size_ == 4) {
      abandoned_ = true;
      return state_.basic_answer();
    }
    const int zeros = s_size_ - s_ones_;
    const int bit = zeros - 1 >= 2 && s_ones_ >= 2 ? 0 : 1;
    --s_size_;
    s_ones_ -= bit;
    return bit;
  }

  // Untouched blocks get 0 while at least `threshold` other blocks are
  // untouched. A block whose other bit is 1 gets 0; one whose other bit is 0
  // gets 1 once n-k other blocks hold two zeros.
  int m2(int position, int threshold) {
    const int b = state_.block(position);
    if (state_.revealed_in(b) == 0) return state_.untouched_blocks_except(b) >= threshold ? 0 : 1;
    if (state_.count(b, 1) == 1) return 0;
    int double_zero = 0;
    for (int i = 0; i < state_.n(); ++i) double_zero += i != b && state_.count(i, 0) == 2;
    return double_zero >= state_.n() - state_.k() ? 1 : 0;
  }

  int two_block(int position) {
    const int b = state_.block(position);
    if (first_block_ < 0) first_block_ = b;
    int bit = b == first_block_ && state_.count(b, 1) < state_.k() - 1 ? 1 : 0;
    const int r = state_.ones_left() - bit;
    if (r < 0 || r > state_.unrevealed() - 1) bit = 1 - bit;
    return bit;
  }

  BlockState state_;
  WeightsMode mode_;
  std::vector<int> assignment_;
  int s_size_ = 0;
  int s_ones_ = 0;
  bool abandoned_ = false;
  int first_block_ = -1;
};

void check_range(bool ok, const std::string& what) {
  if (!ok) throw DomainError("weights adversary parameters out of range: " + what);
}

}  // namespace

std::unique_ptr<AdversaryPlayer> input_adversary(Mask x) { return std::make_unique<InputAdversary>(x); }

std::unique_ptr<AdversaryPlayer> eq_adversary(int k) {
  if (k < 1 || k > 16) throw DomainError("eq adversary needs 1 <= k <= 16");
  return std::make_unique<EqAdversary>(k);
}

std::unique_ptr<AdversaryPlayer> random_adversary(const LabeledFunction& f, std::uint64_t seed) {
  return std::make_unique<RandomAdversary>(f, seed);
}

std::vector<int> balanced_weight_counts(int n, int m) {
  if (n < 1 || m < 1 || m > 16 || (n * m) % 2 != 0) throw DomainError("balanced counts need nm even and m <= 16");
  const int q = n / m;
  const int r = n % m;
  const int target = n * m / 2 - n / 2 - q * m * (m - 1) / 2;
  std::vector<int> best;
  int best_distance = -1;
  // Choose the r values receiving an extra block.
  for (Mask extra = 0; extra < (Mask{1} << m); ++extra) {
    if (popcount(extra) != r) continue;
    int sum = 0;
    for (int j : positions_of(extra)) sum += j;
    if (sum != target) continue;
    const int distance = popcount(extra ^ low_bits(r));
    if (best_distance < 0 || distance < best_distance) {
      best_distance = distance;
      best.assign(static_cast<std::size_t>(m), q);
      for (int j : positions_of(extra)) ++best[static_cast<std::size_t>(j)];
    }
  }
  if (best.empty()) throw DomainError("no balanced weight assignment exists for these parameters");
  return best;
}

std::unique_ptr<AdversaryPlayer> weights_adversary(int n, int m, int k, WeightsMode mode) {
  check_range(n >= 1 && m >= 1 && n * m <= 64, "n, m >= 1 and nm <= 64");
  switch (mode) {
    case WeightsMode::basic:
      check_range(2 * k <= n * m && k >= 2, "basic needs 2 <= k <= nm/2");
      break;
    case WeightsMode::balanced:
      check_range(2 * k == n * m && n >= 4 && m >= 2, "balanced needs k = nm/2, n >= 4, m >= 2");
      break;
    case WeightsMode::m2_low:
      check_range(m == 2 && n >= 4 && k >= 2 && k <= n / 2, "m2_low needs m = 2, n >= 4, 2 <= k <= n/2");
      break;
    case WeightsMode::m2_high:
      check_range(m == 2 && n >= 4 && k > n / 2 && k <= n, "m2_high needs m = 2, n >= 4, n/2 < k <= n");
      break;
    case WeightsMode::two_block:
      check_range(n == 2 && k >= 2 && k <= m, "two_block needs n = 2, 2 <= k <= m");
      break;
  }
  return std::make_unique<WeightsAdversary>(n, m, k, mode);
}

WeightsMode weights_mode_from_string(const std::string& s) {
  if (s == "basic") return WeightsMode::basic;
  if (s == "balanced") return WeightsMode::balanced;
  if (s == "m2_low") return WeightsMode::m2_low;
  if (s == "m2_high") return WeightsMode::m2_high;
  if (s == "two_block") return WeightsMode::two_block;
  throw InputError("unknown weights adversary mode '" + s + "'");
}

std::string to_string(WeightsMode mode) {
  switch (mode) {
    case WeightsMode::basic: return "basic";
    case WeightsMode::balanced: return "balanced";
    case WeightsMode::m2_low: return "m2_low";
    case WeightsMode::m2_high: return "m2_high";
    case WeightsMode::two_block: return "two_block";
  }
  return "basic";
}

}  // namespace slicebench
