#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "slicebench/adversary.hpp"
#include "slicebench/catalog.hpp"
#include "slicebench/depth.hpp"
#include "slicebench/errors.hpp"
#include "slicebench/monochromatic.hpp"

using namespace slicebench;

namespace {

// Scripted algorithm for referee tests.
class Script : public AlgorithmPlayer {
 public:
  Script(std::vector<int> queries, Label claim) : queries_(std::move(queries)), claim_(std::move(claim)) {}
  std::string name() const override { return "script"; }
  Move next() override {
    if (at_ < queries_.size()) return Move::query(queries_[at_++]);
    return Move::answer(claim_);
  }
  void observe(int, int) override {}
  std::unique_ptr<AlgorithmPlayer> clone() const override { return std::make_unique<Script>(*this); }

 private:
  std::vector<int> queries_;
  Label claim_;
  std::size_t at_ = 0;
};

// Answers 1 everywhere; quickly leaves no consistent member.
class AllOnes : public AdversaryPlayer {
 public:
  std::string name() const override { return "all-ones"; }
  int answer(int) override { return 1; }
  std::unique_ptr<AdversaryPlayer> clone() const override { return std::make_unique<AllOnes>(); }
};

}  // namespace

TEST_CASE("EQ adversary answers the alternating pattern") {
  auto adv = eq_adversary(2);
  // z starts all *, b starts at 0 and flips after each fresh index.
  CHECK(adv->answer(0) == 0);
  CHECK(adv->answer(4) == 0);  // y_0 shares z_0
  CHECK(adv->answer(1) == 1);
  CHECK(adv->answer(6) == 0);
  CHECK(adv->answer(2) == 0);
}

TEST_CASE("EQ algorithm is correct on every input and uses 3k-1 queries") {
  for (int k = 1; k <= 3; ++k) {
    const auto f = make_eq(k);
    const auto worst = worst_case_queries(*eq_algorithm(k), f);
    REQUIRE(worst.has_value());
    CHECK(*worst == 3 * k - 1);
  }
}

TEST_CASE("matches against the EQ adversary replay and stay consistent") {
  const auto f = make_eq(2);
  auto alg = eq_algorithm(2);
  auto adv = eq_adversary(2);
  const auto t = run_match(*alg, *adv, f, 4);
  CHECK(t.budget_exhausted);
  CHECK(t.consistent);
  CHECK(t.adversary_wins);
  CHECK_FALSE(t.claimed.has_value());
  CHECK(replay_matches(*eq_adversary(2), t));
  const auto again = recompute_verdict(f, t);
  CHECK(again.adversary_wins == t.adversary_wins);
  CHECK(again.determined == t.determined);
}

TEST_CASE("optimal tree walkers beat the random adversary and stay correct") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto f = random_slice_function(7, 3, seed);
    const auto r = exact_depth(f);
    auto alg = tree_algorithm(f, r.tree);
    auto adv = random_adversary(f, seed);
    const auto t = run_match(*alg, *adv, f);
    CHECK(t.correct);
    CHECK(t.queries <= r.depth);
    CHECK(replay_matches(*random_adversary(f, seed), t));
  }
}

TEST_CASE("referee rejects repeated queries and inconsistent adversaries") {
  const auto f = make_eq(1);
  Script repeat({0, 0}, Label::scalar(1));
  auto adv = input_adversary(0b0101);
  CHECK_THROWS_AS(run_match(repeat, *adv, f), std::logic_error);

  Script probe({0, 1, 2}, Label::scalar(1));
  AllOnes liar;
  CHECK_THROWS_AS(run_match(probe, liar, f), AdversaryInvalidError);
}

TEST_CASE("referee scores wrong claims") {
  const auto f = make_eq(1);
  Script guess({}, Label::scalar(1));
  auto adv = input_adversary(0b0011);
  const auto t = run_match(guess, *adv, f);
  CHECK_FALSE(t.correct);
  CHECK(t.adversary_wins);
  const std::string lines = transcript_json_lines(t);
  CHECK(lines.find("\"verdict\"") != std::string::npos);
}

TEST_CASE("weight-1 and weight-2 algorithms are correct") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto f1 = random_slice_function(8, 1, seed);
    const auto w1 = worst_case_queries(*weight1_algorithm(f1), f1);
    REQUIRE(w1.has_value());
    CHECK(*w1 <= 4);
    const auto g = random_graph(6, seed);
    const auto f2 = from_graph(g);
    const auto w2 = worst_case_queries(*weight2_algorithm(f2), f2);
    REQUIRE(w2.has_value());
    CHECK(2 * *w2 <= 2 * 6 - monochromatic_number(g).value);
  }
}

TEST_CASE("Weights algorithms are correct and within their query counts") {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m <= 3; ++m) {
      for (int k = 0; 2 * k <= n * m; ++k) {
        const auto f = weights_task(n, m, k);
        const auto a = worst_case_queries(*weights_algorithm_a(n, m, k), f);
        const auto b = worst_case_queries(*weights_algorithm_b(n, m, k), f);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(*a == (n - 1) * m);
        CHECK(*b <= n * m - (n + m - 1) / m);
      }
    }
  }
  for (int n = 4; n <= 5; ++n) {
    for (int k = 2; k <= n / 2; ++k) {
      const auto w = worst_case_queries(*weights_m2_algorithm(n, k), weights_task(n, 2, k));
      REQUIRE(w.has_value());
      CHECK(*w == n + k - 1);
    }
  }
}

TEST_CASE("Weights adversaries always leave a consistent member") {
  struct Case {
    int n, m, k;
    WeightsMode mode;
  };
  const std::vector<Case> cases = {{3, 2, 3, WeightsMode::basic},     {4, 2, 4, WeightsMode::balanced},
                                   {5, 2, 2, WeightsMode::m2_low},    {4, 2, 3, WeightsMode::m2_high},
                                   {2, 4, 3, WeightsMode::two_block}, {6, 2, 6, WeightsMode::balanced}};
  for (const auto& c : cases) {
    const auto f = weights_task(c.n, c.m, c.k);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      // Play a random query order to the end; the referee throws on any
      // inconsistent answer.
      std::vector<int> order(static_cast<std::size_t>(f.n()));
      for (int i = 0; i < f.n(); ++i) order[static_cast<std::size_t>(i)] = i;
      std::uint64_t state = seed;
      for (std::size_t i = order.size(); i > 1; --i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        std::swap(order[i - 1], order[(state >> 33) % i]);
      }
      Script all(order, Label::scalar(0));
      auto adv = weights_adversary(c.n, c.m, c.k, c.mode);
      const auto t = run_match(all, *adv, f);
      CHECK(t.consistent);
      CHECK(t.queries == f.n());
      CHECK(replay_matches(*weights_adversary(c.n, c.m, c.k, c.mode), t));
    }
  }
}

TEST_CASE("adversary parameter validation") {
  CHECK_THROWS_AS(weights_adversary(3, 2, 3, WeightsMode::balanced), DomainError);
  CHECK_THROWS_AS(weights_adversary(4, 3, 2, WeightsMode::m2_low), DomainError);
  CHECK_THROWS_AS(weights_adversary(3, 2, 1, WeightsMode::two_block), DomainError);
  CHECK_THROWS_AS(weights_mode_from_string("sideways"), InputError);
  CHECK(weights_mode_from_string(to_string(WeightsMode::m2_high)) == WeightsMode::m2_high);
}

TEST_CASE("balanced weight counts meet their constraints") {
  for (int n = 4; n <= 9; ++n) {
    for (int m = 2; m <= 5; ++m) {
      if ((n * m) % 2) continue;
      const auto c = balanced_weight_counts(n, m);
      REQUIRE(c.size() == static_cast<std::size_t>(m));
      int blocks = 0, weight = 0;
      for (int j = 0; j < m; ++j) {
        CHECK((c[j] == n / m || c[j] == n / m + 1));
        blocks += c[j];
        weight += j * c[j];
      }
      CHECK(blocks == n);
      CHECK(weight == n * m / 2 - n / 2);
    }
  }
}

TEST_CASE("forced-query certification gives lower bounds on depth") {
  const auto f = make_eq(2);
  const auto r = certify_forced_queries(f, *eq_adversary(2));
  CHECK(r.forced == 5);
  CHECK(r.forced <= exact_depth(f).depth);
  CHECK(static_cast<int>(r.sequence.size()) == r.forced);
  const auto w = weights_task(3, 2, 3);
  CHECK(certify_forced_queries(w, *weights_adversary(3, 2, 3, WeightsMode::basic)).forced <= exact_depth(w).depth);
}
