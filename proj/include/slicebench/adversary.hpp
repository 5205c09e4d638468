#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slicebench/assignment.hpp"
#include "slicebench/decision_tree.hpp"
#include "slicebench/function.hpp"
#include "slicebench/io.hpp"

namespace slicebench {

/// One move of a query algorithm: query a position, or halt with a label.
struct Move {
  bool halt = false;
  int position = -1;
  Label label;

  static Move query(int p) { return {false, p, {}}; }
  static Move answer(Label l) { return {true, -1, std::move(l)}; }
};

class AlgorithmPlayer {
 public:
  virtual ~AlgorithmPlayer() = default;
  virtual std::string name() const = 0;
  virtual Move next() = 0;
  virtual void observe(int position, int bit) = 0;
  virtual std::unique_ptr<AlgorithmPlayer> clone() const = 0;
};

class AdversaryPlayer {
 public:
  virtual ~AdversaryPlayer() = default;
  virtual std::string name() const = 0;
  /// Bit revealed for `position`; called at most once per position.
  virtual int answer(int position) = 0;
  virtual std::unique_ptr<AdversaryPlayer> clone() const = 0;
  /// Internal state beyond the answers given so far, for memoized searches.
  virtual std::string state_key() const { return {}; }
};

// Algorithms. Positions of block i of width m are im..im+m-1.

/// Queries x_1..x_{2k-1}; rejects unless the majority bit b occurs exactly k
/// times; then checks y_j = b on those indices, rejecting at the first
/// mismatch.
std::unique_ptr<AlgorithmPlayer> eq_algorithm(int k);
/// Queries blocks 1..n-1 completely; the last weight follows from k.
std::unique_ptr<AlgorithmPlayer> weights_algorithm_a(int n, int m, int k);
/// Queries the first m-1 bits of every block, then the last bit of each
/// block outside the plurality class of partial weights (smallest weight on
/// ties).
std::unique_ptr<AlgorithmPlayer> weights_algorithm_b(int n, int m, int k);
/// m = 2: queries every first bit, then the second bit of blocks whose
/// first bit is 1 unless 0 or k ones were seen.
std::unique_ptr<AlgorithmPlayer> weights_m2_algorithm(int n, int k);
/// Weight-1 slices: queries the smaller preimage (the 1-preimage on ties) in
/// increasing order. Boolean f on slice(n, 1).
std::unique_ptr<AlgorithmPlayer> weight1_algorithm(const LabeledFunction& f);
/// Weight-2 slices: queries the complement of a maximum monochromatic set
/// until a 1 appears, then plays an optimal tree for the restriction.
std::unique_ptr<AlgorithmPlayer> weight2_algorithm(const LabeledFunction& f);
/// Walks a decision tree built for f.
std::unique_ptr<AlgorithmPlayer> tree_algorithm(const LabeledFunction& f, DecisionTree tree);

// Adversaries.

/// Answers according to a fixed input.
std::unique_ptr<AdversaryPlayer> input_adversary(Mask x);
/// Keeps z in {0,1,*}^{2k} and a bit b starting at 0: a query to x_i or y_i
/// with z_i = * sets z_i := b and flips b; the answer is z_i.
std::unique_ptr<AdversaryPlayer> eq_adversary(int k);
/// Answers a uniformly random bit among those leaving a consistent member of
/// f's domain (mt19937_64(seed)). For stress-testing algorithms.
std::unique_ptr<AdversaryPlayer> random_adversary(const LabeledFunction& f, std::uint64_t seed);

enum class WeightsMode { basic, balanced, m2_low, m2_high, two_block };

/// Adversaries for the Weights task on slice(nm, k). Parameter ranges:
/// basic 2 <= k <= nm/2; balanced k = nm/2, n >= 4; m2_low m = 2, n >= 4,
/// 2 <= k <= n/2; m2_high m = 2, n >= 4, n/2 < k <= n; two_block n = 2,
/// 2 <= k <= m. Out-of-range parameters raise DomainError.
std::unique_ptr<AdversaryPlayer> weights_adversary(int n, int m, int k, WeightsMode mode);
WeightsMode weights_mode_from_string(const std::string& s);
std::string to_string(WeightsMode mode);

/// Count vector for the balanced adversary: c[j] blocks get partial weight
/// j, each c[j] in {floor(n/m), floor(n/m)+1}, sum c = n, and
/// sum j c[j] = nm/2 - floor(n/2). Among valid vectors the one closest to
/// the round-robin counts wins.
std::vector<int> balanced_weight_counts(int n, int m);

struct MatchStep {
  int position = 0;
  int answer = 0;
};

struct MatchTranscript {
  std::string algorithm;
  std::string adversary;
  std::vector<MatchStep> steps;
  /// Label the algorithm halted with; empty when the budget ran out first.
  std::optional<Label> claimed;
  bool budget_exhausted = false;
  /// Every answer left a consistent domain member.
  bool consistent = true;
  /// All consistent members share one label.
  bool determined = false;
  /// Halted with the label every consistent member carries.
  bool correct = false;
  /// Two consistent members carry different labels after the last step.
  bool adversary_wins = false;
  int queries = 0;
};

/// Alternates algorithm moves and adversary answers until the algorithm
/// halts or `budget` queries were made. Throws AdversaryInvalidError if an
/// answer leaves no consistent member, and std::logic_error if the
/// algorithm repeats a position.
MatchTranscript run_match(AlgorithmPlayer& alg, AdversaryPlayer& adv, const LabeledFunction& f,
                          std::optional<int> budget = {});

/// Recomputes the verdict fields of t from its steps and claim alone.
MatchTranscript recompute_verdict(const LabeledFunction& f, const MatchTranscript& t);

/// True when a fresh adversary answers every step of t with the same bit.
bool replay_matches(const AdversaryPlayer& fresh, const MatchTranscript& t);

/// Transcript as JSON lines: one {"query","answer"} object per step, then a
/// verdict object.
std::string transcript_json_lines(const MatchTranscript& t);

struct ForcedResult {
  /// Fewest queries after which the label is determined against the
  /// adversary, minimized over all query sequences.
  int forced = 0;
  /// A query sequence attaining it.
  std::vector<int> sequence;
  std::uint64_t states = 0;
};

/// Exhaustive search over query orders against a deterministic adversary.
/// Every algorithm that halts correctly against this adversary makes at
/// least `forced` queries, so forced is a lower bound on D(f).
ForcedResult certify_forced_queries(const LabeledFunction& f, const AdversaryPlayer& adversary);

/// Worst-case query count of a fresh copy of alg over every input of f, or
/// nullopt if some replay halts with a wrong label.
std::optional<int> worst_case_queries(const AlgorithmPlayer& alg, const LabeledFunction& f);

}  // namespace slicebench
