#include <set>
#include <stdexcept>
#include <unordered_map>

#include "slicebench/adversary.hpp"
#include "slicebench/errors.hpp"

namespace slicebench {

namespace {

struct Revealed {
  Mask zeros = 0;
  Mask ones = 0;

  bool matches(Mask x) const { return (x & zeros) == 0 && (x & ones) == ones; }
  void add(int position, int bit) { (bit ? ones : zeros) |= Mask{1} << position; }
};

// Distinct alphabet indices over the consistent members, stopping at two.
std::vector<std::uint8_t> labels_left(const LabeledFunction& f, const std::vector<Mask>& members,
                                      const Revealed& r) {
  std::vector<std::uint8_t> out;
  for (Mask x : members) {
    if (!r.matches(x)) continue;
    const auto idx = f.index_at(x);
    if (out.empty() || (out.size() == 1 && out[0] != idx)) out.push_back(idx);
    if (out.size() == 2) break;
  }
  return out;
}

void fill_verdict(const LabeledFunction& f, const std::vector<Mask>& members, const Revealed& r,
                  MatchTranscript& t) {
  const auto left = labels_left(f, members, r);
  t.determined = left.size() == 1;
  t.adversary_wins = left.size() > 1;
  t.correct = t.determined && t.claimed && *t.claimed == f.alphabet()[left[0]];
  t.queries = static_cast<int>(t.steps.size());
}

}  // namespace

MatchTranscript run_match(AlgorithmPlayer& alg, AdversaryPlayer& adv, const LabeledFunction& f,
                          std::optional<int> budget) {
  const auto members = f.domain().members();
  MatchTranscript t;
  t.algorithm = alg.name();
  t.adversary = adv.name();
  Revealed r;
  for (;;) {
    const Move move = alg.next();
    if (move.halt) {
      t.claimed = move.label;
      break;
    }
    if (budget && static_cast<int>(t.steps.size()) >= *budget) {
      t.budget_exhausted = true;
      break;
    }
    if (move.position < 0 || move.position >= f.n()) throw std::logic_error("query outside 0..n-1");
    if (test_bit(r.zeros | r.ones, move.position)) {
      throw std::logic_error("algorithm queried position " + std::to_string(move.position) + " twice");
    }
    const int bit = adv.answer(move.position);
    r.add(move.position, bit);
    t.steps.push_back({move.position, bit});
    if (labels_left(f, members, r).empty()) {
      throw AdversaryInvalidError(adv.name() + " answered " + std::to_string(bit) + " at position " +
                                  std::to_string(move.position) + " with no consistent member left");
    }
    alg.observe(move.position, bit);
  }
  fill_verdict(f, members, r, t);
  return t;
}

MatchTranscript recompute_verdict(const LabeledFunction& f, const MatchTranscript& t) {
  const auto members = f.domain().members();
  MatchTranscript out = t;
  Revealed r;
  out.consistent = true;
  for (const auto& step : t.steps) {
    if (test_bit(r.zeros | r.ones, step.position)) out.consistent = false;
    r.add(step.position, step.answer);
    if (labels_left(f, members, r).empty()) out.consistent = false;
  }
  if (!out.consistent) {
    out.determined = out.correct = out.adversary_wins = false;
    out.queries = static_cast<int>(t.steps.size());
    return out;
  }
  fill_verdict(f, members, r, out);
  return out;
}

bool replay_matches(const AdversaryPlayer& fresh, const MatchTranscript& t) {
  auto adv = fresh.clone();
  for (const auto& step : t.steps) {
    if (adv->answer(step.position) != step.answer) return false;
  }
  return true;
}

std::string transcript_json_lines(const MatchTranscript& t) {
  std::string out;
  for (const auto& step : t.steps) {
    out += Json{{"query", step.position}, {"answer", step.answer}}.dump() + "\n";
  }
  Json verdict;
  verdict["algorithm"] = t.algorithm;
  verdict["adversary"] = t.adversary;
  verdict["claimed"] = t.claimed ? label_to_json(*t.claimed) : Json(nullptr);
  verdict["queries"] = t.queries;
  verdict["budget_exhausted"] = t.budget_exhausted;
  verdict["consistent"] = t.consistent;
  verdict["determined"] = t.determined;
  verdict["correct"] = t.correct;
  verdict["adversary_wins"] = t.adversary_wins;
  out += Json{{"verdict", verdict}}.dump() + "\n";
  return out;
}

namespace {

// Shortest query sequence that determines f when every answer comes from the
// adversary. Failed (state, budget) pairs are remembered per state.
class ForcedSearch {
 public:
  ForcedSearch(const LabeledFunction& f) : f_(f), members_(f.domain().members()) {}

  bool reachable(const Revealed& r, const AdversaryPlayer& adv, int budget, std::vector<int>& path) {
    const auto left = labels_left(f_, members_, r);
    if (left.size() == 1) return true;
    if (budget == 0) return false;
    const std::string key = std::to_string(r.zeros) + ":" + std::to_string(r.ones) + ":" + adv.state_key();
    if (auto it = failed_.find(key); it != failed_.end() && it->second >= budget) return false;
    ++states_;
    const Mask open = low_bits(f_.n()) & ~(r.zeros | r.ones);
    for (int p : positions_of(open)) {
      auto next = adv.clone();
      const int bit = next->answer(p);
      Revealed child = r;
      child.add(p, bit);
      if (labels_left(f_, members_, child).empty()) {
        throw AdversaryInvalidError(adv.name() + " left no consistent member after a query to " +
                                    std::to_string(p));
      }
      path.push_back(p);
      if (reachable(child, *next, budget - 1, path)) return true;
      path.pop_back();
    }
    auto& slot = failed_[key];
    slot = std::max(slot, budget);
    return false;
  }

  std::uint64_t states() const { return states_; }

 private:
  const LabeledFunction& f_;
  std::vector<Mask> members_;
  std::unordered_map<std::string, int> failed_;
  std::uint64_t states_ = 0;
};

}  // namespace

ForcedResult certify_forced_queries(const LabeledFunction& f, const AdversaryPlayer& adversary) {
  ForcedSearch search(f);
  ForcedResult result;
  for (int budget = 0; budget <= f.n(); ++budget) {
    std::vector<int> path;
    if (search.reachable(Revealed{}, adversary, budget, path)) {
      result.forced = budget;
      result.sequence = std::move(path);
      result.states = search.states();
      return result;
    }
  }
  throw std::logic_error("querying every position must determine f");
}

std::optional<int> worst_case_queries(const AlgorithmPlayer& alg, const LabeledFunction& f) {
  int worst = 0;
  for (Mask x : f.domain().members()) {
    auto player = alg.clone();
    auto adv = input_adversary(x);
    const auto t = run_match(*player, *adv, f, f.n());
    if (!t.claimed || *t.claimed != f(x)) return std::nullopt;
    worst = std::max(worst, t.queries);
  }
  return worst;
}

}  // namespace slicebench
