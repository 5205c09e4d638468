#pragma once

#include <cstdint>

#include "slicebench/decision_tree.hpp"
#include "slicebench/function.hpp"

namespace slicebench {

struct SearchStats {
  std::uint64_t nodes = 0;      // solver invocations on non-constant states
  std::uint64_t memo_hits = 0;  // exact values served from the table
  std::uint64_t states = 0;     // memo entries at the end of the search
};

struct ExactDepthOptions {
  /// Memo entries allowed before the search aborts with ResourceError.
  std::uint64_t max_states = 8'000'000;
};

struct DepthResult {
  int depth = 0;
  DecisionTree tree;
  SearchStats stats;
};

/// Deterministic query complexity D(f) with an optimal tree.
///
/// Minimax over partial assignments: the algorithm picks a position, the
/// adversary an answer consistent with some remaining member, and a state
/// whose members share one label is worth 0. States are memoized on their
/// (zeros, ones) masks. Cutoffs use ceil(log2(#labels remaining)) as a lower
/// bound and the number of positions on which the members still differ
/// (minus two on same-weight member sets) as an upper bound; the root search
/// deepens from the lower bound. Among optimal queries the lowest position
/// wins.
DepthResult exact_depth(const LabeledFunction& f, const ExactDepthOptions& options = {});

/// Upper estimate of the number of partial assignments consistent with d
/// (the memo's worst-case size).
double estimate_depth_states(const Domain& d);

struct NonadaptiveResult {
  int size = 0;
  Mask positions = 0;
};

/// Smallest fixed position set S such that x restricted to S determines f(x).
/// Requires n <= 20.
NonadaptiveResult nonadaptive_depth(const LabeledFunction& f);

}  // namespace slicebench
