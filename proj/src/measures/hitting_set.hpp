#pragma once

#include <optional>
#include <vector>

#include "slicebench/bits.hpp"

namespace slicebench::detail {

struct HittingSet {
  int size = 0;
  Mask set = 0;
};

/// Keeps only the inclusion-minimal masks, deduplicated, ordered by
/// (popcount, value).
std::vector<Mask> minimal_masks(std::vector<Mask> masks);

/// Minimum-cardinality subset of `universe` meeting every mask in `sets`
/// (every mask must meet the universe). Iterative deepening on the size;
/// within a size, branches on the first unhit set's positions in increasing
/// order, so the witness is deterministic.
HittingSet min_hitting_set(std::vector<Mask> sets, Mask universe);

/// Maximum number of pairwise disjoint masks, with a witness family.
std::vector<Mask> max_disjoint_family(const std::vector<Mask>& blocks);

/// Indices of candidates that partition `universe` exactly, or nullopt.
/// Branches on the uncovered element with the fewest live candidates, trying
/// candidates in index order.
std::optional<std::vector<int>> exact_cover(Mask universe, const std::vector<Mask>& candidates);

}  // namespace slicebench::detail
