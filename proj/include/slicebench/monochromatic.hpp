#pragma once

#include "slicebench/slice_graph.hpp"

namespace slicebench {

struct MonochromaticResult {
  int value = 0;
  Mask vertices = 0;
  /// True when the witness is a clique, false for an independent set.
  bool clique = true;
};

/// Largest clique of g, by branch and bound with a greedy colouring bound.
MonochromaticResult max_clique(const SliceGraph& g);

/// m(G) = max(clique number, independence number); a clique wins ties.
/// Requires n <= 40.
MonochromaticResult monochromatic_number(const SliceGraph& g);

}  // namespace slicebench
