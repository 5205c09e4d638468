#pragma once

#include "slicebench/assignment.hpp"
#include "slicebench/function.hpp"

namespace slicebench {

struct PackingResult {
  int value = 0;
  std::uint64_t one_inputs = 0;
  /// Largest number of 1-inputs inside a single 1-subcube.
  std::uint64_t max_intersection = 0;
  /// A subcube attaining max_intersection.
  Assignment subcube;
};

/// Lower bound ceil(log2(|f^-1(1)| / m)) on D(f), where m is the largest
/// number of 1-inputs in a subcube whose domain members are all 1-inputs.
/// m is computed exactly by closing spans of 1-inputs under adding one more
/// 1-input. Returns 0 when f has no 1-inputs.
PackingResult packing_lower_bound(const LabeledFunction& f);

/// Smallest t with b * 2^t >= a (a, b >= 1).
int ceil_log2_ratio(std::uint64_t a, std::uint64_t b);

}  // namespace slicebench
