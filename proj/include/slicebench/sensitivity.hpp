#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "slicebench/function.hpp"

namespace slicebench {

struct SensitivityResult {
  int value = 0;
  Mask input = 0;
  /// Slices: matched (zero position, one position) swaps. Cube: sensitive
  /// positions, each paired with -1.
  std::vector<std::pair<int, int>> pairs;
};

/// s(f, x) or s(f) (first maximum in rank order). On a slice this is a
/// maximum matching between the 0-positions and 1-positions of x whose edges
/// are value-flipping swaps; on the cube it counts value-flipping bits.
/// Explicit domains raise DomainError.
SensitivityResult sensitivity(const LabeledFunction& f, std::optional<Mask> x = {});

struct BlockSensitivityOptions {
  /// Only blocks of at most this many positions.
  std::optional<int> max_block;
  /// Minimal sensitive blocks allowed per input before ResourceError.
  std::size_t max_blocks = 200'000;
};

struct BlockSensitivityResult {
  int value = 0;
  Mask input = 0;
  std::vector<Mask> blocks;
};

/// bs(f, x) or bs(f) (bs_l with options.max_block = l). A block B of x is
/// sensitive when x XOR B is a domain member with a different label. Only
/// inclusion-minimal sensitive blocks are packed.
BlockSensitivityResult block_sensitivity(const LabeledFunction& f, std::optional<Mask> x = {},
                                         const BlockSensitivityOptions& options = {});

}  // namespace slicebench
