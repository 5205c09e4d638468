#pragma once

#include <cstdint>

namespace slicebench {

/// Exact binomial coefficient for 0 <= n <= 64. Returns 0 when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

}  // namespace slicebench
