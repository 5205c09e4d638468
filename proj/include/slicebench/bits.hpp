#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace slicebench {

/// Bit i of a Mask is position i of an n-bit string (n <= 64).
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline bool test_bit(Mask m, int i) { return (m >> i) & 1U; }

/// Next larger mask with the same popcount (Gosper's hack). Enumerates
/// k-subsets in colexicographic order.
inline Mask next_same_popcount(Mask m) {
  const Mask c = m & (~m + 1);
  const Mask r = m + c;
  return (((r ^ m) >> 2) / c) | r;
}

/// Positions of the set bits, ascending.
std::vector<int> positions_of(Mask m);

/// Mask with the given positions set.
Mask mask_of(const std::vector<int>& positions);

/// Renders position 0 first: the string "1100" has positions {0,1} set.
std::string to_bitstring(Mask x, int n);

/// Inverse of to_bitstring. Throws InputError on characters other than 0/1 or
/// strings longer than 64.
Mask parse_bitstring(std::string_view s);

/// Scatters the low bits of `compact` onto the positions listed in `targets`
/// (bit j of compact goes to position targets[j]).
Mask deposit(Mask compact, const std::vector<int>& targets);

/// Gathers the bits at `sources` into a compact mask (inverse of deposit).
Mask extract(Mask wide, const std::vector<int>& sources);

}  // namespace slicebench
