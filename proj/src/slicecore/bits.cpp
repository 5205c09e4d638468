#include "slicebench/bits.hpp"

#include "slicebench/errors.hpp"

namespace slicebench {

std::vector<int> positions_of(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& positions) {
  Mask m = 0;
  for (int p : positions) m |= Mask{1} << p;
  return m;
}

std::string to_bitstring(Mask x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if (test_bit(x, i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

Mask parse_bitstring(std::string_view s) {
  if (s.size() > 64) throw InputError("bit string longer than 64: " + std::string(s));
  Mask x = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      x |= Mask{1} << i;
    } else if (s[i] != '0') {
      throw InputError("invalid character in bit string: " + std::string(s));
    }
  }
  return x;
}

Mask deposit(Mask compact, const std::vector<int>& targets) {
  Mask out = 0;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    if ((compact >> j) & 1U) out |= Mask{1} << targets[j];
  }
  return out;
}

Mask extract(Mask wide, const std::vector<int>& sources) {
  Mask out = 0;
  for (std::size_t j = 0; j < sources.size(); ++j) {
    if (test_bit(wide, sources[j])) out |= Mask{1} << j;
  }
  return out;
}

}  // namespace slicebench
