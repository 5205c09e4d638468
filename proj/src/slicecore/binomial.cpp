#include "slicebench/binomial.hpp"

#include <array>

#include "slicebench/errors.hpp"

namespace slicebench {

namespace {

using Table = std::array<std::array<std::uint64_t, 65>, 65>;

constexpr Table make_pascal() {
  Table t{};
  for (int n = 0; n <= 64; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
  }
  return t;
}

constexpr Table kPascal = make_pascal();

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > 64) throw DomainError("binomial: n out of range");
  if (k < 0 || k > n) return 0;
  return kPascal[n][k];
}

}  // namespace slicebench
