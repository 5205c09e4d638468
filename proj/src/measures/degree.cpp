#include "slicebench/degree.hpp"

#include <gmpxx.h>

#include <cstdint>

#include "slicebench/errors.hpp"

namespace slicebench {

namespace {

constexpr std::uint64_t kMaxRows = std::uint64_t{1} << 14;
constexpr std::size_t kMaxColumns = 4096;
constexpr std::uint64_t kPrime = 2147483629;  // largest prime below 2^31

std::vector<Mask> monomials_up_to(int n, int d) {
  std::vector<Mask> out;
  for (int t = 0; t <= d; ++t) {
    if (t == 0) {
      out.push_back(0);
      continue;
    }
    if (t > n) break;
    const Mask last = low_bits(n) & ~low_bits(n - t);
    for (Mask m = low_bits(t);; m = next_same_popcount(m)) {
      out.push_back(m);
      if (m == last) break;
    }
    if (out.size() > kMaxColumns) {
      throw ResourceError("degree: more than " + std::to_string(kMaxColumns) + " monomials");
    }
  }
  return out;
}

std::uint64_t power_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (b %= kPrime; e; e >>= 1, b = b * b % kPrime) {
    if (e & 1) r = r * b % kPrime;
  }
  return r;
}

// Rank of the 0/1 matrix [monomials | f] modulo kPrime.
std::size_t modular_rank(const std::vector<Mask>& rows, const std::vector<Mask>& columns,
                         const std::vector<std::uint8_t>& values) {
  const std::size_t cols = columns.size() + 1;
  std::vector<std::vector<std::uint64_t>> a(rows.size(), std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) a[i][j] = (rows[i] & columns[j]) == columns[j];
    a[i][columns.size()] = values[i];
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const std::uint64_t inv = power_mod(a[r][c], kPrime - 2);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t factor = a[i][c] * inv % kPrime;
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] = (a[i][j] + kPrime - factor * a[r][j] % kPrime) % kPrime;
      }
    }
    ++r;
  }
  return r;
}

struct Echelon {
  std::vector<std::vector<mpz_class>> rows;
  std::vector<std::size_t> pivots;  // pivot column of each echelon row
};

// Fraction-free (Bareiss) row echelon form. Every entry stays an integer
// minor of the input, and each division by the previous pivot is exact.
Echelon bareiss(std::vector<std::vector<mpz_class>> a) {
  Echelon e;
  if (a.empty()) return e;
  const std::size_t cols = a[0].size();
  mpz_class previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

DegreeResult degree(const LabeledFunction& f) {
  if (!f.is_boolean()) throw DomainError("degree requires a Boolean function");
  const Domain& d = f.domain();
  if (d.size() > kMaxRows) throw ResourceError("degree: domain size exceeds 2^14");
  const auto rows = d.members();
  std::vector<std::uint8_t> values(f.table().begin(), f.table().end());
  const int n = f.n();

  for (int deg = 0; deg <= n; ++deg) {
    const auto columns = monomials_up_to(n, deg);
    if (modular_rank(rows, columns, values) == columns.size() + 1) continue;

    std::vector<std::vector<mpz_class>> a(rows.size(), std::vector<mpz_class>(columns.size() + 1));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < columns.size(); ++j) {
        a[i][j] = (rows[i] & columns[j]) == columns[j] ? 1 : 0;
      }
      a[i][columns.size()] = values[i];
    }
    const Echelon e = bareiss(std::move(a));
    if (!e.pivots.empty() && e.pivots.back() == columns.size()) continue;

    // Back substitution over the pivot columns.
    std::vector<mpq_class> coeff(columns.size(), 0);
    for (std::size_t r = e.rows.size(); r-- > 0;) {
      mpq_class acc = e.rows[r][columns.size()];
      for (std::size_t s = r + 1; s < e.rows.size(); ++s) {
        acc -= mpq_class(e.rows[r][e.pivots[s]]) * coeff[e.pivots[s]];
      }
      coeff[e.pivots[r]] = acc / mpq_class(e.rows[r][e.pivots[r]]);
      coeff[e.pivots[r]].canonicalize();
    }
    DegreeResult out;
    out.value = deg;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (coeff[j] != 0) out.polynomial.push_back({columns[j], rational_text(coeff[j])});
    }
    return out;
  }
  throw std::logic_error("degree: no representing polynomial found");
}

std::string evaluate_polynomial(const std::vector<PolynomialTerm>& polynomial, Mask x) {
  mpq_class sum = 0;
  for (const auto& term : polynomial) {
    if ((x & term.monomial) != term.monomial) continue;
    mpq_class c(term.coefficient);
    c.canonicalize();
    sum += c;
  }
  return sum.get_str();
}

}  // namespace slicebench
