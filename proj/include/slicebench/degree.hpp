#pragma once

#include <string>
#include <vector>

#include "slicebench/function.hpp"

namespace slicebench {

struct PolynomialTerm {
  Mask monomial = 0;
  /// Exact rational coefficient as "p" or "p/q".
  std::string coefficient;
};

struct DegreeResult {
  int value = 0;
  /// A representing polynomial of that degree, supported on a column basis.
  std::vector<PolynomialTerm> polynomial;
};

/// Smallest d such that f agrees on its domain with a real polynomial of
/// degree d. Boolean f, domain size <= 2^14.
///
/// For each d the value vector is tested against the monomial columns by
/// fraction-free elimination over the integers. A modular pass runs first
/// and only skips the exact pass when it already finds full column rank.
DegreeResult degree(const LabeledFunction& f);

/// Value of the polynomial at x (exact), as "p" or "p/q".
std::string evaluate_polynomial(const std::vector<PolynomialTerm>& polynomial, Mask x);

}  // namespace slicebench
