#pragma once

#include <string>
#include <vector>

#include "slicebench/bits.hpp"
#include "slicebench/function.hpp"

namespace slicebench {

/// A partial fixing of positions of an n-bit string to 0 or 1.
class Assignment {
 public:
  Assignment() = default;
  /// Throws DomainError when zeros and ones overlap or exceed n bits.
  Assignment(int n, Mask zeros, Mask ones);

  /// The assignment that agrees with x on `positions`.
  static Assignment of_input(int n, Mask x, Mask positions);
  /// Parses a {0,1,*} string, position 0 first.
  static Assignment parse(std::string_view s);

  int n() const { return n_; }
  Mask zeros() const { return zeros_; }
  Mask ones() const { return ones_; }
  Mask fixed() const { return zeros_ | ones_; }
  Mask free() const { return low_bits(n_) & ~fixed(); }
  int size() const { return popcount(fixed()); }
  bool balanced() const { return popcount(zeros_) == popcount(ones_); }

  bool consistent_with(Mask x) const { return (x & zeros_) == 0 && (x & ones_) == ones_; }
  bool compatible(const Assignment& other) const {
    return (zeros_ & other.ones_) == 0 && (ones_ & other.zeros_) == 0;
  }
  /// Union of two compatible assignments.
  Assignment merged(const Assignment& other) const;
  /// Copy with position i fixed to bit.
  Assignment with(int i, int bit) const;

  std::string to_string() const;

  bool operator==(const Assignment&) const = default;

 private:
  int n_ = 0;
  Mask zeros_ = 0;
  Mask ones_ = 0;
};

/// Function on the residual domain plus the original position of each residual
/// position (residual positions keep the increasing order of the originals).
struct Restriction {
  LabeledFunction function;
  std::vector<int> positions;
};

/// Fixes the positions of `a`. Slices restrict to the slice over the free
/// positions with the residual weight; when that weight is 0 or full the
/// residual domain is the single explicit member. Throws
/// EmptyRestrictionError if no member of f's domain is consistent with a.
Restriction restrict(const LabeledFunction& f, const Assignment& a);

/// f'(x) = f(complement of x), on slice(n, n-k). Throws DomainError for
/// non-slice domains.
LabeledFunction complement_domain(const LabeledFunction& f);

/// Members of f's domain consistent with a, in rank order.
std::vector<Mask> consistent_members(const Domain& d, const Assignment& a);

}  // namespace slicebench
