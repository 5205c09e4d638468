#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "slicebench/bits.hpp"

namespace slicebench {

enum class DomainKind { slice, cube, explicit_set };

/// A finite set of n-bit strings together with a fixed enumeration order.
///
/// Slices are enumerated colexicographically (equivalently, by increasing
/// mask value), the cube numerically, and explicit sets in list order. Rank
/// and unrank are inverse to each other on members.
class Domain {
 public:
  /// All weight-k strings of length n. Requires 1 <= k <= n-1 and n <= 64.
  static Domain slice(int n, int k);
  /// All 2^n strings. Requires 0 <= n <= 62.
  static Domain cube(int n);
  /// Distinct strings of length n, in the given order. Requires at least one.
  static Domain explicit_set(int n, std::vector<Mask> members);

  int n() const { return n_; }
  DomainKind kind() const { return kind_; }
  bool is_slice() const { return kind_ == DomainKind::slice; }
  bool is_cube() const { return kind_ == DomainKind::cube; }
  bool is_balanced_slice() const { return is_slice() && 2 * k_ == n_; }
  /// Hamming weight of a slice. Throws DomainError for other kinds.
  int k() const;
  std::uint64_t size() const { return size_; }

  bool contains(Mask x) const;
  /// Index of x in the enumeration order. Throws DomainError if x is not a
  /// member.
  std::uint64_t rank(Mask x) const;
  /// Member at index r. Throws DomainError if r >= size().
  Mask unrank(std::uint64_t r) const;
  /// Every member in rank order.
  std::vector<Mask> members() const;

  /// Explicit member list (explicit domains only).
  const std::vector<Mask>& explicit_members() const;

  std::string describe() const;

  friend bool operator==(const Domain& a, const Domain& b);

 private:
  struct ExplicitData {
    std::vector<Mask> members;
    std::unordered_map<Mask, std::uint64_t> index;
  };

  Domain(int n, DomainKind kind, int k, std::uint64_t size,
         std::shared_ptr<const ExplicitData> data);

  int n_ = 0;
  DomainKind kind_ = DomainKind::cube;
  int k_ = 0;
  std::uint64_t size_ = 1;
  std::shared_ptr<const ExplicitData> explicit_;
};

}  // namespace slicebench
