#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "slicebench/domain.hpp"

namespace slicebench {

/// A function value: either a scalar (Boolean functions use 0 and 1) or a
/// tuple of integers (multiset labels, stored as a descending-sorted vector).
class Label {
 public:
  Label() = default;
  static Label scalar(int v) { return Label(false, {v}); }
  static Label tuple(std::vector<int> parts) { return Label(true, std::move(parts)); }

  bool is_scalar() const { return !tuple_; }
  /// Scalar value. Throws DomainError on tuple labels.
  int value() const;
  const std::vector<int>& parts() const { return parts_; }

  std::string to_string() const;

  auto operator<=>(const Label&) const = default;

 private:
  Label(bool tuple, std::vector<int> parts) : tuple_(tuple), parts_(std::move(parts)) {}

  bool tuple_ = false;
  std::vector<int> parts_{0};
};

/// Largest domain a function table may cover.
inline constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 26;
/// Largest alphabet; table entries are single bytes.
inline constexpr std::size_t kMaxAlphabet = 256;

/// A total map from a Domain to a finite alphabet, stored as a dense table of
/// alphabet indices in rank order.
class LabeledFunction {
 public:
  LabeledFunction(Domain domain, std::vector<Label> alphabet, std::vector<std::uint8_t> table);

  /// Boolean function (alphabet {0,1}) from a table of 0/1 values.
  static LabeledFunction boolean(Domain domain, std::vector<std::uint8_t> bits);
  /// Boolean function evaluated member by member.
  static LabeledFunction tabulate_boolean(const Domain& domain,
                                          const std::function<bool(Mask)>& fn);
  /// General function; the alphabet is the sorted set of labels produced.
  static LabeledFunction tabulate(const Domain& domain, const std::function<Label(Mask)>& fn);
  /// Constant-0 Boolean function.
  static LabeledFunction constant(const Domain& domain, int value = 0);

  const Domain& domain() const { return domain_; }
  int n() const { return domain_.n(); }
  const std::vector<Label>& alphabet() const { return alphabet_; }
  std::span<const std::uint8_t> table() const { return table_; }

  bool is_boolean() const;
  bool is_constant() const;

  std::uint8_t index_at_rank(std::uint64_t r) const { return table_[r]; }
  /// Alphabet index of f(x). Throws DomainError if x is not a member.
  std::uint8_t index_at(Mask x) const { return table_[domain_.rank(x)]; }
  const Label& operator()(Mask x) const { return alphabet_[index_at(x)]; }

  /// Alphabet index of `label`, or -1 if absent.
  int index_of(const Label& label) const;

  /// Preimage of an alphabet index, in rank order.
  std::vector<Mask> preimage(std::uint8_t index) const;

  friend bool operator==(const LabeledFunction& a, const LabeledFunction& b);

 private:
  Domain domain_;
  std::vector<Label> alphabet_;
  std::vector<std::uint8_t> table_;
};

}  // namespace slicebench
