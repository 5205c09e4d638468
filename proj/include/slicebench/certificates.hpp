#pragma once

#include <optional>

#include "slicebench/assignment.hpp"
#include "slicebench/function.hpp"

namespace slicebench {

struct CertificateResult {
  int value = 0;
  /// Input at which the value is attained.
  Mask input = 0;
  /// Minimal certificate for that input.
  Assignment certificate;
};

/// C(f, x) when x is given, otherwise C(f) = max over members (first maximum
/// in rank order). The witness is a smallest assignment consistent with x
/// whose consistent members all share f(x). The search branches on low
/// positions first, so the witness is deterministic.
CertificateResult certificate_complexity(const LabeledFunction& f, std::optional<Mask> x = {});

/// True when every member of f's domain consistent with a has label index
/// `label`, and at least one member is consistent.
bool is_certificate(const LabeledFunction& f, const Assignment& a, std::uint8_t label);

struct PartitionResult {
  int value = 0;
  /// The cells of the partition (certificates, or subcubes for SC).
  std::vector<Assignment> cells;
};

/// UC(f): the least s such that the domain is partitioned by certificates
/// of size <= s, each member covered by exactly one. Boolean f, domain size
/// <= 64.
PartitionResult unambiguous_certificate_complexity(const LabeledFunction& f);

/// SC(f): the least s such that {0,1}^n splits into subcubes of codimension
/// <= s, each label-constant on the domain. Boolean f, n <= 6.
PartitionResult subcube_partition_complexity(const LabeledFunction& f);

enum class BalancedMode { at_input, max, min };

/// Balanced certificate complexity on slice(2k, k): BC(f, x) for the given
/// input, BC(f) (max over inputs) or mBC(f) (min over inputs). A balanced
/// certificate fixes equally many zeros and ones.
CertificateResult balanced_certificate(const LabeledFunction& f, BalancedMode mode,
                                       std::optional<Mask> x = {});

}  // namespace slicebench
