#pragma once

#include <string>
#include <vector>

#include "slicebench/assignment.hpp"
#include "slicebench/function.hpp"
#include "slicebench/io.hpp"

namespace slicebench {

struct MeasureEntry {
  std::string name;
  int value = 0;
  Json witness;  // null when the measure has no witness
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t millis = 0;
};

/// Registered measure names: D, NA, C, UC, SC, bs, bs<l> (e.g. bs2), s, BC,
/// mBC, deg, packing, m.
const std::vector<std::string>& measure_names();
bool is_measure_name(const std::string& name);

/// Computes one measure with its witness. Throws DomainError or
/// ResourceError as the underlying engine does, InputError on unknown names.
MeasureEntry compute_measure(const LabeledFunction& f, const std::string& name);

Json measure_entry_json(const MeasureEntry& e);
MeasureEntry measure_entry_from_json(const std::string& name, const Json& j);

struct WitnessCheck {
  bool ok = false;
  std::string message;
};

/// Re-checks a stored witness against f: the witness must be well formed,
/// valid for f, and attain `value`.
WitnessCheck verify_witness(const LabeledFunction& f, const std::string& name, int value,
                            const Json& witness);

/// {"zeros": [...], "ones": [...]}
Json assignment_json(const Assignment& a);

}  // namespace slicebench
