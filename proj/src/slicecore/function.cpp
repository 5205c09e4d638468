#include "slicebench/function.hpp"

#include <algorithm>
#include <map>

#include "slicebench/errors.hpp"

namespace slicebench {

int Label::value() const {
  if (tuple_) throw DomainError("scalar value requested from tuple label " + to_string());
  return parts_.front();
}

std::string Label::to_string() const {
  if (!tuple_) return std::to_string(parts_.front());
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void check_table_size(const Domain& d) {
  if (d.size() > kMaxTableSize) {
    throw ResourceError("domain " + d.describe() + " has " + std::to_string(d.size()) +
                        " members; the table cap is 2^26");
  }
}

}  // namespace

LabeledFunction::LabeledFunction(Domain domain, std::vector<Label> alphabet,
                                 std::vector<std::uint8_t> table)
    : domain_(std::move(domain)), alphabet_(std::move(alphabet)), table_(std::move(table)) {
  check_table_size(domain_);
  if (alphabet_.empty() || alphabet_.size() > kMaxAlphabet) {
    throw DomainError("alphabet size must be in [1, 256]");
  }
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (alphabet_[i] == alphabet_[j]) throw DomainError("alphabet labels must be distinct");
    }
  }
  if (table_.size() != domain_.size()) {
    throw DomainError("table has " + std::to_string(table_.size()) + " entries but " +
                      domain_.describe() + " has " + std::to_string(domain_.size()) + " members");
  }
  for (auto v : table_) {
    if (v >= alphabet_.size()) throw DomainError("table entry outside the alphabet");
  }
}

LabeledFunction LabeledFunction::boolean(Domain domain, std::vector<std::uint8_t> bits) {
  return LabeledFunction(std::move(domain), {Label::scalar(0), Label::scalar(1)}, std::move(bits));
}

LabeledFunction LabeledFunction::tabulate_boolean(const Domain& domain,
                                                  const std::function<bool(Mask)>& fn) {
  check_table_size(domain);
  std::vector<std::uint8_t> bits;
  bits.reserve(domain.size());
  for (Mask x : domain.members()) bits.push_back(fn(x) ? 1 : 0);
  return boolean(domain, std::move(bits));
}

LabeledFunction LabeledFunction::tabulate(const Domain& domain,
                                          const std::function<Label(Mask)>& fn) {
  check_table_size(domain);
  std::vector<Label> values;
  values.reserve(domain.size());
  std::map<Label, std::uint8_t> index;
  for (Mask x : domain.members()) {
    values.push_back(fn(x));
    index.emplace(values.back(), 0);
  }
  if (index.size() > kMaxAlphabet) throw ResourceError("more than 256 distinct labels");
  std::vector<Label> alphabet;
  for (auto& [label, idx] : index) {
    idx = static_cast<std::uint8_t>(alphabet.size());
    alphabet.push_back(label);
  }
  std::vector<std::uint8_t> table;
  table.reserve(values.size());
  for (const auto& v : values) table.push_back(index.at(v));
  return LabeledFunction(domain, std::move(alphabet), std::move(table));
}

LabeledFunction LabeledFunction::constant(const Domain& domain, int value) {
  check_table_size(domain);
  return boolean(domain, std::vector<std::uint8_t>(domain.size(), value ? 1 : 0));
}

bool LabeledFunction::is_boolean() const {
  return alphabet_.size() == 2 && alphabet_[0] == Label::scalar(0) &&
         alphabet_[1] == Label::scalar(1);
}

bool LabeledFunction::is_constant() const {
  return std::adjacent_find(table_.begin(), table_.end(), std::not_equal_to<>()) == table_.end();
}

int LabeledFunction::index_of(const Label& label) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == label) return static_cast<int>(i);
  }
  return -1;
}

std::vector<Mask> LabeledFunction::preimage(std::uint8_t index) const {
  std::vector<Mask> out;
  for (std::uint64_t r = 0; r < table_.size(); ++r) {
    if (table_[r] == index) out.push_back(domain_.unrank(r));
  }
  return out;
}

bool operator==(const LabeledFunction& a, const LabeledFunction& b) {
  return a.domain_ == b.domain_ && a.alphabet_ == b.alphabet_ && a.table_ == b.table_;
}

}  // namespace slicebench
