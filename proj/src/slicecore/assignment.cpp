#include "slicebench/assignment.hpp"

#include "slicebench/errors.hpp"

namespace slicebench {

Assignment::Assignment(int n, Mask zeros, Mask ones) : n_(n), zeros_(zeros), ones_(ones) {
  if (n < 0 || n > 64) throw DomainError("assignment length out of range");
  if (zeros & ones) throw DomainError("assignment fixes a position to both 0 and 1");
  if ((zeros | ones) & ~low_bits(n)) throw DomainError("assignment position outside [n]");
}

Assignment Assignment::of_input(int n, Mask x, Mask positions) {
  return Assignment(n, positions & ~x, positions & x);
}

Assignment Assignment::parse(std::string_view s) {
  if (s.size() > 64) throw InputError("assignment longer than 64");
  Mask zeros = 0;
  Mask ones = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case '0': zeros |= Mask{1} << i; break;
      case '1': ones |= Mask{1} << i; break;
      case '*': break;
      default: throw InputError("invalid assignment character in " + std::string(s));
    }
  }
  return Assignment(static_cast<int>(s.size()), zeros, ones);
}

Assignment Assignment::merged(const Assignment& other) const {
  if (!compatible(other) || n_ != other.n_) throw DomainError("merging incompatible assignments");
  return Assignment(n_, zeros_ | other.zeros_, ones_ | other.ones_);
}

Assignment Assignment::with(int i, int bit) const {
  const Mask m = Mask{1} << i;
  return bit ? Assignment(n_, zeros_, ones_ | m) : Assignment(n_, zeros_ | m, ones_);
}

std::string Assignment::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '*');
  for (int i = 0; i < n_; ++i) {
    if (test_bit(zeros_, i)) s[static_cast<std::size_t>(i)] = '0';
    if (test_bit(ones_, i)) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

std::vector<Mask> consistent_members(const Domain& d, const Assignment& a) {
  std::vector<Mask> out;
  for (Mask x : d.members()) {
    if (a.consistent_with(x)) out.push_back(x);
  }
  return out;
}

Restriction restrict(const LabeledFunction& f, const Assignment& a) {
  const Domain& d = f.domain();
  if (a.n() != d.n()) throw DomainError("assignment length differs from the domain's n");
  const std::vector<int> free_positions = positions_of(a.free());
  const int residual_n = static_cast<int>(free_positions.size());

  std::vector<Mask> residual_members;
  Domain residual = Domain::cube(0);
  switch (d.kind()) {
    case DomainKind::slice: {
      const int residual_k = d.k() - popcount(a.ones());
      if (residual_k < 0 || residual_k > residual_n) {
        throw EmptyRestrictionError("assignment " + a.to_string() + " is inconsistent with " +
                                    d.describe());
      }
      if (residual_k == 0 || residual_k == residual_n) {
        residual = Domain::explicit_set(residual_n, {low_bits(residual_k)});
      } else {
        residual = Domain::slice(residual_n, residual_k);
      }
      break;
    }
    case DomainKind::cube:
      residual = Domain::cube(residual_n);
      break;
    case DomainKind::explicit_set: {
      for (Mask x : d.explicit_members()) {
        if (a.consistent_with(x)) residual_members.push_back(extract(x, free_positions));
      }
      if (residual_members.empty()) {
        throw EmptyRestrictionError("assignment " + a.to_string() + " is inconsistent with " +
                                    d.describe());
      }
      residual = Domain::explicit_set(residual_n, residual_members);
      break;
    }
  }

  std::vector<std::uint8_t> table;
  table.reserve(residual.size());
  for (Mask y : residual.members()) table.push_back(f.index_at(a.ones() | deposit(y, free_positions)));
  return Restriction{LabeledFunction(residual, f.alphabet(), std::move(table)), free_positions};
}

LabeledFunction complement_domain(const LabeledFunction& f) {
  const Domain& d = f.domain();
  if (!d.is_slice()) throw DomainError("complement_domain requires a slice domain");
  const Domain target = Domain::slice(d.n(), d.n() - d.k());
  const Mask all = low_bits(d.n());
  std::vector<std::uint8_t> table;
  table.reserve(target.size());
  for (Mask x : target.members()) table.push_back(f.index_at(~x & all));
  return LabeledFunction(target, f.alphabet(), std::move(table));
}

}  // namespace slicebench
