#include "slicebench/domain.hpp"

#include <unordered_set>

#include "slicebench/binomial.hpp"
#include "slicebench/errors.hpp"

namespace slicebench {

Domain::Domain(int n, DomainKind kind, int k, std::uint64_t size,
               std::shared_ptr<const ExplicitData> data)
    : n_(n), kind_(kind), k_(k), size_(size), explicit_(std::move(data)) {}

Domain Domain::slice(int n, int k) {
  if (n < 2 || n > 64) throw DomainError("slice: n must be in [2, 64], got " + std::to_string(n));
  if (k < 1 || k > n - 1) {
    throw DomainError("slice: k must be in [1, n-1], got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  return Domain(n, DomainKind::slice, k, binomial(n, k), nullptr);
}

Domain Domain::cube(int n) {
  if (n < 0 || n > 62) throw DomainError("cube: n must be in [0, 62], got " + std::to_string(n));
  return Domain(n, DomainKind::cube, 0, std::uint64_t{1} << n, nullptr);
}

Domain Domain::explicit_set(int n, std::vector<Mask> members) {
  if (n < 0 || n > 64) throw DomainError("explicit domain: n must be in [0, 64]");
  if (members.empty()) throw DomainError("explicit domain must have at least one member");
  auto data = std::make_shared<ExplicitData>();
  data->index.reserve(members.size());
  const Mask outside = ~low_bits(n);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] & outside) throw DomainError("explicit domain member longer than n");
    if (!data->index.emplace(members[i], i).second) {
      throw DomainError("explicit domain members must be distinct");
    }
  }
  const auto size = static_cast<std::uint64_t>(members.size());
  data->members = std::move(members);
  return Domain(n, DomainKind::explicit_set, 0, size, std::move(data));
}

int Domain::k() const {
  if (kind_ != DomainKind::slice) throw DomainError("k() requested on a non-slice domain");
  return k_;
}

bool Domain::contains(Mask x) const {
  if (x & ~low_bits(n_)) return false;
  switch (kind_) {
    case DomainKind::slice:
      return popcount(x) == k_;
    case DomainKind::cube:
      return true;
    case DomainKind::explicit_set:
      return explicit_->index.contains(x);
  }
  return false;
}

std::uint64_t Domain::rank(Mask x) const {
  if (!contains(x)) {
    throw DomainError("string " + to_bitstring(x, n_) + " is not a member of " + describe());
  }
  switch (kind_) {
    case DomainKind::slice: {
      std::uint64_t r = 0;
      int i = 1;
      for (Mask m = x; m; m &= m - 1, ++i) r += binomial(std::countr_zero(m), i);
      return r;
    }
    case DomainKind::cube:
      return x;
    case DomainKind::explicit_set:
      return explicit_->index.at(x);
  }
  return 0;
}

Mask Domain::unrank(std::uint64_t r) const {
  if (r >= size_) throw DomainError("rank out of range for " + describe());
  switch (kind_) {
    case DomainKind::slice: {
      Mask x = 0;
      int c = n_ - 1;
      for (int i = k_; i >= 1; --i) {
        while (binomial(c, i) > r) --c;
        r -= binomial(c, i);
        x |= Mask{1} << c;
        --c;
      }
      return x;
    }
    case DomainKind::cube:
      return r;
    case DomainKind::explicit_set:
      return explicit_->members[r];
  }
  return 0;
}

std::vector<Mask> Domain::members() const {
  std::vector<Mask> out;
  out.reserve(size_);
  switch (kind_) {
    case DomainKind::slice: {
      Mask x = low_bits(k_);
      for (std::uint64_t i = 0; i < size_; ++i) {
        out.push_back(x);
        if (i + 1 < size_) x = next_same_popcount(x);
      }
      break;
    }
    case DomainKind::cube:
      for (std::uint64_t i = 0; i < size_; ++i) out.push_back(i);
      break;
    case DomainKind::explicit_set:
      out = explicit_->members;
      break;
  }
  return out;
}

const std::vector<Mask>& Domain::explicit_members() const {
  if (kind_ != DomainKind::explicit_set) throw DomainError("not an explicit domain");
  return explicit_->members;
}

std::string Domain::describe() const {
  switch (kind_) {
    case DomainKind::slice:
      return "slice(" + std::to_string(n_) + "," + std::to_string(k_) + ")";
    case DomainKind::cube:
      return "cube(" + std::to_string(n_) + ")";
    case DomainKind::explicit_set:
      return "explicit(n=" + std::to_string(n_) + ", size=" + std::to_string(size_) + ")";
  }
  return "?";
}

bool operator==(const Domain& a, const Domain& b) {
  if (a.n_ != b.n_ || a.kind_ != b.kind_ || a.k_ != b.k_ || a.size_ != b.size_) return false;
  if (a.kind_ != DomainKind::explicit_set) return true;
  return a.explicit_ == b.explicit_ || a.explicit_->members == b.explicit_->members;
}

}  // namespace slicebench
