#include "slicebench/certificates.hpp"

#include <map>

#include "hitting_set.hpp"
#include "slicebench/errors.hpp"

namespace slicebench {

namespace {

constexpr std::uint64_t kMaxCandidateChecks = 4'000'000;

// x XOR y for every member y whose label differs from x's.
std::vector<Mask> differing(const LabeledFunction& f, const std::vector<Mask>& members,
                            std::uint64_t rank_x) {
  const Mask x = members[rank_x];
  const std::uint8_t label = f.index_at_rank(rank_x);
  std::vector<Mask> out;
  for (std::uint64_t r = 0; r < members.size(); ++r) {
    if (f.index_at_rank(r) != label) out.push_back(members[r] ^ x);
  }
  return out;
}

CertificateResult certificate_at(const LabeledFunction& f, const std::vector<Mask>& members,
                                 std::uint64_t rank_x) {
  const Mask x = members[rank_x];
  const auto hs = detail::min_hitting_set(differing(f, members, rank_x), low_bits(f.n()));
  return {hs.size, x, Assignment::of_input(f.n(), x, hs.set)};
}

void require_boolean(const LabeledFunction& f, const char* what) {
  if (!f.is_boolean()) throw DomainError(std::string(what) + " requires a Boolean function");
}

// Enumerates the t-subsets of `pool` in colex order of their compact index.
template <typename Visit>
bool for_each_subset(Mask pool, int t, Visit&& visit) {
  const auto positions = positions_of(pool);
  const int v = static_cast<int>(positions.size());
  if (t > v) return true;
  if (t == 0) return visit(Mask{0});
  const Mask last = low_bits(v) & ~low_bits(v - t);
  for (Mask c = low_bits(t);; c = next_same_popcount(c)) {
    if (!visit(deposit(c, positions))) return false;
    if (c == last) return true;
  }
}

Mask varying_positions(const std::vector<Mask>& members) {
  Mask v = 0;
  for (Mask x : members) v |= x ^ members[0];
  return v;
}

struct CellCandidate {
  Mask covered = 0;
  Assignment cell;
};

PartitionResult partition_search(Mask universe, std::vector<CellCandidate> cells, int s) {
  std::vector<Mask> masks;
  for (const auto& c : cells) masks.push_back(c.covered);
  const auto cover = detail::exact_cover(universe, masks);
  PartitionResult out;
  if (!cover) {
    out.value = -1;
    return out;
  }
  out.value = s;
  for (int i : *cover) out.cells.push_back(cells[static_cast<std::size_t>(i)].cell);
  return out;
}

}  // namespace

bool is_certificate(const LabeledFunction& f, const Assignment& a, std::uint8_t label) {
  const Domain& d = f.domain();
  bool any = false;
  for (std::uint64_t r = 0; r < d.size(); ++r) {
    if (!a.consistent_with(d.unrank(r))) continue;
    if (f.index_at_rank(r) != label) return false;
    any = true;
  }
  return any;
}

CertificateResult certificate_complexity(const LabeledFunction& f, std::optional<Mask> x) {
  const auto members = f.domain().members();
  if (x) return certificate_at(f, members, f.domain().rank(*x));
  CertificateResult best;
  best.value = -1;
  for (std::uint64_t r = 0; r < members.size(); ++r) {
    auto c = certificate_at(f, members, r);
    if (c.value > best.value) best = std::move(c);
  }
  return best;
}

PartitionResult unambiguous_certificate_complexity(const LabeledFunction& f) {
  require_boolean(f, "unambiguous certificate complexity");
  const Domain& d = f.domain();
  if (d.size() > 64) throw ResourceError("unambiguous certificate complexity: domain size > 64");
  const auto members = d.members();
  const Mask universe = low_bits(static_cast<int>(members.size()));
  const Mask pool = varying_positions(members);
  std::uint64_t checks = 0;
  for (int s = 0; s <= popcount(pool); ++s) {
    // Smallest assignment per covered member set; the cover search only
    // needs one certificate per distinct set.
    std::map<Mask, Assignment> by_cover;
    for (std::size_t r = 0; r < members.size(); ++r) {
      const Mask x = members[r];
      for (int t = 0; t <= s; ++t) {
        for_each_subset(pool, t, [&](Mask positions) {
          if (++checks > kMaxCandidateChecks) {
            throw ResourceError("unambiguous certificate complexity: candidate cap exceeded");
          }
          const Assignment a = Assignment::of_input(f.n(), x, positions);
          Mask covered = 0;
          for (std::size_t q = 0; q < members.size(); ++q) {
            if (!a.consistent_with(members[q])) continue;
            if (f.index_at_rank(q) != f.index_at_rank(r)) return true;
            covered |= Mask{1} << q;
          }
          by_cover.try_emplace(covered, a);
          return true;
        });
      }
    }
    std::vector<CellCandidate> cells;
    for (const auto& [covered, a] : by_cover) cells.push_back({covered, a});
    auto result = partition_search(universe, std::move(cells), s);
    if (result.value >= 0) return result;
  }
  throw std::logic_error("unambiguous certificate complexity: no partition found");
}

PartitionResult subcube_partition_complexity(const LabeledFunction& f) {
  require_boolean(f, "subcube partition complexity");
  const int n = f.n();
  if (n > 6) throw ResourceError("subcube partition complexity: n = " + std::to_string(n) + " > 6");
  const Domain& d = f.domain();
  const int points = 1 << n;
  const Mask universe = low_bits(points);
  for (int s = 0; s <= n; ++s) {
    std::vector<CellCandidate> cells;
    for (int t = 0; t <= s; ++t) {
      for_each_subset(low_bits(n), t, [&](Mask fixed) {
        for (Mask ones = fixed;; ones = (ones - 1) & fixed) {
          const Assignment a(n, fixed & ~ones, ones);
          Mask covered = 0;
          int label = -1;
          bool constant = true;
          for (int p = 0; p < points && constant; ++p) {
            if (!a.consistent_with(static_cast<Mask>(p))) continue;
            covered |= Mask{1} << p;
            if (!d.contains(static_cast<Mask>(p))) continue;
            const int l = f.index_at(static_cast<Mask>(p));
            if (label >= 0 && l != label) constant = false;
            label = l;
          }
          if (constant) cells.push_back({covered, a});
          if (ones == 0) break;
        }
        return true;
      });
    }
    auto result = partition_search(universe, std::move(cells), s);
    if (result.value >= 0) return result;
  }
  throw std::logic_error("subcube partition complexity: no partition found");
}

CertificateResult balanced_certificate(const LabeledFunction& f, BalancedMode mode,
                                       std::optional<Mask> x) {
  const Domain& d = f.domain();
  if (!d.is_balanced_slice()) throw DomainError("balanced certificates require slice(2k, k)");
  const auto members = d.members();
  const int k = d.k();

  auto at = [&](std::uint64_t r) {
    const Mask input = members[r];
    const auto diffs = differing(f, members, r);
    const Mask zero_pool = low_bits(d.n()) & ~input;
    CertificateResult found;
    for (int t = 0; t <= k; ++t) {
      bool done = false;
      for_each_subset(zero_pool, t, [&](Mask zeros) {
        return for_each_subset(input, t, [&](Mask ones) {
          const Mask fixed = zeros | ones;
          for (Mask diff : diffs) {
            if ((diff & fixed) == 0) return true;
          }
          found = {2 * t, input, Assignment(d.n(), zeros, ones)};
          done = true;
          return false;
        });
      });
      if (done) return found;
    }
    throw std::logic_error("balanced certificate: full assignment failed");
  };

  if (mode == BalancedMode::at_input) {
    if (!x) throw DomainError("balanced certificate at an input needs the input");
    return at(d.rank(*x));
  }
  CertificateResult best = at(0);
  for (std::uint64_t r = 1; r < members.size(); ++r) {
    auto c = at(r);
    const bool better = mode == BalancedMode::max ? c.value > best.value : c.value < best.value;
    if (better) best = std::move(c);
  }
  return best;
}

}  // namespace slicebench
