#include "slicebench/sensitivity.hpp"

#include <algorithm>
#include <array>

#include "hitting_set.hpp"
#include "slicebench/errors.hpp"

namespace slicebench {

namespace {

class Matching {
 public:
  explicit Matching(const std::vector<Mask>& adjacency) : adjacency_(adjacency) {
    match_right_.fill(-1);
  }

  int run() {
    int size = 0;
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
      visited_ = 0;
      size += augment(static_cast<int>(u));
    }
    return size;
  }

  int partner_of_right(int v) const { return match_right_[v]; }

 private:
  bool augment(int u) {
    for (Mask rest = adjacency_[u] & ~visited_; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (test_bit(visited_, v)) continue;
      visited_ |= Mask{1} << v;
      if (match_right_[v] < 0 || augment(match_right_[v])) {
        match_right_[v] = u;
        return true;
      }
    }
    return false;
  }

  const std::vector<Mask>& adjacency_;
  std::array<int, 64> match_right_{};
  Mask visited_ = 0;
};

SensitivityResult sensitivity_at(const LabeledFunction& f, Mask x) {
  const Domain& d = f.domain();
  const int n = f.n();
  const std::uint8_t label = f.index_at(x);
  SensitivityResult out;
  out.input = x;
  if (d.is_cube()) {
    for (int i = 0; i < n; ++i) {
      if (f.index_at(x ^ (Mask{1} << i)) != label) out.pairs.emplace_back(i, -1);
    }
    out.value = static_cast<int>(out.pairs.size());
    return out;
  }
  if (!d.is_slice()) throw DomainError("sensitivity is defined on slices and the cube");
  const auto zeros = positions_of(low_bits(n) & ~x);
  std::vector<Mask> adjacency(zeros.size(), 0);
  for (std::size_t a = 0; a < zeros.size(); ++a) {
    for (Mask ones = x; ones; ones &= ones - 1) {
      const int j = std::countr_zero(ones);
      const Mask y = x ^ (Mask{1} << zeros[a]) ^ (Mask{1} << j);
      if (f.index_at(y) != label) adjacency[a] |= Mask{1} << j;
    }
  }
  Matching m(adjacency);
  out.value = m.run();
  for (int j = 0; j < n; ++j) {
    if (test_bit(x, j) && m.partner_of_right(j) >= 0) {
      out.pairs.emplace_back(zeros[static_cast<std::size_t>(m.partner_of_right(j))], j);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

BlockSensitivityResult block_sensitivity_at(const LabeledFunction& f,
                                            const std::vector<Mask>& members, std::uint64_t r,
                                            const BlockSensitivityOptions& options) {
  const Mask x = members[r];
  const std::uint8_t label = f.index_at_rank(r);
  std::vector<Mask> blocks;
  for (std::uint64_t q = 0; q < members.size(); ++q) {
    if (f.index_at_rank(q) == label) continue;
    const Mask b = members[q] ^ x;
    if (options.max_block && popcount(b) > *options.max_block) continue;
    blocks.push_back(b);
  }
  blocks = detail::minimal_masks(std::move(blocks));
  if (blocks.size() > options.max_blocks) {
    throw ResourceError("block sensitivity: " + std::to_string(blocks.size()) +
                        " minimal blocks exceed the cap of " + std::to_string(options.max_blocks));
  }
  BlockSensitivityResult out;
  out.input = x;
  out.blocks = detail::max_disjoint_family(blocks);
  out.value = static_cast<int>(out.blocks.size());
  return out;
}

}  // namespace

SensitivityResult sensitivity(const LabeledFunction& f, std::optional<Mask> x) {
  const Domain& d = f.domain();
  if (x) {
    if (!d.contains(*x)) throw DomainError("sensitivity: input is not a domain member");
    return sensitivity_at(f, *x);
  }
  SensitivityResult best;
  best.value = -1;
  for (std::uint64_t r = 0; r < d.size(); ++r) {
    auto s = sensitivity_at(f, d.unrank(r));
    if (s.value > best.value) best = std::move(s);
  }
  return best;
}

BlockSensitivityResult block_sensitivity(const LabeledFunction& f, std::optional<Mask> x,
                                         const BlockSensitivityOptions& options) {
  const Domain& d = f.domain();
  const auto members = d.members();
  if (x) return block_sensitivity_at(f, members, d.rank(*x), options);
  BlockSensitivityResult best;
  best.value = -1;
  for (std::uint64_t r = 0; r < members.size(); ++r) {
    auto b = block_sensitivity_at(f, members, r, options);
    if (b.value > best.value) best = std::move(b);
  }
  return best;
}

}  // namespace slicebench
