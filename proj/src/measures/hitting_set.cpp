#include "hitting_set.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace slicebench::detail {

std::vector<Mask> minimal_masks(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    const int pa = popcount(a);
    const int pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Mask> kept;
  for (Mask m : masks) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [m](Mask k) { return (k & m) == k; });
    if (!dominated) kept.push_back(m);
  }
  return kept;
}

namespace {

class HittingSearch {
 public:
  explicit HittingSearch(std::vector<Mask> sets) : sets_(std::move(sets)) {}

  bool run(int budget, Mask& out) { return dfs(0, 0, budget, out); }

  int disjoint_lower_bound(Mask chosen) const {
    Mask used = 0;
    int count = 0;
    for (Mask s : sets_) {
      if ((s & chosen) == 0 && (s & used) == 0) {
        used |= s;
        ++count;
      }
    }
    return count;
  }

 private:
  bool dfs(Mask chosen, Mask forbidden, int budget, Mask& out) {
    const Mask* first = nullptr;
    for (const Mask& s : sets_) {
      if ((s & chosen) == 0) {
        first = &s;
        break;
      }
    }
    if (first == nullptr) {
      out = chosen;
      return true;
    }
    if (budget == 0 || disjoint_lower_bound(chosen) > budget) return false;
    for (Mask rest = *first & ~forbidden; rest; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      if (dfs(chosen | bit, forbidden, budget - 1, out)) return true;
      forbidden |= bit;
    }
    return false;
  }

  std::vector<Mask> sets_;
};

}  // namespace

HittingSet min_hitting_set(std::vector<Mask> sets, Mask universe) {
  for (Mask& s : sets) {
    s &= universe;
    if (s == 0) throw std::logic_error("min_hitting_set: a set misses the universe");
  }
  sets = minimal_masks(std::move(sets));
  if (sets.empty()) return {};
  HittingSearch search(sets);
  for (int budget = search.disjoint_lower_bound(0); budget <= popcount(universe); ++budget) {
    Mask out = 0;
    if (search.run(budget, out)) return {popcount(out), out};
  }
  throw std::logic_error("min_hitting_set: no hitting set within the universe");
}

namespace {

class PackingSearch {
 public:
  explicit PackingSearch(const std::vector<Mask>& blocks) : blocks_(blocks) {}

  std::vector<Mask> run() {
    std::vector<int> all(blocks_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<int> chosen;
    dfs(all, chosen);
    std::vector<Mask> out;
    for (int i : best_) out.push_back(blocks_[static_cast<std::size_t>(i)]);
    return out;
  }

 private:
  void dfs(const std::vector<int>& candidates, std::vector<int>& chosen) {
    if (candidates.empty()) {
      if (chosen.size() > best_.size()) best_ = chosen;
      return;
    }
    Mask cover = 0;
    int min_size = 64;
    for (int i : candidates) {
      cover |= blocks_[i];
      min_size = std::min(min_size, popcount(blocks_[i]));
    }
    if (chosen.size() + static_cast<std::size_t>(popcount(cover) / min_size) <= best_.size()) return;

    const Mask p = cover & (~cover + 1);
    for (int i : candidates) {
      if ((blocks_[i] & p) == 0) continue;
      std::vector<int> next;
      for (int j : candidates) {
        if ((blocks_[j] & blocks_[i]) == 0) next.push_back(j);
      }
      chosen.push_back(i);
      dfs(next, chosen);
      chosen.pop_back();
    }
    std::vector<int> without;
    for (int j : candidates) {
      if ((blocks_[j] & p) == 0) without.push_back(j);
    }
    dfs(without, chosen);
  }

  const std::vector<Mask>& blocks_;
  std::vector<int> best_;
};

}  // namespace

std::vector<Mask> max_disjoint_family(const std::vector<Mask>& blocks) {
  return PackingSearch(blocks).run();
}

namespace {

class CoverSearch {
 public:
  CoverSearch(Mask universe, const std::vector<Mask>& candidates)
      : universe_(universe), candidates_(candidates) {
    for (int e = 0; e < 64; ++e) {
      if (!test_bit(universe, e)) continue;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (test_bit(candidates[i], e)) by_element_[e].push_back(static_cast<int>(i));
      }
    }
  }

  bool run(Mask covered) {
    if (covered == universe_) return true;
    int pick = -1;
    std::size_t fewest = SIZE_MAX;
    for (Mask rest = universe_ & ~covered; rest; rest &= rest - 1) {
      const int e = std::countr_zero(rest);
      std::size_t live = 0;
      for (int i : by_element_[e]) live += (candidates_[i] & covered) == 0;
      if (live < fewest) {
        fewest = live;
        pick = e;
        if (live == 0) return false;
      }
    }
    for (int i : by_element_[pick]) {
      if ((candidates_[i] & covered) != 0) continue;
      chosen_.push_back(i);
      if (run(covered | candidates_[i])) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<int> chosen_;

 private:
  Mask universe_;
  const std::vector<Mask>& candidates_;
  std::vector<int> by_element_[64];
};

}  // namespace

std::optional<std::vector<int>> exact_cover(Mask universe, const std::vector<Mask>& candidates) {
  for (Mask c : candidates) {
    if ((c & ~universe) != 0) throw std::logic_error("exact_cover: candidate outside the universe");
  }
  CoverSearch search(universe, candidates);
  if (!search.run(0)) return std::nullopt;
  return search.chosen_;
}

}  // namespace slicebench::detail
