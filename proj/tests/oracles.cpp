#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>

namespace oracle {

namespace {

struct Point {
  Mask x;
  int label;
};

std::vector<Point> points(const LabeledFunction& f) {
  std::vector<Point> out;
  for (Mask x : f.domain().members()) out.push_back({x, f.index_at(x)});
  return out;
}

int label_of(const std::vector<Point>& pts, Mask x) {
  for (const auto& p : pts) {
    if (p.x == x) return p.label;
  }
  return -1;
}

int minimax(const std::vector<Point>& s, int n) {
  bool constant = true;
  for (const auto& p : s) constant = constant && p.label == s.front().label;
  if (constant) return 0;
  int best = std::numeric_limits<int>::max();
  for (int i = 0; i < n; ++i) {
    std::vector<Point> side[2];
    for (const auto& p : s) side[(p.x >> i) & 1U].push_back(p);
    if (side[0].empty() || side[1].empty()) continue;
    best = std::min(best, 1 + std::max(minimax(side[0], n), minimax(side[1], n)));
  }
  return best;
}

bool fixes_label(const std::vector<Point>& pts, Mask x, Mask fixed, int label) {
  for (const auto& p : pts) {
    if (((p.x ^ x) & fixed) == 0 && p.label != label) return false;
  }
  return true;
}

int max_disjoint_pairs(const std::vector<std::pair<int, int>>& pairs, std::size_t from, Mask used) {
  int best = 0;
  for (std::size_t i = from; i < pairs.size(); ++i) {
    const Mask m = (Mask{1} << pairs[i].first) | (Mask{1} << pairs[i].second);
    if (used & m) continue;
    best = std::max(best, 1 + max_disjoint_pairs(pairs, i + 1, used | m));
  }
  return best;
}

// Either the lowest available position stays uncovered, or some sensitive
// block inside `avail` covers it.
int pack_blocks(const std::vector<Mask>& blocks, Mask avail) {
  if (avail == 0) return 0;
  const Mask low = avail & (~avail + 1);
  int best = pack_blocks(blocks, avail & ~low);
  for (Mask b : blocks) {
    if ((b & low) && (b & ~avail) == 0) best = std::max(best, 1 + pack_blocks(blocks, avail & ~b));
  }
  return best;
}

std::uint64_t power_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = power_mod(a[rank][c], p - 2, p);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::uint64_t factor = a[r][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) a[r][j] = (a[r][j] + p - factor * a[rank][j] % p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int plain_depth(const LabeledFunction& f) {
  const auto pts = points(f);
  return minimax(pts, f.n());
}

int brute_certificate(const LabeledFunction& f) {
  const auto pts = points(f);
  const int n = f.n();
  int worst = 0;
  for (const auto& p : pts) {
    int best = n;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      if (std::popcount(s) < best && fixes_label(pts, p.x, s, p.label)) best = std::popcount(s);
    }
    worst = std::max(worst, best);
  }
  return worst;
}

int brute_sensitivity(const LabeledFunction& f) {
  const auto pts = points(f);
  const int n = f.n();
  int worst = 0;
  for (const auto& p : pts) {
    if (f.domain().is_cube()) {
      int count = 0;
      for (int i = 0; i < n; ++i) count += label_of(pts, p.x ^ (Mask{1} << i)) != p.label;
      worst = std::max(worst, count);
      continue;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (((p.x >> i) & 1U) || !((p.x >> j) & 1U)) continue;
        const int other = label_of(pts, p.x ^ (Mask{1} << i) ^ (Mask{1} << j));
        if (other >= 0 && other != p.label) pairs.push_back({i, j});
      }
    }
    worst = std::max(worst, max_disjoint_pairs(pairs, 0, 0));
  }
  return worst;
}

int brute_block_sensitivity(const LabeledFunction& f, int max_block) {
  const auto pts = points(f);
  const int n = f.n();
  int worst = 0;
  for (const auto& p : pts) {
    std::vector<Mask> blocks;
    for (Mask b = 1; b < (Mask{1} << n); ++b) {
      if (std::popcount(b) > max_block) continue;
      const int other = label_of(pts, p.x ^ b);
      if (other >= 0 && other != p.label) blocks.push_back(b);
    }
    worst = std::max(worst, pack_blocks(blocks, (Mask{1} << n) - 1));
  }
  return worst;
}

int brute_balanced_certificate(const LabeledFunction& f, bool minimum) {
  const auto pts = points(f);
  const int n = f.n();
  int result = minimum ? n + 1 : -1;
  for (const auto& p : pts) {
    int best = n + 1;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      if (std::popcount(s & p.x) != std::popcount(s & ~p.x)) continue;
      if (std::popcount(s) < best && fixes_label(pts, p.x, s, p.label)) best = std::popcount(s);
    }
    result = minimum ? std::min(result, best) : std::max(result, best);
  }
  return result;
}

int mobius_degree(const LabeledFunction& f) {
  const int n = f.n();
  std::vector<long long> a(std::size_t{1} << n);
  for (Mask x = 0; x < a.size(); ++x) a[x] = f(x).value();
  for (int i = 0; i < n; ++i) {
    for (Mask x = 0; x < a.size(); ++x) {
      if ((x >> i) & 1U) a[x] -= a[x ^ (Mask{1} << i)];
    }
  }
  int d = 0;
  for (Mask x = 0; x < a.size(); ++x) {
    if (a[x] != 0) d = std::max(d, std::popcount(x));
  }
  return d;
}

int modp_degree(const LabeledFunction& f, std::uint64_t prime) {
  const auto pts = points(f);
  const int n = f.n();
  for (int d = 0; d <= n; ++d) {
    std::vector<Mask> monomials;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      if (std::popcount(s) <= d) monomials.push_back(s);
    }
    std::vector<std::vector<std::uint64_t>> a, augmented;
    for (const auto& p : pts) {
      std::vector<std::uint64_t> row;
      for (Mask s : monomials) row.push_back((p.x & s) == s ? 1 : 0);
      a.push_back(row);
      row.push_back(static_cast<std::uint64_t>(f.alphabet()[static_cast<std::size_t>(p.label)].value()));
      augmented.push_back(row);
    }
    if (rank_mod(a, prime) == rank_mod(augmented, prime)) return d;
  }
  return n;
}

int brute_monochromatic(const slicebench::SliceGraph& g) {
  const int n = g.n();
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool clique = true, independent = true;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!((s >> u) & 1U) || !((s >> v) & 1U)) continue;
        (g.has_edge(u, v) ? independent : clique) = false;
      }
    }
    if (clique || independent) best = std::max(best, std::popcount(s));
  }
  return best;
}

std::uint64_t brute_kml_count(int r) {
  const int n = 1 << r;
  std::uint64_t count = 0;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    if (std::popcount(x) != n / 2) continue;
    int acc = 0;
    for (int i = 0; i < n; ++i) {
      if ((x >> i) & 1U) acc ^= i;
    }
    count += acc == 0;
  }
  return count;
}

int brute_max_one_subcube(const LabeledFunction& f) {
  const auto pts = points(f);
  const int n = f.n();
  const int one = f.index_of(slicebench::Label::scalar(1));
  int best = 0;
  std::uint64_t cubes = 1;
  for (int i = 0; i < n; ++i) cubes *= 3;
  for (std::uint64_t code = 0; code < cubes; ++code) {
    Mask fixed = 0, values = 0;
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i, c /= 3) {
      if (c % 3 == 0) continue;
      fixed |= Mask{1} << i;
      if (c % 3 == 2) values |= Mask{1} << i;
    }
    int ones = 0;
    bool clean = true;
    for (const auto& p : pts) {
      if ((p.x & fixed) != values) continue;
      if (p.label != one) {
        clean = false;
        break;
      }
      ++ones;
    }
    if (clean) best = std::max(best, ones);
  }
  return best;
}

int brute_nonadaptive(const LabeledFunction& f) {
  const auto pts = points(f);
  const int n = f.n();
  int best = n;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (std::popcount(s) >= best) continue;
    std::map<Mask, int> seen;
    bool ok = true;
    for (const auto& p : pts) {
      auto [it, inserted] = seen.emplace(p.x & s, p.label);
      if (!inserted && it->second != p.label) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::popcount(s);
  }
  return best;
}

std::vector<Mask> weight_k_strings(int n, int k) {
  std::vector<Mask> out;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    if (std::popcount(x) == k) out.push_back(x);
  }
  return out;
}

}  // namespace oracle
