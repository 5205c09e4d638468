// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Derived values are checked against the naive oracles in
// oracles.hpp rather than against the engines that produced them.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "slicebench/adversary.hpp"
#include "slicebench/binomial.hpp"
#include "slicebench/catalog.hpp"
#include "slicebench/certificates.hpp"
#include "slicebench/degree.hpp"
#include "slicebench/depth.hpp"
#include "slicebench/monochromatic.hpp"
#include "slicebench/packing.hpp"
#include "slicebench/sensitivity.hpp"

using namespace slicebench;

namespace {

// Collects the first few failure messages of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) failures_ += (failed_ > 1 ? "; " : "") + what;
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : ", ") + text; }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << (total_ - failed_) << "/" << total_ << " checks";
    if (!notes_.empty()) out << "; " << notes_;
    if (failed_) out << "; failures: " << failures_;
    return out.str();
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::string failures_;
  std::string notes_;
};

std::string str(int v) { return std::to_string(v); }

LabeledFunction from_bits(const Domain& d, std::uint64_t bits) {
  std::vector<std::uint8_t> table(d.size());
  for (std::size_t j = 0; j < table.size(); ++j) table[j] = (bits >> j) & 1U;
  return LabeledFunction::boolean(d, table);
}

SliceGraph graph_from_index(int n, std::uint64_t index) {
  SliceGraph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((index >> bit) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

// True when every member consistent with (zeros, ones) carries one label.
bool determined(const LabeledFunction& f, Mask zeros, Mask ones) {
  int label = -1;
  for (Mask x : f.domain().members()) {
    if ((x & zeros) || (x & ones) != ones) continue;
    if (label >= 0 && label != f.index_at(x)) return false;
    label = f.index_at(x);
  }
  return label >= 0;
}

// Naive game-tree check: can some query sequence of at most `budget`
// queries determine f against the adversary? No memo.
bool determinable_within(const LabeledFunction& f, const AdversaryPlayer& adv, Mask zeros, Mask ones,
                         int budget) {
  if (determined(f, zeros, ones)) return true;
  if (budget == 0) return false;
  for (int i = 0; i < f.n(); ++i) {
    if (((zeros | ones) >> i) & 1U) continue;
    auto copy = adv.clone();
    const int bit = copy->answer(i);
    const Mask z = bit ? zeros : zeros | (Mask{1} << i);
    const Mask o = bit ? ones | (Mask{1} << i) : ones;
    if (determinable_within(f, *copy, z, o, budget - 1)) return true;
  }
  return false;
}

bool forces_at_least(const LabeledFunction& f, const AdversaryPlayer& adv, int queries) {
  return !determinable_within(f, adv, 0, 0, queries - 1);
}

// ---- criteria ----

void eq_depth(Check& c) {
  for (int k = 1; k <= 3; ++k) {
    const auto r = exact_depth(make_eq(k));
    c.expect(r.depth == 3 * k - 1, "D(EQ k=" + str(k) + ") = " + str(r.depth));
    c.expect(r.tree.computes(make_eq(k)) && r.tree.depth() == r.depth, "tree witness k=" + str(k));
    c.note("k=" + str(k) + ":" + str(r.depth));
  }
  c.expect(oracle::plain_depth(make_eq(1)) == 2, "plain minimax on EQ k=1");
}

void measure_chain(Check& c) {
  auto chain = [&](const LabeledFunction& f, const std::string& tag, bool partitions) {
    const int n = f.n();
    const int s = sensitivity(f).value;
    const int bs = block_sensitivity(f).value;
    const int cc = certificate_complexity(f).value;
    const int d = exact_depth(f).depth;
    const int deg = degree(f).value;
    const int mbc = balanced_certificate(f, BalancedMode::min).value;
    c.expect(s <= bs && bs <= cc && cc <= d && d <= std::max(0, n - 2), tag + " chain");
    c.expect(deg <= d && d <= 4 * cc * cc && d >= mbc - 1, tag + " deg/C/mBC bounds");
    if (partitions) {
      c.expect(unambiguous_certificate_complexity(f).value <= subcube_partition_complexity(f).value,
               tag + " UC <= SC");
      c.expect(s == oracle::brute_sensitivity(f), tag + " s vs oracle");
      c.expect(bs == oracle::brute_block_sensitivity(f), tag + " bs vs oracle");
      c.expect(cc == oracle::brute_certificate(f), tag + " C vs oracle");
      c.expect(d == oracle::plain_depth(f), tag + " D vs oracle");
      c.expect(deg == oracle::modp_degree(f, 1000000007), tag + " deg vs oracle");
      c.expect(mbc == oracle::brute_balanced_certificate(f, true), tag + " mBC vs oracle");
    }
  };
  const Domain small = Domain::slice(4, 2);
  for (std::uint64_t bits = 0; bits < 64; ++bits) chain(from_bits(small, bits), "slice4-2 #" + str(int(bits)), true);
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    chain(random_slice_function(6, 3, seed), "slice6-3 seed " + std::to_string(seed), false);
  }
  c.note("64 exhaustive + 500 seeded");
}

void weight1(Check& c) {
  // Exhaustive through n = 10, past the required n <= 8.
  for (int n = 2; n <= 10; ++n) {
    const Domain d = Domain::slice(n, 1);
    int worst = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      worst = std::max(worst, exact_depth(from_bits(d, bits)).depth);
    }
    c.expect(worst <= n / 2, "exhaustive n=" + str(n) + " max D " + str(worst));
  }
  for (int n = 2; n <= 10; ++n) {
    const auto f = or_first_half(n);
    c.expect(exact_depth(f).depth == n / 2, "OR-of-first-half n=" + str(n));
    if (n <= 6) c.expect(oracle::plain_depth(f) == n / 2, "OR-of-first-half oracle n=" + str(n));
  }
}

void weight2(Check& c) {
  const int n = 5;
  int tight_low = 0;
  for (std::uint64_t i = 0; i < 1024; ++i) {
    const auto g = graph_from_index(n, i);
    const auto f = from_graph(g);
    const int m = monochromatic_number(g).value;
    const int d = exact_depth(f).depth;
    c.expect(m == oracle::brute_monochromatic(g), "m(G) vs oracle for graph " + std::to_string(i));
    c.expect(n - m <= d && 2 * d <= 2 * n - m, "sandwich for graph " + std::to_string(i));
    tight_low += d == n - m;
  }
  c.note(str(tight_low) + " graphs meet the lower end");
}

void johnson(Check& c) {
  for (int n = 2; n <= 14; ++n) {
    for (int k = 1; k <= n / 2; ++k) {
      std::set<Mask> seen;
      std::uint64_t largest = 0;
      bool disjoint = true;
      for (int idx = 0; idx < n; ++idx) {
        const auto cls = graham_sloane_class(n, k, idx).preimage(1);
        largest = std::max<std::uint64_t>(largest, cls.size());
        for (std::size_t a = 0; a < cls.size(); ++a) {
          disjoint = seen.insert(cls[a]).second && disjoint;
          for (std::size_t b = a + 1; b < cls.size(); ++b) {
            if (std::popcount(cls[a] ^ cls[b]) == 2) {
              c.expect(false, "adjacent pair in class n=" + str(n) + " k=" + str(k));
            }
          }
        }
        c.expect(johnson_independent(cls), "library independence n=" + str(n) + " k=" + str(k));
      }
      const std::string tag = "n=" + str(n) + " k=" + str(k);
      c.expect(disjoint && seen.size() == oracle::weight_k_strings(n, k).size(), tag + " partition");
      c.expect(largest * static_cast<std::uint64_t>(n) >= binomial(n, k), tag + " largest class");
    }
  }
  const std::uint64_t expected[] = {0, 0, 0, 14, 870};
  for (int r = 3; r <= 4; ++r) {
    const auto brute = oracle::brute_kml_count(r);
    c.expect(brute == expected[r], "brute KML r=" + str(r));
    c.expect(kml_formula(r) == expected[r], "formula KML r=" + str(r));
    c.expect(kml_set(r).preimage(1).size() == expected[r], "constructed KML r=" + str(r));
    c.note("KML r=" + str(r) + ":" + std::to_string(brute));
  }
}

void ed(Check& c) {
  const auto f = make_ed(4, 2);
  const int one = f.index_of(Label::scalar(1));
  const auto ones = f.preimage(static_cast<std::uint8_t>(one));
  c.expect(ones.size() == 24, "|ED^-1(1)| = " + std::to_string(ones.size()));
  // Smallest subcube spanned by each pair: fix the agreeing positions.
  std::uint64_t pair_max = 1;
  for (std::size_t a = 0; a < ones.size(); ++a) {
    for (std::size_t b = a + 1; b < ones.size(); ++b) {
      const Mask agree = low_bits(f.n()) & ~(ones[a] ^ ones[b]);
      bool clean = true;
      std::uint64_t inside = 0;
      for (Mask x : f.domain().members()) {
        if (((x ^ ones[a]) & agree) != 0) continue;
        if (f.index_at(x) != one) clean = false;
        ++inside;
      }
      if (clean) pair_max = std::max(pair_max, inside);
    }
  }
  const auto packing = packing_lower_bound(f);
  c.expect(pair_max == 2, "pairwise max 1-subcube = " + std::to_string(pair_max));
  c.expect(oracle::brute_max_one_subcube(f) == 2, "3^n subcube oracle");
  c.expect(packing.max_intersection == 2, "packing max_intersection");
  const int na = nonadaptive_depth(f).size;
  c.expect(na == 7 && oracle::brute_nonadaptive(f) == 7, "nonadaptive depth " + str(na));
  const int d = exact_depth(f).depth;
  c.expect(packing.value == 4 && packing.value <= d, "packing bound " + str(packing.value));
  c.note("D=" + str(d) + " conjectured 7 (reported only)");
}

void lift_preservation(Check& c) {
  auto check = [&](const LabeledFunction& g, const std::string& tag, bool oracles) {
    const auto f = lift(g);
    const int dg = exact_depth(g).depth, df = exact_depth(f).depth;
    const int cg = certificate_complexity(g).value, cf = certificate_complexity(f).value;
    const int bg = block_sensitivity(g).value, bf = block_sensitivity(f).value;
    const int degg = degree(g).value, degf = degree(f).value;
    const int sg = sensitivity(g).value, sf = sensitivity(f).value;
    BlockSensitivityOptions two;
    two.max_block = 2;
    const int bs2 = block_sensitivity(g, std::nullopt, two).value;
    c.expect(dg == df && cg == cf && bg == bf && degg == degf, tag + " preserved measures");
    c.expect(sg <= sf && sf <= bs2 && bs2 <= 2 * sg * sg, tag + " sensitivity sandwich");
    if (oracles) {
      c.expect(dg == oracle::plain_depth(g) && df == oracle::plain_depth(f), tag + " D vs oracle");
      c.expect(degg == oracle::mobius_degree(g), tag + " deg(g) vs Moebius");
      c.expect(degf == oracle::modp_degree(f, 1000000007), tag + " deg(f_g) vs oracle");
      c.expect(cf == oracle::brute_certificate(f), tag + " C(f_g) vs oracle");
      c.expect(bf == oracle::brute_block_sensitivity(f), tag + " bs(f_g) vs oracle");
      c.expect(sf == oracle::brute_sensitivity(f), tag + " s(f_g) vs oracle");
      c.expect(bs2 == oracle::brute_block_sensitivity(g, 2), tag + " bs_2(g) vs oracle");
    }
  };
  for (std::uint64_t bits = 0; bits < 256; ++bits) {
    check(from_bits(Domain::cube(3), bits), "cube3 #" + std::to_string(bits), true);
  }
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    check(random_cube_function(4, seed), "cube4 seed " + std::to_string(seed), false);
  }
}

void rubinstein(Check& c) {
  const int n = 16;
  const auto variant = rubinstein_variant(n);
  int s_direct = 0;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    int flips = 0;
    for (int i = 0; i < n; ++i) flips += variant.index_at(x) != variant.index_at(x ^ (Mask{1} << i));
    s_direct = std::max(s_direct, flips);
  }
  c.expect(sensitivity(variant).value == 4 && s_direct == 4, "s(variant) = " + str(s_direct));
  const auto f = slice_of_cube_function(rubinstein_original(n), n / 2);
  const Mask witness = low_bits(n) & ~low_bits(n / 2);
  const int bs = block_sensitivity(f, witness).value;
  c.expect(bs >= 4, "bs at witness " + to_bitstring(witness, n) + " = " + str(bs));
  int s0 = 0, s1 = 0;
  for (Mask x : f.domain().members()) {
    // Direct transposition count, then the library's disjoint maximum.
    int pairs = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!((x >> i) & 1U) && ((x >> j) & 1U)) {
          pairs += f.index_at(x ^ (Mask{1} << i) ^ (Mask{1} << j)) != f.index_at(x);
        }
      }
    }
    const int s = sensitivity(f, x).value;
    c.expect(s <= pairs, "per-input s exceeds sensitive pairs");
    (f.index_at(x) ? s1 : s0) = std::max(f.index_at(x) ? s1 : s0, s);
  }
  const int s = std::max(s0, s1);
  c.expect(s0 <= 8 && s1 <= 4, "s0=" + str(s0) + " s1=" + str(s1));
  c.expect(16 * bs >= s * s, "bs >= s^2/16");
  c.note("s0=" + str(s0) + " s1=" + str(s1) + " bs(witness)=" + str(bs));
}

void weights_exact(Check& c) {
  struct Case {
    int n, m, k, expected;
  };
  const std::vector<Case> cases = {{4, 2, 2, 5}, {5, 2, 2, 6}, {4, 2, 3, 6}, {4, 2, 4, 6}};
  for (const auto& w : cases) {
    const int d = exact_depth(weights_task(w.n, w.m, w.k)).depth;
    c.expect(d == w.expected, "D(Weights " + str(w.n) + "," + str(w.m) + "," + str(w.k) + ") = " + str(d));
  }
  for (int m = 2; m <= 5; ++m) {
    for (int k = 2; k <= m; ++k) {
      const auto f = weights_task(2, m, k);
      const int d = exact_depth(f).depth;
      c.expect(d == m, "D(Weights 2," + str(m) + "," + str(k) + ") = " + str(d));
      if (m <= 3) c.expect(oracle::plain_depth(f) == m, "oracle Weights 2," + str(m) + "," + str(k));
    }
  }
  for (int n = 2; n <= 10; ++n) {
    for (int m = 1; n * m <= 10; ++m) {
      for (int k = 0; 2 * k <= n * m; ++k) {
        const auto f = weights_task(n, m, k);
        const auto a = worst_case_queries(*weights_algorithm_a(n, m, k), f);
        const auto b = worst_case_queries(*weights_algorithm_b(n, m, k), f);
        const int total = n * m;
        const std::string tag = "n=" + str(n) + " m=" + str(m) + " k=" + str(k);
        c.expect(a && *a == (n - 1) * m, tag + " algorithm A");
        c.expect(b && *b <= total - (n + m - 1) / m, tag + " algorithm B");
        if (a && b) {
          const double rest = total - std::min(*a, *b);
          c.expect(rest * rest * rest >= total, tag + " min(A, B) <= N - N^(1/3)");
        }
      }
    }
  }
}

void adversaries(Check& c) {
  const auto eq = make_eq(2);
  const auto forced = certify_forced_queries(eq, *eq_adversary(2));
  c.expect(forced.forced >= 5, "EQ forced " + str(forced.forced));
  c.expect(forces_at_least(eq, *eq_adversary(2), 5), "EQ game-tree oracle");
  c.note("EQ k=2 forced " + str(forced.forced));

  struct Case {
    int n, m, k;
    WeightsMode mode;
    int bound;
  };
  std::vector<Case> cases = {{4, 2, 2, WeightsMode::m2_low, 5},
                             {5, 2, 2, WeightsMode::m2_low, 6},
                             {4, 2, 3, WeightsMode::m2_high, 6},
                             {4, 2, 4, WeightsMode::m2_high, 6}};
  for (int m = 2; m <= 5; ++m) {
    for (int k = 2; k <= m; ++k) cases.push_back({2, m, k, WeightsMode::two_block, m});
  }
  for (const auto& w : cases) {
    const auto f = weights_task(w.n, w.m, w.k);
    const auto adv = weights_adversary(w.n, w.m, w.k, w.mode);
    const std::string tag = to_string(w.mode) + " " + str(w.n) + "," + str(w.m) + "," + str(w.k);
    const int got = certify_forced_queries(f, *adv).forced;
    c.expect(got >= w.bound, tag + " forced " + str(got));
    c.expect(forces_at_least(f, *adv, w.bound), tag + " game-tree oracle");
  }
}

void oracle_equivalence(Check& c) {
  const Domain d51 = Domain::slice(5, 1);
  for (std::uint64_t bits = 0; bits < 32; ++bits) {
    const auto f = from_bits(d51, bits);
    const auto r = exact_depth(f);
    c.expect(r.depth == oracle::plain_depth(f), "slice(5,1) #" + std::to_string(bits));
    c.expect(r.tree.computes(f) && r.tree.depth() == r.depth, "tree slice(5,1) #" + std::to_string(bits));
  }
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto f = random_slice_function(5, 2, seed);
    const auto r = exact_depth(f);
    c.expect(r.depth == oracle::plain_depth(f), "slice(5,2) seed " + std::to_string(seed));
    c.expect(r.tree.computes(f) && r.tree.depth() == r.depth, "tree slice(5,2) seed " + std::to_string(seed));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"EQ depth 3k-1 for k=1..3", eq_depth},
      {"measure chain on slice(4,2) and slice(6,3)", measure_chain},
      {"weight-1 slices: D <= floor(n/2), tight for OR-of-first-half", weight1},
      {"weight-2 sandwich over all graphs on 5 vertices", weight2},
      {"Johnson constructions and KML counts", johnson},
      {"ED structure at (4,2)", ed},
      {"lift preservation", lift_preservation},
      {"Rubinstein gap at n=16", rubinstein},
      {"Weights exact values and algorithm counts", weights_exact},
      {"adversary certifications", adversaries},
      {"exact depth vs plain minimax", oracle_equivalence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !check.ok();
    std::printf("%s criterion %zu: %s (%s) [%.1fs]\n", check.ok() ? "PASS" : "FAIL", i + 1, criteria[i].title,
                check.summary().c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
