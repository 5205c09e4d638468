#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "slicebench/adversary.hpp"
#include "slicebench/binomial.hpp"
#include "slicebench/catalog.hpp"
#include "slicebench/certificates.hpp"
#include "slicebench/cli.hpp"
#include "slicebench/degree.hpp"
#include "slicebench/depth.hpp"
#include "slicebench/errors.hpp"
#include "slicebench/monochromatic.hpp"
#include "slicebench/packing.hpp"
#include "slicebench/sensitivity.hpp"

namespace slicebench {

namespace {

using CaseFn = std::function<ExperimentCase(std::size_t)>;

// Runs fn(0..count-1) on `jobs` threads; results come back in index order.
std::vector<ExperimentCase> parallel_cases(std::size_t count, int jobs, const CaseFn& fn) {
  std::vector<ExperimentCase> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string padded(std::uint64_t v, int width) {
  std::string s = std::to_string(v);
  if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
  return s;
}

int get_int(const Json& p, const char* key) {
  if (!p.contains(key) || !p.at(key).is_number_integer()) {
    throw InputError(std::string("experiment parameter '") + key + "' must be an integer");
  }
  return p.at(key).get<int>();
}

std::vector<int> get_ints(const Json& p, const char* key) {
  if (!p.contains(key) || !p.at(key).is_array()) {
    throw InputError(std::string("experiment parameter '") + key + "' must be an array of integers");
  }
  std::vector<int> out;
  for (const auto& v : p.at(key)) {
    if (!v.is_number_integer()) throw InputError(std::string("parameter '") + key + "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

int isqrt(int n) {
  int s = 0;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

// ---- eq-depth ----

std::vector<ExperimentCase> eq_depth(const Json& p, int jobs) {
  const auto ks = get_ints(p, "k");
  const int certify = get_int(p, "certify_up_to");
  for (int k : ks) require(k >= 1 && k <= 3, "eq-depth needs 1 <= k <= 3");
  return parallel_cases(ks.size(), jobs, [&](std::size_t i) {
    const int k = ks[i];
    const auto f = make_eq(k);
    ExperimentCase c;
    c.key = "k=" + padded(static_cast<std::uint64_t>(k), 2);
    const int depth = exact_depth(f).depth;
    const auto worst = worst_case_queries(*eq_algorithm(k), f);
    c.values["D"] = depth;
    c.values["expected"] = 3 * k - 1;
    c.values["algorithm_worst_case"] = worst ? Json(*worst) : Json(nullptr);
    c.pass = depth == 3 * k - 1 && worst && *worst == 3 * k - 1;
    if (k <= certify) {
      const auto forced = certify_forced_queries(f, *eq_adversary(k));
      c.values["adversary_forced"] = forced.forced;
      c.pass = c.pass && forced.forced >= 3 * k - 1;
    }
    return c;
  });
}

// ---- weight1-bound ----

std::vector<ExperimentCase> weight1_bound(const Json& p, int jobs) {
  const int exhaustive = get_int(p, "n_exhaustive");
  const int n_max = get_int(p, "n_max");
  require(exhaustive >= 2 && exhaustive <= 12, "weight1-bound needs 2 <= n_exhaustive <= 12");
  require(n_max >= 2 && n_max <= 40, "weight1-bound needs 2 <= n_max <= 40");
  std::vector<std::pair<bool, int>> tasks;
  for (int n = 2; n <= exhaustive; ++n) tasks.push_back({true, n});
  for (int n = 2; n <= n_max; ++n) tasks.push_back({false, n});
  return parallel_cases(tasks.size(), jobs, [&](std::size_t i) {
    const auto [all, n] = tasks[i];
    ExperimentCase c;
    c.values["n"] = n;
    c.values["bound"] = n / 2;
    if (all) {
      c.key = "all-n" + padded(static_cast<std::uint64_t>(n), 2);
      int worst = 0;
      std::optional<std::uint64_t> counterexample;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        std::vector<std::uint8_t> table(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(j)] = (bits >> j) & 1U;
        const auto f = LabeledFunction::boolean(Domain::slice(n, 1), table);
        const int d = exact_depth(f).depth;
        worst = std::max(worst, d);
        if (d > n / 2 && !counterexample) counterexample = bits;
      }
      c.values["functions"] = std::uint64_t{1} << n;
      c.values["max_D"] = worst;
      if (counterexample) c.values["counterexample_table"] = *counterexample;
      c.pass = worst <= n / 2;
    } else {
      c.key = "or-n" + padded(static_cast<std::uint64_t>(n), 2);
      const auto f = or_first_half(n);
      const int d = n <= 16 ? exact_depth(f).depth : -1;
      const auto alg = worst_case_queries(*weight1_algorithm(f), f);
      if (d >= 0) c.values["D"] = d;
      c.values["algorithm_worst_case"] = alg ? Json(*alg) : Json(nullptr);
      c.pass = (d < 0 || d == n / 2) && alg && *alg == n / 2;
    }
    return c;
  });
}

// ---- weight2-sandwich ----

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

std::vector<ExperimentCase> weight2_sandwich(const Json& p, int jobs) {
  const int n = get_int(p, "n");
  require(n >= 3 && n <= 6, "weight2-sandwich needs 3 <= n <= 6");
  const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
  const int width = static_cast<int>(std::to_string(count - 1).size());
  return parallel_cases(count, jobs, [&](std::size_t i) {
    const auto g = graph_from_index(n, i);
    const auto f = from_graph(g);
    const int m = monochromatic_number(g).value;
    const int d = exact_depth(f).depth;
    const auto alg = worst_case_queries(*weight2_algorithm(f), f);
    ExperimentCase c;
    c.key = "g" + padded(i, width);
    c.values = {{"m", m}, {"D", d}, {"algorithm_worst_case", alg ? Json(*alg) : Json(nullptr)}};
    c.pass = n - m <= d && 2 * d <= 2 * n - m && alg && 2 * *alg <= 2 * n - m;
    return c;
  });
}

// ---- johnson-independent ----

std::vector<ExperimentCase> johnson_independent_exp(const Json& p, int jobs) {
  const int n_max = get_int(p, "n_max");
  require(n_max >= 2 && n_max <= 16, "johnson-independent needs 2 <= n_max <= 16");
  std::vector<std::pair<int, int>> tasks;
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k <= n / 2; ++k) tasks.push_back({n, k});
  }
  return parallel_cases(tasks.size(), jobs, [&](std::size_t i) {
    const auto [n, k] = tasks[i];
    const auto gs = graham_sloane(n, k);
    std::vector<std::vector<Mask>> classes(static_cast<std::size_t>(n));
    for (Mask x : Domain::slice(n, k).members()) {
      int sum = 0;
      for (int q : positions_of(x)) sum += q;
      classes[static_cast<std::size_t>(sum % n)].push_back(x);
    }
    bool independent = true;
    std::uint64_t total = 0;
    for (const auto& cls : classes) {
      independent = independent && johnson_independent(cls);
      total += cls.size();
    }
    const std::uint64_t best = gs.sizes[static_cast<std::size_t>(gs.best)];
    ExperimentCase c;
    c.key = "n" + padded(static_cast<std::uint64_t>(n), 2) + "-k" + padded(static_cast<std::uint64_t>(k), 2);
    c.values = {{"n", n},
                {"k", k},
                {"independent", independent},
                {"partition", total == binomial(n, k)},
                {"max_class", best},
                {"slice_size", binomial(n, k)},
                {"depth_lower_bound", ceil_log2_ratio(best, 1)}};
    c.pass = independent && total == binomial(n, k) && best * static_cast<std::uint64_t>(n) >= binomial(n, k);
    return c;
  });
}

// ---- kml-count ----

std::vector<ExperimentCase> kml_count(const Json& p, int jobs) {
  const auto rs = get_ints(p, "r");
  for (int r : rs) require(r >= 2 && r <= 4, "kml-count needs 2 <= r <= 4");
  return parallel_cases(rs.size(), jobs, [&](std::size_t i) {
    const int r = rs[i];
    const auto f = kml_set(r);
    const std::uint64_t count = f.preimage(1).size();
    ExperimentCase c;
    c.key = "r=" + std::to_string(r);
    c.values = {{"enumerated", count}, {"formula", kml_formula(r)}};
    c.pass = count == kml_formula(r);
    return c;
  });
}

// ---- ed-structure / ed-conjecture ----

int ceil_half(int l) { return (l + 1) / 2; }

std::vector<ExperimentCase> ed_structure(const Json& p, int) {
  const int k = get_int(p, "k");
  const int l = get_int(p, "l");
  const auto f = make_ed(k, l);
  const int n = k * l;
  const auto packing = packing_lower_bound(f);
  const auto na = nonadaptive_depth(f);
  const int d = exact_depth(f).depth;
  std::vector<ExperimentCase> cases;
  ExperimentCase s;
  s.key = "structure";
  s.values = {{"one_inputs", packing.one_inputs},
              {"max_intersection", packing.max_intersection},
              {"packing_bound", packing.value},
              {"nonadaptive", na.size},
              {"D", d}};
  s.pass = na.size == n - 1 && packing.value <= d;
  if (k == (1 << l)) s.pass = s.pass && packing.max_intersection == 2;
  cases.push_back(s);
  ExperimentCase conj;
  conj.key = "conjecture";
  conj.asserted = false;
  conj.values = {{"D", d}, {"conjectured", n - ceil_half(l)}, {"matches", d == n - ceil_half(l)}};
  cases.push_back(conj);
  return cases;
}

std::vector<ExperimentCase> ed_conjecture(const Json& p, int jobs) {
  if (!p.contains("pairs") || !p.at("pairs").is_array()) throw InputError("ed-conjecture needs 'pairs'");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& pr : p.at("pairs")) {
    if (!pr.is_array() || pr.size() != 2) throw InputError("ed-conjecture pairs are [k, l]");
    pairs.push_back({pr.at(0).get<int>(), pr.at(1).get<int>()});
  }
  auto per_pair = parallel_cases(pairs.size(), jobs, [&](std::size_t i) {
    const auto [k, l] = pairs[i];
    const auto f = make_ed(k, l);
    const int d = exact_depth(f).depth;
    const int bound = packing_lower_bound(f).value;
    ExperimentCase c;
    c.key = "k" + std::to_string(k) + "-l" + std::to_string(l);
    c.values = {{"D", d}, {"packing_bound", bound}, {"conjectured", k * l - ceil_half(l)}};
    c.pass = d >= bound;
    return c;
  });
  std::vector<ExperimentCase> out;
  for (auto& c : per_pair) {
    ExperimentCase report;
    report.key = c.key + "-conjecture";
    report.asserted = false;
    report.values = {{"D", c.values["D"]},
                     {"conjectured", c.values["conjectured"]},
                     {"matches", c.values["D"] == c.values["conjectured"]}};
    c.key += "-packing";
    c.values.erase("conjectured");
    out.push_back(std::move(c));
    out.push_back(std::move(report));
  }
  return out;
}

// ---- lift-preservation ----

ExperimentCase lift_case(const LabeledFunction& g, std::string key) {
  const auto f = lift(g);
  const int dg = exact_depth(g).depth, df = exact_depth(f).depth;
  const int cg = certificate_complexity(g).value, cf = certificate_complexity(f).value;
  const int bg = block_sensitivity(g).value, bf = block_sensitivity(f).value;
  const int degg = degree(g).value, degf = degree(f).value;
  const int sg = sensitivity(g).value, sf = sensitivity(f).value;
  BlockSensitivityOptions two;
  two.max_block = 2;
  const int bs2g = block_sensitivity(g, std::nullopt, two).value;
  ExperimentCase c;
  c.key = std::move(key);
  c.values = {{"D", {dg, df}},   {"C", {cg, cf}},  {"bs", {bg, bf}}, {"deg", {degg, degf}},
              {"s_g", sg},       {"s_lift", sf},   {"bs2_g", bs2g}};
  c.pass = dg == df && cg == cf && bg == bf && degg == degf && sg <= sf && sf <= bs2g &&
           bs2g <= 2 * sg * sg;
  return c;
}

std::vector<ExperimentCase> lift_preservation(const Json& p, int jobs) {
  const int n = get_int(p, "n");
  const int samples = get_int(p, "samples");
  const int sample_n = get_int(p, "sample_n");
  const auto seed = p.at("seed").get<std::uint64_t>();
  require(n >= 1 && n <= 4, "lift-preservation needs 1 <= n <= 4 for the exhaustive part");
  require(sample_n >= 1 && sample_n <= 5 && samples >= 0, "lift-preservation needs 1 <= sample_n <= 5");
  const std::uint64_t all = std::uint64_t{1} << (1U << n);
  const int width = static_cast<int>(std::to_string(all - 1).size());
  return parallel_cases(all + static_cast<std::uint64_t>(samples), jobs, [&](std::size_t i) {
    if (i < all) {
      std::vector<std::uint8_t> table(std::size_t{1} << n);
      for (std::size_t j = 0; j < table.size(); ++j) table[j] = (i >> j) & 1U;
      return lift_case(LabeledFunction::boolean(Domain::cube(n), table),
                       "all-n" + std::to_string(n) + "-" + padded(i, width));
    }
    const std::uint64_t s = i - all;
    return lift_case(random_cube_function(sample_n, seed + s),
                     "sample-n" + std::to_string(sample_n) + "-" + padded(s, 4));
  });
}

// ---- weights ----

struct WeightsParams {
  int n, m, k;
};

std::vector<WeightsParams> weights_list(const Json& p) {
  if (!p.contains("cases") || !p.at("cases").is_array()) throw InputError("weights experiments need 'cases'");
  std::vector<WeightsParams> out;
  for (const auto& c : p.at("cases")) {
    if (!c.is_array() || c.size() != 3) throw InputError("weights cases are [n, m, k]");
    out.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()});
  }
  return out;
}

std::string weights_key(const WeightsParams& w) {
  return "n" + std::to_string(w.n) + "-m" + std::to_string(w.m) + "-k" + std::to_string(w.k);
}

std::vector<ExperimentCase> weights_m2(const Json& p, int jobs) {
  const auto list = weights_list(p);
  for (const auto& w : list) require(w.m == 2 && w.n >= 4 && w.k >= 2 && w.k <= w.n, "weights-m2 needs m = 2, n >= 4, 2 <= k <= n");
  return parallel_cases(list.size(), jobs, [&](std::size_t i) {
    const auto [n, m, k] = list[i];
    const auto f = weights_task(n, m, k);
    const bool low = k <= n / 2;
    const int expected = low ? n + k - 1 : 3 * n / 2;
    const int d = exact_depth(f).depth;
    const auto forced =
        certify_forced_queries(f, *weights_adversary(n, m, k, low ? WeightsMode::m2_low : WeightsMode::m2_high));
    const auto alg = low ? worst_case_queries(*weights_m2_algorithm(n, k), f)
                         : worst_case_queries(*weights_algorithm_b(n, m, k), f);
    ExperimentCase c;
    c.key = weights_key(list[i]);
    c.values = {{"D", d},
                {"expected", expected},
                {"adversary_forced", forced.forced},
                {"algorithm_worst_case", alg ? Json(*alg) : Json(nullptr)}};
    c.pass = d == expected && forced.forced >= expected && alg && *alg <= expected;
    return c;
  });
}

std::vector<ExperimentCase> weights_two_blocks(const Json& p, int jobs) {
  const int m_max = get_int(p, "m_max");
  require(m_max >= 2 && m_max <= 8, "weights-two-blocks needs 2 <= m_max <= 8");
  std::vector<WeightsParams> list;
  for (int m = 2; m <= m_max; ++m) {
    for (int k = 2; k <= m; ++k) list.push_back({2, m, k});
  }
  return parallel_cases(list.size(), jobs, [&](std::size_t i) {
    const auto [n, m, k] = list[i];
    const auto f = weights_task(n, m, k);
    const int d = exact_depth(f).depth;
    const auto forced = certify_forced_queries(f, *weights_adversary(n, m, k, WeightsMode::two_block));
    const auto alg = worst_case_queries(*weights_algorithm_a(n, m, k), f);
    ExperimentCase c;
    c.key = weights_key(list[i]);
    c.values = {{"D", d},
                {"expected", m},
                {"adversary_forced", forced.forced},
                {"algorithm_a_worst_case", alg ? Json(*alg) : Json(nullptr)}};
    c.pass = d == m && forced.forced >= m && alg && *alg == m;
    return c;
  });
}

std::vector<ExperimentCase> weights_algorithms(const Json& p, int jobs) {
  const int max_size = get_int(p, "max_size");
  require(max_size >= 2 && max_size <= 16, "weights-algorithms needs 2 <= max_size <= 16");
  std::vector<WeightsParams> list;
  for (int n = 2; n <= max_size; ++n) {
    for (int m = 1; n * m <= max_size; ++m) {
      for (int k = 0; 2 * k <= n * m; ++k) list.push_back({n, m, k});
    }
  }
  return parallel_cases(list.size(), jobs, [&](std::size_t i) {
    const auto [n, m, k] = list[i];
    const auto f = weights_task(n, m, k);
    const auto a = worst_case_queries(*weights_algorithm_a(n, m, k), f);
    const auto b = worst_case_queries(*weights_algorithm_b(n, m, k), f);
    const int total = n * m;
    const int b_bound = total - (n + m - 1) / m;
    ExperimentCase c;
    c.key = "n" + padded(static_cast<std::uint64_t>(n), 2) + "-m" + padded(static_cast<std::uint64_t>(m), 2) +
            "-k" + padded(static_cast<std::uint64_t>(k), 2);
    c.values = {{"a_worst_case", a ? Json(*a) : Json(nullptr)},
                {"b_worst_case", b ? Json(*b) : Json(nullptr)},
                {"a_expected", (n - 1) * m},
                {"b_bound", b_bound}};
    c.pass = a && b && *a == (n - 1) * m && *b <= b_bound &&
             std::pow(static_cast<double>(total - std::min(*a, *b)), 3.0) >= total - 1e-9;
    return c;
  });
}

// ---- rubinstein-gap ----

std::vector<ExperimentCase> rubinstein_gap(const Json& p, int) {
  const int n = get_int(p, "n");
  require(n == 4 || n == 16, "rubinstein-gap supports n = 4 or 16");
  const int root = isqrt(n);
  const auto variant = rubinstein_variant(n);
  const int s_variant = sensitivity(variant).value;
  const auto f = slice_of_cube_function(rubinstein_original(n), n / 2);
  // Blocks 0..root/2-1 all zero, the rest all one.
  const Mask witness = low_bits(n) & ~low_bits(n / 2);
  const int bs_witness = block_sensitivity(f, witness).value;
  int s0 = 0, s1 = 0;
  for (Mask x : f.domain().members()) {
    const int s = sensitivity(f, x).value;
    (f.index_at(x) ? s1 : s0) = std::max(f.index_at(x) ? s1 : s0, s);
  }
  const int s = std::max(s0, s1);
  std::vector<ExperimentCase> cases(3);
  cases[0].key = "variant-sensitivity";
  cases[0].values = {{"s", s_variant}, {"expected", root}};
  cases[0].pass = s_variant == root;
  cases[1].key = "original-sensitivity";
  cases[1].values = {{"s0", s0}, {"s1", s1}, {"s", s}, {"s0_bound", 2 * root}, {"s1_bound", root}};
  cases[1].pass = s0 <= 2 * root && s1 <= root;
  cases[2].key = "original-gap";
  cases[2].values = {{"bs_at_witness", bs_witness}, {"witness", to_bitstring(witness, n)}, {"s", s}};
  cases[2].pass = bs_witness >= n / 4 && 16 * bs_witness >= s * s;
  return cases;
}

// ---- measure-chain ----

ExperimentCase chain_case(const LabeledFunction& f, bool partitions, std::string key) {
  const int n = f.n();
  const int s = sensitivity(f).value;
  const int bs = block_sensitivity(f).value;
  const int c = certificate_complexity(f).value;
  const int d = exact_depth(f).depth;
  const int deg = degree(f).value;
  const int mbc = balanced_certificate(f, BalancedMode::min).value;
  ExperimentCase out;
  out.key = std::move(key);
  out.values = {{"s", s}, {"bs", bs}, {"C", c}, {"D", d}, {"deg", deg}, {"mBC", mbc}};
  out.pass = s <= bs && bs <= c && c <= d && d <= std::max(0, n - 2) && deg <= d && d <= 4 * c * c &&
             d >= mbc - 1;
  if (partitions) {
    const int uc = unambiguous_certificate_complexity(f).value;
    const int sc = subcube_partition_complexity(f).value;
    out.values["UC"] = uc;
    out.values["SC"] = sc;
    out.pass = out.pass && uc <= sc;
  }
  return out;
}

std::vector<ExperimentCase> measure_chain(const Json& p, int jobs) {
  const int samples = get_int(p, "samples");
  const auto seed = p.at("seed").get<std::uint64_t>();
  require(samples >= 0, "measure-chain needs samples >= 0");
  const Domain small = Domain::slice(4, 2);
  const std::uint64_t all = std::uint64_t{1} << small.size();
  return parallel_cases(all + static_cast<std::uint64_t>(samples), jobs, [&](std::size_t i) {
    if (i < all) {
      std::vector<std::uint8_t> table(small.size());
      for (std::size_t j = 0; j < table.size(); ++j) table[j] = (i >> j) & 1U;
      return chain_case(LabeledFunction::boolean(small, table), true, "slice4-2-" + padded(i, 2));
    }
    const std::uint64_t s = i - all;
    return chain_case(random_slice_function(6, 3, seed + s), false, "slice6-3-" + padded(s, 4));
  });
}

// ---- mbc-exhaustive ----

std::vector<ExperimentCase> mbc_exhaustive(const Json& p, int jobs) {
  const int samples = get_int(p, "samples");
  const auto seed = p.at("seed").get<std::uint64_t>();
  const Domain d4 = Domain::slice(4, 2);
  const std::uint64_t all = std::uint64_t{1} << d4.size();
  auto cases = parallel_cases(all + static_cast<std::uint64_t>(samples), jobs, [&](std::size_t i) {
    const bool exhaustive = i < all;
    LabeledFunction f = [&] {
      if (!exhaustive) return random_slice_function(6, 3, seed + (i - all));
      std::vector<std::uint8_t> table(d4.size());
      for (std::size_t j = 0; j < table.size(); ++j) table[j] = (i >> j) & 1U;
      return LabeledFunction::boolean(d4, table);
    }();
    const int k = f.n() / 2;
    const int mbc = balanced_certificate(f, BalancedMode::min).value;
    const int d = exact_depth(f).depth;
    ExperimentCase c;
    c.key = exhaustive ? "slice4-2-" + padded(i, 2) : "slice6-3-" + padded(i - all, 4);
    c.values = {{"mBC", mbc}, {"D", d}, {"bound", 2 * (k - 1)}};
    c.pass = mbc <= 2 * (k - 1) && d >= mbc - 1;
    return c;
  });
  return cases;
}

using Runner = std::vector<ExperimentCase> (*)(const Json&, int);

struct Registered {
  ExperimentInfo info;
  Runner run;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> entries = {
      {{"eq-depth", "D(EQ on slice(4k, 2k)) = 3k - 1; the EQ algorithm attains it and the EQ adversary forces it",
        {{"k", {1, 2, 3}}, {"certify_up_to", 2}}},
       eq_depth},
      {{"weight1-bound", "D(f) <= floor(n/2) on slice(n, 1), attained by OR of the first half",
        {{"n_exhaustive", 8}, {"n_max", 10}}},
       weight1_bound},
      {{"weight2-sandwich",
        "n - m(G) <= D(f_G) <= n - m(G)/2 on slice(n, 2); the monochromatic-set algorithm meets the upper bound",
        {{"n", 5}}},
       weight2_sandwich},
      {{"johnson-independent",
        "Graham-Sloane sum classes partition slice(n, k) into Johnson-independent sets, the largest of size >= C(n,k)/n",
        {{"n_max", 14}}},
       johnson_independent_exp},
      {{"kml-count", "zero-XOR half-size subsets of Z_2^r: enumeration equals the closed formula", {{"r", {2, 3, 4}}}},
       kml_count},
      {{"ed-structure",
        "element distinctness: 1-subcubes hold at most two 1-inputs, nonadaptive depth n - 1, packing bound <= D",
        {{"k", 4}, {"l", 2}}},
       ed_structure},
      {{"ed-conjecture", "D(ED_{k,l}) >= packing bound; kl - ceil(l/2) is reported, not asserted",
        {{"pairs", {{3, 2}, {4, 2}}}}},
       ed_conjecture},
      {{"lift-preservation",
        "f_g(x, y) = g(x) preserves D, C, bs, deg; s(g) <= s(f_g) <= bs_2(g) <= 2 s(g)^2",
        {{"n", 3}, {"samples", 50}, {"sample_n", 4}, {"seed", 1}}},
       lift_preservation},
      {{"weights-m2", "D(Weights_{n,2,k}) = n + k - 1 for k <= n/2 and floor(3n/2) above",
        {{"cases", {{4, 2, 2}, {5, 2, 2}, {4, 2, 3}, {4, 2, 4}}}}},
       weights_m2},
      {{"weights-two-blocks", "D(Weights_{2,m,k}) = m for 2 <= k <= m", {{"m_max", 5}}}, weights_two_blocks},
      {{"weights-algorithms",
        "algorithm A uses (n-1)m queries, B at most nm - ceil(n/m), min(A, B) <= N - N^(1/3)",
        {{"max_size", 10}}},
       weights_algorithms},
      {{"rubinstein-gap",
        "variant has s = sqrt(n); the original on the balanced slice has bs >= n/4, s0 <= 2 sqrt(n), s1 <= sqrt(n), "
        "bs >= s^2/16",
        {{"n", 16}}},
       rubinstein_gap},
      {{"measure-chain",
        "s <= bs <= C <= D <= n - 2, deg <= D <= 4C^2, D >= mBC - 1, UC <= SC (slice(4,2) for UC/SC)",
        {{"samples", 500}, {"seed", 1}}},
       measure_chain},
      {{"mbc-exhaustive", "mBC(f) <= 2(k - 1) on slice(2k, k) for k >= 2, and D >= mBC - 1",
        {{"samples", 200}, {"seed", 1}}},
       mbc_exhaustive},
  };
  return entries;
}

}  // namespace

const std::vector<ExperimentInfo>& experiment_catalog() {
  static const std::vector<ExperimentInfo> infos = [] {
    std::vector<ExperimentInfo> out;
    for (const auto& r : registry()) out.push_back(r.info);
    return out;
  }();
  return infos;
}

Json run_experiment(const std::string& name, const Json& params, int jobs) {
  const auto& entries = registry();
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const Registered& r) { return r.info.name == name; });
  if (it == entries.end()) throw InputError("unknown experiment '" + name + "'");
  if (!params.is_null() && !params.is_object()) throw InputError("experiment parameters must be an object");
  Json effective = it->info.default_params;
  if (params.is_object()) {
    for (const auto& [key, value] : params.items()) {
      if (!effective.contains(key)) throw InputError("experiment '" + name + "' has no parameter '" + key + "'");
      effective[key] = value;
    }
  }
  std::vector<ExperimentCase> cases;
  try {
    cases = it->run(effective, std::max(1, jobs));
  } catch (const Json::exception& e) {
    throw InputError(std::string("experiment parameters: ") + e.what());
  } catch (const DomainError& e) {
    throw InputError(std::string("experiment parameters rejected: ") + e.what());
  }
  std::sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  Json report;
  report["experiment"] = name;
  report["claim"] = it->info.claim;
  report["engine"] = kEngineVersion;
  report["params"] = effective;
  std::size_t asserted = 0, passed = 0;
  Json list = Json::array();
  Json failures = Json::array();
  for (const auto& c : cases) {
    Json j;
    j["key"] = c.key;
    j["asserted"] = c.asserted;
    j["pass"] = c.asserted ? Json(c.pass) : Json(nullptr);
    j["values"] = c.values;
    if (c.asserted) {
      ++asserted;
      if (c.pass) {
        ++passed;
      } else {
        failures.push_back(j);
      }
    }
    list.push_back(std::move(j));
  }
  report["asserted"] = asserted;
  report["passed"] = passed;
  report["failed"] = asserted - passed;
  report["ok"] = passed == asserted;
  report["counterexamples"] = failures;
  report["cases"] = list;
  return report;
}

bool experiment_passed(const Json& report) { return report.value("ok", false); }

namespace {

std::string csv_field(const Json& v) {
  std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

}  // namespace

std::string experiment_csv(const Json& report) {
  std::vector<std::string> columns;
  for (const auto& c : report.at("cases")) {
    for (const auto& [key, value] : c.at("values").items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  std::ostringstream out;
  out << "key,asserted,pass";
  for (const auto& col : columns) out << ',' << csv_field(Json(col));
  out << '\n';
  for (const auto& c : report.at("cases")) {
    out << csv_field(c.at("key")) << ',' << c.at("asserted").dump() << ',' << c.at("pass").dump();
    for (const auto& col : columns) {
      out << ',';
      if (c.at("values").contains(col)) out << csv_field(c.at("values").at(col));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace slicebench
