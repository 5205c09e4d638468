#include <doctest.h>

#include "oracles.hpp"
#include "slicebench/catalog.hpp"
#include "slicebench/certificates.hpp"
#include "slicebench/degree.hpp"
#include "slicebench/depth.hpp"
#include "slicebench/errors.hpp"
#include "slicebench/measures.hpp"
#include "slicebench/monochromatic.hpp"
#include "slicebench/packing.hpp"
#include "slicebench/sensitivity.hpp"

using namespace slicebench;

namespace {

std::vector<LabeledFunction> sample_functions() {
  std::vector<LabeledFunction> out;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    out.push_back(random_cube_function(4, seed));
    out.push_back(random_slice_function(6, 3, seed));
    out.push_back(random_slice_function(6, 2, seed));
    out.push_back(random_slice_function(5, 2, seed, 3));
  }
  out.push_back(make_eq(1));
  out.push_back(dictator(6, 3, 2));
  out.push_back(or_first_half(6));
  out.push_back(LabeledFunction::constant(Domain::slice(6, 3), 1));
  return out;
}

}  // namespace

TEST_CASE("exact depth agrees with plain minimax and returns a valid tree") {
  for (const auto& f : sample_functions()) {
    const auto r = exact_depth(f);
    CHECK(r.depth == oracle::plain_depth(f));
    CHECK(r.tree.computes(f));
    CHECK(r.tree.paths_valid());
    CHECK(r.tree.depth() == r.depth);
  }
}

TEST_CASE("exact depth reports resource exhaustion") {
  ExactDepthOptions tiny;
  tiny.max_states = 3;
  CHECK_THROWS_AS(exact_depth(random_slice_function(10, 5, 1), tiny), ResourceError);
}

TEST_CASE("certificates, sensitivity and block sensitivity agree with brute force") {
  for (const auto& f : sample_functions()) {
    CHECK(certificate_complexity(f).value == oracle::brute_certificate(f));
    CHECK(sensitivity(f).value == oracle::brute_sensitivity(f));
    CHECK(block_sensitivity(f).value == oracle::brute_block_sensitivity(f));
    BlockSensitivityOptions two;
    two.max_block = 2;
    CHECK(block_sensitivity(f, std::nullopt, two).value == oracle::brute_block_sensitivity(f, 2));
  }
}

TEST_CASE("balanced certificates agree with brute force") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto f = random_slice_function(6, 3, seed);
    CHECK(balanced_certificate(f, BalancedMode::min).value == oracle::brute_balanced_certificate(f, true));
    CHECK(balanced_certificate(f, BalancedMode::max).value == oracle::brute_balanced_certificate(f, false));
  }
  CHECK_THROWS_AS(balanced_certificate(random_slice_function(6, 2, 1), BalancedMode::min), DomainError);
}

TEST_CASE("degree agrees with Moebius on the cube and with mod-p elimination on slices") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = random_cube_function(5, seed);
    CHECK(degree(g).value == oracle::mobius_degree(g));
    const auto f = random_slice_function(7, 3, seed);
    const auto d = degree(f);
    CHECK(d.value == oracle::modp_degree(f, 1000000007));
    for (Mask x : f.domain().members()) {
      CHECK(evaluate_polynomial(d.polynomial, x) == std::to_string(f(x).value()));
    }
  }
  CHECK(degree(LabeledFunction::constant(Domain::slice(6, 3), 0)).value == 0);
}

TEST_CASE("nonadaptive depth and packing agree with brute force") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = random_cube_function(4, seed);
    CHECK(nonadaptive_depth(g).size == oracle::brute_nonadaptive(g));
    const auto p = packing_lower_bound(g);
    CHECK(p.max_intersection == static_cast<std::uint64_t>(oracle::brute_max_one_subcube(g)));
  }
  CHECK(ceil_log2_ratio(24, 2) == 4);
  CHECK(ceil_log2_ratio(1, 1) == 0);
  CHECK(ceil_log2_ratio(9, 1) == 4);
}

TEST_CASE("property: the measure chain holds on random slices") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const auto f = random_slice_function(6, 3, seed);
    const int s = sensitivity(f).value;
    const int bs = block_sensitivity(f).value;
    const int c = certificate_complexity(f).value;
    const int d = exact_depth(f).depth;
    CHECK(s <= bs);
    CHECK(bs <= c);
    CHECK(c <= d);
    CHECK(degree(f).value <= d);
    CHECK(unambiguous_certificate_complexity(f).value <= subcube_partition_complexity(f).value);
    CHECK(c <= unambiguous_certificate_complexity(f).value);
  }
}

TEST_CASE("monochromatic number matches subset enumeration") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = random_graph(9, seed);
    const auto r = monochromatic_number(g);
    CHECK(r.value == oracle::brute_monochromatic(g));
    CHECK(popcount(r.vertices) == r.value);
  }
  CHECK(monochromatic_number(paley_graph(5)).value == 2);
}

TEST_CASE("every registered measure produces a witness that verifies") {
  const auto f = random_slice_function(6, 3, 4);
  for (const auto& name : measure_names()) {
    if (name == "m") continue;  // weight-2 slices only
    const auto e = compute_measure(f, name);
    const auto ok = verify_witness(f, name, e.value, e.witness);
    CHECK_MESSAGE(ok.ok, name << ": " << ok.message);
    if (!e.witness.is_null()) {
      CHECK_FALSE(verify_witness(f, name, e.value + 1, e.witness).ok);
    }
  }
  const auto w2 = from_graph(random_graph(6, 2));
  const auto m = compute_measure(w2, "m");
  CHECK(verify_witness(w2, "m", m.value, m.witness).ok);
  CHECK_THROWS_AS(compute_measure(f, "nonsense"), InputError);
}

TEST_CASE("measure entries survive a JSON round trip") {
  const auto f = make_eq(2);
  const auto e = compute_measure(f, "D");
  const auto back = measure_entry_from_json("D", measure_entry_json(e));
  CHECK(back.value == e.value);
  CHECK(back.witness == e.witness);
}
