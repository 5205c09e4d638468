#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "slicebench/certificates.hpp"
#include "slicebench/degree.hpp"
#include "slicebench/depth.hpp"
#include "slicebench/errors.hpp"
#include "slicebench/measures.hpp"
#include "slicebench/monochromatic.hpp"
#include "slicebench/packing.hpp"
#include "slicebench/sensitivity.hpp"
#include "slicebench/slice_graph.hpp"

namespace slicebench {

namespace {

Json positions_json(Mask m) { return Json(positions_of(m)); }

Mask positions_from_json(const Json& j, int n) {
  Mask m = 0;
  for (const auto& e : j) {
    const int p = e.get<int>();
    if (p < 0 || p >= n) throw InputError("position out of range in witness");
    if (test_bit(m, p)) throw InputError("repeated position in witness");
    m |= Mask{1} << p;
  }
  return m;
}

Assignment assignment_from_json(const Json& j, int n) {
  return Assignment(n, positions_from_json(j.at("zeros"), n), positions_from_json(j.at("ones"), n));
}

Json certificate_json(int n, const CertificateResult& c) {
  Json j = assignment_json(c.certificate);
  j["input"] = to_bitstring(c.input, n);
  return j;
}

Json cells_json(const PartitionResult& p) {
  Json cells = Json::array();
  for (const auto& a : p.cells) cells.push_back(assignment_json(a));
  return Json{{"cells", cells}};
}

std::optional<int> block_cap(const std::string& name) {
  if (name.size() <= 2 || name.compare(0, 2, "bs") != 0) return std::nullopt;
  const std::string digits = name.substr(2);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      digits.size() > 2 || digits[0] == '0') {
    return std::nullopt;
  }
  return std::stoi(digits);
}

Mask member_from_json(const LabeledFunction& f, const Json& j) {
  const Mask x = parse_bitstring(j.get<std::string>());
  if (static_cast<int>(j.get<std::string>().size()) != f.n() || !f.domain().contains(x)) {
    throw InputError("witness input is not a domain member");
  }
  return x;
}

WitnessCheck fail(std::string message) { return {false, std::move(message)}; }

WitnessCheck check_certificate(const LabeledFunction& f, int value, const Json& w, bool balanced) {
  const Mask x = member_from_json(f, w.at("input"));
  const Assignment a = assignment_from_json(w, f.n());
  if (!a.consistent_with(x)) return fail("certificate is not consistent with its input");
  if (balanced && !a.balanced()) return fail("certificate is not balanced");
  if (!is_certificate(f, a, f.index_at(x))) return fail("assignment does not fix the label");
  if (a.size() != value) return fail("certificate size differs from the value");
  return {true, "ok"};
}

WitnessCheck check_partition(const LabeledFunction& f, int value, const Json& w, bool subcubes) {
  const int n = f.n();
  std::vector<Assignment> cells;
  for (const auto& c : w.at("cells")) cells.push_back(assignment_from_json(c, n));
  int largest = 0;
  for (const auto& c : cells) largest = std::max(largest, c.size());
  if (largest != value) return fail("largest cell size differs from the value");
  const Domain& d = f.domain();
  auto count_covering = [&](Mask x) {
    return std::count_if(cells.begin(), cells.end(), [x](const Assignment& c) { return c.consistent_with(x); });
  };
  if (subcubes) {
    if (n > 16) return fail("subcube partition check needs n <= 16");
    for (Mask x = 0; x < (Mask{1} << n); ++x) {
      if (count_covering(x) != 1) return fail("cells do not partition the cube at " + to_bitstring(x, n));
    }
  } else {
    for (std::uint64_t r = 0; r < d.size(); ++r) {
      if (count_covering(d.unrank(r)) != 1) {
        return fail("cells do not partition the domain at " + to_bitstring(d.unrank(r), n));
      }
    }
  }
  for (const auto& c : cells) {
    int label = -1;
    for (std::uint64_t r = 0; r < d.size(); ++r) {
      if (!c.consistent_with(d.unrank(r))) continue;
      if (label >= 0 && label != f.index_at_rank(r)) return fail("cell " + c.to_string() + " is not label-constant");
      label = f.index_at_rank(r);
    }
    if (!subcubes && label < 0) return fail("cell " + c.to_string() + " covers no member");
  }
  return {true, "ok"};
}

}  // namespace

Json assignment_json(const Assignment& a) {
  return Json{{"zeros", positions_json(a.zeros())}, {"ones", positions_json(a.ones())}};
}

const std::vector<std::string>& measure_names() {
  static const std::vector<std::string> names = {"D",  "NA", "C",   "UC",  "SC",      "bs", "bs2",
                                                 "s",  "BC", "mBC", "deg", "packing", "m"};
  return names;
}

bool is_measure_name(const std::string& name) {
  const auto& names = measure_names();
  return std::find(names.begin(), names.end(), name) != names.end() || block_cap(name).has_value();
}

MeasureEntry compute_measure(const LabeledFunction& f, const std::string& name) {
  if (!is_measure_name(name)) throw InputError("unknown measure '" + name + "'");
  const int n = f.n();
  const auto start = std::chrono::steady_clock::now();
  MeasureEntry e;
  e.name = name;
  if (name == "D") {
    const auto r = exact_depth(f);
    e.value = r.depth;
    e.witness = r.tree.to_json(f.alphabet());
    e.nodes = r.stats.nodes;
    e.memo_hits = r.stats.memo_hits;
  } else if (name == "NA") {
    const auto r = nonadaptive_depth(f);
    e.value = r.size;
    e.witness = Json{{"positions", positions_json(r.positions)}};
  } else if (name == "C") {
    const auto r = certificate_complexity(f);
    e.value = r.value;
    e.witness = certificate_json(n, r);
  } else if (name == "UC") {
    const auto r = unambiguous_certificate_complexity(f);
    e.value = r.value;
    e.witness = cells_json(r);
  } else if (name == "SC") {
    const auto r = subcube_partition_complexity(f);
    e.value = r.value;
    e.witness = cells_json(r);
  } else if (name == "bs" || block_cap(name)) {
    BlockSensitivityOptions options;
    options.max_block = block_cap(name);
    const auto r = block_sensitivity(f, std::nullopt, options);
    e.value = r.value;
    Json blocks = Json::array();
    for (Mask b : r.blocks) blocks.push_back(positions_json(b));
    e.witness = Json{{"input", to_bitstring(r.input, n)}, {"blocks", blocks}};
  } else if (name == "s") {
    const auto r = sensitivity(f);
    e.value = r.value;
    Json pairs = Json::array();
    for (const auto& [i, j] : r.pairs) {
      pairs.push_back(j < 0 ? Json(i) : Json::array({i, j}));
    }
    e.witness = Json{{"input", to_bitstring(r.input, n)},
                     {f.domain().is_cube() ? "positions" : "pairs", pairs}};
  } else if (name == "BC" || name == "mBC") {
    const auto r = balanced_certificate(f, name == "BC" ? BalancedMode::max : BalancedMode::min);
    e.value = r.value;
    e.witness = certificate_json(n, r);
  } else if (name == "deg") {
    const auto r = degree(f);
    e.value = r.value;
    Json terms = Json::array();
    for (const auto& t : r.polynomial) {
      terms.push_back(Json{{"monomial", positions_json(t.monomial)}, {"coefficient", t.coefficient}});
    }
    e.witness = Json{{"polynomial", terms}};
  } else if (name == "packing") {
    const auto r = packing_lower_bound(f);
    e.value = r.value;
    e.witness = Json{{"one_inputs", r.one_inputs}, {"max_intersection", r.max_intersection}};
    if (r.one_inputs > 0) e.witness["subcube"] = assignment_json(r.subcube);
  } else if (name == "m") {
    const auto r = monochromatic_number(to_graph(f));
    e.value = r.value;
    e.witness = Json{{"vertices", positions_json(r.vertices)},
                     {"kind", r.clique ? "clique" : "independent"}};
  }
  e.millis = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                            std::chrono::steady_clock::now() - start)
                                            .count());
  return e;
}

Json measure_entry_json(const MeasureEntry& e) {
  Json j;
  j["value"] = e.value;
  j["witness"] = e.witness;
  j["nodes"] = e.nodes;
  j["memo_hits"] = e.memo_hits;
  j["millis"] = e.millis;
  return j;
}

MeasureEntry measure_entry_from_json(const std::string& name, const Json& j) {
  MeasureEntry e;
  e.name = name;
  e.value = j.at("value").get<int>();
  e.witness = j.at("witness");
  e.nodes = j.value("nodes", std::uint64_t{0});
  e.memo_hits = j.value("memo_hits", std::uint64_t{0});
  e.millis = j.value("millis", std::uint64_t{0});
  return e;
}

WitnessCheck verify_witness(const LabeledFunction& f, const std::string& name, int value,
                            const Json& w) {
  const int n = f.n();
  const Domain& d = f.domain();
  try {
    if (name == "D") {
      const auto tree = DecisionTree::from_json(w, f.alphabet());
      if (!tree.paths_valid()) return fail("a path queries a position twice");
      for (std::size_t i = 0; i < tree.node_count(); ++i) {
        const auto& nd = tree.node(static_cast<int>(i));
        if (!nd.is_leaf() && nd.position >= n) return fail("tree queries a position >= n");
      }
      if (!tree.computes(f)) return fail("tree disagrees with the function");
      if (tree.depth() != value) return fail("tree depth differs from the value");
    } else if (name == "NA") {
      const Mask s = positions_from_json(w.at("positions"), n);
      std::map<Mask, std::uint8_t> seen;
      for (std::uint64_t r = 0; r < d.size(); ++r) {
        const auto [it, fresh] = seen.emplace(d.unrank(r) & s, f.index_at_rank(r));
        if (!fresh && it->second != f.index_at_rank(r)) return fail("positions do not determine f");
      }
      if (popcount(s) != value) return fail("position count differs from the value");
    } else if (name == "C") {
      return check_certificate(f, value, w, false);
    } else if (name == "BC" || name == "mBC") {
      return check_certificate(f, value, w, true);
    } else if (name == "UC") {
      return check_partition(f, value, w, false);
    } else if (name == "SC") {
      return check_partition(f, value, w, true);
    } else if (name == "bs" || block_cap(name)) {
      const Mask x = member_from_json(f, w.at("input"));
      Mask used = 0;
      int count = 0;
      for (const auto& b : w.at("blocks")) {
        const Mask block = positions_from_json(b, n);
        if (block == 0 || (block & used) != 0) return fail("blocks are empty or overlap");
        if (block_cap(name) && popcount(block) > *block_cap(name)) return fail("block exceeds the size cap");
        if (!d.contains(x ^ block) || f.index_at(x ^ block) == f.index_at(x)) {
          return fail("block is not sensitive");
        }
        used |= block;
        ++count;
      }
      if (count != value) return fail("block count differs from the value");
    } else if (name == "s") {
      const Mask x = member_from_json(f, w.at("input"));
      Mask used = 0;
      int count = 0;
      const Json& items = d.is_cube() ? w.at("positions") : w.at("pairs");
      for (const auto& item : items) {
        Mask block = 0;
        if (d.is_cube()) {
          block = positions_from_json(Json::array({item}), n);
        } else {
          block = positions_from_json(item, n);
          if (popcount(block) != 2 || popcount(block & x) != 1) return fail("pair is not a swap");
        }
        if ((block & used) != 0) return fail("pairs overlap");
        if (!d.contains(x ^ block) || f.index_at(x ^ block) == f.index_at(x)) {
          return fail("swap is not sensitive");
        }
        used |= block;
        ++count;
      }
      if (count != value) return fail("matching size differs from the value");
    } else if (name == "deg") {
      std::vector<PolynomialTerm> poly;
      int top = 0;
      for (const auto& t : w.at("polynomial")) {
        const Mask m = positions_from_json(t.at("monomial"), n);
        top = std::max(top, popcount(m));
        poly.push_back({m, t.at("coefficient").get<std::string>()});
      }
      for (std::uint64_t r = 0; r < d.size(); ++r) {
        if (evaluate_polynomial(poly, d.unrank(r)) != std::to_string(f.index_at_rank(r))) {
          return fail("polynomial disagrees with f at " + to_bitstring(d.unrank(r), n));
        }
      }
      if (top != value) return fail("polynomial degree differs from the value");
    } else if (name == "packing") {
      const auto ones = w.at("one_inputs").get<std::uint64_t>();
      if (ones != f.preimage(1).size()) return fail("one-input count is wrong");
      if (ones == 0) return value == 0 ? WitnessCheck{true, "ok"} : fail("value must be 0");
      const Assignment a = assignment_from_json(w.at("subcube"), n);
      std::uint64_t inside = 0;
      for (std::uint64_t r = 0; r < d.size(); ++r) {
        if (!a.consistent_with(d.unrank(r))) continue;
        if (f.index_at_rank(r) != 1) return fail("subcube contains a 0-input");
        ++inside;
      }
      if (inside != w.at("max_intersection").get<std::uint64_t>()) return fail("intersection count is wrong");
      if (ceil_log2_ratio(ones, inside) != value) return fail("bound differs from the value");
    } else if (name == "m") {
      const SliceGraph g = to_graph(f);
      const Mask v = positions_from_json(w.at("vertices"), n);
      const bool clique = w.at("kind").get<std::string>() == "clique";
      for (int a : positions_of(v)) {
        for (int b : positions_of(v)) {
          if (a < b && g.has_edge(a, b) != clique) return fail("vertex set is not monochromatic");
        }
      }
      if (popcount(v) != value) return fail("vertex count differs from the value");
    } else {
      return fail("unknown measure '" + name + "'");
    }
  } catch (const Json::exception& e) {
    return fail(std::string("malformed witness: ") + e.what());
  } catch (const Error& e) {
    return fail(e.what());
  } catch (const std::invalid_argument& e) {
    return fail(std::string("malformed number: ") + e.what());
  }
  return {true, "ok"};
}

}  // namespace slicebench
