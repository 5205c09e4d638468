#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "slicebench/adversary.hpp"
#include "slicebench/catalog.hpp"
#include "slicebench/cli.hpp"
#include "slicebench/depth.hpp"
#include "slicebench/errors.hpp"
#include "slicebench/measures.hpp"

namespace slicebench {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Inline JSON text, or @path for a file.
Json json_argument(const std::string& arg, const std::string& what) {
  if (!arg.empty() && arg[0] == '@') return parse_json_text(read_file(arg.substr(1)), arg.substr(1));
  return parse_json_text(arg, what);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

// Where a command reads its function from.
struct FunctionSource {
  std::string file;
  std::string construct;
  std::string graph;

  void add_to(CLI::App* cmd) {
    cmd->add_option("-f,--function", file, "Function file (JSON)");
    cmd->add_option("-c,--construct", construct, "Construction spec: JSON text or @file");
    cmd->add_option("-g,--graph", graph, "Edge-list file; the function on slice(n, 2) it induces");
  }

  LabeledFunction load() const {
    const int given = !file.empty() + !construct.empty() + !graph.empty();
    if (given != 1) throw InputError("give exactly one of --function, --construct, --graph");
    if (!file.empty()) return read_function_file(file);
    if (!construct.empty()) return slicebench::construct(json_argument(construct, "--construct"));
    std::ifstream in(graph);
    if (!in) throw InputError("cannot open '" + graph + "'");
    return from_graph(read_graph(in));
  }

  Json construction_params() const {
    if (construct.empty()) return Json::object();
    return json_argument(construct, "--construct").value("params", Json::object());
  }
};

// ---- construct ----

struct ConstructCmd {
  std::string name;
  std::vector<std::string> params;
  std::string spec_file;
  std::string output;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("construct", "Build a catalog function and write its function file");
    cmd->add_option("name", name, "Construction name (see docs/formats.md)");
    cmd->add_option("params", params, "key=value parameters; values are parsed as JSON");
    cmd->add_option("--spec", spec_file, "Construction spec file {\"name\", \"params\"}");
    cmd->add_option("-o,--output", output, "Output path (default stdout)");
  }

  int run(std::ostream& out) const {
    Json spec;
    if (!spec_file.empty()) {
      spec = parse_json_text(read_file(spec_file), spec_file);
    } else {
      if (name.empty()) throw InputError("construct needs a name or --spec");
      spec["name"] = name;
      spec["params"] = Json::object();
      for (const auto& kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw InputError("parameter '" + kv + "' is not key=value");
        const std::string value = kv.substr(eq + 1);
        Json parsed = Json::parse(value, nullptr, false);
        spec["params"][kv.substr(0, eq)] = parsed.is_discarded() ? Json(value) : parsed;
      }
    }
    const auto f = construct(spec);
    write_output(output, function_to_json(f, Json{{"construction", spec}}).dump(2) + "\n", out);
    return kExitOk;
  }
};

// ---- measure ----

struct MeasureCmd {
  FunctionSource source;
  std::vector<std::string> measures;
  bool csv = false;
  bool no_cache = false;
  bool timing = false;
  std::string cache_dir;
  std::string output;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("measure", "Compute complexity measures with witnesses");
    source.add_to(cmd);
    cmd->add_option("-m,--measures", measures, "Comma-separated measure names")->delimiter(',')->required();
    cmd->add_flag("--csv", csv, "Emit CSV instead of JSON");
    cmd->add_flag("--no-cache", no_cache, "Neither read nor write the result cache");
    cmd->add_flag("--timing", timing, "Add wall-clock milliseconds and cache status per measure");
    cmd->add_option("--cache-dir", cache_dir, "Cache directory (default: SLICEBENCH_CACHE_DIR or ~/.cache)");
    cmd->add_option("-o,--output", output, "Output path (default stdout)");
  }

  int run(std::ostream& out) const {
    const auto f = source.load();
    for (const auto& m : measures) {
      if (!is_measure_name(m)) throw InputError("unknown measure '" + m + "'");
    }
    const std::string text = canonical_function_text(f);
    const ResultCache cache(cache_dir.empty() ? ResultCache::default_dir() : std::filesystem::path(cache_dir));
    Json report;
    report["function"] = {{"sha256", sha256_hex(text)}, {"domain", f.domain().describe()}};
    report["engine"] = kEngineVersion;
    Json results = Json::object();
    for (const auto& name : measures) {
      const std::string key = ResultCache::key(text, name);
      Json entry;
      bool hit = false;
      if (!no_cache) {
        if (auto stored = cache.get(key)) {
          const Json parsed = Json::parse(*stored, nullptr, false);
          if (!parsed.is_discarded() && parsed.is_object() && parsed.contains("value")) {
            entry = parsed;
            hit = true;
          }
        }
      }
      std::uint64_t millis = 0;
      if (!hit) {
        const MeasureEntry e = compute_measure(f, name);
        millis = e.millis;
        entry = measure_entry_json(e);
        entry.erase("millis");
        if (!no_cache) cache.put(key, entry.dump());
      }
      if (timing) {
        entry["millis"] = millis;
        entry["cached"] = hit;
      }
      results[name] = entry;
    }
    report["measures"] = results;
    if (!csv) {
      write_output(output, report.dump(2) + "\n", out);
      return kExitOk;
    }
    std::ostringstream table;
    table << "measure,value,nodes,memo_hits" << (timing ? ",millis,cached" : "") << '\n';
    for (const auto& [name, e] : results.items()) {
      table << name << ',' << e.at("value").dump() << ',' << e.at("nodes").dump() << ','
            << e.at("memo_hits").dump();
      if (timing) table << ',' << e.at("millis").dump() << ',' << e.at("cached").dump();
      table << '\n';
    }
    write_output(output, table.str(), out);
    return kExitOk;
  }
};

// ---- match ----

int param_or(const Json& params, const char* key, std::optional<int> fallback) {
  if (params.contains(key) && params.at(key).is_number_integer()) return params.at(key).get<int>();
  if (fallback) return *fallback;
  throw InputError(std::string("match needs parameter '") + key + "' (via --params or the construction)");
}

struct MatchCmd {
  FunctionSource source;
  std::string algorithm;
  std::string adversary;
  std::optional<int> budget;
  std::uint64_t seed = 0;
  std::string input;
  std::string params_text;
  std::string output;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("match", "Run a query algorithm against an adversary");
    source.add_to(cmd);
    cmd->add_option("--algorithm", algorithm,
                    "eq, weights_a, weights_b, weights_m2, weight1, weight2, optimal")
        ->required();
    cmd->add_option("--adversary", adversary,
                    "eq, input, random, weights_basic, weights_balanced, weights_m2_low, weights_m2_high, "
                    "weights_two_block")
        ->required();
    cmd->add_option("--budget", budget, "Query cap");
    cmd->add_option("--seed", seed, "Seed for the random adversary");
    cmd->add_option("--input", input, "Bitstring for the input adversary, position 0 first");
    cmd->add_option("--params", params_text, "JSON object with n, m, k (defaults from the construction)");
    cmd->add_option("-o,--output", output, "Output path (default stdout)");
  }

  int run(std::ostream& out) const {
    const auto f = source.load();
    Json params = source.construction_params();
    if (!params_text.empty()) {
      const Json overrides = json_argument(params_text, "--params");
      if (!overrides.is_object()) throw InputError("--params must be a JSON object");
      for (const auto& [key, value] : overrides.items()) params[key] = value;
    }
    const std::optional<int> slice_k =
        f.domain().is_slice() ? std::optional<int>(f.domain().k()) : std::nullopt;
    auto n = [&] { return param_or(params, "n", std::nullopt); };
    auto m = [&] { return param_or(params, "m", std::nullopt); };
    auto k = [&](std::optional<int> fallback) { return param_or(params, "k", fallback); };

    std::unique_ptr<AlgorithmPlayer> alg;
    if (algorithm == "eq") alg = eq_algorithm(k(f.n() / 4));
    else if (algorithm == "weights_a") alg = weights_algorithm_a(n(), m(), k(slice_k));
    else if (algorithm == "weights_b") alg = weights_algorithm_b(n(), m(), k(slice_k));
    else if (algorithm == "weights_m2") alg = weights_m2_algorithm(n(), k(slice_k));
    else if (algorithm == "weight1") alg = weight1_algorithm(f);
    else if (algorithm == "weight2") alg = weight2_algorithm(f);
    else if (algorithm == "optimal") alg = tree_algorithm(f, exact_depth(f).tree);
    else throw InputError("unknown algorithm '" + algorithm + "'");

    std::unique_ptr<AdversaryPlayer> adv;
    if (adversary == "eq") {
      adv = eq_adversary(k(f.n() / 4));
    } else if (adversary == "input") {
      if (input.empty()) throw InputError("the input adversary needs --input");
      const Mask x = parse_bitstring(input);
      if (static_cast<int>(input.size()) != f.n() || !f.domain().contains(x)) {
        throw InputError("--input is not a member of " + f.domain().describe());
      }
      adv = input_adversary(x);
    } else if (adversary == "random") {
      adv = random_adversary(f, seed);
    } else if (adversary.rfind("weights_", 0) == 0) {
      adv = weights_adversary(n(), m(), k(slice_k), weights_mode_from_string(adversary.substr(8)));
    } else {
      throw InputError("unknown adversary '" + adversary + "'");
    }

    const auto t = run_match(*alg, *adv, f, budget);
    write_output(output, transcript_json_lines(t), out);
    return kExitOk;
  }
};

// ---- experiment ----

struct ExperimentCmd {
  std::string name;
  std::string spec_file;
  std::string params_text;
  int jobs = 1;
  bool csv = false;
  bool list = false;
  std::string output;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("experiment", "Run a registered experiment and emit its report");
    cmd->add_option("name", name, "Experiment name");
    cmd->add_option("--spec", spec_file, "Spec file {\"name\", \"params\"}");
    cmd->add_option("--params", params_text, "Parameter overrides: JSON text or @file");
    cmd->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
    cmd->add_flag("--csv", csv, "Emit the cases as CSV");
    cmd->add_flag("--list", list, "List registered experiments");
    cmd->add_option("-o,--output", output, "Output path (default stdout)");
  }

  int run(std::ostream& out, std::ostream& err) const {
    if (list) {
      for (const auto& info : experiment_catalog()) out << info.name << "\t" << info.claim << "\n";
      return kExitOk;
    }
    std::string experiment = name;
    Json params = Json::object();
    if (!spec_file.empty()) {
      const Json spec = parse_json_text(read_file(spec_file), spec_file);
      if (!spec.is_object() || !spec.contains("name")) throw InputError("experiment spec needs a 'name'");
      experiment = spec.at("name").get<std::string>();
      params = spec.value("params", Json::object());
    }
    if (!params_text.empty()) {
      const Json overrides = json_argument(params_text, "--params");
      if (!overrides.is_object()) throw InputError("--params must be a JSON object");
      for (const auto& [key, value] : overrides.items()) params[key] = value;
    }
    if (experiment.empty()) throw InputError("experiment needs a name or --spec");
    const Json report = run_experiment(experiment, params, jobs);
    write_output(output, csv ? experiment_csv(report) : report.dump(2) + "\n", out);
    if (experiment_passed(report)) return kExitOk;
    err << "experiment " << experiment << ": " << report.at("failed").get<std::size_t>()
        << " asserted case(s) failed; first counterexample: " << report.at("counterexamples").at(0).dump()
        << "\n";
    return kExitAssertion;
  }
};

// ---- verify ----

struct VerifyCmd {
  FunctionSource source;
  std::string report_file;
  std::string measure;
  std::optional<int> value;
  std::string witness;

  void add(CLI::App& app) {
    auto* cmd = app.add_subcommand("verify", "Re-check stored witnesses against a function");
    source.add_to(cmd);
    cmd->add_option("--report", report_file, "Measure report produced by 'measure'");
    cmd->add_option("--measure", measure, "Single measure name");
    cmd->add_option("--value", value, "Claimed value for --measure");
    cmd->add_option("--witness", witness, "Witness JSON text or @file for --measure");
  }

  int run(std::ostream& out) const {
    const auto f = source.load();
    std::vector<std::tuple<std::string, int, Json>> claims;
    if (!report_file.empty()) {
      const Json report = parse_json_text(read_file(report_file), report_file);
      if (!report.contains("measures") || !report.at("measures").is_object()) {
        throw InputError("report has no 'measures' object");
      }
      if (report.contains("function") && report.at("function").contains("sha256") &&
          report.at("function").at("sha256") != sha256_hex(canonical_function_text(f))) {
        out << Json{{"ok", false}, {"message", "report was computed for a different function"}}.dump() << "\n";
        return kExitAssertion;
      }
      for (const auto& [name, e] : report.at("measures").items()) {
        claims.emplace_back(name, e.at("value").get<int>(), e.at("witness"));
      }
    } else {
      if (measure.empty() || !value) throw InputError("verify needs --report, or --measure with --value");
      claims.emplace_back(measure, *value, witness.empty() ? Json(nullptr) : json_argument(witness, "--witness"));
    }
    bool all = true;
    for (const auto& [name, v, w] : claims) {
      const auto check = verify_witness(f, name, v, w);
      all = all && check.ok;
      out << Json{{"measure", name}, {"value", v}, {"ok", check.ok}, {"message", check.message}}.dump() << "\n";
    }
    return all ? kExitOk : kExitAssertion;
  }
};

// ---- list ----

struct ListCmd {
  void add(CLI::App& app) { app.add_subcommand("list", "List measures and experiments"); }

  int run(std::ostream& out) const {
    out << "measures:";
    for (const auto& m : measure_names()) out << ' ' << m;
    out << "\nexperiments:";
    for (const auto& e : experiment_catalog()) out << ' ' << e.name;
    out << "\n";
    return kExitOk;
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact complexity measures and adversary games for functions on hypercube slices", "slicebench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kEngineVersion);
  ConstructCmd construct_cmd;
  MeasureCmd measure_cmd;
  MatchCmd match_cmd;
  ExperimentCmd experiment_cmd;
  VerifyCmd verify_cmd;
  ListCmd list_cmd;
  construct_cmd.add(app);
  measure_cmd.add(app);
  match_cmd.add(app);
  experiment_cmd.add(app);
  verify_cmd.add(app);
  list_cmd.add(app);

  std::vector<const char*> argv;
  argv.push_back("slicebench");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const std::string which = app.get_subcommands().front()->get_name();
    if (which == "construct") return construct_cmd.run(out);
    if (which == "measure") return measure_cmd.run(out);
    if (which == "match") return match_cmd.run(out);
    if (which == "experiment") return experiment_cmd.run(out, err);
    if (which == "verify") return verify_cmd.run(out);
    return list_cmd.run(out);
  } catch (const ResourceError& e) {
    err << Json{{"error", "resource"}, {"message", e.what()}}.dump() << "\n";
    return kExitResource;
  } catch (const AdversaryInvalidError& e) {
    err << Json{{"error", "adversary_invalid"}, {"message", e.what()}}.dump() << "\n";
    return kExitAssertion;
  } catch (const InputError& e) {
    err << Json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    err << Json{{"error", "domain"}, {"message", e.what()}}.dump() << "\n";
    return kExitInput;
  } catch (const EmptyRestrictionError& e) {
    err << Json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    err << Json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return kExitInput;
  }
}

}  // namespace slicebench
