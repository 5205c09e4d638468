#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slicebench/io.hpp"

namespace slicebench {

/// Participates in cache keys; bump when any engine's results could change.
inline constexpr const char* kEngineVersion = "slicebench-engine-1";

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitAssertion = 2,
  kExitResource = 3,
  kExitInput = 4,
};

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

/// Content-addressed store of measure entries, one JSON file per key.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  /// SLICEBENCH_CACHE_DIR, else $XDG_CACHE_HOME/slicebench, else
  /// $HOME/.cache/slicebench, else ./.slicebench-cache.
  static std::filesystem::path default_dir();

  /// sha256 over canonical function text, measure name and engine version.
  static std::string key(const std::string& canonical_text, const std::string& measure);

  std::optional<std::string> get(const std::string& key) const;
  /// Writes through a temporary file and a rename so readers never see a
  /// partial entry.
  void put(const std::string& key, const std::string& text) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

struct ExperimentCase {
  std::string key;
  /// False for report-only cases (open questions).
  bool asserted = true;
  bool pass = true;
  Json values = Json::object();
};

struct ExperimentInfo {
  std::string name;
  std::string claim;
  Json default_params;
};

const std::vector<ExperimentInfo>& experiment_catalog();

/// Runs a registered experiment. `params` overrides the defaults key by key.
/// The report holds the claim, the effective parameters, totals and every
/// case sorted by key; it carries no timing, so reruns are byte-identical.
/// Throws InputError for unknown names or parameters.
Json run_experiment(const std::string& name, const Json& params, int jobs);

/// True when every asserted case of a report passed.
bool experiment_passed(const Json& report);

/// Flattens a report's cases to CSV: key, asserted, pass, then one column
/// per value key (union over cases, first-seen order).
std::string experiment_csv(const Json& report);

/// Entry point shared by the slicebench tool and the CLI tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicebench
