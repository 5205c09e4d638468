#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "slicebench/catalog.hpp"
#include "slicebench/cli.hpp"
#include "slicebench/io.hpp"

using namespace slicebench;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Fresh directory under the system temp dir, removed on scope exit.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("slicebench-test-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("sha256 known answers") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("construct writes a function file that loads back") {
  TempDir dir("construct");
  const auto r = cli({"construct", "eq", "k=2", "-o", dir.file("eq.json")});
  REQUIRE(r.code == kExitOk);
  CHECK(read_function_file(dir.file("eq.json")) == make_eq(2));
  CHECK(cli({"construct", "eq", "k=oops"}).code == kExitInput);
  CHECK(cli({"construct", "no_such_thing"}).code == kExitInput);
}

TEST_CASE("measure output is deterministic and served from the cache") {
  TempDir dir("measure");
  const std::string spec = R"({"name":"eq","params":{"k":2}})";
  const std::vector<std::string> args = {"measure", "--construct", spec, "-m", "D,C,s", "--cache-dir",
                                         dir.file("cache")};
  const auto first = cli(args);
  REQUIRE(first.code == kExitOk);
  const Json report = Json::parse(first.out);
  CHECK(report["measures"]["D"]["value"] == 5);
  CHECK(report["measures"]["C"]["value"].get<int>() <= 5);
  CHECK(report["engine"] == kEngineVersion);
  int entries = 0;
  for (const auto& e : fs::directory_iterator(dir.file("cache"))) entries += e.path().extension() == ".json";
  CHECK(entries == 3);

  const auto second = cli(args);
  CHECK(second.out == first.out);
  auto timed = args;
  timed.push_back("--timing");
  const Json with_timing = Json::parse(cli(timed).out);
  CHECK(with_timing["measures"]["D"]["cached"] == true);

  auto uncached = args;
  uncached.push_back("--no-cache");
  CHECK(cli(uncached).out == first.out);
}

TEST_CASE("cache keys depend on function, measure and engine version") {
  const std::string a = canonical_function_text(make_eq(1));
  const std::string b = canonical_function_text(make_eq(2));
  CHECK(ResultCache::key(a, "D") != ResultCache::key(b, "D"));
  CHECK(ResultCache::key(a, "D") != ResultCache::key(a, "C"));
  CHECK(ResultCache::key(a, "D") == sha256_hex(a + "\n" + "D" + "\n" + kEngineVersion));
}

TEST_CASE("verify accepts honest reports and rejects tampered ones") {
  TempDir dir("verify");
  REQUIRE(cli({"construct", "eq", "k=2", "-o", dir.file("f.json")}).code == kExitOk);
  const auto m = cli({"measure", "-f", dir.file("f.json"), "-m", "D,bs,deg", "--no-cache", "-o", dir.file("r.json")});
  REQUIRE(m.code == kExitOk);
  CHECK(cli({"verify", "-f", dir.file("f.json"), "--report", dir.file("r.json")}).code == kExitOk);

  Json report = Json::parse(slurp(dir.file("r.json")));
  report["measures"]["D"]["value"] = 4;
  std::ofstream(dir.file("bad.json")) << report.dump();
  CHECK(cli({"verify", "-f", dir.file("f.json"), "--report", dir.file("bad.json")}).code == kExitAssertion);

  REQUIRE(cli({"construct", "eq", "k=1", "-o", dir.file("other.json")}).code == kExitOk);
  CHECK(cli({"verify", "-f", dir.file("other.json"), "--report", dir.file("r.json")}).code == kExitAssertion);
}

TEST_CASE("match emits JSON lines ending in a verdict") {
  const auto r = cli({"match", "--construct", R"({"name":"eq","params":{"k":2}})", "--algorithm", "eq",
                      "--adversary", "eq", "--budget", "4"});
  REQUIRE(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string line, last;
  int steps = 0;
  while (std::getline(lines, line)) {
    if (Json::parse(line).contains("query")) ++steps;
    last = line;
  }
  CHECK(steps == 4);
  const Json verdict = Json::parse(last)["verdict"];
  CHECK(verdict["adversary_wins"] == true);
  CHECK(verdict["budget_exhausted"] == true);
}

TEST_CASE("experiments report and exit codes") {
  const auto r = cli({"experiment", "kml-count", "-j", "2"});
  REQUIRE(r.code == kExitOk);
  const Json report = Json::parse(r.out);
  CHECK(report["ok"] == true);
  CHECK(report["cases"].size() == 3);
  CHECK(cli({"experiment", "kml-count", "-j", "1"}).out == r.out);
  CHECK(cli({"experiment", "no-such-experiment"}).code == kExitInput);
  CHECK(cli({"experiment", "kml-count", "--params", R"({"bogus":1})"}).code == kExitInput);
  CHECK(cli({"experiment", "--list"}).out.find("eq-depth") != std::string::npos);
}

TEST_CASE("error mapping") {
  CHECK(cli({}).code == kExitInput);
  CHECK(cli({"--help"}).code == kExitOk);
  CHECK(cli({"measure", "-m", "D"}).code == kExitInput);
  CHECK(cli({"measure", "--construct", "{\"name\":\"eq\",\"params\":{\"k\":2}}", "-m", "bogus"}).code == kExitInput);
  CHECK(cli({"measure", "--construct", "{broken", "-m", "D"}).code == kExitInput);
  const auto resource = cli({"measure", "--construct", R"({"name":"random","params":{"n":40,"k":20,"seed":1}})",
                             "-m", "D", "--no-cache"});
  CHECK(resource.code == kExitResource);
  CHECK(cli({"list"}).out.find("measures:") == 0);
}
