#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <openssl/evp.h>

#include "slicebench/cli.hpp"
#include "slicebench/errors.hpp"

namespace slicebench {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path ResultCache::default_dir() {
  if (const char* env = std::getenv("SLICEBENCH_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "slicebench";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "slicebench";
  return ".slicebench-cache";
}

std::string ResultCache::key(const std::string& canonical_text, const std::string& measure) {
  return sha256_hex(canonical_text + "\n" + measure + "\n" + kEngineVersion);
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  std::ifstream in(dir_ / (key + ".json"), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void ResultCache::put(const std::string& key, const std::string& text) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;  // an unwritable cache only costs recomputation
  std::random_device rd;
  const fs::path tmp = dir_ / (key + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << text;
    if (!out) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, dir_ / (key + ".json"), ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace slicebench
