#include "superdirac/cache.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "superdirac/json_io.hpp"

namespace superdirac {

ResultCache::ResultCache(std::filesystem::path dir, bool enabled)
    : dir_(std::move(dir)), enabled_(enabled) {}

std::string ResultCache::fingerprint(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  return dir_ / (fingerprint(key) + ".json");
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  try {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    Json entry = Json::parse(in, nullptr, false);
    if (entry.is_discarded()) return std::nullopt;
    if (!entry.contains("schema_version") ||
        entry["schema_version"] != kSchemaVersion)
      return std::nullopt;
    if (entry.value("key", std::string()) != key) return std::nullopt;
    std::string payload = entry.value("payload", std::string());
    if (entry.value("hash", std::string()) != fingerprint(payload))
      return std::nullopt;  // corrupted entry: caller recomputes
    return payload;
  } catch (const std::exception& e) {
    std::cerr << "warning: cache read failed (" << e.what()
              << "); recomputing\n";
    return std::nullopt;
  }
}

void ResultCache::put(const std::string& key, const std::string& payload) const {
  if (!enabled_) return;
  try {
    std::filesystem::create_directories(dir_);
    Json entry{{"schema_version", kSchemaVersion},
               {"key", key},
               {"payload", payload},
               {"hash", fingerprint(payload)}};
    std::ofstream out(path_for(key), std::ios::trunc);
    out << entry.dump(2) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "warning: cache write failed (" << e.what() << ")\n";
  }
}

}  // namespace superdirac
