#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace superdirac {

/// Read-through result cache: one versioned JSON file per key under the
/// cache directory.  Corrupted or stale entries are detected by a
/// payload hash and silently recomputed; IO failures degrade to
/// recomputation with a warning on stderr.
class ResultCache {
 public:
  static constexpr int kSchemaVersion = 1;

  ResultCache(std::filesystem::path dir, bool enabled);

  bool enabled() const { return enabled_; }
  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& payload) const;

  /// Stable 64-bit FNV-1a hash, hex encoded.
  static std::string fingerprint(const std::string& text);

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
  bool enabled_;
};

}  // namespace superdirac
