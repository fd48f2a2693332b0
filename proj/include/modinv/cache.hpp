#pragma once

// On-disk, content-addressed store for exact series. Entries are keyed by a
// hash of (operation, parameters, format version) and written atomically.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "modinv/anomaly.hpp"

namespace modinv {

inline constexpr const char* kCacheVersion = "modinv-series-v1";

std::uint64_t fnv1a64(std::string_view data);

class SeriesCache {
 public:
  explicit SeriesCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  /// "<operation>|<params>|<version>" hashed to 16 hex digits.
  static std::string key(const std::string& operation, const std::string& params);

  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, const std::string& content);

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;

  std::filesystem::path dir_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
  std::atomic<std::uint64_t> temp_counter_{0};
};

/// Theta bundle provider that reads from and fills `cache`. A null cache
/// gives the direct provider.
ThetaProvider cached_theta_provider(SeriesCache* cache);

}  // namespace modinv
