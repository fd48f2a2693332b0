#include "modinv/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "modinv/report.hpp"

namespace modinv {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

SeriesCache::SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string SeriesCache::key(const std::string& operation, const std::string& params) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(operation + "|" + params + "|" + kCacheVersion)));
  return buf;
}

std::filesystem::path SeriesCache::path_for(const std::string& key) const {
  return dir_ / (key + ".json");
}

std::optional<std::string> SeriesCache::load(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::ostringstream os;
  os << in.rdbuf();
  ++hits_;
  return os.str();
}

void SeriesCache::store(const std::string& key, const std::string& content) {
  const auto id = std::hash<std::thread::id>{}(std::this_thread::get_id());
  const auto tmp = dir_ / (key + ".tmp." + std::to_string(id) + "." + std::to_string(temp_counter_++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path_for(key));
}

ThetaProvider cached_theta_provider(SeriesCache* cache) {
  if (cache == nullptr) return direct_theta_provider();
  return [cache](ThetaKind kind, const RootProfile& profile, int q_order) {
    const std::string params = to_string(kind) + ";dim=" + std::to_string(profile.fiber_dim()) +
                               ";degree=" + std::to_string(profile.max_form_degree()) +
                               ";q_order=" + std::to_string(q_order);
    const std::string key = SeriesCache::key("theta_bundle", params);
    if (auto text = cache->load(key)) {
      try {
        return theta_bundle_from_json(Json::parse(*text));
      } catch (const std::exception&) {
        // unreadable entry: recompute and overwrite below
      }
    }
    ThetaBundleSeries t = build_theta_bundle(kind, profile, q_order);
    cache->store(key, to_json(t).dump());
    return t;
  };
}

}  // namespace modinv
