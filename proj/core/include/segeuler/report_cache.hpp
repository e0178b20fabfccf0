#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace segeuler {

/// Library version folded into every cache key.
inline constexpr std::string_view kCodeVersion = "segeuler-1.0.0/cache-1";

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);

/// Append-only JSON-lines store of finished verification cells, one file per
/// directory. Lines are {"key": hex, "cell": {...}}; the last line for a key
/// wins. Safe to share between threads.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path dir);

  static std::string key(std::string_view check, int n, std::string_view params);

  std::optional<nlohmann::json> lookup(const std::string& key) const;
  void store(const std::string& key, const nlohmann::json& cell);

  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, nlohmann::json> entries_;
};

}  // namespace segeuler
