#include "segeuler/report_cache.hpp"

#include <cstdio>
#include <fstream>

#include "segeuler/errors.hpp"

namespace segeuler {

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ReportCache::ReportCache(std::filesystem::path dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ResourceError("cannot create cache directory " + dir.string() + ": " + ec.message());
  file_ = dir / "verify-cells.jsonl";
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // A torn final line from an interrupted run is skipped.
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("key") || !j.contains("cell")) continue;
    entries_[j["key"].get<std::string>()] = j["cell"];
  }
}

std::string ReportCache::key(std::string_view check, int n, std::string_view params) {
  std::string text;
  text.append(check).append("|").append(std::to_string(n)).append("|").append(params).append("|").append(
      kCodeVersion);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text)));
  return buf;
}

std::optional<nlohmann::json> ReportCache::lookup(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return std::optional<nlohmann::json>(std::in_place, it->second);
}

void ReportCache::store(const std::string& key, const nlohmann::json& cell) {
  std::lock_guard lock(mutex_);
  std::ofstream out(file_, std::ios::app);
  if (!out) throw ResourceError("cannot append to " + file_.string());
  out << nlohmann::json{{"key", key}, {"cell", cell}}.dump() << '\n';
  entries_[key] = cell;
}

}  // namespace segeuler
