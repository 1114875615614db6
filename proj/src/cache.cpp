#include "etaq/cache.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "etaq/serialize.hpp"

namespace etaq {

namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<nlohmann::json> read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

}  // namespace

SeriesCache::SeriesCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path SeriesCache::default_dir() {
  if (const char* d = std::getenv("ETAQ_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "etaq";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "etaq";
  return fs::temp_directory_path() / "etaq-cache";
}

fs::path SeriesCache::file_for(const std::string& key) const {
  std::ostringstream name;
  name << std::hex << fnv1a(key) << ".json";
  return dir_ / name.str();
}

std::optional<UniSeries> SeriesCache::load(const std::string& key) const {
  auto doc = read_json(file_for(key));
  if (!doc || !doc->contains("key") || (*doc)["key"] != key || !doc->contains("series")) return std::nullopt;
  try {
    return uni_from_json((*doc)["series"]);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void SeriesCache::store(const std::string& key, const UniSeries& s) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  const fs::path target = file_for(key);
  // Unique temporary name, then rename: concurrent writers never expose a partial file.
  std::random_device rd;
  const fs::path tmp = target.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << nlohmann::json{{"key", key}, {"series", to_json(s)}}.dump();
    if (!out) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

std::vector<std::string> SeriesCache::keys() const {
  std::vector<std::string> out;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return out;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    if (entry.path().extension() != ".json") continue;
    if (auto doc = read_json(entry.path()); doc && doc->contains("key") && (*doc)["key"].is_string()) {
      out.push_back((*doc)["key"].get<std::string>());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SeriesCache::clear() const {
  std::size_t removed = 0;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return 0;
  std::vector<fs::path> victims;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    if (entry.path().extension() == ".json") victims.push_back(entry.path());
  }
  for (const auto& p : victims) {
    if (fs::remove(p, ec)) ++removed;
  }
  return removed;
}

}  // namespace etaq
