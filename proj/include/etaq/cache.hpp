#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "etaq/series.hpp"

namespace etaq {

/// On-disk store of expanded series, keyed by a canonical text such as
/// "eta:1^-1*2^2@100". Each file records its key, so a filename collision
/// reads as a miss rather than a wrong series.
class SeriesCache {
 public:
  explicit SeriesCache(std::filesystem::path dir);

  /// $ETAQ_CACHE_DIR, else $XDG_CACHE_HOME/etaq, else ~/.cache/etaq.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<UniSeries> load(const std::string& key) const;
  /// Best effort: write failures are ignored.
  void store(const std::string& key, const UniSeries& s) const;

  /// Keys of all entries, sorted.
  std::vector<std::string> keys() const;
  /// Removes every entry; returns how many were removed.
  std::size_t clear() const;

 private:
  std::filesystem::path file_for(const std::string& key) const;

  std::filesystem::path dir_;
};

}  // namespace etaq
