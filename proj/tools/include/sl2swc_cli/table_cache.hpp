#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "sl2swc/characters.hpp"

namespace sl2swc::cli {

inline constexpr int kCacheFormatVersion = 1;

// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

// --cache-dir, then $SL2SWC_CACHE_DIR, then $XDG_CACHE_HOME/sl2swc, then
// ~/.cache/sl2swc; nullopt if none can be determined.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

class TableCache {
 public:
  enum class Status { Disabled, Hit, Miss, Stale };

  // A disabled cache when `dir` is nullopt.
  explicit TableCache(std::optional<std::filesystem::path> dir);

  // Loads (kind, q) from disk or computes it and writes the entry.
  TablePtr get(const std::string& kind, int q);
  // Loaded table, or nullopt when absent, stale or corrupt.
  std::optional<TablePtr> load(const std::string& kind, int q);
  // Best effort: returns false if the entry could not be written.
  bool store(const CharacterTable& t);

  std::filesystem::path entry_path(const std::string& kind, int q) const;
  Status last_status() const { return status_; }
  const std::optional<std::filesystem::path>& dir() const { return dir_; }

 private:
  std::optional<std::filesystem::path> dir_;
  Status status_ = Status::Disabled;
};

}  // namespace sl2swc::cli
