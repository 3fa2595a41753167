#include "sl2swc_cli/table_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "sl2swc/error.hpp"
#include "sl2swc_cli/json_io.hpp"

namespace sl2swc::cli {
namespace fs = std::filesystem;

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  auto env = [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
  };
  if (auto d = env("SL2SWC_CACHE_DIR")) return fs::path(*d);
  if (auto d = env("XDG_CACHE_HOME")) return fs::path(*d) / "sl2swc";
  if (auto d = env("HOME")) return fs::path(*d) / ".cache" / "sl2swc";
  return std::nullopt;
}

TableCache::TableCache(std::optional<fs::path> dir) : dir_(std::move(dir)) {}

fs::path TableCache::entry_path(const std::string& kind, int q) const {
  const fs::path base = dir_ ? *dir_ : fs::path(".");
  return base / ("table-" + kind + "-q" + std::to_string(q) + "-v" + std::to_string(kCacheFormatVersion) + ".json");
}

std::optional<TablePtr> TableCache::load(const std::string& kind, int q) {
  if (!dir_) return std::nullopt;
  std::ifstream in(entry_path(kind, q));
  if (!in) {
    status_ = Status::Miss;
    return std::nullopt;
  }
  status_ = Status::Stale;
  json doc;
  try {
    doc = json::parse(in);
    if (doc.at("version").get<int>() != kCacheFormatVersion) return std::nullopt;
    if (doc.at("kind").get<std::string>() != kind || doc.at("q").get<int>() != q) return std::nullopt;
    const json& table = doc.at("table");
    if (fnv1a_hex(table.dump()) != doc.at("digest").get<std::string>()) return std::nullopt;
    auto t = table_from_json(table, make_group(kind, q));
    status_ = Status::Hit;
    return t;
  } catch (const json::exception&) {
    return std::nullopt;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CacheError) throw;
    return std::nullopt;
  }
}

bool TableCache::store(const CharacterTable& t) {
  if (!dir_) return false;
  const std::string kind = group_kind(*t.group());
  const int q = t.group()->q();
  json doc;
  doc["schema"] = kSchema;
  doc["version"] = kCacheFormatVersion;
  doc["kind"] = kind;
  doc["q"] = q;
  doc["table"] = table_json(t);
  doc["digest"] = fnv1a_hex(doc["table"].dump());

  std::error_code ec;
  fs::create_directories(*dir_, ec);
  if (ec) return false;
  const fs::path target = entry_path(kind, q);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return false;
    out << doc.dump();
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      return false;
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    return false;
  }
  return true;
}

TablePtr TableCache::get(const std::string& kind, int q) {
  if (!dir_) {
    status_ = Status::Disabled;
    return char_table(make_group(kind, q));
  }
  if (auto t = load(kind, q)) return *t;
  const Status s = status_;
  auto t = char_table(make_group(kind, q));
  store(*t);
  status_ = s;
  return t;
}

}  // namespace sl2swc::cli
