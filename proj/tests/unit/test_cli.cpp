#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "sl2swc_cli/json_io.hpp"
#include "sl2swc_cli/rep_expr.hpp"
#include "sl2swc_cli/runner.hpp"
#include "sl2swc_cli/table_cache.hpp"

using namespace sl2swc;
using namespace sl2swc::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("sl2swc-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string random_expr(std::mt19937_64& rng, int depth = 0) {
  std::uniform_int_distribution<int> pick(0, depth > 1 ? 2 : 3);
  std::uniform_int_distribution<int> idx(1, 7);
  switch (pick(rng)) {
    case 0:
      return "triv";
    case 1:
      return "reg";
    case 2:
      return "X" + std::to_string(idx(rng));
    default:
      return "S(" + random_expr(rng, depth + 1) + ")";
  }
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parser examples") {
  auto t = char_table(Group::sl2(3));
  auto reg = parse_rep("reg", t);
  for (std::size_t i = 0; i < t->size(); ++i) CHECK(reg.multiplicity(i) == t->degree(i));
  auto x = parse_rep("S(X4) + 2*X1", t);
  CHECK(x == symmetrize(VirtualRep::irreducible(t, 3)) + VirtualRep::trivial(t) * 2);
  CHECK(parse_rep("  S ( X4 )+2 * X1 ", t) == x);
  CHECK(parse_rep("-X2 + X2", t) == VirtualRep::zero(t));
  auto t5 = char_table(Group::sl2(5));
  CHECK_FAILS_WITH(parse_rep("ps(0)", t5), ErrorKind::BadConstructionParams);
  CHECK(parse_rep("ps(1)", t5).degree() == 6);
  CHECK(parse_rep("S(cusp(1))", t5).degree() == 8);
}

TEST_CASE("parser errors") {
  auto t = char_table(Group::sl2(3));
  CHECK_FAILS_WITH(parse_rep("X8", t), ErrorKind::UnknownIrreducible);
  CHECK_FAILS_WITH(parse_rep("X0", t), ErrorKind::UnknownIrreducible);
  for (const char* bad : {"", "X1 +", "2*", "X", "S(X1", "foo", "X1 X2", "3 X1", "ps()", "99999999999999999999*X1"}) {
    CAPTURE(bad);
    CHECK_FAILS_WITH(parse_expr(bad), ErrorKind::SyntaxError);
  }
  try {
    parse_expr("X1 + ?");
  } catch (const Error& e) {
    CHECK(e.detail().find("position 5") != std::string::npos);
  }
}

TEST_CASE("parse, print, parse round-trips") {
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<int> terms(1, 5), weight(-3, 3);
  for (int it = 0; it < 200; ++it) {
    std::string src;
    const int n = terms(rng);
    for (int k = 0; k < n; ++k) {
      const int w = weight(rng);
      if (k > 0) src += w < 0 ? " - " : " + ";
      else if (w < 0) src += "-";
      src += std::to_string(w < 0 ? -w : w) + "*" + random_expr(rng);
    }
    auto e = parse_expr(src);
    auto printed = to_string(e);
    CHECK(to_string(parse_expr(printed)) == printed);
  }
  auto t = char_table(Group::sl2(5));
  for (const char* s : {"ps(-3)", "cusp(7) - 2*S(X3)", "0*triv"}) CHECK(to_string(parse_expr(to_string(parse_expr(s)))) == to_string(parse_expr(s)));
  auto pi = parse_rep("2*X3 - X1 + S(X4)", t);
  CHECK(parse_rep(canonical_expr(pi), t) == pi);
  CHECK(parse_rep(canonical_expr(VirtualRep::zero(t)), t) == VirtualRep::zero(t));
}

TEST_CASE("table JSON round-trips") {
  for (auto [kind, q] : {std::pair<std::string, int>{"sl2", 3}, {"sl2", 4}, {"sl2", 9}, {"gl2", 3}}) {
    auto g = make_group(kind, q);
    auto t = char_table(g);
    auto j = table_json(*t);
    CHECK(j["schema"] == kSchema);
    CHECK(j["group"] == kind);
    auto back = table_from_json(json::parse(j.dump()), make_group(kind, q));
    CHECK(table_json(*back) == j);
    for (std::size_t i = 0; i < t->size(); ++i) CHECK(back->irreducible(i).values() == t->irreducible(i).values());
  }
  auto j = table_json(*char_table(Group::sl2(3)));
  j["characters"][1]["values"][0][0] = 5;
  CHECK_FAILS_WITH(table_from_json(j, Group::sl2(3)), ErrorKind::CacheError);
  CHECK_FAILS_WITH(table_from_json(table_json(*char_table(Group::sl2(3))), Group::sl2(5)), ErrorKind::CacheError);
}

TEST_CASE("digest") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("cache coherence, corruption and versioning") {
  TempDir dir;
  TableCache cache(dir.path);
  auto fresh = cache.get("sl2", 5);
  CHECK(cache.last_status() == TableCache::Status::Miss);
  CHECK(fs::exists(cache.entry_path("sl2", 5)));
  auto cached = cache.get("sl2", 5);
  CHECK(cache.last_status() == TableCache::Status::Hit);
  CHECK(table_json(*cached) == table_json(*fresh));
  CHECK(cached->dixon_prime() == fresh->dixon_prime());
  for (std::size_t i = 0; i < fresh->size(); ++i) {
    CHECK(cached->irreducible(i).values() == fresh->irreducible(i).values());
    CHECK(cached->indicator(i) == fresh->indicator(i));
    CHECK(cached->dual(i) == fresh->dual(i));
  }

  // Tampered contents fail the digest and are recomputed.
  const auto path = cache.entry_path("sl2", 5);
  json doc = json::parse(std::ifstream(path));
  doc["table"]["characters"][2]["degree"] = 77;
  std::ofstream(path) << doc.dump();
  CHECK_FALSE(cache.load("sl2", 5).has_value());
  CHECK(cache.last_status() == TableCache::Status::Stale);
  auto again = cache.get("sl2", 5);
  CHECK(table_json(*again) == table_json(*fresh));
  CHECK(cache.load("sl2", 5).has_value());

  // Version mismatch forces recompute.
  doc = json::parse(std::ifstream(path));
  doc["version"] = kCacheFormatVersion + 1;
  std::ofstream(path) << doc.dump();
  CHECK_FALSE(cache.load("sl2", 5).has_value());

  std::ofstream(path) << "{ not json";
  CHECK_FALSE(cache.load("sl2", 5).has_value());
  cache.get("sl2", 5);
  CHECK(cache.load("sl2", 5).has_value());

  for (const auto& entry : fs::directory_iterator(dir.path)) {
    CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
  }
}

TEST_CASE("cache directory resolution") {
  CHECK(resolve_cache_dir(std::string("/x/y")) == fs::path("/x/y"));
  ::setenv("SL2SWC_CACHE_DIR", "/from/env", 1);
  CHECK(resolve_cache_dir(std::nullopt) == fs::path("/from/env"));
  ::unsetenv("SL2SWC_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/xdg", 1);
  CHECK(resolve_cache_dir(std::nullopt) == fs::path("/xdg/sl2swc"));
  ::unsetenv("XDG_CACHE_HOME");
  ::setenv("HOME", "/home/u", 1);
  CHECK(resolve_cache_dir(std::nullopt) == fs::path("/home/u/.cache/sl2swc"));
}

TEST_CASE("runner") {
  TempDir dir;
  const std::string cd = "--cache-dir=" + dir.path.string();

  auto swc = run_cli({cd, "swc", "--q", "3", "--rep", "reg"});
  CHECK(swc.code == kExitOk);
  auto j = json::parse(swc.out);
  CHECK(j["schema"] == "sl2swc/1");
  CHECK(j["total"] == "1 + e + e^2 + e^3");
  CHECK(j["r_or_m"] == 3);
  for (const char* key : {"q", "parity", "r_or_m", "ell", "total", "obstruction_degree", "obstruction_class",
                          "top_nonzero", "criterion"}) {
    CHECK(j.contains(key));
  }
  CHECK(run_cli({cd, "swc", "--q", "3", "--rep", "reg"}).out == swc.out);
  CHECK(run_cli({"--no-cache", "swc", "--q", "3", "--rep", "reg"}).out == swc.out);

  auto d = run_cli({"dickson", "--rank", "2"});
  CHECK(d.code == kExitOk);
  CHECK(json::parse(d.out)["invariants"][0]["polynomial"] == "v1^2 + v1*v2 + v2^2");

  auto gow = run_cli({cd, "verify", "--q", "5", "--suite", "gow"});
  CHECK(gow.code == kExitOk);
  auto gj = json::parse(gow.out);
  CHECK(gj["failures"].empty());
  CHECK(gj["cases"] == gj["passes"]);
  CHECK(gj["seed"] == 42);

  auto th = run_cli({cd, "verify", "--q", "4", "--suite", "theorem", "--trials", "5", "--seed", "7"});
  CHECK(th.code == kExitOk);
  CHECK(json::parse(th.out)["seed"] == 7);
  CHECK(run_cli({cd, "verify", "--q", "4", "--suite", "theorem", "--trials", "5", "--seed", "7"}).out == th.out);

  auto coh = run_cli({"cohomology", "--group", "Q8", "--max-degree", "12"});
  CHECK(coh.code == kExitOk);
  CHECK(json::parse(coh.out)["dimensions"] == json::parse("[1,2,2,1,1,2,2,1,1,2,2,1,1]"));
  CHECK(json::parse(run_cli({"cohomology", "--group", "c2:1", "--max-degree", "5"}).out)["dimensions"] ==
        json::parse("[1,1,1,1,1,1]"));
  CHECK(run_cli({"cohomology", "--group", "Q2n:4", "--max-degree", "4"}).code == kExitOk);
  CHECK(json::parse(run_cli({"cohomology", "--group", "sl2odd", "--max-degree", "8"}).out)["dimensions"] ==
        json::parse("[1,0,0,1,1,0,0,1,1]"));

  auto tab = run_cli({cd, "table", "--q", "3", "--group", "gl2"});
  CHECK(tab.code == kExitOk);
  CHECK(json::parse(tab.out)["characters"].size() == 8);
}

TEST_CASE("runner errors") {
  auto expect = [](std::vector<std::string> args, int code, const std::string& kind) {
    auto r = run_cli(std::move(args));
    CHECK(r.code == code);
    CHECK(r.out.empty());
    auto e = json::parse(r.err);
    CHECK(e["error"] == kind);
    CHECK(e.contains("detail"));
  };
  expect({"--no-cache", "swc", "--q", "3", "--rep", "X1 +"}, kExitUsage, "SyntaxError");
  expect({"--no-cache", "swc", "--q", "3", "--rep", "X12"}, kExitUsage, "UnknownIrreducible");
  expect({"--no-cache", "swc", "--q", "5", "--rep", "ps(0)"}, kExitUsage, "BadConstructionParams");
  expect({"--no-cache", "swc", "--q", "3", "--rep", "X2"}, kExitUsage, "NotOrthogonal");
  expect({}, kExitUsage, "UsageError");
  expect({"frobnicate"}, kExitUsage, "UsageError");
  expect({"swc", "--q", "3"}, kExitUsage, "UsageError");
  expect({"verify", "--q", "3", "--suite", "nope"}, kExitUsage, "UsageError");
  expect({"--no-cache", "table", "--q", "6"}, kExitUsage, "InvalidArgument");
  expect({"dickson", "--rank", "0"}, kExitUsage, "InvalidArgument");
  expect({"dickson", "--rank", "3", "--max-degree", "5"}, kExitUsage, "TruncationTooLow");
  expect({"cohomology", "--group", "Q7", "--max-degree", "4"}, kExitUsage, "InvalidArgument");
  auto help = run_cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("verify") != std::string::npos);
}

}
