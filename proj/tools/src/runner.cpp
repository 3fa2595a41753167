#include "sl2swc_cli/runner.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "sl2swc/error.hpp"
#include "sl2swc_cli/json_io.hpp"
#include "sl2swc_cli/rep_expr.hpp"
#include "sl2swc_cli/table_cache.hpp"

namespace sl2swc::cli {
namespace {

struct Flags {
  std::optional<std::string> cache_dir;
  bool no_cache = false;

  int q = 0;
  std::string group = "sl2";
  std::string rep;
  std::optional<int> truncate;
  std::string suite;
  std::optional<std::size_t> trials;
  std::uint64_t seed = kDefaultSeed;
  int rank = 0;
  std::optional<int> max_degree;
  std::string ring_group;
};

TableCache make_cache(const Flags& f) {
  if (f.no_cache) return TableCache(std::nullopt);
  return TableCache(resolve_cache_dir(f.cache_dir));
}

TablePtr sl2_table(const Flags& f) {
  auto cache = make_cache(f);
  return cache.get("sl2", f.q);
}

int cmd_table(const Flags& f, std::ostream& out) {
  auto cache = make_cache(f);
  out << dump(table_json(*cache.get(f.group, f.q)));
  return kExitOk;
}

int cmd_swc(const Flags& f, std::ostream& out) {
  const auto t = sl2_table(f);
  const auto expr = parse_expr(f.rep);
  const auto pi = evaluate(expr, t);
  if (f.truncate && *f.truncate < 0) fail(ErrorKind::InvalidArgument, "--truncate must be >= 0");
  const auto report = swc_report(pi, f.truncate);
  auto j = swc_json(report, to_string(expr));
  j["multiplicities"] = canonical_expr(pi);
  out << dump(j);
  return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const auto t = sl2_table(f);
  SuiteOptions o;
  o.trials = f.trials;
  o.seed = f.seed;
  auto one = [&](const std::string& s) {
    if (s == "theorem") return suite_theorem(t, o);
    if (s == "wu") return suite_wu(t, o);
    if (s == "gow") return suite_gow(t);
    return suite_obstruction(t, o);
  };
  if (f.suite != "all") {
    const auto r = one(f.suite);
    out << dump(suite_json(r));
    return r.ok() ? kExitOk : kExitFailure;
  }
  json j;
  j["schema"] = kSchema;
  j["suite"] = "all";
  j["q"] = f.q;
  j["seed"] = f.seed;
  std::size_t cases = 0, passes = 0;
  bool ok = true;
  json failures = json::array();
  json parts = json::array();
  for (const char* s : {"gow", "theorem", "wu", "obstruction"}) {
    const auto r = one(s);
    cases += r.cases;
    passes += r.passes;
    ok = ok && r.ok();
    auto rj = suite_json(r);
    for (auto& c : rj["failures"]) {
      c["suite"] = s;
      failures.push_back(c);
    }
    rj.erase("schema");
    parts.push_back(rj);
  }
  j["cases"] = cases;
  j["passes"] = passes;
  j["failure_count"] = cases - passes;
  j["failures"] = failures;
  j["suites"] = parts;
  out << dump(j);
  return ok ? kExitOk : kExitFailure;
}

int cmd_dickson(const Flags& f, std::ostream& out) {
  if (f.rank < 1 || f.rank > 8) fail(ErrorKind::InvalidArgument, "--rank must lie in [1, 8]");
  const int d = f.max_degree.value_or((1 << f.rank) - 1);
  out << dump(dickson_json(dickson(f.rank, d), f.rank));
  return kExitOk;
}

int parse_suffix(const std::string& s, std::size_t from) {
  const std::string tail = s.substr(from);
  if (tail.empty() || tail.size() > 3 || !std::all_of(tail.begin(), tail.end(), ::isdigit)) {
    fail(ErrorKind::InvalidArgument, "bad group '" + s + "'");
  }
  return std::stoi(tail);
}

int cmd_cohomology(const Flags& f, std::ostream& out) {
  const std::string& g = f.ring_group;
  const int d = *f.max_degree;
  if (d < 0) fail(ErrorKind::InvalidArgument, "--max-degree must be >= 0");
  RingPresentation p;
  if (g == "Q8") {
    p = rings::q8();
  } else if (g.rfind("Q2n:", 0) == 0) {
    const int n = parse_suffix(g, 4);
    if (n < 3 || n > 16) fail(ErrorKind::InvalidArgument, "Q2n:N needs 3 <= N <= 16");
    p = rings::gen_quaternion(n);
  } else if (g == "sl2odd") {
    p = rings::sl2odd();
  } else if (g.rfind("c2:", 0) == 0) {
    const int r = parse_suffix(g, 3);
    if (r < 1 || r > 8) fail(ErrorKind::InvalidArgument, "c2:R needs 1 <= R <= 8");
    p = rings::poly(r);
  } else {
    fail(ErrorKind::InvalidArgument, "unknown group '" + g + "' (Q8, Q2n:N, sl2odd, c2:R)");
  }
  out << dump(cohomology_json(g, p, d));
  return kExitOk;
}

int exit_for(ErrorKind k) {
  return k == ErrorKind::Mismatch || k == ErrorKind::LiftFailure ? kExitFailure : kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Stiefel-Whitney classes of SL(2,q) representations", "sl2swc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cache-dir", f.cache_dir, "Character-table cache directory");
  app.add_flag("--no-cache", f.no_cache, "Do not read or write the table cache");

  auto* table = app.add_subcommand("table", "Character table of SL(2,q) or GL(2,q)");
  table->add_option("--q", f.q, "Field order")->required();
  table->add_option("--group", f.group, "Group")->check(CLI::IsMember({"sl2", "gl2"}));

  auto* swc = app.add_subcommand("swc", "Total Stiefel-Whitney class of a representation");
  swc->add_option("--q", f.q, "Field order")->required();
  swc->add_option("--rep", f.rep, "Representation expression")->required();
  swc->add_option("--truncate", f.truncate, "Truncation degree");

  auto* verify = app.add_subcommand("verify", "Run oracle verification suites");
  verify->add_option("--q", f.q, "Field order")->required();
  verify->add_option("--suite", f.suite, "Suite")
      ->required()
      ->check(CLI::IsMember({"theorem", "wu", "gow", "obstruction", "all"}));
  verify->add_option("--trials", f.trials, "Random cases per suite");
  verify->add_option("--seed", f.seed, "Random seed");

  auto* dick = app.add_subcommand("dickson", "Dickson invariants from the linear-form product");
  dick->add_option("--rank", f.rank, "Rank r")->required();
  dick->add_option("--max-degree", f.max_degree, "Truncation degree (default 2^r - 1)");

  auto* coh = app.add_subcommand("cohomology", "Graded dimensions and relations of a cohomology ring");
  coh->add_option("--group", f.ring_group, "Q8, Q2n:N, sl2odd or c2:R")->required();
  coh->add_option("--max-degree", f.max_degree, "Top degree")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_json("UsageError", e.what()).dump() << "\n";
    return kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(f, out);
    if (swc->parsed()) return cmd_swc(f, out);
    if (verify->parsed()) return cmd_verify(f, out);
    if (dick->parsed()) return cmd_dickson(f, out);
    return cmd_cohomology(f, out);
  } catch (const Error& e) {
    err << error_json(std::string(to_string(e.kind())), e.detail()).dump() << "\n";
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    err << error_json("InternalError", e.what()).dump() << "\n";
    return kExitFailure;
  }
}

}  // namespace sl2swc::cli
