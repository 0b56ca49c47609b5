#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams, so it can be driven from tests.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotshadow/knotshadow.hpp"

#ifndef KNOTSHADOW_FIXTURES_DIR
#define KNOTSHADOW_FIXTURES_DIR "fixtures"
#endif

namespace knotshadow::cli {

inline constexpr const char* kGuardEnv = "KNOTSHADOW_MAX_CROSSINGS";

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kGuard = 3 };

struct RunConfig {
  std::string family = "all";
  std::size_t n = 0;
  std::size_t rows = 5;
  std::size_t order = 5;
  std::size_t max_crossings = 12;
  std::string method;
  std::string format;
  std::string expr;
  std::string out_path;
  std::string fixtures_dir = KNOTSHADOW_FIXTURES_DIR;
  bool verify = false;
  std::optional<std::size_t> guard;
  unsigned threads = 1;
};

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::size_t resolve_guard(const RunConfig& cfg) {
  std::size_t guard = kDefaultCrossingGuard;
  if (const char* env = std::getenv(kGuardEnv); env && *env) {
    try {
      std::size_t used = 0;
      guard = std::stoul(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw UsageError(std::string(kGuardEnv) + " must be a nonnegative integer");
    }
  }
  if (cfg.guard) guard = *cfg.guard;
  if (guard > kHardCrossingCap)
    throw UsageError("crossing guard " + std::to_string(guard) + " exceeds the hard cap of " +
                     std::to_string(kHardCrossingCap));
  return guard;
}

inline Family parse_family(const std::string& name) {
  try {
    return family_from_name(name);
  } catch (const Error&) {
    throw UsageError("unknown family '" + name + "'");
  }
}

inline void check_guard(std::size_t crossings, std::size_t guard) {
  if (crossings > guard)
    throw Error(ErrorKind::TooManyCrossings,
                std::to_string(crossings) + " crossings exceed the guard of " + std::to_string(guard));
}

inline int cmd_poly(const RunConfig& cfg, std::ostream& out) {
  const FamilySpec spec{parse_family(cfg.family), cfg.n};
  const std::string method = cfg.method.empty() ? "closed" : cfg.method;
  Polynomial p;
  if (method == "closed") {
    p = family_poly_closed(spec);
  } else if (method == "recurrence") {
    p = family_poly_recurrence(spec);
  } else if (method == "brute") {
    const std::size_t guard = resolve_guard(cfg);
    check_guard(crossing_count(spec), guard);
    p = state_sum(build(spec), {guard, cfg.threads});
  } else {
    throw UsageError("unknown method '" + method + "'");
  }
  out << p << "\n";
  return kOk;
}

inline int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const Family f = parse_family(cfg.family);
  const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
  if (fmt != "csv" && fmt != "json" && fmt != "md") throw UsageError("unknown format '" + fmt + "'");
  out << export_triangle(triangle(f, cfg.rows), export_format_from_name(fmt));
  return kOk;
}

inline int cmd_export(const RunConfig& cfg, std::ostream& out) {
  const Family f = parse_family(cfg.family);
  if (cfg.format != "csv" && cfg.format != "bfile") throw UsageError("export format must be bfile or csv");
  const std::string text = export_triangle(triangle(f, cfg.rows), export_format_from_name(cfg.format));
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + cfg.out_path);
    file << text;
  }
  return kOk;
}

inline int cmd_series(const RunConfig& cfg, std::ostream& out) {
  const Series s = family_gf(parse_family(cfg.family), cfg.order);
  for (std::size_t j = 0; j <= s.order(); ++j) out << "y^" << j << ": " << s[j] << "\n";
  return kOk;
}

inline int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const std::size_t guard = resolve_guard(cfg);
  check_guard(cfg.max_crossings, guard);
  std::vector<Family> families;
  if (cfg.family == "all") {
    for (const auto& i : kCatalog) families.push_back(i.family);
  } else {
    families.push_back(parse_family(cfg.family));
  }
  std::size_t passed = 0, failed = 0;
  for (Family f : families) {
    for (std::size_t n = 0;; ++n) {
      const FamilySpec spec{f, n};
      const std::size_t m = crossing_count(spec);
      if (m > cfg.max_crossings || (f == Family::Unknot && n > 0)) break;
      const Polynomial brute = state_sum(build(spec), {guard, cfg.threads});
      const Polynomial closed = family_poly_closed(spec);
      const Polynomial rec = family_poly_recurrence(spec);
      const bool ok = brute == closed && closed == rec;
      (ok ? passed : failed)++;
      out << family_name(f) << " n=" << n << " crossings=" << m << (ok ? " ok" : " FAIL") << "\n";
      if (!ok)
        out << "  brute:      " << brute << "\n  closed:     " << closed << "\n  recurrence: " << rec << "\n";
    }
  }
  out << "checked " << passed + failed << ", passed " << passed << ", failed " << failed << "\n";
  return failed == 0 ? kOk : kVerifyFailed;
}

inline int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const std::string method = cfg.method.empty() ? "laws" : cfg.method;
  if (method != "laws" && method != "brute") throw UsageError("unknown method '" + method + "'");
  const ExprPtr e = parse(cfg.expr);
  Polynomial p;
  if (method == "brute") {
    const std::size_t guard = resolve_guard(cfg);
    p = eval_poly(e, EvalMethod::Brute, {{guard, cfg.threads}});
  } else {
    p = eval_poly(e, EvalMethod::Laws);
  }
  out << p << "\n";
  return kOk;
}

inline int cmd_fixtures(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.verify) throw UsageError("fixtures: nothing to do (use --verify)");
  const std::filesystem::path dir(cfg.fixtures_dir);
  const auto registry = load_registry(dir / "registry.txt");
  bool all = true;
  for (const auto& id : reference_table_ids()) {
    if (!std::filesystem::exists(fixture_path(dir, id))) {
      all = false;
      out << id << ": FAIL (missing " << fixture_path(dir, id).string() << ")\n";
      continue;
    }
    const ComparisonReport rep = compare_with_reference(id, dir, registry);
    all = all && rep.passed;
    std::size_t registered = 0;
    for (const auto& m : rep.mismatches) registered += m.registered ? 1 : 0;
    out << id << ": " << (rep.passed ? "ok" : "FAIL") << " (" << rep.rows_checked << " rows, " << rep.cells_checked
        << " cells, " << registered << " registered discrepancies)\n";
    for (const auto& m : rep.mismatches) {
      if (m.kind == RegistryEntry::Kind::RowLabel)
        out << "  row label " << m.label << " holds n=" << m.n;
      else
        out << "  (" << m.n << "," << m.k << "): printed " << (m.printed.empty() ? "-" : m.printed) << ", derived "
            << m.derived;
      out << (m.registered ? " [registered]" : " [UNREGISTERED]") << "\n";
    }
    for (const auto& e : rep.stale) out << "  stale registry entry: " << e.note << "\n";
  }
  for (const auto& c : check_formula_entries(registry)) {
    all = all && c.passed;
    out << "formula " << c.entry.key << " at (" << c.entry.n << "," << c.entry.k << "): printed "
        << c.printed_value << ", true " << c.true_value << (c.passed ? " ok" : " FAIL") << "\n";
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"State-sum polynomials of knot shadows", "knotshadow"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  RunConfig cfg;
  std::size_t guard_value = 0;
  auto* guard_opt = app.add_option("--guard", guard_value, "crossing guard for brute force (max 34)");
  app.add_option("--threads", cfg.threads, "threads for brute-force enumeration")->check(CLI::Range(1U, 256U));

  auto* poly = app.add_subcommand("poly", "print a family polynomial");
  poly->add_option("--family", cfg.family)->required();
  poly->add_option("--n", cfg.n)->required();
  poly->add_option("--method", cfg.method)->check(CLI::IsMember({"brute", "closed", "recurrence"}));

  auto* table = app.add_subcommand("table", "print a coefficient triangle");
  table->add_option("--family", cfg.family)->required();
  table->add_option("--rows", cfg.rows)->required();
  table->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json", "md"}));

  auto* check = app.add_subcommand("check", "brute force vs closed form vs recurrence");
  check->add_option("--family", cfg.family);
  check->add_option("--max-crossings", cfg.max_crossings);

  auto* series = app.add_subcommand("series", "expand a generating function");
  series->add_option("--family", cfg.family)->required();
  series->add_option("--order", cfg.order)->required();

  auto* eval = app.add_subcommand("eval", "evaluate a knot expression");
  eval->add_option("--expr", cfg.expr)->required();
  eval->add_option("--method", cfg.method)->check(CLI::IsMember({"brute", "laws"}));

  auto* exp = app.add_subcommand("export", "write a triangle as a sequence file");
  exp->add_option("--family", cfg.family)->required();
  exp->add_option("--rows", cfg.rows)->required();
  exp->add_option("--format", cfg.format)->required()->check(CLI::IsMember({"bfile", "csv"}));
  exp->add_option("--out", cfg.out_path);

  auto* fixtures = app.add_subcommand("fixtures", "compare reference tables with derived values");
  fixtures->add_flag("--verify", cfg.verify);
  fixtures->add_option("--fixtures-dir", cfg.fixtures_dir);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (guard_opt->count() > 0) cfg.guard = guard_value;

  try {
    if (*poly) return detail::cmd_poly(cfg, out);
    if (*table) return detail::cmd_table(cfg, out);
    if (*check) return detail::cmd_check(cfg, out);
    if (*series) return detail::cmd_series(cfg, out);
    if (*eval) return detail::cmd_eval(cfg, out);
    if (*exp) return detail::cmd_export(cfg, out);
    if (*fixtures) return detail::cmd_fixtures(cfg, out);
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::TooManyCrossings) return kGuard;
    if (e.kind() == ErrorKind::RecurrenceMismatch) return kVerifyFailed;
    return kUsage;
  }
  return kUsage;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace knotshadow::cli
