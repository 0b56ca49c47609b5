#pragma once

// Coefficient triangles: generation from the coefficient recurrences,
// comparison with transcribed reference tables, and export.

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <tuple>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "knotshadow/algebra.hpp"
#include "knotshadow/error.hpp"
#include "knotshadow/families.hpp"
#include "knotshadow/formulas.hpp"

namespace knotshadow {

struct Triangle {
  Family family = Family::TwistLoop;
  std::size_t first_n = 0;
  std::vector<std::vector<Coefficient>> rows;

  /// Rows n0..n1 (inclusive) of this triangle.
  Triangle slice(std::size_t n0, std::size_t n1) const {
    if (n0 < first_n || n1 >= first_n + rows.size() || n0 > n1)
      throw Error(ErrorKind::UnsupportedSpec, "row range outside the triangle");
    Triangle t{family, n0, {}};
    t.rows.assign(rows.begin() + static_cast<long>(n0 - first_n), rows.begin() + static_cast<long>(n1 - first_n + 1));
    return t;
  }
};

namespace detail {

/// num * base^e / den, which must be an integer (e may be negative).
inline Coefficient scaled_pow(Coefficient num, Coefficient den, long base, long e) {
  Coefficient b = base;
  for (; e > 0; --e) num *= b;
  for (; e < 0; ++e) den *= b;
  if (num % den != 0) throw Error(ErrorKind::RecurrenceMismatch, "non-integral base value");
  return num / den;
}

/// Memoised coefficient recurrences of one triangle together with the ones
/// they refer to.
class CoefficientRecurrences {
 public:
  /// Value of symbol(n, k) via the recurrence; out-of-range indices give 0.
  Coefficient at(const std::string& sym, long n, long k) {
    if (n < 0 || k < 0) return 0;
    const auto key = std::make_tuple(sym, n, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Coefficient v = compute(sym, n, k);
    memo_.emplace(key, v);
    return v;
  }

 private:
  Coefficient closed(const std::string& sym, long n, long k) {
    return coefficient({*family_from_symbol(sym), static_cast<std::size_t>(n)}, static_cast<std::size_t>(k));
  }

  Coefficient compute(const std::string& s, long n, long k) {
    auto r = [&](const std::string& sym, long dn, long dk) { return at(sym, n - dn, k - dk); };
    const Coefficient N = n;
    if (k == 0) return 0;
    if (s == "t") {
      if (k == 1) return 1;
      if (n == 0) return 0;
      return r("t", 1, 1) + r("t", 1, 0);
    }
    if (s == "t2") {
      if (k == 1) return 1;
      if (k == 2) return 2 * N;
      if (n == 0) return 0;
      return r("t2", 1, 2) + 2 * r("t2", 1, 1) + r("t2", 1, 0);
    }
    if (s == "t3") {
      if (k == 1) return 1;
      if (k == 2) return 3 * N;
      if (k == 3) return scaled_pow(3 * N * (3 * N - 1), 2, 1, 0);
      if (n == 0) return 0;
      return r("t3", 1, 3) + 3 * r("t3", 1, 2) + 3 * r("t3", 1, 1) + r("t3", 1, 0);
    }
    if (s == "l") {
      if (k == 1) return scaled_pow(1, 1, 2, n);
      if (n == 0) return 0;
      return 2 * r("l", 1, 0) + 2 * r("l", 1, 1);
    }
    if (s == "w") {
      if (k == 1) return scaled_pow(1, 1, 2, n);
      if (k == 2) return scaled_pow(N, 1, 2, n + 1);
      if (n == 0) return 0;
      return 2 * r("w", 1, 2) + 4 * r("w", 1, 1) + 2 * r("w", 1, 0);
    }
    if (s == "h" || s == "o") {
      if (k == 1) return scaled_pow(1, 1, 3, n);
      if (k == 2) return scaled_pow(4 * N, 1, 3, n - 1);
      if (n == 0) return 0;
      return r(s, 1, 2) + 4 * r(s, 1, 1) + 3 * r(s, 1, 0);
    }
    if (s == "f") {
      if (k == 1) return N;
      if (n == 0) return closed(s, n, k);
      return r("f", 1, 0) + r("t", 1, 0);
    }
    if (s == "f2") {
      if (k == 1) return 2 * N;
      if (n == 0) return closed(s, n, k);
      return r("f2", 1, 0) + r("t2", 1, 1) + 2 * r("t2", 1, 0);
    }
    if (s == "f3") {
      if (k == 1) return 3 * N;
      if (k == 2) return scaled_pow(9 * N * N - 3 * N + 2, 2, 1, 0);
      if (n == 0) return closed(s, n, k);
      return r("f3", 1, 0) + r("t3", 1, 2) + 3 * r("t3", 1, 1) + 3 * r("t3", 1, 0);
    }
    if (s == "c") {
      if (k == 1) return scaled_pow(N, 1, 2, n - 1);
      if (n == 0) return closed(s, n, k);
      return r("c", 1, 1) + 2 * r("c", 1, 0) + r("l", 1, 0);
    }
    if (s == "b") {
      if (k == 1) return scaled_pow(3 * N, 1, 2, n - 1);
      if (n == 0) return closed(s, n, k);
      return r("b", 1, 1) + 2 * r("b", 1, 0) + 2 * r("w", 1, 1) + 3 * r("w", 1, 0);
    }
    if (s == "r") {
      if (k == 1) return scaled_pow(2 * N, 1, 3, n - 1);
      if (n == 0) return closed(s, n, k);
      return 2 * r("r", 1, 1) + 3 * r("r", 1, 0) + r("h", 1, 1) + 2 * r("h", 1, 0);
    }
    if (s == "s") {
      if (k == 1) return scaled_pow(N, 1, 3, n - 1);
      if (k == 2) return scaled_pow(1, 1, 3, n) + scaled_pow(7 * N * (N - 1), 2, 3, n - 2);
      if (n == 0) return closed(s, n, k);
      return r("s", 1, 2) + 3 * r("s", 1, 1) + 3 * r("s", 1, 0) + r("h", 1, 0);
    }
    if (s == "tau") {
      if (k == 1) return 2 * N + 1;
      return r("f", 0, 1) + 2 * r("f", 0, 0) + r("t", 0, 0);
    }
    if (s == "sa") {
      if (k == 1) return N;
      if (n == 0) return closed(s, n, k);
      return r("sa", 1, 1) + r("sa", 1, 0) + r("t2", 1, 1) + r("t2", 1, 0);
    }
    if (s == "sb") {
      if (k == 1) return 2 * N;
      if (k == 2) return 4 * N * N - N + 1;
      if (n == 0) return closed(s, n, k);
      return r("sb", 1, 1) + r("sb", 1, 0) + r("t3", 1, 2) + 3 * r("t3", 1, 1) + 2 * r("t3", 1, 0);
    }
    if (s == "sc") {
      if (k == 1) return N;
      if (k == 2) return scaled_pow(5 * N * N - N + 2, 2, 1, 0);
      if (n == 0) return closed(s, n, k);
      return r("sc", 1, 2) + 2 * r("sc", 1, 1) + r("sc", 1, 0) + r("t3", 1, 2) + 2 * r("t3", 1, 1) + r("t3", 1, 0);
    }
    if (s == "sd") {
      if (k == 1) return scaled_pow(N, 1, 2, n - 1);
      if (k == 2) return scaled_pow(7 * N * N - 3 * N + 8, 1, 2, n - 3);
      if (n == 0) return closed(s, n, k);
      return r("sd", 1, 2) + 3 * r("sd", 1, 1) + 2 * r("sd", 1, 0) + r("w", 1, 1) + r("w", 1, 0);
    }
    if (s == "se") {
      if (k == 1) return scaled_pow(N, 1, 2, n);
      if (n == 0) return closed(s, n, k);
      return 2 * r("se", 1, 1) + 2 * r("se", 1, 0) + 2 * r("w", 1, 1) + 2 * r("w", 1, 0);
    }
    if (s == "u") return k == 1 ? 1 : 0;
    throw Error(ErrorKind::UnsupportedSpec, "no coefficient recurrence for '" + s + "'");
  }

  std::map<std::tuple<std::string, long, long>, Coefficient> memo_;
};

}  // namespace detail

/// Rows 0..max_n, each computed both from the coefficient recurrence and from
/// the closed form; any disagreement throws RecurrenceMismatch.
inline Triangle triangle(Family f, std::size_t max_n) {
  const std::string sym(info(f).symbol);
  detail::CoefficientRecurrences rec;
  Triangle t{f, 0, {}};
  for (std::size_t n = 0; n <= max_n; ++n) {
    const Polynomial p = family_poly_closed({f, n});
    std::vector<Coefficient> row(p.size());
    // Two columns past the degree must come out as zero too.
    for (std::size_t k = 0; k < p.size() + 2; ++k) {
      const Coefficient v = rec.at(sym, static_cast<long>(n), static_cast<long>(k));
      if (v != p.coeff(k))
        throw Error(ErrorKind::RecurrenceMismatch, sym + "(" + std::to_string(n) + "," + std::to_string(k) +
                                                       "): recurrence " + v.str() + ", closed form " +
                                                       p.coeff(k).str());
      if (k < row.size()) row[k] = v;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Reference tables and the discrepancy registry

struct ReferenceRow {
  std::string label;
  std::vector<Coefficient> values;
};

struct ReferenceTable {
  std::string id;
  std::vector<ReferenceRow> rows;
};

struct RegistryEntry {
  enum class Kind { Value, RowLabel, Formula };
  std::string table;
  Kind kind = Kind::Value;
  std::string key;  // formula name, for Kind::Formula
  std::size_t n = 0;
  std::size_t k = 0;
  std::string printed;
  Coefficient derived;
  std::string note;
};

/// Table ids in catalog order. The unknot has no table and the overhand
/// family shares the hitch table (same polynomials).
inline std::vector<std::string> reference_table_ids() {
  std::vector<std::string> ids;
  for (const auto& i : kCatalog)
    if (i.family != Family::Unknot && i.family != Family::Overhand) ids.emplace_back(i.symbol);
  return ids;
}

inline std::filesystem::path fixture_path(const std::filesystem::path& dir, const std::string& id) {
  return dir / ("table-" + id + ".csv");
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline Coefficient parse_coefficient(const std::string& s) {
  const std::string t = trim(s);
  if (t.empty() || t.find_first_not_of("-0123456789") != std::string::npos)
    throw Error(ErrorKind::FormatError, "bad number '" + s + "'");
  return Coefficient(t);
}

inline std::size_t parse_index(const std::string& s) {
  const std::string t = trim(s);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::FormatError, "bad index '" + s + "'");
  return std::stoul(t);
}

inline std::vector<std::string> data_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FormatError, "cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace detail

inline ReferenceTable load_reference(const std::filesystem::path& dir, const std::string& id) {
  ReferenceTable t{id, {}};
  for (const auto& line : detail::data_lines(fixture_path(dir, id))) {
    const auto cells = detail::split(line, ',');
    ReferenceRow row{detail::trim(cells.at(0)), {}};
    for (std::size_t i = 1; i < cells.size(); ++i) row.values.push_back(detail::parse_coefficient(cells[i]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline std::vector<RegistryEntry> load_registry(const std::filesystem::path& file) {
  std::vector<RegistryEntry> out;
  for (const auto& line : detail::data_lines(file)) {
    const auto f = detail::split(line, '|');
    if (f.size() != 8) throw Error(ErrorKind::FormatError, "registry line needs 8 fields: " + line);
    RegistryEntry e;
    e.table = detail::trim(f[0]);
    const std::string kind = detail::trim(f[1]);
    if (kind == "value") e.kind = RegistryEntry::Kind::Value;
    else if (kind == "row-label") e.kind = RegistryEntry::Kind::RowLabel;
    else if (kind == "formula") e.kind = RegistryEntry::Kind::Formula;
    else throw Error(ErrorKind::FormatError, "unknown registry kind '" + kind + "'");
    e.key = detail::trim(f[2]);
    e.n = detail::parse_index(f[3]);
    if (e.kind != RegistryEntry::Kind::RowLabel) e.k = detail::parse_index(f[4]);
    e.printed = detail::trim(f[5]);
    e.derived = detail::parse_coefficient(f[6]);
    e.note = detail::trim(f[7]);
    out.push_back(std::move(e));
  }
  return out;
}

struct Mismatch {
  RegistryEntry::Kind kind = RegistryEntry::Kind::Value;
  std::string label;  // printed row label
  std::size_t n = 0;
  std::size_t k = 0;
  std::string printed;
  std::string derived;
  bool registered = false;
};

struct ComparisonReport {
  std::string id;
  std::size_t rows_checked = 0;
  std::size_t cells_checked = 0;
  std::vector<Mismatch> mismatches;
  std::vector<RegistryEntry> stale;  // registry entries not observed
  bool passed = false;
};

/// Evaluates one of the printed (erroneous) formulas named in the registry.
inline Coefficient printed_formula_value(const std::string& key, std::size_t n, std::size_t k) {
  const long N = static_cast<long>(n), K = static_cast<long>(k);
  auto coeff = [](Family f, long m, long j) -> Coefficient {
    if (m < 0 || j < 0) return 0;
    return coefficient({f, static_cast<std::size_t>(m)}, static_cast<std::size_t>(j));
  };
  if (key == "h-base") {
    if (k != 2) throw Error(ErrorKind::UnsupportedSpec, "h-base applies to k=2");
    return detail::scaled_pow(4 * Coefficient(N - 1), 1, 3, N - 2);
  }
  if (key == "l-rec") return coeff(Family::Link, N - 1, K) + coeff(Family::Link, N - 1, K - 1);
  if (key == "sc-rec") {
    const Family sc = Family::AltC, t3 = Family::TwistLoop3;
    return coeff(sc, N - 1, K - 2) + 2 * coeff(sc, N - 1, K - 1) + coeff(sc, N - 1, K) + coeff(t3, N - 1, K - 2) +
           2 * coeff(t3, N - 1, K) + coeff(t3, N - 1, K);
  }
  if (key == "t2-closed") return (Polynomial::x() * poly_pow(Polynomial{1, 3}, n)).coeff(k);
  if (key == "w3-remark") return Polynomial{0, 2, 4, 2}.coeff(k);
  throw Error(ErrorKind::UnsupportedSpec, "unknown printed formula '" + key + "'");
}

/// Diffs a reference table against derived coefficients. Passes only when the
/// mismatch set equals the registry's entries for this table.
inline ComparisonReport compare_with_reference(const std::string& id, const std::filesystem::path& fixtures_dir,
                                               const std::vector<RegistryEntry>& registry) {
  ComparisonReport rep{id, 0, 0, {}, {}, false};
  const auto fam = family_from_symbol(id);
  if (!fam) throw Error(ErrorKind::UnsupportedSpec, "unknown table id '" + id + "'");
  const ReferenceTable ref = load_reference(fixtures_dir, id);

  std::vector<const RegistryEntry*> mine;
  for (const auto& e : registry)
    if (e.table == id) mine.push_back(&e);
  std::vector<bool> used(mine.size(), false);
  auto find_entry = [&](const Mismatch& m) -> bool {
    for (std::size_t i = 0; i < mine.size(); ++i) {
      const RegistryEntry& e = *mine[i];
      if (e.kind != m.kind) continue;
      const bool hit = m.kind == RegistryEntry::Kind::RowLabel
                           ? e.printed == m.label && e.derived == Coefficient(m.n)
                           : e.n == m.n && e.k == m.k && e.printed == m.printed && e.derived.str() == m.derived;
      if (hit) {
        used[i] = true;
        return true;
      }
    }
    return false;
  };

  for (const auto& row : ref.rows) {
    std::size_t n = detail::parse_index(row.label);
    // A registered label typo tells which row is really printed.
    for (const RegistryEntry* e : mine)
      if (e->kind == RegistryEntry::Kind::RowLabel && e->printed == row.label) n = e->n;
    if (n != detail::parse_index(row.label)) {
      Mismatch m{RegistryEntry::Kind::RowLabel, row.label, n, 0, row.label, std::to_string(n), false};
      m.registered = find_entry(m);
      rep.mismatches.push_back(m);
    }
    const Polynomial p = family_poly_closed({*fam, n});
    const std::size_t width = std::max(p.size(), row.values.size());
    for (std::size_t k = 0; k < width; ++k) {
      const Coefficient derived = p.coeff(k);
      const std::string printed = k < row.values.size() ? row.values[k].str() : "";
      ++rep.cells_checked;
      if (k < row.values.size() && row.values[k] == derived) continue;
      Mismatch m{RegistryEntry::Kind::Value, row.label, n, k, printed, derived.str(), false};
      m.registered = find_entry(m);
      rep.mismatches.push_back(m);
    }
    ++rep.rows_checked;
  }

  for (std::size_t i = 0; i < mine.size(); ++i) {
    if (mine[i]->kind == RegistryEntry::Kind::Formula) continue;
    if (!used[i]) rep.stale.push_back(*mine[i]);
  }
  rep.passed = rep.stale.empty() &&
               std::all_of(rep.mismatches.begin(), rep.mismatches.end(), [](const Mismatch& m) { return m.registered; });
  return rep;
}

struct FormulaCheck {
  RegistryEntry entry;
  Coefficient printed_value;
  Coefficient true_value;
  bool passed = false;
};

/// Each registered formula typo must reproduce its printed value when the
/// printed formula is evaluated, and its derived value must be the true
/// coefficient.
inline std::vector<FormulaCheck> check_formula_entries(const std::vector<RegistryEntry>& registry) {
  std::vector<FormulaCheck> out;
  for (const auto& e : registry) {
    if (e.kind != RegistryEntry::Kind::Formula) continue;
    const auto fam = family_from_symbol(e.table);
    FormulaCheck c{e, printed_formula_value(e.key, e.n, e.k), 0, false};
    c.true_value = fam ? coefficient({*fam, e.n}, e.k) : Coefficient(-1);
    c.passed = c.printed_value.str() == e.printed && c.true_value == e.derived && c.printed_value != c.true_value;
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Export

enum class ExportFormat { Csv, Json, Markdown, BFile };

inline ExportFormat export_format_from_name(std::string_view name) {
  if (name == "csv") return ExportFormat::Csv;
  if (name == "json") return ExportFormat::Json;
  if (name == "md") return ExportFormat::Markdown;
  if (name == "bfile") return ExportFormat::BFile;
  throw Error(ErrorKind::UnsupportedSpec, "unknown format '" + std::string(name) + "'");
}

inline std::string export_triangle(const Triangle& t, ExportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ExportFormat::Csv:
      for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
        os << "\n";
      }
      break;
    case ExportFormat::Json:
      os << "[";
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        os << (i ? "," : "") << "[";
        for (std::size_t k = 0; k < t.rows[i].size(); ++k) os << (k ? "," : "") << t.rows[i][k];
        os << "]";
      }
      os << "]\n";
      break;
    case ExportFormat::Markdown: {
      std::size_t width = 0;
      for (const auto& row : t.rows) width = std::max(width, row.size());
      os << "| n |";
      for (std::size_t k = 0; k < width; ++k) os << " " << k << " |";
      os << "\n|---|";
      for (std::size_t k = 0; k < width; ++k) os << "---|";
      os << "\n";
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        os << "| " << t.first_n + i << " |";
        for (std::size_t k = 0; k < width; ++k) {
          os << " ";
          if (k < t.rows[i].size()) os << t.rows[i][k];
          os << " |";
        }
        os << "\n";
      }
      break;
    }
    case ExportFormat::BFile: {
      std::size_t index = 0;
      for (const auto& row : t.rows)
        for (const auto& v : row) os << index++ << " " << v << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace knotshadow
