#ifndef DIMSPEC_REPORT_HPP
#define DIMSPEC_REPORT_HPP

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "dimspec/error.hpp"
#include "dimspec/feasibility.hpp"
#include "dimspec/model.hpp"
#include "dimspec/reference_table.hpp"
#include "dimspec/signed_log.hpp"
#include "dimspec/spectrum.hpp"

namespace dimspec {

inline constexpr std::string_view kCsvHeader =
    "D,n,m,beta,alpha_sign,alpha_lnmag,E0_sign,E0_lnmag,E0_decimal,classification,formula,paper_E0,ratio_log10";

// ---------------------------------------------------------------------------
// Reference table comparison

struct Table1Row {
  int D = 0;
  int n = 0;
  SignedLogReal paper_E0;
  EnergyOutcome computed_E0;
  std::optional<double> ratio_log10;  // log10(computed / paper)
};

inline std::optional<double> log10_ratio(const EnergyOutcome& computed, const std::optional<SignedLogReal>& paper) {
  if (!computed.is_bound() || !paper || paper->is_zero()) return std::nullopt;
  return (computed.energy().lnmag() - paper->lnmag()) / kLn10;
}

/// Evaluates the m = n scheme formula at every tabulated (D, n).
inline std::vector<Table1Row> table1_compare() {
  std::vector<Table1Row> rows;
  rows.reserve(kReferenceTable.size());
  for (const auto& e : kReferenceTable) {
    Table1Row row{e.D, e.n, SignedLogReal::from_double(e.energy), e0_scheme_mn(e.D, e.n), std::nullopt};
    row.ratio_log10 = log10_ratio(row.computed_E0, row.paper_E0);
    rows.push_back(row);
  }
  return rows;
}

/// The (3, 1) row is the only one held to the printed value: two significant
/// figures, i.e. relative deviation at most 2e-2.
inline bool anchor_row_agrees(const Table1Row& row) {
  if (!row.computed_E0.is_bound()) return false;
  const double computed = row.computed_E0.energy().to_double();
  const double paper = row.paper_E0.to_double();
  return std::abs(computed - paper) / std::abs(paper) <= 2e-2;
}

inline ScanRecord to_record(const Table1Row& row) {
  ScanRecord r;
  r.params = SystemParams::make(row.D, row.n, CouplingScheme::MEqualsN);
  r.beta = r.params.beta();
  r.alpha = alpha_coefficient(row.D, row.n).alpha;
  r.outcome = row.computed_E0;
  r.formula = Formula::SchemeMN;
  r.paper_value = row.paper_E0;
  return r;
}

// ---------------------------------------------------------------------------
// Number formatting

/// Shortest decimal string that parses back to the same double.
inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error(ErrorCode::Parse, "bad number '" + std::string(s) + "'");
  }
  return x;
}

inline int parse_int(std::string_view s) {
  int x = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw Error(ErrorCode::Parse, "bad integer '" + std::string(s) + "'");
  }
  return x;
}

// ---------------------------------------------------------------------------
// Flat field view shared by CSV and JSON

namespace detail {

struct RecordFields {
  int D, n, m, beta;
  int alpha_sign;
  std::optional<double> alpha_lnmag;
  std::optional<int> e0_sign;
  std::optional<double> e0_lnmag;
  std::optional<std::string> e0_decimal;
  std::string classification;
  std::string formula;
  std::optional<double> paper_e0;
  std::optional<double> ratio;
};

inline RecordFields flatten(const ScanRecord& r) {
  RecordFields f{r.params.D, r.params.n, r.params.m, r.beta, r.alpha.sign(), std::nullopt, std::nullopt,
                 std::nullopt, std::nullopt, r.outcome.label(), std::string(wire_tag(r.formula)), std::nullopt,
                 std::nullopt};
  if (!r.alpha.is_zero()) f.alpha_lnmag = r.alpha.lnmag();
  if (r.outcome.is_bound()) {
    const auto& e = r.outcome.energy();
    f.e0_sign = e.sign();
    f.e0_lnmag = e.lnmag();
    f.e0_decimal = to_decimal_string(e);
  }
  // reference energies carry three significant digits; printing them that way
  // parses back to the identical double
  if (r.paper_value) f.paper_e0 = parse_double(to_decimal_string(*r.paper_value, 3));
  f.ratio = log10_ratio(r.outcome, r.paper_value);
  return f;
}

inline EnergyOutcome outcome_from_label(std::string_view label, std::optional<int> sign, std::optional<double> lnmag) {
  if (label == "bound") {
    if (!sign || !lnmag) throw Error(ErrorCode::Parse, "bound record without E0 fields");
    return EnergyOutcome::bound(SignedLogReal::from_log(*sign, *lnmag));
  }
  if (label.substr(0, 8) == "invalid:") return EnergyOutcome::invalid(parse_reason_code(label.substr(8)));
  for (auto r : {Regime::Divergent, Regime::Singular, Regime::Repulsive, Regime::Logarithmic}) {
    if (to_string(r) == label) return EnergyOutcome::from_regime(r);
  }
  throw Error(ErrorCode::Parse, "unknown classification '" + std::string(label) + "'");
}

inline ScanRecord unflatten(const RecordFields& f) {
  ScanRecord r;
  r.params = SystemParams::infer(f.D, f.n, f.m);
  r.beta = f.beta;
  if (r.beta != r.params.beta()) throw Error(ErrorCode::Parse, "beta column disagrees with D - 2m");
  if (f.alpha_sign != 0) {
    if (!f.alpha_lnmag) throw Error(ErrorCode::Parse, "alpha_sign set without alpha_lnmag");
    r.alpha = SignedLogReal::from_log(f.alpha_sign, *f.alpha_lnmag);
  }
  r.outcome = outcome_from_label(f.classification, f.e0_sign, f.e0_lnmag);
  r.formula = parse_formula(f.formula);
  if (f.paper_e0) r.paper_value = SignedLogReal::from_double(*f.paper_e0);
  return r;
}

template <typename T, typename Fn>
std::string opt_field(const std::optional<T>& v, Fn&& fmt) {
  return v ? fmt(*v) : std::string();
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(',', start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
std::optional<T> optional_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// CSV

inline std::string render_csv(const std::vector<ScanRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  const auto num = [](double x) { return format_double(x); };
  const auto integer = [](int x) { return std::to_string(x); };
  const auto text = [](const std::string& s) { return s; };
  for (const auto& r : records) {
    const auto f = detail::flatten(r);
    out += std::to_string(f.D) + ',' + std::to_string(f.n) + ',' + std::to_string(f.m) + ',' + std::to_string(f.beta) +
           ',' + std::to_string(f.alpha_sign) + ',' + detail::opt_field(f.alpha_lnmag, num) + ',' +
           detail::opt_field(f.e0_sign, integer) + ',' + detail::opt_field(f.e0_lnmag, num) + ',' +
           detail::opt_field(f.e0_decimal, text) + ',' + f.classification + ',' + f.formula + ',' +
           detail::opt_field(f.paper_e0, num) + ',' + detail::opt_field(f.ratio, num) + '\n';
  }
  return out;
}

inline std::vector<ScanRecord> parse_csv(std::string_view text) {
  std::vector<ScanRecord> records;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw Error(ErrorCode::Parse, "missing or unexpected CSV header");
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = detail::split_commas(line);
    if (cells.size() != 13) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected 13 fields, got " +
                                        std::to_string(cells.size()));
    }
    const auto opt_double = [](std::string_view s) -> std::optional<double> {
      if (s.empty()) return std::nullopt;
      return parse_double(s);
    };
    detail::RecordFields f{parse_int(cells[0]), parse_int(cells[1]), parse_int(cells[2]), parse_int(cells[3]),
                           parse_int(cells[4]), opt_double(cells[5]), std::nullopt, opt_double(cells[7]),
                           std::nullopt, std::string(cells[9]), std::string(cells[10]), opt_double(cells[11]),
                           opt_double(cells[12])};
    if (!cells[6].empty()) f.e0_sign = parse_int(cells[6]);
    records.push_back(detail::unflatten(f));
  }
  return records;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const ScanRecord& r) {
  const auto f = detail::flatten(r);
  nlohmann::json j;
  const auto put = [&j](const char* key, const auto& v) {
    if (v) j[key] = *v;
    else j[key] = nullptr;
  };
  j["D"] = f.D;
  j["n"] = f.n;
  j["m"] = f.m;
  j["beta"] = f.beta;
  j["alpha_sign"] = f.alpha_sign;
  put("alpha_lnmag", f.alpha_lnmag);
  put("E0_sign", f.e0_sign);
  put("E0_lnmag", f.e0_lnmag);
  put("E0_decimal", f.e0_decimal);
  j["classification"] = f.classification;
  j["formula"] = f.formula;
  put("paper_E0", f.paper_e0);
  put("ratio_log10", f.ratio);
  return j;
}

inline nlohmann::json to_json(const std::vector<ScanRecord>& records) {
  auto arr = nlohmann::json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return arr;
}

inline std::string render_json(const std::vector<ScanRecord>& records) { return to_json(records).dump(2) + "\n"; }

inline ScanRecord record_from_json(const nlohmann::json& j) {
  try {
    detail::RecordFields f{j.at("D").get<int>(),
                           j.at("n").get<int>(),
                           j.at("m").get<int>(),
                           j.at("beta").get<int>(),
                           j.at("alpha_sign").get<int>(),
                           detail::optional_field<double>(j, "alpha_lnmag"),
                           detail::optional_field<int>(j, "E0_sign"),
                           detail::optional_field<double>(j, "E0_lnmag"),
                           detail::optional_field<std::string>(j, "E0_decimal"),
                           j.at("classification").get<std::string>(),
                           j.at("formula").get<std::string>(),
                           detail::optional_field<double>(j, "paper_E0"),
                           detail::optional_field<double>(j, "ratio_log10")};
    return detail::unflatten(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

inline std::vector<ScanRecord> parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::Parse, "expected a top-level array of records");
  std::vector<ScanRecord> records;
  records.reserve(doc.size());
  for (const auto& j : doc) records.push_back(record_from_json(j));
  return records;
}

// ---------------------------------------------------------------------------
// Text

inline std::string render_text(const std::vector<ScanRecord>& records) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%4s %3s %3s %5s %12s %12s  %-28s %-6s %12s %10s  %s\n", "D", "n", "m", "beta",
                "alpha", "E0", "classification", "formula", "paper_E0", "log10_ratio", "note");
  out += buf;
  for (const auto& r : records) {
    const auto alpha = r.alpha.is_zero() ? std::string("-") : to_decimal_string(r.alpha);
    const auto e0 = r.outcome.is_bound() ? to_decimal_string(r.outcome.energy()) : std::string("-");
    const auto paper = r.paper_value ? to_decimal_string(*r.paper_value) : std::string("-");
    const auto ratio = log10_ratio(r.outcome, r.paper_value);
    char ratio_buf[32] = "-";
    if (ratio) std::snprintf(ratio_buf, sizeof ratio_buf, "%.3f", *ratio);
    std::snprintf(buf, sizeof buf, "%4d %3d %3d %5d %12s %12s  %-28s %-6s %12s %10s  %s\n", r.params.D, r.params.n,
                  r.params.m, r.beta, alpha.c_str(), e0.c_str(), r.outcome.label().c_str(),
                  std::string(wire_tag(r.formula)).c_str(), paper.c_str(), ratio_buf,
                  std::string(paper_annotation(r.params)).c_str());
    out += buf;
  }
  return out;
}

}  // namespace dimspec

#endif  // DIMSPEC_REPORT_HPP
