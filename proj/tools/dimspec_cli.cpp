// Command-line front end: energies, potentials, feasibility windows, grid
// scans, the reference-table comparison, and the numerical oracles.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dimspec/dimspec.hpp"

namespace {

using namespace dimspec;
using nlohmann::json;

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + s + "'");
}

IntRange parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const int v = parse_int(s);
    return {v, v};
  }
  return {parse_int(std::string_view(s).substr(0, colon)), parse_int(std::string_view(s).substr(colon + 1))};
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// Shared output options.
struct Output {
  std::string format = "text";
  std::string path;

  void emit(const std::string& data) const {
    if (path.empty()) {
      std::cout << data;
      return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot open output file '" + path + "'");
    out << data;
  }
};

void add_output_flags(CLI::App* cmd, Output& out, const std::string& default_format) {
  out.format = default_format;
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--out", out.path, "Write data to PATH instead of stdout");
}

// ---------------------------------------------------------------------------

struct EnergyArgs {
  int D = 3;
  int n = 1;
  int m = 0;
  std::string scheme = "mn";
  std::optional<double> alpha;
  std::optional<int> beta;
  bool printed = false;
  Output out;
};

int run_energy(const EnergyArgs& a) {
  ScanRecord rec;
  const auto scheme = parse_scheme(a.scheme);
  if (a.alpha.has_value() != a.beta.has_value()) {
    throw Error(ErrorCode::InvalidArgument, "--alpha and --beta must be given together");
  }
  if (a.alpha) {
    rec.params = SystemParams::make(a.D, a.n, scheme, a.m);
    rec.beta = *a.beta;
    rec.alpha = slr(*a.alpha);
    rec.outcome = e0_general(EnergyQuery{rec.alpha, rec.beta, a.n, a.D});
    rec.formula = Formula::General;
  } else if (a.printed) {
    rec.params = SystemParams::make(a.D, a.n, scheme, a.m);
    rec.beta = rec.params.beta();
    if (rec.beta >= 0) rec.alpha = alpha_coefficient(a.D, rec.params.m).alpha;
    if (scheme == CouplingScheme::MEqualsN) {
      rec.outcome = e0_scheme_mn(a.D, a.n);
      rec.formula = Formula::SchemeMN;
      rec.paper_value = reference_energy(a.D, a.n);
    } else if (scheme == CouplingScheme::MEqualsOne) {
      rec.outcome = e0_scheme_m1(a.D, a.n);
      rec.formula = Formula::SchemeM1;
    } else {
      throw Error(ErrorCode::InvalidArgument, "--printed needs scheme mn or m1");
    }
  } else {
    rec = evaluate_point(SystemParams::make(a.D, a.n, scheme, a.m));
  }

  switch (parse_format(a.out.format)) {
    case Format::Csv: a.out.emit(render_csv({rec})); break;
    case Format::Json: {
      auto j = to_json(rec);
      j["alpha"] = rec.alpha.to_double();
      j["E0"] = rec.outcome.is_bound() ? json(rec.outcome.energy().to_double()) : json(nullptr);
      a.out.emit(j.dump(2) + "\n");
      break;
    }
    case Format::Text: {
      std::ostringstream os;
      os << "D = " << rec.params.D << ", n = " << rec.params.n << ", m = " << rec.params.m << ", beta = " << rec.beta
         << "\n";
      os << "alpha = " << (rec.alpha.is_zero() ? std::string("undefined") : to_decimal_string(rec.alpha, 6)) << "\n";
      os << "classification = " << rec.outcome.label() << "\n";
      if (rec.outcome.is_bound()) {
        os << "E0 = " << to_decimal_string(rec.outcome.energy(), 6) << " hartree"
           << " (ln|E0| = " << format_double(rec.outcome.energy().lnmag()) << ")\n";
      }
      if (auto reason = rec.outcome.reason()) os << "reason = " << describe(*reason) << "\n";
      os << "formula = " << wire_tag(rec.formula) << "\n";
      if (rec.paper_value) os << "reference E0 = " << to_decimal_string(*rec.paper_value) << " hartree\n";
      a.out.emit(os.str());
      break;
    }
  }
  return rec.outcome.is_invalid() ? 1 : 0;
}

// ---------------------------------------------------------------------------

struct PotentialArgs {
  int D = 3;
  int m = 1;
  Output out;
};

int run_potential(const PotentialArgs& a) {
  const auto spec = alpha_coefficient(a.D, a.m);
  const auto fmt = parse_format(a.out.format);
  if (fmt == Format::Json) {
    json j{{"D", a.D},
           {"m", a.m},
           {"beta", spec.beta},
           {"alpha_sign", spec.alpha.sign()},
           {"alpha_lnmag", spec.alpha.is_zero() ? json(nullptr) : json(spec.alpha.lnmag())},
           {"alpha", spec.alpha.to_double()},
           {"nature", std::string(to_string(spec.nature))}};
    a.out.emit(j.dump(2) + "\n");
  } else if (fmt == Format::Csv) {
    a.out.emit("D,m,beta,alpha_sign,alpha_lnmag,nature\n" + std::to_string(a.D) + ',' + std::to_string(a.m) + ',' +
               std::to_string(spec.beta) + ',' + std::to_string(spec.alpha.sign()) + ',' +
               (spec.alpha.is_zero() ? std::string() : format_double(spec.alpha.lnmag())) + ',' +
               std::string(to_string(spec.nature)) + "\n");
  } else {
    std::ostringstream os;
    os << "alpha = " << (spec.alpha.is_zero() ? std::string("undefined") : to_decimal_string(spec.alpha, 6)) << "\n"
       << "beta = " << spec.beta << "\n"
       << "nature = " << to_string(spec.nature) << "\n";
    a.out.emit(os.str());
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct FeasibleArgs {
  int n = 1;
  std::string scheme = "mn";
  bool universal = false;
  Output out;
};

int run_feasible(const FeasibleArgs& a) {
  const auto fmt = parse_format(a.out.format);
  if (a.universal) {
    const auto ex = excluded_dims_universal();
    if (fmt == Format::Json) {
      a.out.emit(json{{"excluded", ex.dims}, {"max_n_checked", ex.max_n_checked}}.dump(2) + "\n");
    } else {
      a.out.emit(join(ex.dims) + "\n");
    }
    return 0;
  }
  const auto w = bound_dims(a.n, parse_scheme(a.scheme));
  switch (fmt) {
    case Format::Json:
      a.out.emit(json{{"n", w.n},
                      {"scheme", std::string(to_string(w.scheme))},
                      {"d_min", w.d_min},
                      {"d_max", w.d_max},
                      {"members", w.members},
                      {"paper_omitted", w.paper_omitted}}
                     .dump(2) +
                 "\n");
      break;
    case Format::Csv: {
      std::string s = "n,scheme,D,note\n";
      for (int D : w.members) {
        const bool omitted = std::find(w.paper_omitted.begin(), w.paper_omitted.end(), D) != w.paper_omitted.end();
        s += std::to_string(w.n) + ',' + std::string(to_string(w.scheme)) + ',' + std::to_string(D) + ',' +
             (omitted ? "paper-omitted" : "") + "\n";
      }
      a.out.emit(s);
      break;
    }
    case Format::Text: {
      std::string s = join(w.members) + "\n";
      if (!w.paper_omitted.empty()) s += "paper-omitted: " + join(w.paper_omitted) + "\n";
      a.out.emit(s);
      break;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

std::string render_records(const std::vector<ScanRecord>& records, Format fmt) {
  switch (fmt) {
    case Format::Csv: return render_csv(records);
    case Format::Json: return render_json(records);
    case Format::Text: return render_text(records);
  }
  return {};
}

struct ScanArgs {
  std::string D = "2:20";
  std::string n = "1:5";
  std::string scheme = "mn";
  int m = 0;
  Output out;
};

int run_scan(const ScanArgs& a) {
  const auto records =
      scan(parse_range(a.D), parse_range(a.n), parse_scheme(a.scheme), threads_from_env(), a.m);
  a.out.emit(render_records(records, parse_format(a.out.format)));
  return 0;
}

// ---------------------------------------------------------------------------

int run_table1(const Output& out) {
  const auto rows = table1_compare();
  const auto fmt = parse_format(out.format);
  if (fmt == Format::Text) {
    std::string s;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%4s %3s %14s %14s %12s\n", "D", "n", "reference_E0", "computed_E0", "log10_ratio");
    s += buf;
    for (const auto& r : rows) {
      const auto computed = r.computed_E0.is_bound() ? to_decimal_string(r.computed_E0.energy()) : r.computed_E0.label();
      char ratio[32] = "-";
      if (r.ratio_log10) std::snprintf(ratio, sizeof ratio, "%.4f", *r.ratio_log10);
      std::snprintf(buf, sizeof buf, "%4d %3d %14s %14s %12s\n", r.D, r.n, to_decimal_string(r.paper_E0).c_str(),
                    computed.c_str(), ratio);
      s += buf;
    }
    out.emit(s);
  } else {
    std::vector<ScanRecord> records;
    for (const auto& r : rows) records.push_back(to_record(r));
    out.emit(render_records(records, fmt));
  }
  if (!anchor_row_agrees(rows.front())) {
    std::cerr << "error: the (3,1) row does not match its reference value at printed precision\n";
    return 2;
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  int max_n = 5;
  int max_D = 20;
  Output out;
};

int run_verify(const VerifyArgs& a) {
  if (a.max_n < 1 || a.max_D < 2) throw Error(ErrorCode::InvalidRange, "--max-n must be >= 1 and --max-D >= 2");
  std::vector<SystemParams> points;
  for (auto scheme : {CouplingScheme::MEqualsN, CouplingScheme::MEqualsOne}) {
    for (int n = 1; n <= a.max_n; ++n) {
      for (int D : bound_dims(n, scheme).members) {
        if (D <= a.max_D) points.push_back(SystemParams::make(D, n, scheme));
      }
    }
  }
  std::vector<double> energy_dev(points.size());
  std::vector<double> radius_dev(points.size());
  parallel_for_index(points.size(), threads_from_env(), [&](std::size_t i) {
    const auto& p = points[i];
    const EnergyQuery q{alpha_coefficient(p.D, p.m).alpha, p.beta(), p.n, p.D};
    const auto closed = e0_general(q);
    const auto found = minimize_v_eff(q);
    energy_dev[i] = lnmag_relative_difference(found.energy, closed.energy());
    radius_dev[i] = std::abs(std::expm1(found.ln_r_star - found.stationary_ln_r));
  });
  double max_energy = 0.0;
  double max_radius = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    max_energy = std::max(max_energy, energy_dev[i]);
    max_radius = std::max(max_radius, radius_dev[i]);
  }

  double max_scheme = 0.0;
  for (int n = 1; n <= a.max_n; n += 2) {
    for (int D : bound_dims(n, CouplingScheme::MEqualsN).members) {
      if (D > a.max_D) continue;
      const auto printed = e0_scheme_mn(D, n);
      const auto general = e0_general(EnergyQuery{alpha_coefficient(D, n).alpha, D - 2 * n, n, D});
      max_scheme = std::max(max_scheme, lnmag_relative_difference(printed.energy(), general.energy()));
    }
  }
  const auto m1_rows = m1_printed_discrepancies(a.max_n);

  const bool energy_ok = max_energy <= 1e-8;
  const bool radius_ok = max_radius <= 1e-9;
  const bool scheme_ok = max_scheme <= 1e-10;
  const bool ok = energy_ok && radius_ok && scheme_ok && !points.empty();

  if (parse_format(a.out.format) == Format::Json) {
    json rows = json::array();
    for (const auto& r : m1_rows) {
      rows.push_back({{"D", r.D},
                      {"n", r.n},
                      {"printed", r.printed.label()},
                      {"rederived", r.rederived.label()},
                      {"log10_ratio", optional_number(r.log10_ratio)}});
    }
    a.out.emit(json{{"points", points.size()},
                    {"max_energy_deviation", max_energy},
                    {"max_r_star_deviation", max_radius},
                    {"max_scheme_mn_deviation", max_scheme},
                    {"m1_printed_discrepancies", rows},
                    {"pass", ok}}
                   .dump(2) +
               "\n");
  } else {
    std::ostringstream os;
    char buf[160];
    os << "bound points checked: " << points.size() << "\n";
    std::snprintf(buf, sizeof buf, "max energy deviation (relative, ln|E|): %.3e\n", max_energy);
    os << buf;
    std::snprintf(buf, sizeof buf, "max r* deviation (search vs stationarity): %.3e\n", max_radius);
    os << buf;
    std::snprintf(buf, sizeof buf, "max m=n scheme-form vs general deviation: %.3e\n", max_scheme);
    os << buf;
    os << "m=1 printed-form vs rederived rows: " << m1_rows.size() << "\n";
    os << (energy_ok ? "oracle–closed-form max relative deviation ≤ 1e-8\n"
                     : "oracle–closed-form max relative deviation > 1e-8\n");
    a.out.emit(os.str());
  }
  return ok ? 0 : 2;
}

// ---------------------------------------------------------------------------

struct RadialArgs {
  int D = 3;
  double alpha = 1.0;
  int beta = 1;
  std::string convention = "full";
  int excitation = 0;
  bool wavefunction = false;
  Output out;
};

int run_radial(const RadialArgs& a) {
  const auto conv =
      a.convention == "half" ? KineticConvention::HalfLaplacian : KineticConvention::FullLaplacian;
  const auto sol = radial_ground_state(a.D, a.alpha, a.beta, conv, a.excitation);
  switch (parse_format(a.out.format)) {
    case Format::Csv: {
      std::string s = "r,u\n";
      for (std::size_t i = 0; i < sol.grid.size(); ++i) s += format_double(sol.grid[i]) + ',' + format_double(sol.u[i]) + "\n";
      a.out.emit(s);
      break;
    }
    case Format::Json: {
      json j{{"D", a.D},
             {"alpha", a.alpha},
             {"beta", a.beta},
             {"convention", std::string(to_string(conv))},
             {"excitation", a.excitation},
             {"E", sol.energy},
             {"nodes", sol.nodes},
             {"r_max", sol.r_max},
             {"formula", std::string(wire_tag(Formula::OracleRadial))}};
      if (a.wavefunction) {
        j["r"] = sol.grid;
        j["u"] = sol.u;
      }
      a.out.emit(j.dump(2) + "\n");
      break;
    }
    case Format::Text: {
      char buf[128];
      std::snprintf(buf, sizeof buf, "E = %.9f hartree\nnodes = %d\nr_max = %g\nconvention = %s\n", sol.energy,
                    sol.nodes, sol.r_max, std::string(to_string(conv)).c_str());
      a.out.emit(buf);
      break;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ground-state energies of hydrogen under an iterated-Laplacian wave equation in D dimensions"};
  app.require_subcommand(1);

  EnergyArgs energy;
  auto* cmd_energy = app.add_subcommand("energy", "Ground-state energy at one (D, n, m) point");
  cmd_energy->add_option("--D", energy.D, "Space dimension")->required();
  cmd_energy->add_option("--n", energy.n, "Laplacian power of the wave equation")->required();
  cmd_energy->add_option("--m", energy.m, "Poisson power (scheme explicit)");
  cmd_energy->add_option("--scheme", energy.scheme)->check(CLI::IsMember({"mn", "m1", "explicit"}));
  cmd_energy->add_option("--alpha", energy.alpha, "Override the coupling alpha");
  cmd_energy->add_option("--beta", energy.beta, "Override the exponent beta");
  cmd_energy->add_flag("--printed", energy.printed, "Use the scheme-specific closed form instead of the general one");
  add_output_flags(cmd_energy, energy.out, "text");

  PotentialArgs potential;
  auto* cmd_potential = app.add_subcommand("potential", "Coupling alpha(D, m) and exponent beta = D - 2m");
  cmd_potential->add_option("--D", potential.D)->required();
  cmd_potential->add_option("--m", potential.m)->required();
  add_output_flags(cmd_potential, potential.out, "text");

  FeasibleArgs feasible;
  auto* cmd_feasible = app.add_subcommand("feasible", "Dimensions admitting a bound state for a given n");
  cmd_feasible->add_option("--n", feasible.n);
  cmd_feasible->add_option("--scheme", feasible.scheme)->check(CLI::IsMember({"mn", "m1"}));
  cmd_feasible->add_flag("--universal-exclusion", feasible.universal, "Dimensions excluded for every n (m = n)");
  add_output_flags(cmd_feasible, feasible.out, "text");

  ScanArgs scan_args;
  auto* cmd_scan = app.add_subcommand("scan", "Evaluate a (D, n) grid");
  cmd_scan->add_option("--D", scan_args.D, "Dimension range lo:hi");
  cmd_scan->add_option("--n", scan_args.n, "Power range lo:hi");
  cmd_scan->add_option("--scheme", scan_args.scheme)->check(CLI::IsMember({"mn", "m1", "explicit"}));
  cmd_scan->add_option("--m", scan_args.m, "Poisson power (scheme explicit)");
  add_output_flags(cmd_scan, scan_args.out, "csv");

  Output table1_out;
  auto* cmd_table1 = app.add_subcommand("table1", "Compare against the embedded reference energies");
  add_output_flags(cmd_table1, table1_out, "text");

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Check closed forms against the effective-potential minimizer");
  cmd_verify->add_option("--max-n", verify.max_n);
  cmd_verify->add_option("--max-D", verify.max_D);
  add_output_flags(cmd_verify, verify.out, "text");

  RadialArgs radial;
  auto* cmd_radial = app.add_subcommand("radial", "Numerov eigenvalue of the n = 1 radial equation");
  cmd_radial->add_option("--D", radial.D);
  cmd_radial->add_option("--alpha", radial.alpha);
  cmd_radial->add_option("--beta", radial.beta);
  cmd_radial->add_option("--convention", radial.convention)->check(CLI::IsMember({"full", "half"}));
  cmd_radial->add_option("--excitation", radial.excitation);
  cmd_radial->add_flag("--wavefunction", radial.wavefunction, "Include r and u(r) in JSON output");
  add_output_flags(cmd_radial, radial.out, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*cmd_energy) return run_energy(energy);
    if (*cmd_potential) return run_potential(potential);
    if (*cmd_feasible) return run_feasible(feasible);
    if (*cmd_scan) return run_scan(scan_args);
    if (*cmd_table1) return run_table1(table1_out);
    if (*cmd_verify) return run_verify(verify);
    if (*cmd_radial) return run_radial(radial);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_numerical_failure(e.code()) ? 2 : 1;
  }
  return 1;
}
