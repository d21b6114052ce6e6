#ifndef QSCAT_CLI_HPP
#define QSCAT_CLI_HPP

// Command-line front end. run_cli is the whole program; tools/qscat.cpp only
// forwards argv to it, which keeps the commands testable in-process.
//
// Exit codes: 0 success (including rows holding ERR cells), 2 usage error,
// 3 I/O error.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qscat/presets.hpp"
#include "qscat/resonance.hpp"
#include "qscat/sweep.hpp"
#include "qscat/table.hpp"

namespace qscat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct PotentialOptions {
  std::string potential = "rect";
  double alpha = 1.0;
  double v0 = kUnset;
  double a = kUnset;
  double v_minus = 0.0;
  double v_plus = 0.0;
  double q = 0.9;
  double hbar = 1.0;
  double mass = 1.0;
  double series_tol = 1e-15;
  bool turning_points = false;
  std::string eckart_k = "verbatim";
  int threads = 1;

  void attach(CLI::App* app) {
    app->add_option("--potential", potential, "delta | rect | eckart | hulthen")
        ->check(CLI::IsMember({"delta", "rect", "eckart", "hulthen"}));
    app->add_option("--alpha", alpha, "delta strength (energy x length)");
    app->add_option("--v0", v0, "barrier height / potential strength");
    app->add_option("--a", a, "rect half-width, eckart length, hulthen inverse length");
    app->add_option("--vminus", v_minus, "eckart V(-inf)");
    app->add_option("--vplus", v_plus, "eckart V(+inf)");
    app->add_option("--q", q, "hulthen screening parameter in (0, 1)");
    app->add_option("--hbar", hbar, "reduced Planck constant");
    app->add_option("--mass", mass, "particle mass");
    app->add_option("--series-tol", series_tol, "relative tolerance of the 2F1 series");
    app->add_flag("--turning-points", turning_points, "hulthen WKB between classical turning points");
    app->add_option("--eckart-k", eckart_k, "k in the published eckart R formula: verbatim | kminus")
        ->check(CLI::IsMember({"verbatim", "kminus"}));
    app->add_option("--threads", threads, "worker threads for sweeps");
  }

  PotentialSpec build() const {
    auto or_default = [](double v, double d) { return std::isnan(v) ? d : v; };
    PotentialSpec p;
    if (potential == "delta")
      p = Delta{alpha};
    else if (potential == "rect")
      p = Rectangular{or_default(v0, 1.0), or_default(a, 1.0)};
    else if (potential == "eckart")
      p = Eckart{v_minus, v_plus, or_default(v0, 0.0), or_default(a, 1.0)};
    else
      p = Hulthen{or_default(v0, 1.0), or_default(a, 0.5), q};
    return p;
  }

  SweepSpec base_spec() const {
    SweepSpec s;
    s.potential = build();
    s.ctx = {hbar, mass};
    s.series.rel_tol = series_tol;
    s.hulthen_turning_points = turning_points;
    s.eckart_convention = eckart_k == "kminus" ? EckartKConvention::k_minus_inf : EckartKConvention::verbatim;
    s.threads = threads;
    return s;
  }
};

inline std::vector<Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<Method> out;
  for (const auto& n : names) {
    const auto m = parse_method(n);
    if (!m) throw UsageError("unknown method '" + n + "' (expected exact, wkb or bound)");
    if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
  }
  return out;
}

inline SweepVariable parse_variable(const std::string& s) {
  const auto v = parse_sweep_variable(s);
  if (!v) throw UsageError("unknown sweep variable '" + s + "' (expected k, q, E or V0)");
  return *v;
}

/// Validation failures of user parameters are usage errors, not data errors.
template <class Fn>
auto as_usage(Fn&& fn) {
  try {
    return fn();
  } catch (const ScatterError& e) {
    throw UsageError(e.what());
  }
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Reads a flat key=value file into flag tokens. Keys mirror flag names
/// without the leading dashes; "true" marks a flag, "false" drops it.
inline std::vector<std::string> spec_file_args(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read spec file '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw UsageError(path + ":" + std::to_string(lineno) + ": empty key");
    if (value == "false") continue;
    out.push_back("--" + key);
    if (value != "true" && !value.empty()) out.push_back(value);
  }
  return out;
}

/// Splices --spec file contents in right after the subcommand so that flags
/// given on the command line, which follow, take precedence.
inline std::vector<std::string> expand_spec_files(std::vector<std::string> args,
                                                  const std::vector<std::string>& subcommands) {
  std::optional<std::string> path;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--spec") {
      if (i + 1 >= args.size()) throw UsageError("--spec needs a file path");
      path = args[++i];
    } else if (args[i].rfind("--spec=", 0) == 0) {
      path = args[i].substr(7);
    } else {
      kept.push_back(args[i]);
    }
  }
  if (!path) return kept;
  auto from_file = spec_file_args(*path);
  auto it = std::find_if(kept.begin(), kept.end(), [&](const std::string& a) {
    return std::find(subcommands.begin(), subcommands.end(), a) != subcommands.end();
  });
  if (it == kept.end()) throw UsageError("--spec must be used with a subcommand");
  kept.insert(it + 1, from_file.begin(), from_file.end());
  return kept;
}

inline OutputTable resonance_table(const std::vector<ResonanceReport>& reports) {
  OutputTable t;
  t.header = {"kind", "location", "value", "source", "label", "boundary"};
  for (const auto& r : reports) {
    t.rows.push_back({to_string(r.kind), format_number(r.location), format_number(r.value), to_string(r.source),
                      r.label(), r.boundary ? "1" : "0"});
  }
  return t;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using namespace detail;

  CLI::App app{"qscat: one-dimensional transmission and reflection probabilities", "qscat"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  // eval, wkb, bound
  PotentialOptions eval_opts;
  double eval_energy = 0.0;
  std::vector<std::string> eval_methods = {"exact"};
  auto* eval = app.add_subcommand("eval", "probabilities at one energy");
  auto* wkb = app.add_subcommand("wkb", "eval with --method wkb");
  auto* bound = app.add_subcommand("bound", "eval with --method bound");
  for (auto* sc : {eval, wkb, bound}) {
    eval_opts.attach(sc);
    sc->add_option("--energy", eval_energy, "total energy")->required();
  }
  eval->add_option("--method", eval_methods, "exact | wkb | bound (repeatable)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  // sweep
  PotentialOptions sweep_opts;
  std::string sweep_var = "E";
  double sweep_lo = 0.0, sweep_hi = 1.0, sweep_energy = kUnset;
  int sweep_points = 100;
  bool sweep_log = false;
  std::vector<std::string> sweep_methods = {"exact"};
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "grid over one variable, CSV output");
  sweep_opts.attach(sweep);
  sweep->add_option("--var", sweep_var, "k | q | E | V0")->required();
  sweep->add_option("--lo", sweep_lo, "first grid value")->required();
  sweep->add_option("--hi", sweep_hi, "last grid value")->required();
  sweep->add_option("--points", sweep_points, "number of grid points (>= 2)");
  sweep->add_option("--energy", sweep_energy, "fixed energy for V0 sweeps");
  sweep->add_flag("--log", sweep_log, "log-spaced grid");
  sweep->add_option("--method", sweep_methods, "exact | wkb | bound (repeatable)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  sweep->add_option("--out", sweep_out, "output CSV path (default: standard output)");

  // resonances
  PotentialOptions res_opts;
  std::string res_var;
  int res_n = 5;
  std::string res_kind = "both";
  bool res_numeric = false;
  double res_lo = kUnset, res_hi = kUnset, res_tol = 1e-10, res_energy = kUnset;
  int res_grid = 1024;
  auto* res = app.add_subcommand("resonances", "analytic or numeric resonance locations");
  res_opts.attach(res);
  res->add_option("--var", res_var, "k | q | E | V0")->required();
  res->add_option("--n", res_n, "number of analytic resonances");
  res->add_option("--kind", res_kind, "transmission | reflection | both")
      ->check(CLI::IsMember({"transmission", "reflection", "both"}));
  res->add_flag("--numeric", res_numeric, "scan the exact curve instead of closed forms");
  res->add_option("--lo", res_lo, "numeric scan start");
  res->add_option("--hi", res_hi, "numeric scan end");
  res->add_option("--grid", res_grid, "numeric scan grid points (>= 16)");
  res->add_option("--tol", res_tol, "golden-section refinement tolerance");
  res->add_option("--energy", res_energy, "energy for V0 scans and eckart values");

  // figure
  std::string fig_name;
  std::string fig_out = ".";
  int fig_threads = 1;
  auto* fig = app.add_subcommand("figure", "write the CSV panels of a figure preset");
  fig->add_option("preset", fig_name, "fig1 | fig3 | fig3a | fig4 | fig5 | fig7 | fig10 | fig11")->required();
  fig->add_option("--out", fig_out, "output directory");
  fig->add_option("--threads", fig_threads, "worker threads");

  try {
    args = expand_spec_files(std::move(args), {"eval", "wkb", "bound", "sweep", "resonances", "figure"});
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << "run 'qscat --help' for usage\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }

  try {
    if (eval->parsed() || wkb->parsed() || bound->parsed()) {
      SweepSpec s = eval_opts.base_spec();
      if (wkb->parsed())
        s.methods = {Method::wkb};
      else if (bound->parsed())
        s.methods = {Method::bound};
      else
        s.methods = parse_methods(eval_methods);
      as_usage([&] {
        validate(s.potential);
        s.ctx.validate();
        s.series.validate();
        return 0;
      });
      if (!std::isfinite(eval_energy)) throw UsageError("--energy must be finite");
      s.variable = SweepVariable::E;
      const SweepRow row = evaluate_point(s, eval_energy);
      out << sweep_table(s, {row}, "E").to_csv();
      return kExitOk;
    }

    if (sweep->parsed()) {
      SweepSpec s = sweep_opts.base_spec();
      s.variable = parse_variable(sweep_var);
      s.lo = sweep_lo;
      s.hi = sweep_hi;
      s.points = sweep_points;
      s.energy = sweep_energy;
      s.log_spaced = sweep_log;
      s.methods = parse_methods(sweep_methods);
      as_usage([&] {
        s.validate();
        return 0;
      });
      const std::string csv = sweep_table(s, run_sweep(s)).to_csv();
      if (sweep_out.empty() || sweep_out == "-")
        out << csv;
      else
        write_file(sweep_out, csv);
      return kExitOk;
    }

    if (res->parsed()) {
      SweepSpec s = res_opts.base_spec();
      s.variable = parse_variable(res_var);
      as_usage([&] {
        validate(s.potential);
        s.ctx.validate();
        return 0;
      });
      std::optional<ResonanceKind> kind;
      if (res_kind == "transmission") kind = ResonanceKind::transmission;
      if (res_kind == "reflection") kind = ResonanceKind::reflection;

      if (!res_numeric) {
        ResonanceList list;
        try {
          std::optional<double> e;
          if (std::isfinite(res_energy)) e = res_energy;
          list = analytic_resonances(s.potential, s.variable, res_n, s.ctx, kind, e);
        } catch (const ScatterError& e) {
          if (e.code() == ErrorCode::unsupported) throw UsageError(std::string(e.what()) + "; try --numeric");
          throw UsageError(e.what());
        }
        out << resonance_table(list.reports).to_csv();
        for (const auto& r : list.reasons) out << "# " << r << "\n";
        return kExitOk;
      }

      if (!std::isfinite(res_lo) || !std::isfinite(res_hi)) throw UsageError("--numeric needs --lo and --hi");
      s.methods = {Method::exact};
      s.energy = res_energy;
      s.lo = res_lo;
      s.hi = res_hi;
      as_usage([&] {
        s.validate();
        return 0;
      });
      std::vector<ResonanceReport> reports;
      for (ResonanceKind k : {ResonanceKind::transmission, ResonanceKind::reflection}) {
        if (kind && *kind != k) continue;
        auto curve = [&](double x) {
          const SweepRow row = evaluate_point(s, x);
          const MethodEntry& e = row.entries.at(Method::exact);
          if (e.error) throw ScatterError(*e.error, e.message);
          return k == ResonanceKind::transmission ? *e.transmission : *e.reflection;
        };
        auto found = as_usage([&] { return numeric_resonances(curve, res_lo, res_hi, res_grid, res_tol, k); });
        reports.insert(reports.end(), found.begin(), found.end());
      }
      out << resonance_table(reports).to_csv();
      return kExitOk;
    }

    if (fig->parsed()) {
      const auto panels = figure_preset(fig_name);
      if (!panels) {
        std::string names;
        for (const auto& n : figure_preset_names()) names += (names.empty() ? "" : ", ") + n;
        throw UsageError("unknown preset '" + fig_name + "'; available: " + names);
      }
      std::error_code ec;
      std::filesystem::create_directories(fig_out, ec);
      if (ec) throw IoError("cannot create directory '" + fig_out + "': " + ec.message());
      OutputTable manifest;
      manifest.header = {"panel", "file", "potential", "variable", "lo", "hi", "points", "methods", "parameters"};
      for (auto panel : *panels) {
        panel.spec.threads = fig_threads;
        const std::string file = panel.name + ".csv";
        write_file(std::filesystem::path(fig_out) / file, sweep_table(panel.spec, run_sweep(panel.spec)).to_csv());
        std::string methods;
        for (Method m : panel.spec.methods) methods += (methods.empty() ? "" : ";") + to_string(m);
        manifest.rows.push_back({panel.name, file, potential_name(panel.spec.potential),
                                 to_string(panel.spec.variable), format_number(panel.spec.lo),
                                 format_number(panel.spec.hi), std::to_string(panel.spec.points), methods,
                                 panel.parameters});
        out << file << "\n";
      }
      write_file(std::filesystem::path(fig_out) / (fig_name + "_manifest.csv"), manifest.to_csv());
      out << fig_name << "_manifest.csv\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(std::move(args), out, err);
}

}  // namespace qscat::cli

#endif  // QSCAT_CLI_HPP
