#ifndef QSCAT_SWEEP_HPP
#define QSCAT_SWEEP_HPP

// Grid evaluation of exact, WKB and bound transmission over one variable.
// Every grid point is computed independently; per-point physics errors are
// stored in the row and never abort the sweep.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qscat/bound.hpp"
#include "qscat/core.hpp"
#include "qscat/exact.hpp"
#include "qscat/potentials.hpp"
#include "qscat/wkb.hpp"

namespace qscat {

enum class Method { exact, wkb, bound };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::wkb: return "wkb";
    case Method::bound: return "bound";
  }
  return "?";
}

inline std::optional<Method> parse_method(const std::string& s) {
  if (s == "exact") return Method::exact;
  if (s == "wkb") return Method::wkb;
  if (s == "bound") return Method::bound;
  return std::nullopt;
}

struct SweepSpec {
  PotentialSpec potential = Rectangular{};
  SweepVariable variable = SweepVariable::E;
  double lo = 0.0;
  double hi = 1.0;
  int points = 2;
  std::vector<Method> methods = {Method::exact};
  PhysicsContext ctx;
  /// Energy held fixed when the potential strength V0 is swept.
  double energy = std::numeric_limits<double>::quiet_NaN();
  bool log_spaced = false;
  /// Hulthen WKB over the classical turning points instead of (-1, 1).
  bool hulthen_turning_points = false;
  EckartKConvention eckart_convention = EckartKConvention::verbatim;
  SeriesControl series;
  QuadratureControl quadrature;
  int threads = 1;

  bool has(Method m) const { return std::find(methods.begin(), methods.end(), m) != methods.end(); }

  void validate() const {
    qscat::validate(potential);
    ctx.validate();
    series.validate();
    quadrature.validate();
    auto bad = [](const std::string& what) { throw ScatterError(ErrorCode::invalid_input, "sweep: " + what); };
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) bad("need finite lo < hi");
    if (points < 2) bad("need at least 2 points");
    if (log_spaced && !(lo > 0.0)) bad("log spacing needs lo > 0");
    if (methods.empty()) bad("no methods selected");
    for (std::size_t i = 0; i < methods.size(); ++i)
      for (std::size_t j = i + 1; j < methods.size(); ++j)
        if (methods[i] == methods[j]) bad("duplicate method " + to_string(methods[i]));
    if (threads < 1) bad("threads must be >= 1");

    const bool is_delta = std::holds_alternative<Delta>(potential);
    const bool is_rect = std::holds_alternative<Rectangular>(potential);
    const bool is_eckart = std::holds_alternative<Eckart>(potential);
    switch (variable) {
      case SweepVariable::E: break;
      case SweepVariable::k:
        if (!(is_delta || is_rect || is_eckart)) bad("k sweeps need delta, rect or eckart");
        break;
      case SweepVariable::q:
        if (!is_rect) bad("q sweeps need the rectangular barrier");
        break;
      case SweepVariable::V0:
        if (is_delta) bad("V0 sweeps are not defined for the delta potential");
        if (has(Method::exact) && !is_eckart) bad("exact V0 sweeps are only supported for eckart");
        if (!std::isfinite(energy)) bad("V0 sweeps need a fixed energy");
        break;
    }
  }
};

struct MethodEntry {
  std::optional<double> transmission;
  std::optional<double> reflection;
  std::optional<ErrorCode> error;
  std::string message;
};

struct SweepRow {
  double variable_value = 0.0;
  /// Case boundary (rectangular E == v0): no formula applies.
  bool gap = false;
  std::map<Method, MethodEntry> entries;
  std::optional<double> defect;
  std::optional<double> bound_gap;
  /// Published Eckart R formula, exact method only.
  std::optional<double> eckart_r_published;
  std::optional<ErrorCode> eckart_r_published_error;
};

/// The potential and energy a sweep variable value stands for.
struct SweepPoint {
  PotentialSpec potential;
  double energy = 0.0;
};

inline SweepPoint resolve_point(const SweepSpec& spec, double value) {
  const double f = spec.ctx.energy_to_k2();
  SweepPoint pt{spec.potential, spec.energy};
  switch (spec.variable) {
    case SweepVariable::E: pt.energy = value; break;
    case SweepVariable::k: pt.energy = asymptotic_values(spec.potential).first + value * value / f; break;
    case SweepVariable::q: pt.energy = std::get<Rectangular>(spec.potential).v0 + value * value / f; break;
    case SweepVariable::V0:
      std::visit(overloaded{[](Delta&) {}, [value](auto& p) { p.v0 = value; }}, pt.potential);
      break;
  }
  return pt;
}

inline std::vector<double> sweep_grid(const SweepSpec& spec) {
  std::vector<double> xs(spec.points);
  const int last = spec.points - 1;
  for (int i = 0; i <= last; ++i) {
    const double t = static_cast<double>(i) / last;
    xs[i] = spec.log_spaced ? spec.lo * std::pow(spec.hi / spec.lo, t) : spec.lo + (spec.hi - spec.lo) * t;
  }
  xs[0] = spec.lo;
  xs[last] = spec.hi;
  return xs;
}

namespace detail {

template <class Fn>
MethodEntry guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ScatterError& e) {
    MethodEntry m;
    m.error = e.code();
    m.message = e.what();
    return m;
  }
}

inline MethodEntry from_amplitudes(const ScatteringAmplitudes& a) {
  const auto p = probabilities_from_amplitudes(a);
  return {p.transmission, p.reflection, std::nullopt, {}};
}

inline MethodEntry exact_entry(const SweepSpec& spec, const SweepPoint& pt) {
  return guarded([&]() -> MethodEntry {
    return std::visit(
        overloaded{[&](const Delta& d) { return from_amplitudes(delta_amplitudes(d.alpha, pt.energy, spec.ctx)); },
                   [&](const Rectangular& r) {
                     return from_amplitudes(rectangular_amplitudes(r.v0, r.a, pt.energy, spec.ctx));
                   },
                   [&](const Eckart& e) {
                     const double t = eckart_transmission(e, pt.energy, spec.ctx);
                     return MethodEntry{t, 1.0 - t, std::nullopt, {}};
                   },
                   [&](const Hulthen& h) {
                     return from_amplitudes(hulthen_amplitudes(h, pt.energy, spec.ctx.mass, spec.series));
                   }},
        pt.potential);
  });
}

inline MethodEntry wkb_entry(const SweepSpec& spec, const SweepPoint& pt) {
  return guarded([&]() -> MethodEntry {
    const double t = std::visit(
        overloaded{[](const Delta&) -> double {
                     throw ScatterError(ErrorCode::unsupported, "wkb: not defined for the delta potential");
                   },
                   [&](const Rectangular& r) { return rectangular_wkb(r.v0, r.a, pt.energy, spec.ctx, spec.quadrature); },
                   [&](const Eckart& e) { return eckart_wkb(e, pt.energy, spec.ctx, spec.quadrature); },
                   [&](const Hulthen& h) {
                     return hulthen_wkb(h, pt.energy, spec.ctx, spec.hulthen_turning_points, spec.quadrature);
                   }},
        pt.potential);
    return {t, std::nullopt, std::nullopt, {}};
  });
}

inline MethodEntry bound_entry(const SweepSpec& spec, const SweepPoint& pt) {
  return guarded([&]() -> MethodEntry {
    return {transmission_bound(pt.potential, pt.energy, spec.ctx, spec.quadrature).lower_bound, std::nullopt,
            std::nullopt, {}};
  });
}

inline bool at_case_boundary(const SweepPoint& pt) {
  const auto* r = std::get_if<Rectangular>(&pt.potential);
  return r && pt.energy == r->v0;
}

}  // namespace detail

/// One row of a sweep at the given variable value.
inline SweepRow evaluate_point(const SweepSpec& spec, double value) {
  SweepRow row;
  row.variable_value = value;
  const SweepPoint pt = resolve_point(spec, value);
  if (detail::at_case_boundary(pt)) {
    row.gap = true;
    for (Method m : spec.methods)
      row.entries[m] = {std::nullopt, std::nullopt, ErrorCode::degenerate_energy, "energy equals the barrier height"};
    return row;
  }
  for (Method m : spec.methods) {
    switch (m) {
      case Method::exact: row.entries[m] = detail::exact_entry(spec, pt); break;
      case Method::wkb: row.entries[m] = detail::wkb_entry(spec, pt); break;
      case Method::bound: row.entries[m] = detail::bound_entry(spec, pt); break;
    }
  }
  if (auto it = row.entries.find(Method::exact); it != row.entries.end() && !it->second.error) {
    row.defect = unitarity_defect({*it->second.transmission, *it->second.reflection});
    if (auto b = row.entries.find(Method::bound); b != row.entries.end() && !b->second.error)
      row.bound_gap = *it->second.transmission - *b->second.transmission;
  }
  if (spec.has(Method::exact)) {
    if (const auto* e = std::get_if<Eckart>(&pt.potential)) {
      try {
        row.eckart_r_published = eckart_reflection_published(*e, pt.energy, spec.ctx, spec.eckart_convention);
      } catch (const ScatterError& err) {
        row.eckart_r_published_error = err.code();
      }
    }
  }
  return row;
}

/// Uniform (or log-spaced) grid over [lo, hi] including both ends, rows in
/// ascending variable order.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto xs = sweep_grid(spec);
  std::vector<SweepRow> rows(xs.size());
  const int workers = std::min<int>(spec.threads, static_cast<int>(xs.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < xs.size(); ++i) rows[i] = evaluate_point(spec, xs[i]);
    return rows;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < xs.size(); i += workers) rows[i] = evaluate_point(spec, xs[i]);
      });
    }
  }
  return rows;
}

}  // namespace qscat

#endif  // QSCAT_SWEEP_HPP
