#ifndef QSCAT_RESONANCE_HPP
#define QSCAT_RESONANCE_HPP

// Resonances: parameter values where T or R reaches unity.
//
// analytic_resonances lists the closed-form locations that exist for the
// delta, rectangular and Eckart potentials. numeric_resonances scans any
// probability curve for interior maxima and refines them by golden section.
// A refined maximum counts as a resonance only if it reaches 1 - 1e-6;
// otherwise it is reported as a peak.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qscat/core.hpp"
#include "qscat/exact.hpp"
#include "qscat/potentials.hpp"

namespace qscat {

enum class ResonanceKind { transmission, reflection };
enum class ResonanceSource { analytic, numeric };

inline constexpr double kResonanceThreshold = 1.0 - 1e-6;

inline std::string to_string(ResonanceKind k) {
  return k == ResonanceKind::transmission ? "transmission" : "reflection";
}
inline std::string to_string(ResonanceSource s) { return s == ResonanceSource::analytic ? "analytic" : "numeric"; }

struct ResonanceReport {
  ResonanceKind kind = ResonanceKind::transmission;
  double location = 0.0;
  double value = 0.0;
  ResonanceSource source = ResonanceSource::analytic;
  /// Location is the end of the physical range (k = 0), a limit rather than an interior maximum.
  bool boundary = false;

  bool is_resonance() const { return value >= kResonanceThreshold; }
  std::string label() const { return is_resonance() ? "resonance" : "peak"; }
};

struct ResonanceList {
  std::vector<ResonanceReport> reports;
  /// Why a requested kind has no entries. Empty when nothing needs explaining.
  std::vector<std::string> reasons;
};

namespace detail {

inline bool wants(std::optional<ResonanceKind> requested, ResonanceKind k) { return !requested || *requested == k; }

// R -> 1 as k -> 0 for both the delta and the rectangular barrier.
inline ResonanceReport k_zero_reflection() {
  return {ResonanceKind::reflection, 0.0, 1.0, ResonanceSource::analytic, true};
}

[[noreturn]] inline void unsupported_pair(const PotentialSpec& p, SweepVariable var) {
  throw ScatterError(ErrorCode::unsupported, "no closed-form resonances for " + potential_name(p) + " in variable " +
                                                 to_string(var));
}

}  // namespace detail

/// First n_max closed-form resonance locations in the requested variable.
/// energy is needed only to evaluate the Eckart transmission at its
/// resonances when the two asymptotes differ.
inline ResonanceList analytic_resonances(const PotentialSpec& p, SweepVariable var, int n_max,
                                         const PhysicsContext& ctx = {},
                                         std::optional<ResonanceKind> kind = std::nullopt,
                                         std::optional<double> energy = std::nullopt) {
  using std::numbers::pi;
  validate(p);
  ctx.validate();
  if (n_max < 1) throw ScatterError(ErrorCode::invalid_input, "resonances: n_max must be positive");
  const double f = ctx.energy_to_k2();
  ResonanceList out;

  if (std::holds_alternative<Delta>(p)) {
    if (var != SweepVariable::k && var != SweepVariable::E) detail::unsupported_pair(p, var);
    if (detail::wants(kind, ResonanceKind::transmission))
      out.reasons.push_back("this potential has no transmission resonances");
    if (detail::wants(kind, ResonanceKind::reflection)) out.reports.push_back(detail::k_zero_reflection());
    return out;
  }

  if (const auto* r = std::get_if<Rectangular>(&p)) {
    if (var == SweepVariable::V0) detail::unsupported_pair(p, var);
    if (detail::wants(kind, ResonanceKind::transmission)) {
      for (int n = 1; n <= n_max; ++n) {
        const double q = n * pi / (2.0 * r->a);
        const double e = r->v0 + q * q / f;
        double location = q;
        if (var == SweepVariable::E) location = e;
        if (var == SweepVariable::k) location = std::sqrt(f * e);
        const double t = probabilities_from_amplitudes(rectangular_above(r->v0, r->a, e, ctx)).transmission;
        out.reports.push_back({ResonanceKind::transmission, location, t, ResonanceSource::analytic});
      }
    }
    if (detail::wants(kind, ResonanceKind::reflection)) {
      if (var == SweepVariable::q)
        out.reasons.push_back("the reflection resonance at k = 0 has no real q");
      else
        out.reports.push_back(detail::k_zero_reflection());
    }
    return out;
  }

  if (const auto* e = std::get_if<Eckart>(&p)) {
    if (var != SweepVariable::V0) detail::unsupported_pair(p, var);
    if (detail::wants(kind, ResonanceKind::transmission)) {
      const bool symmetric = e->v_minus_inf == e->v_plus_inf;
      if (!symmetric && !energy)
        throw ScatterError(ErrorCode::invalid_input, "resonances: eckart with unequal asymptotes needs an energy");
      for (int n = 1; n <= n_max; ++n) {
        const double v0 = -(n * (n + 1.0)) / (f * e->a * e->a);
        double value = 1.0;
        if (energy) {
          Eckart at = *e;
          at.v0 = v0;
          value = eckart_transmission(at, *energy, ctx);
        }
        out.reports.push_back({ResonanceKind::transmission, v0, value, ResonanceSource::analytic});
      }
    }
    if (detail::wants(kind, ResonanceKind::reflection))
      out.reasons.push_back("there are no reflection resonances for this potential");
    return out;
  }

  detail::unsupported_pair(p, var);
}

namespace detail {

inline constexpr double kInvGolden = 0.6180339887498948482;

/// Golden-section maximisation of f on [a, b] down to width tol.
template <class Curve>
double golden_maximize(const Curve& f, double a, double b, double tol) {
  double c = b - kInvGolden * (b - a);
  double d = a + kInvGolden * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 500 && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvGolden * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

}  // namespace detail

/// Interior local maxima of curve on [lo, hi]. Grid points where the curve
/// throws ScatterError are treated as holes and never become maxima.
/// Endpoints are never reported.
template <class Curve>
std::vector<ResonanceReport> numeric_resonances(const Curve& curve, double lo, double hi, int grid_n,
                                                double refine_tol,
                                                ResonanceKind kind = ResonanceKind::transmission) {
  if (grid_n < 16) throw ScatterError(ErrorCode::invalid_input, "numeric resonances: grid_n must be >= 16");
  if (!(lo < hi)) throw ScatterError(ErrorCode::invalid_input, "numeric resonances: need lo < hi");
  if (!(refine_tol > 0.0)) throw ScatterError(ErrorCode::invalid_input, "numeric resonances: refine_tol must be positive");

  auto safe = [&](double x) {
    try {
      const double v = curve(x);
      return std::isfinite(v) ? v : NAN;
    } catch (const ScatterError&) {
      return static_cast<double>(NAN);
    }
  };
  auto x_at = [&](int i) { return i == grid_n - 1 ? hi : lo + (hi - lo) * i / (grid_n - 1); };
  std::vector<double> y(grid_n);
  for (int i = 0; i < grid_n; ++i) y[i] = safe(x_at(i));

  std::vector<ResonanceReport> out;
  for (int i = 1; i + 1 < grid_n; ++i) {
    if (std::isnan(y[i - 1]) || std::isnan(y[i]) || std::isnan(y[i + 1])) continue;
    if (!(y[i] > y[i - 1] && y[i] >= y[i + 1])) continue;
    auto objective = [&](double x) {
      const double v = safe(x);
      return std::isnan(v) ? -INFINITY : v;
    };
    double loc = detail::golden_maximize(objective, x_at(i - 1), x_at(i + 1), refine_tol);
    double val = objective(loc);
    if (val < y[i]) {
      loc = x_at(i);
      val = y[i];
    }
    if (!out.empty() && std::abs(out.back().location - loc) <= 10.0 * refine_tol) continue;
    out.push_back({kind, loc, val, ResonanceSource::numeric});
  }
  return out;
}

}  // namespace qscat

#endif  // QSCAT_RESONANCE_HPP
