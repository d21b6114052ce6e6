#ifndef QSCAT_WKB_HPP
#define QSCAT_WKB_HPP

// WKB barrier penetration
//   T_w = exp(-2 sqrt(2m/hbar^2) * integral_{x1}^{x2} sqrt(V(x) - E) dx)
// for any potential given as a callable double(double).

#include <cmath>
#include <sstream>
#include <utility>

#include "qscat/core.hpp"
#include "qscat/potentials.hpp"
#include "qscat/quadrature.hpp"

namespace qscat {

enum class RegionSource { solved_turning_points, fixed_limits };

struct BarrierRegion {
  double x1 = 0.0;
  double x2 = 0.0;
  RegionSource source = RegionSource::fixed_limits;

  static BarrierRegion fixed(double x1, double x2) { return {x1, x2, RegionSource::fixed_limits}; }
};

namespace detail {

// V(x) - E below this is a genuine violation, above it is rounding noise.
inline constexpr double kRegionSlack = 1e-12;
inline constexpr int kRegionCheckPoints = 513;

template <class V>
double bisect_crossing(const V& potential, double energy, double outside, double inside) {
  // Invariant: V(outside) < E <= V(inside). Returns the inside end.
  for (int it = 0; it < 400 && std::abs(inside - outside) > 1e-12; ++it) {
    const double mid = 0.5 * (outside + inside);
    if (mid == outside || mid == inside) break;
    if (potential(mid) >= energy)
      inside = mid;
    else
      outside = mid;
  }
  return inside;
}

}  // namespace detail

/// Classical turning points of a single barrier inside bracket. The bracket
/// ends must be classically allowed; the grid scan picks the outermost
/// crossings and bisection refines them to 1e-12.
template <class V>
BarrierRegion find_turning_points(const V& potential, double energy, std::pair<double, double> bracket,
                                  int scan_points = 4096) {
  auto [lo, hi] = bracket;
  if (!(lo < hi)) throw ScatterError(ErrorCode::invalid_input, "turning points: bracket must satisfy lo < hi");
  if (scan_points < 3) throw ScatterError(ErrorCode::invalid_input, "turning points: need at least 3 scan points");
  if (!(potential(lo) < energy) || !(potential(hi) < energy))
    throw ScatterError(ErrorCode::invalid_region, "turning points: bracket ends are not classically allowed");

  const int n = scan_points;
  const double h = (hi - lo) / (n - 1);
  auto x_at = [&](int i) { return i == n - 1 ? hi : lo + h * i; };
  int first = -1;
  int last = -1;
  for (int i = 1; i < n - 1; ++i) {
    if (potential(x_at(i)) >= energy) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0) throw ScatterError(ErrorCode::no_barrier, "turning points: V(x) never reaches the energy");
  for (int i = first; i <= last; ++i) {
    if (potential(x_at(i)) < energy)
      throw ScatterError(ErrorCode::invalid_region, "turning points: more than one classically forbidden region");
  }
  const double x1 = detail::bisect_crossing(potential, energy, x_at(first - 1), x_at(first));
  const double x2 = detail::bisect_crossing(potential, energy, x_at(last + 1), x_at(last));
  return {x1, x2, RegionSource::solved_turning_points};
}

/// Grow [-L, L] from the given half-width until both ends are classically allowed.
template <class V>
std::pair<double, double> expand_bracket(const V& potential, double energy, double half_width) {
  double L = half_width;
  for (int i = 0; i < 60; ++i, L *= 2.0) {
    if (potential(-L) < energy && potential(L) < energy) return {-L, L};
  }
  throw ScatterError(ErrorCode::no_barrier, "turning points: no classically allowed region found");
}

template <class V>
double wkb_transmission(const V& potential, double energy, const BarrierRegion& region, const PhysicsContext& ctx = {},
                        const QuadratureControl& ctrl = {}) {
  ctx.validate();
  ctrl.validate();
  if (!(region.x1 < region.x2)) throw ScatterError(ErrorCode::invalid_region, "wkb: region must satisfy x1 < x2");
  if (!std::isfinite(energy)) throw ScatterError(ErrorCode::invalid_energy, "wkb: energy must be finite");

  const double x1 = region.x1;
  const double x2 = region.x2;
  auto violation = [&](double x) {
    std::ostringstream os;
    os << "wkb: V(x) < E at x = " << x << " inside the region";
    return ScatterError(ErrorCode::invalid_region, os.str());
  };
  for (int i = 0; i < detail::kRegionCheckPoints; ++i) {
    const double x = x1 + (x2 - x1) * (i + 0.5) / detail::kRegionCheckPoints;
    if (potential(x) - energy < -detail::kRegionSlack) throw violation(x);
  }

  bool violated = false;
  double violated_at = 0.0;
  auto radical = [&](double x) {
    const double d = potential(x) - energy;
    if (d < -detail::kRegionSlack && !violated) {
      violated = true;
      violated_at = x;
    }
    return d > 0.0 ? std::sqrt(d) : 0.0;
  };

  QuadratureResult integral;
  if (region.source == RegionSource::solved_turning_points) {
    // x = x1 + u^2 on the left half, x = x2 - u^2 on the right half: removes
    // the square-root behaviour of the integrand at the turning points.
    const double mid = 0.5 * (x1 + x2);
    QuadratureControl half = ctrl;
    half.abs_tol = 0.5 * ctrl.abs_tol;
    auto left = adaptive_simpson([&](double u) { return 2.0 * u * radical(x1 + u * u); }, 0.0, std::sqrt(mid - x1), half);
    auto right =
        adaptive_simpson([&](double u) { return 2.0 * u * radical(x2 - u * u); }, 0.0, std::sqrt(x2 - mid), half);
    integral.value = left.value + right.value;
    integral.error_estimate = left.error_estimate + right.error_estimate;
    integral.converged = left.converged && right.converged;
  } else {
    integral = adaptive_simpson(radical, x1, x2, ctrl);
  }
  if (violated) throw violation(violated_at);
  if (!integral.converged) {
    std::ostringstream os;
    os << "wkb: quadrature did not reach tolerance " << ctrl.abs_tol << "; estimate " << integral.value
       << " +/- " << integral.error_estimate;
    throw ScatterError(ErrorCode::tolerance, os.str());
  }
  return std::exp(-2.0 * std::sqrt(ctx.energy_to_k2()) * integral.value);
}

/// exp(-4 Q a), the rectangular barrier in closed form.
inline double rectangular_wkb_closed_form(double v0, double a, double energy, const PhysicsContext& ctx = {}) {
  const auto w = wavenumbers(Rectangular{v0, a}, energy, ctx);
  if (!w.big_q) throw ScatterError(ErrorCode::wrong_case, "rect wkb: energy is above the barrier");
  return std::exp(-4.0 * *w.big_q * a);
}

inline double rectangular_wkb(double v0, double a, double energy, const PhysicsContext& ctx = {},
                              const QuadratureControl& ctrl = {}) {
  const Rectangular r{v0, a};
  validate(r);
  if (!(energy > 0.0)) throw ScatterError(ErrorCode::invalid_energy, "rect wkb: energy must be positive");
  return wkb_transmission([&r](double x) { return evaluate(r, x); }, energy, BarrierRegion::fixed(-a, a), ctx, ctrl);
}

/// Region used for Hulthen WKB. By default the fixed window (-1, 1); with
/// solve_turning_points the classical turning points instead.
inline BarrierRegion hulthen_wkb_region(const Hulthen& h, double energy, bool solve_turning_points) {
  if (!solve_turning_points) return BarrierRegion::fixed(-1.0, 1.0);
  auto v = [&h](double x) { return evaluate(h, x); };
  return find_turning_points(v, energy, expand_bracket(v, energy, 1.0 / h.a));
}

inline double hulthen_wkb(const Hulthen& h, double energy, const PhysicsContext& ctx = {},
                          bool solve_turning_points = false, const QuadratureControl& ctrl = {}) {
  validate(h);
  if (!(energy > 0.0)) throw ScatterError(ErrorCode::invalid_energy, "hulthen wkb: energy must be positive");
  const auto region = hulthen_wkb_region(h, energy, solve_turning_points);
  return wkb_transmission([&h](double x) { return evaluate(h, x); }, energy, region, ctx, ctrl);
}

inline double eckart_wkb(const Eckart& e, double energy, const PhysicsContext& ctx = {},
                         const QuadratureControl& ctrl = {}) {
  validate(e);
  auto v = [&e](double x) { return evaluate(e, x); };
  const auto region = find_turning_points(v, energy, expand_bracket(v, energy, 10.0 * e.a));
  return wkb_transmission(v, energy, region, ctx, ctrl);
}

}  // namespace qscat

#endif  // QSCAT_WKB_HPP
