#ifndef QSCAT_BOUND_HPP
#define QSCAT_BOUND_HPP

// Rigorous lower bound on the transmission probability from a 2x2 transfer
// matrix argument:
//
//   T >= sech^2( 1/2 * integral_{x1}^{x2} |k0 - k^2(x)/k0| dx ),
//   k^2(x) = 2m (E - V(x)) / hbar^2,
//
// with k0 the wavenumber outside the window.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "qscat/core.hpp"
#include "qscat/potentials.hpp"
#include "qscat/quadrature.hpp"

namespace qscat {

struct BoundResult {
  double lower_bound = 1.0;
  double integral_value = 0.0;  // argument of sech^2, dimensionless
};

inline double sech_squared(double x) {
  const double e = std::exp(-2.0 * std::abs(x));
  const double s = 2.0 * std::sqrt(e) / (1.0 + e);
  return s * s;
}

template <class V>
BoundResult transmission_bound(const V& potential, double energy, std::pair<double, double> window,
                               double v_outside = 0.0, const PhysicsContext& ctx = {},
                               const QuadratureControl& ctrl = {}) {
  ctx.validate();
  if (!(energy > v_outside))
    throw ScatterError(ErrorCode::invalid_channel, "bound: energy must exceed the potential outside the window");
  const auto [x1, x2] = window;
  if (!(x1 <= x2)) throw ScatterError(ErrorCode::invalid_input, "bound: window must satisfy x1 <= x2");
  const double f = ctx.energy_to_k2();
  const double k0 = std::sqrt(f * (energy - v_outside));
  auto integrand = [&](double x) { return std::abs(k0 - f * (energy - potential(x)) / k0); };
  const auto integral = adaptive_simpson(integrand, x1, x2, ctrl);
  if (!integral.converged) {
    std::ostringstream os;
    os << "bound: quadrature did not reach tolerance " << ctrl.abs_tol << "; estimate " << integral.value;
    throw ScatterError(ErrorCode::tolerance, os.str());
  }
  const double arg = 0.5 * integral.value;
  return {sech_squared(arg), arg};
}

/// Smallest symmetric-ish window outside which |V(x) - v_outside| stays
/// below rel_thresh * max|V - v_outside|, found by stepping outward from the
/// origin in units of scale/64.
template <class V>
std::pair<double, double> support_window(const V& potential, double v_outside, double scale,
                                         double rel_thresh = 1e-8) {
  const double step = scale / 64.0;
  const int span = 64 * 200;
  double peak = 0.0;
  for (int i = -span; i <= span; i += 8) peak = std::max(peak, std::abs(potential(i * step) - v_outside));
  if (peak == 0.0) return {0.0, 0.0};
  const double thr = rel_thresh * peak;
  auto edge = [&](double dir) {
    // Last point above threshold, scanning the full span so that a dip
    // through the threshold near the origin is not mistaken for the tail.
    int last = 0;
    for (int i = 1; i <= span; ++i)
      if (std::abs(potential(dir * i * step) - v_outside) > thr) last = i;
    return dir * (last + 1) * step;
  };
  return {edge(-1.0), edge(1.0)};
}

/// sech^2(k0^2 a / sqrt(k0^2 + q^2)) for the rectangular barrier above its top.
inline BoundResult rectangular_bound_closed_form(double v0, double a, double energy, const PhysicsContext& ctx = {}) {
  const auto w = wavenumbers(Rectangular{v0, a}, energy, ctx);
  if (!w.q_inside) throw ScatterError(ErrorCode::wrong_case, "rect bound: closed form needs energy above the barrier");
  const double k0 = *w.k0;
  const double q = *w.q_inside;
  const double arg = k0 * k0 * a / std::sqrt(k0 * k0 + q * q);
  return {sech_squared(arg), arg};
}

/// Bound for one of the canonical potentials with its natural window.
inline BoundResult transmission_bound(const PotentialSpec& p, double energy, const PhysicsContext& ctx = {},
                                      const QuadratureControl& ctrl = {}) {
  validate(p);
  return std::visit(
      overloaded{[](const Delta&) -> BoundResult {
                   throw ScatterError(ErrorCode::unsupported, "bound: not defined for the delta potential");
                 },
                 [&](const Rectangular& r) {
                   return transmission_bound([&r](double x) { return evaluate(r, x); }, energy, {-r.a, r.a}, 0.0,
                                             ctx, ctrl);
                 },
                 [&](const Eckart& e) {
                   if (e.v_minus_inf != e.v_plus_inf)
                     throw ScatterError(ErrorCode::not_applicable, "bound: eckart asymptotes differ");
                   auto v = [&e](double x) { return evaluate(e, x); };
                   if (!(energy > e.v_plus_inf))
                     throw ScatterError(ErrorCode::invalid_channel, "bound: energy below the asymptote");
                   return transmission_bound(v, energy, support_window(v, e.v_plus_inf, e.a), e.v_plus_inf, ctx,
                                             ctrl);
                 },
                 [&](const Hulthen& h) {
                   auto v = [&h](double x) { return evaluate(h, x); };
                   if (!(energy > 0.0))
                     throw ScatterError(ErrorCode::invalid_channel, "bound: energy below the asymptote");
                   return transmission_bound(v, energy, support_window(v, 0.0, 1.0 / h.a), 0.0, ctx, ctrl);
                 }},
      p);
}

}  // namespace qscat

#endif  // QSCAT_BOUND_HPP
