#ifndef QSCAT_POTENTIALS_HPP
#define QSCAT_POTENTIALS_HPP

// The four exactly solvable profiles.
//
//   Delta        V(x) = alpha * delta(x)
//   Rectangular  V(x) = v0 for |x| <= a, 0 otherwise (a is the half-width)
//   Eckart       V(x) = (V+ + V-)/2 + (V+ - V-)/2 tanh(x/a) + v0 / cosh^2(x/a)
//   Hulthen      V(x) = v0 / (exp(a|x|) - q), 0 < q < 1
//
// Eckart's a is a length; Hulthen's a is an inverse length. Both follow the
// usual conventions for these potentials and are not rescaled here.

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "qscat/core.hpp"

namespace qscat {

struct Delta {
  double alpha = 1.0;
};

struct Rectangular {
  double v0 = 1.0;
  double a = 1.0;
};

struct Eckart {
  double v_minus_inf = 0.0;
  double v_plus_inf = 0.0;
  double v0 = 0.0;
  double a = 1.0;
};

struct Hulthen {
  double v0 = 1.0;
  double a = 1.0;
  double q = 0.5;
};

using PotentialSpec = std::variant<Delta, Rectangular, Eckart, Hulthen>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline std::string potential_name(const PotentialSpec& p) {
  return std::visit(overloaded{[](const Delta&) { return std::string("delta"); },
                               [](const Rectangular&) { return std::string("rect"); },
                               [](const Eckart&) { return std::string("eckart"); },
                               [](const Hulthen&) { return std::string("hulthen"); }},
                    p);
}

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw ScatterError(ErrorCode::invalid_input, what);
}

}  // namespace detail

inline void validate(const PotentialSpec& p) {
  std::visit(overloaded{
                 [](const Delta& d) {
                   detail::require(d.alpha > 0.0 && std::isfinite(d.alpha), "delta: alpha must be positive");
                 },
                 [](const Rectangular& r) {
                   detail::require(r.v0 > 0.0 && std::isfinite(r.v0), "rect: v0 must be positive");
                   detail::require(r.a > 0.0 && std::isfinite(r.a), "rect: a must be positive");
                 },
                 [](const Eckart& e) {
                   detail::require(std::isfinite(e.v_minus_inf) && std::isfinite(e.v_plus_inf) &&
                                       std::isfinite(e.v0),
                                   "eckart: parameters must be finite");
                   detail::require(e.a > 0.0 && std::isfinite(e.a), "eckart: a must be positive");
                 },
                 [](const Hulthen& h) {
                   detail::require(h.v0 > 0.0 && std::isfinite(h.v0), "hulthen: v0 must be positive");
                   detail::require(h.a > 0.0 && std::isfinite(h.a), "hulthen: a must be positive");
                   detail::require(h.q > 0.0 && h.q < 1.0, "hulthen: q must lie in (0, 1)");
                 }},
             p);
}

inline double evaluate(const Rectangular& r, double x) { return std::abs(x) <= r.a ? r.v0 : 0.0; }

inline double evaluate(const Eckart& e, double x) {
  const double s = x / e.a;
  const double c = std::cosh(s);
  // 1/cosh^2 underflows cleanly to zero; cosh itself overflows past |s| ~ 710.
  const double bump = std::isfinite(c) ? e.v0 / (c * c) : 0.0;
  return 0.5 * (e.v_plus_inf + e.v_minus_inf) + 0.5 * (e.v_plus_inf - e.v_minus_inf) * std::tanh(s) + bump;
}

inline double evaluate(const Hulthen& h, double x) {
  // theta(-x) branch uses exp(-a x), theta(x) branch exp(a x); both are exp(a|x|).
  return h.v0 / (std::exp(h.a * std::abs(x)) - h.q);
}

inline double evaluate(const PotentialSpec& p, double x) {
  return std::visit(overloaded{[](const Delta&) -> double {
                                 throw ScatterError(ErrorCode::unsupported,
                                                    "delta potential has no pointwise value");
                               },
                               [x](const auto& v) { return evaluate(v, x); }},
                    p);
}

/// (V(-inf), V(+inf))
inline std::pair<double, double> asymptotic_values(const PotentialSpec& p) {
  if (const auto* e = std::get_if<Eckart>(&p)) return {e->v_minus_inf, e->v_plus_inf};
  return {0.0, 0.0};
}

/// Characteristic length used when scanning a smooth potential.
inline double length_scale(const PotentialSpec& p) {
  return std::visit(overloaded{[](const Delta&) { return 1.0; },
                               [](const Rectangular& r) { return r.a; },
                               [](const Eckart& e) { return e.a; },
                               [](const Hulthen& h) { return 1.0 / h.a; }},
                    p);
}

/// Independent variable of a sweep or resonance search. k and q are the
/// free-region and in-barrier wavenumbers; V0 the potential strength.
enum class SweepVariable { k, q, E, V0 };

inline std::string to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::k: return "k";
    case SweepVariable::q: return "q";
    case SweepVariable::E: return "E";
    case SweepVariable::V0: return "V0";
  }
  return "?";
}

inline std::optional<SweepVariable> parse_sweep_variable(const std::string& s) {
  if (s == "k") return SweepVariable::k;
  if (s == "q") return SweepVariable::q;
  if (s == "E" || s == "e" || s == "energy") return SweepVariable::E;
  if (s == "V0" || s == "v0") return SweepVariable::V0;
  return std::nullopt;
}

struct Wavenumbers {
  /// Free-region wavenumber. Eckart: mean of the two asymptotic values.
  /// Hulthen: sqrt(E^2 - m^2), the dispersion its exact solution is written in.
  double k = 0.0;
  std::optional<double> q_inside;  // rectangular above the barrier; Hulthen p
  std::optional<double> k0;        // delta m*alpha/hbar^2; rectangular sqrt(2 m v0)/hbar
  std::optional<double> big_q;     // rectangular below the barrier
  std::optional<double> k_minus_inf;
  std::optional<double> k_plus_inf;
};

inline Wavenumbers wavenumbers(const PotentialSpec& p, double energy, const PhysicsContext& ctx = {}) {
  ctx.validate();
  validate(p);
  if (!std::isfinite(energy)) throw ScatterError(ErrorCode::invalid_energy, "energy must be finite");
  const double f = ctx.energy_to_k2();
  Wavenumbers w;
  std::visit(
      overloaded{
          [&](const Delta& d) {
            if (!(energy > 0.0)) throw ScatterError(ErrorCode::invalid_energy, "delta: energy must be positive");
            w.k = std::sqrt(f * energy);
            w.k0 = ctx.mass * d.alpha / (ctx.hbar * ctx.hbar);
          },
          [&](const Rectangular& r) {
            if (!(energy > 0.0)) throw ScatterError(ErrorCode::invalid_energy, "rect: energy must be positive");
            if (energy == r.v0)
              throw ScatterError(ErrorCode::degenerate_energy, "rect: energy equals the barrier height");
            w.k = std::sqrt(f * energy);
            w.k0 = std::sqrt(f * r.v0);
            if (energy > r.v0)
              w.q_inside = std::sqrt(f * (energy - r.v0));
            else
              w.big_q = std::sqrt(f * (r.v0 - energy));
          },
          [&](const Eckart& e) {
            if (!(energy > e.v_minus_inf) || !(energy > e.v_plus_inf))
              throw ScatterError(ErrorCode::wrong_case, "eckart: an asymptotic channel is evanescent");
            w.k_minus_inf = std::sqrt(f * (energy - e.v_minus_inf));
            w.k_plus_inf = std::sqrt(f * (energy - e.v_plus_inf));
            w.k = 0.5 * (*w.k_minus_inf + *w.k_plus_inf);
          },
          [&](const Hulthen& h) {
            const double m = ctx.mass;
            if (!(energy > m)) throw ScatterError(ErrorCode::invalid_energy, "hulthen: energy must exceed the mass");
            w.k = std::sqrt(energy * energy - m * m);
            const double shifted = energy + h.v0 / h.q;
            w.q_inside = std::sqrt(shifted * shifted - m * m);
          }},
      p);
  return w;
}

}  // namespace qscat

#endif  // QSCAT_POTENTIALS_HPP
