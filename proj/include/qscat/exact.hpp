#ifndef QSCAT_EXACT_HPP
#define QSCAT_EXACT_HPP

// Closed-form scattering amplitudes for the four exactly solvable potentials.

#include <cmath>
#include <numbers>

#include "qscat/core.hpp"
#include "qscat/potentials.hpp"
#include "qscat/specfun.hpp"

namespace qscat {

inline constexpr complex I{0.0, 1.0};

// ---------------------------------------------------------------------------
// Delta potential

inline ScatteringAmplitudes delta_amplitudes(double alpha, double energy, const PhysicsContext& ctx = {}) {
  if (!(energy > 0.0)) throw ScatterError(ErrorCode::invalid_energy, "delta: energy must be positive");
  const auto w = wavenumbers(Delta{alpha}, energy, ctx);
  const double k = w.k;
  const double k0 = *w.k0;
  const complex denom(k, -k0);
  return {k / denom, I * k0 / denom, k, k};
}

// ---------------------------------------------------------------------------
// Rectangular barrier of height v0 on |x| <= a

namespace detail {

inline void check_rectangular(double v0, double a, double energy) {
  validate(Rectangular{v0, a});
  if (!std::isfinite(energy)) throw ScatterError(ErrorCode::invalid_energy, "rect: energy must be finite");
  if (energy == v0)
    throw ScatterError(ErrorCode::degenerate_energy, "rect: energy equals the barrier height; perturb the energy");
}

}  // namespace detail

/// Case E > v0: oscillatory inside the barrier.
inline ScatteringAmplitudes rectangular_above(double v0, double a, double energy, const PhysicsContext& ctx = {}) {
  detail::check_rectangular(v0, a, energy);
  if (energy < v0)
    throw ScatterError(ErrorCode::wrong_case, "rect: energy below the barrier, use rectangular_below");
  const auto w = wavenumbers(Rectangular{v0, a}, energy, ctx);
  const double k = w.k;
  const double q = *w.q_inside;
  const complex phase = std::exp(2.0 * I * k * a);
  const complex denom =
      (k + q) * (k + q) * std::exp(2.0 * I * q * a) - (k - q) * (k - q) * std::exp(-2.0 * I * q * a);
  const complex t = 4.0 * k * q * phase / denom;
  const complex r = 2.0 * I * (k * k - q * q) * std::sin(2.0 * q * a) * phase / denom;
  return {t, r, k, k};
}

/// Case 0 < E < v0: tunnelling.
inline ScatteringAmplitudes rectangular_below(double v0, double a, double energy, const PhysicsContext& ctx = {}) {
  detail::check_rectangular(v0, a, energy);
  if (!(energy > 0.0) || energy > v0)
    throw ScatterError(ErrorCode::wrong_case, "rect: energy must lie in (0, v0), use rectangular_above");
  const auto w = wavenumbers(Rectangular{v0, a}, energy, ctx);
  const double k = w.k;
  const double Q = *w.big_q;
  const double x = 2.0 * Q * a;
  // Numerator and denominator divided by cosh(2Qa) so wide barriers do not overflow.
  const double e2 = std::exp(-2.0 * x);
  const double sech = 2.0 * std::exp(-x) / (1.0 + e2);
  const double tanh = std::tanh(x);
  const complex phase = std::exp(-2.0 * I * k * a);
  const complex denom = (k * k - Q * Q) * tanh + 2.0 * I * k * Q;
  const complex t = 2.0 * I * Q * k * phase * sech / denom;
  const complex r = (k * k + Q * Q) * tanh * phase / denom;
  return {t, r, k, k};
}

/// Dispatches on the energy. E == v0 is rejected.
inline ScatteringAmplitudes rectangular_amplitudes(double v0, double a, double energy, const PhysicsContext& ctx = {}) {
  detail::check_rectangular(v0, a, energy);
  return energy > v0 ? rectangular_above(v0, a, energy, ctx) : rectangular_below(v0, a, energy, ctx);
}

// ---------------------------------------------------------------------------
// Eckart potential

namespace detail {

struct EckartChannels {
  double k_minus;
  double k_plus;
  double k_bar;
  double s2;  // 1/4 - 2 m v0 a^2 / hbar^2
};

inline EckartChannels eckart_channels(const Eckart& e, double energy, const PhysicsContext& ctx) {
  const auto w = wavenumbers(e, energy, ctx);
  const double s2 = 0.25 - ctx.energy_to_k2() * e.v0 * e.a * e.a;
  return {*w.k_minus_inf, *w.k_plus_inf, w.k, s2};
}

}  // namespace detail

/// Transmission probability
///   T = sinh(pi k- a) sinh(pi k+ a) / (sinh^2(pi kbar a) + cos^2(pi sqrt(1/4 - 2 m v0 a^2/hbar^2)))
/// evaluated after dividing through by exp(2 pi kbar a) / 4.
inline double eckart_transmission(const Eckart& e, double energy, const PhysicsContext& ctx = {}) {
  using std::numbers::pi;
  const auto ch = detail::eckart_channels(e, energy, ctx);
  const double x1 = pi * ch.k_minus * e.a;
  const double x2 = pi * ch.k_plus * e.a;
  const double xb = pi * ch.k_bar * e.a;
  // cos^2 term times 4 exp(-2 xb); cos of an imaginary argument is cosh.
  double cos_term;
  if (ch.s2 >= 0.0) {
    const double c = std::cos(pi * std::sqrt(ch.s2));
    cos_term = 4.0 * c * c * std::exp(-2.0 * xb);
  } else {
    const double beta = pi * std::sqrt(-ch.s2);
    const double c = std::exp(beta - xb) + std::exp(-beta - xb);
    cos_term = c * c;
  }
  const double num = std::expm1(-2.0 * x1) * std::expm1(-2.0 * x2);
  const double sh = std::expm1(-2.0 * xb);
  return num / (sh * sh + cos_term);
}

/// Transmission amplitude built from complex gamma functions. |t|^2 equals
/// eckart_transmission; kept as an independent route.
inline complex eckart_transmission_amplitude(const Eckart& e, double energy, const PhysicsContext& ctx = {}) {
  const auto ch = detail::eckart_channels(e, energy, ctx);
  const complex s = std::sqrt(complex(ch.s2, 0.0));
  const complex base = I * ch.k_bar * e.a + 0.5;
  const complex log_ratio = log_gamma(base + s) + log_gamma(base - s) - log_gamma(I * ch.k_plus * e.a) -
                            log_gamma(I * ch.k_minus * e.a);
  return -I / (std::sqrt(ch.k_plus * ch.k_minus) * e.a) * std::exp(log_ratio);
}

enum class EckartKConvention {
  verbatim,        ///< k = sqrt(2 m E)/hbar as the published formula reads
  k_minus_inf,     ///< k = k(-inf)
};

/// The published closed form for the Eckart reflection probability,
///   R = (cosh[pi a (k - s)] - cos(pi b)) / (cosh[pi a (k + s)] - cos(pi b)),
///   s = sqrt(k+^2 + k-^2 - k^2), b = sqrt(1 - 8 m v0 a^2/hbar^2).
/// Diagnostic only: it does not reproduce 1 - eckart_transmission.
inline double eckart_reflection_published(const Eckart& e, double energy, const PhysicsContext& ctx = {},
                                          EckartKConvention convention = EckartKConvention::verbatim) {
  using std::numbers::pi;
  const auto ch = detail::eckart_channels(e, energy, ctx);
  const double f = ctx.energy_to_k2();
  double k;
  if (convention == EckartKConvention::verbatim) {
    if (!(energy > 0.0))
      throw ScatterError(ErrorCode::wrong_case, "eckart: verbatim reflection formula needs E > 0");
    k = std::sqrt(f * energy);
  } else {
    k = ch.k_minus;
  }
  const double s2 = ch.k_plus * ch.k_plus + ch.k_minus * ch.k_minus - k * k;
  if (s2 < 0.0) throw ScatterError(ErrorCode::wrong_case, "eckart: k+^2 + k-^2 - k^2 is negative");
  const double s = std::sqrt(s2);
  const double big = pi * e.a * (k + s);
  const double small = pi * e.a * (k - s);
  // Divide through by exp(big) / 2.
  const double b2 = 1.0 - 4.0 * f * e.v0 * e.a * e.a;
  double cos_term;  // 2 cos(pi b) exp(-big)
  if (b2 >= 0.0) {
    cos_term = 2.0 * std::cos(pi * std::sqrt(b2)) * std::exp(-big);
  } else {
    const double beta = pi * std::sqrt(-b2);
    cos_term = std::exp(beta - big) + std::exp(-beta - big);
  }
  const double num = std::exp(small - big) + std::exp(-small - big) - cos_term;
  const double den = 1.0 + std::exp(-2.0 * big) - cos_term;
  return num / den;
}

// ---------------------------------------------------------------------------
// Hulthen potential, E > V(x)

/// Parameters of the hypergeometric solution. The dispersion k^2 = E^2 - m^2
/// is the one the closed form is written in (natural units, hbar = 1).
struct HulthenParams {
  complex mu;
  complex nu;
  complex lambda;
  double p = 0.0;
  double k = 0.0;
  double energy = 0.0;
  double mass = 0.0;
  double v0 = 0.0;
  double q = 0.0;
  double a = 0.0;
};

inline HulthenParams hulthen_params(const Hulthen& h, double energy, double mass) {
  validate(h);
  if (!(mass > 0.0)) throw ScatterError(ErrorCode::invalid_input, "hulthen: mass must be positive");
  PhysicsContext ctx;
  ctx.mass = mass;
  const auto w = wavenumbers(h, energy, ctx);
  HulthenParams hp;
  hp.k = w.k;
  hp.p = *w.q_inside;
  hp.mu = I * hp.k / h.a;
  hp.nu = I * hp.p / h.a;
  hp.lambda = I * h.v0 / (h.a * h.q);
  hp.energy = energy;
  hp.mass = mass;
  hp.v0 = h.v0;
  hp.q = h.q;
  hp.a = h.a;
  return hp;
}

inline ScatteringAmplitudes hulthen_amplitudes(const Hulthen& h, double energy, double mass,
                                               const SeriesControl& ctrl = {}) {
  const HulthenParams hp = hulthen_params(h, energy, mass);
  const complex mu = hp.mu;
  const complex nu = hp.nu;
  const complex lam = hp.lambda;
  const double q = hp.q;
  auto F = [&](complex a, complex b, complex c) { return gauss_2f1(a, b, c, q, ctrl); };

  // The six distinct hypergeometric factors.
  const complex f_lpm = F(lam + mu - nu, lam + mu + nu, 1.0 + 2.0 * mu);             // F(l+m-n, l+m+n; 1+2m)
  const complex f_lmm = F(lam - mu - nu, lam - mu + nu, 1.0 - 2.0 * mu);             // F(l-m-n, l-m+n; 1-2m)
  const complex f_nlmm = F(-lam - mu - nu, -lam - mu + nu, 1.0 - 2.0 * mu);          // F(-l-m-n, -l-m+n; 1-2m)
  const complex f1_lmm = F(1.0 + lam - mu - nu, 1.0 + lam - mu + nu, 2.0 - 2.0 * mu);   // F(1+l-m-n, 1+l-m+n; 2-2m)
  const complex f1_lpm = F(1.0 + lam + mu - nu, 1.0 + lam + mu + nu, 2.0 + 2.0 * mu);   // F(1+l+m-n, 1+l+m+n; 2+2m)
  const complex f1_nlmm = F(1.0 - lam - mu - nu, 1.0 - lam - mu + nu, 2.0 - 2.0 * mu);  // F(1-l-m-n, 1-l-m+n; 2-2m)

  const complex plus = lam * lam + 2.0 * lam * mu + mu * mu - nu * nu;   // (l+m)^2 - n^2
  const complex minus = lam * lam - 2.0 * lam * mu + mu * mu - nu * nu;  // (l-m)^2 - n^2
  const complex one_p = 1.0 + 2.0 * mu;
  const complex one_m = 1.0 - 2.0 * mu;
  const complex two_mu = 2.0 * mu;

  // Common denominator of t and r.
  const complex denom = q * plus * f1_nlmm * f_lmm + q * minus * f1_lmm * f_nlmm - two_mu * one_m * f_lmm * f_nlmm;

  const complex t_num = q * one_p * minus * f1_lmm * f_lpm - q * one_m * plus * f1_lpm * f_lmm -
                        one_m * two_mu * one_p * f_lpm * f_lmm;
  const double log_q = std::log(q);
  const complex t_pre = std::exp(2.0 * lam * std::log1p(-q) + 2.0 * mu * log_q) / one_p;
  const complex t = t_pre * t_num / denom;

  const complex r_num = one_p * f_lpm * f1_nlmm + one_m * f1_lpm * f_nlmm;
  const double root = std::sqrt((hp.energy + hp.k) / (hp.energy - hp.k));
  const complex r_pre = -std::exp((1.0 + 2.0 * mu) * log_q) * plus / one_p * root;
  const complex r = r_pre * r_num / denom;

  if (!is_finite(t) || !is_finite(r))
    throw ScatterError(ErrorCode::non_convergence, "hulthen: non-finite amplitude");
  return {t, r, hp.k, hp.k};
}

}  // namespace qscat

#endif  // QSCAT_EXACT_HPP
