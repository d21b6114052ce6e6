#ifndef QSCAT_TESTS_ORACLES_HPP
#define QSCAT_TESTS_ORACLES_HPP

// Independent reference computations. Nothing here calls the library's
// closed forms: transmission comes from integrating the Schrodinger equation,
// 2F1 from a quad-precision series, integrals from brute-force trapezoids.

#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

struct Scattering {
  double transmission;
  double reflection;
};

/// One RK4 pass of psi'' = f (V(x) - E) psi from x0 to x1 (either direction).
inline void rk4_segment(const std::function<double(double)>& V, double energy, double x0, double x1, int steps,
                        double f, cplx& psi, cplx& dpsi) {
  const double h = (x1 - x0) / steps;
  auto acc = [&](double x, cplx p) { return f * (V(x) - energy) * p; };
  for (int s = 0; s < steps; ++s) {
    const double x = x0 + s * h;
    const cplx k1p = dpsi, k1d = acc(x, psi);
    const cplx k2p = dpsi + 0.5 * h * k1d, k2d = acc(x + 0.5 * h, psi + 0.5 * h * k1p);
    const cplx k3p = dpsi + 0.5 * h * k2d, k3d = acc(x + 0.5 * h, psi + 0.5 * h * k2p);
    const cplx k4p = dpsi + h * k3d, k4d = acc(x + h, psi + h * k3p);
    psi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    dpsi += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
  }
}

struct Segment {
  double x_left;
  double x_right;
  std::function<double(double)> V;
  int steps;
};

/// Integrates right to left through the segments (ordered left to right,
/// contiguous), starting from the purely transmitted wave exp(i k_r x) at the
/// right end, then splits psi at the left end into incident and reflected
/// waves. V is constant (v_left, v_right) beyond the outer ends. Potential
/// steps belong on segment boundaries so RK4 never straddles them.
inline Scattering integrate_schrodinger(const std::vector<Segment>& segments, double energy, double v_left,
                                        double v_right, double f = 2.0) {
  const double kl = std::sqrt(f * (energy - v_left));
  const double kr = std::sqrt(f * (energy - v_right));
  const cplx i(0.0, 1.0);
  const double xr = segments.back().x_right;
  const double xl = segments.front().x_left;
  cplx psi = std::exp(i * kr * xr);
  cplx dpsi = i * kr * psi;
  for (auto it = segments.rbegin(); it != segments.rend(); ++it)
    rk4_segment(it->V, energy, it->x_right, it->x_left, it->steps, f, psi, dpsi);
  // psi = A e^{i kl x} + B e^{-i kl x}
  const cplx A = 0.5 * (psi + dpsi / (i * kl)) * std::exp(-i * kl * xl);
  const cplx B = 0.5 * (psi - dpsi / (i * kl)) * std::exp(i * kl * xl);
  return {kr / kl / std::norm(A), std::norm(B) / std::norm(A)};
}

/// Rectangular barrier of height v0 on |x| <= a.
inline Scattering rectangular(double v0, double a, double energy, int steps = 20000) {
  // The free regions need no integration: matching at x = +-a is exact.
  auto top = [v0](double) { return v0; };
  return integrate_schrodinger({{-a, a, top, steps}}, energy, 0.0, 0.0);
}

/// Eckart profile integrated over [-L, L] with L = 40 a.
inline Scattering eckart(double vm, double vp, double v0, double a, double energy, int steps = 200000) {
  auto V = [=](double x) {
    const double c = std::cosh(x / a);
    return 0.5 * (vp + vm) + 0.5 * (vp - vm) * std::tanh(x / a) + v0 / (c * c);
  };
  const double L = 40.0 * a;
  return integrate_schrodinger({{-L, L, V, steps}}, energy, vm, vp);
}

/// 2F1(a, b; c; z) summed in 34-digit complex arithmetic until terms drop
/// below 1e-40 of the sum.
inline cplx hyp2f1_quad(cplx a, cplx b, cplx c, double z) {
  using boost::multiprecision::cpp_complex_quad;
  using real = cpp_complex_quad::value_type;
  const cpp_complex_quad A(a.real(), a.imag()), B(b.real(), b.imag()), C(c.real(), c.imag());
  const real Z(z);
  cpp_complex_quad sum(1), term(1);
  for (int n = 0; n < 200000; ++n) {
    const real dn(n);
    term *= (A + dn) * (B + dn) / ((C + dn) * (dn + 1)) * Z;
    sum += term;
    if (abs(term) < real("1e-40") * abs(sum)) break;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

/// Composite trapezoid rule on n equal panels.
inline double trapezoid(const std::function<double(double)>& g, double a, double b, long n) {
  const double h = (b - a) / n;
  long double s = 0.5L * (g(a) + g(b));
  for (long i = 1; i < n; ++i) s += g(a + h * i);
  return static_cast<double>(s * h);
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(20240517ULL ^ salt); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

}  // namespace oracle

#endif  // QSCAT_TESTS_ORACLES_HPP
