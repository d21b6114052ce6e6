#ifndef QSCAT_SPECFUN_HPP
#define QSCAT_SPECFUN_HPP

// Complex log-gamma and the Gauss hypergeometric series 2F1(a, b; c; z) with
// complex parameters and a real argument 0 <= z < 1.

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qscat/core.hpp"

namespace qscat {

struct SeriesControl {
  double rel_tol = 1e-15;
  int max_terms = 20000;

  void validate() const {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-6))
      throw ScatterError(ErrorCode::invalid_input, "series rel_tol must lie in (0, 1e-6]");
    if (max_terms < 100) throw ScatterError(ErrorCode::invalid_input, "series max_terms must be >= 100");
  }
};

namespace detail {

inline bool is_nonpositive_integer(complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Lanczos approximation, g = 7, nine coefficients.
inline complex log_gamma_lanczos(complex z) {
  static constexpr double g = 7.0;
  static constexpr std::array<double, 9> coef = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  z -= 1.0;
  complex x = coef[0];
  for (std::size_t i = 1; i < coef.size(); ++i) x += coef[i] / (z + static_cast<double>(i));
  const complex t = z + g + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log(sin(pi z)) without overflow for large |Im z|.
inline complex log_sin_pi(complex z) {
  using std::numbers::pi;
  const double y = z.imag();
  if (y == 0.0) return std::log(complex(std::sin(pi * z.real()), 0.0));
  if (y < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  // sin(pi z) = exp(-i pi z) (exp(2 i pi z) - 1) / (2i), |exp(2 i pi z)| < 1
  const complex i(0.0, 1.0);
  return -i * pi * z + std::log(std::exp(2.0 * i * pi * z) - 1.0) - std::log(2.0 * i);
}

}  // namespace detail

/// log Gamma(z). Lanczos for Re z >= 1/2, reflection formula below that.
/// The imaginary part is only defined modulo 2*pi for Re z < 1/2.
inline complex log_gamma(complex z) {
  if (!is_finite(z)) throw ScatterError(ErrorCode::invalid_input, "log_gamma: non-finite argument");
  if (detail::is_nonpositive_integer(z)) {
    std::ostringstream os;
    os << "log_gamma: pole at z = " << z.real();
    throw ScatterError(ErrorCode::pole, os.str());
  }
  if (z.real() < 0.5)
    return std::log(std::numbers::pi) - detail::log_sin_pi(z) - detail::log_gamma_lanczos(1.0 - z);
  return detail::log_gamma_lanczos(z);
}

/// Gauss 2F1(a, b; c; z) by its power series. Stops once three consecutive
/// terms are below rel_tol times the partial sum.
inline complex gauss_2f1(complex a, complex b, complex c, double z, const SeriesControl& ctrl = {}) {
  ctrl.validate();
  if (!(z >= 0.0 && z < 1.0)) throw ScatterError(ErrorCode::invalid_input, "gauss_2f1: argument must lie in [0, 1)");
  if (detail::is_nonpositive_integer(c)) {
    std::ostringstream os;
    os << "gauss_2f1: c = " << c.real() << " is a non-positive integer";
    throw ScatterError(ErrorCode::pole, os.str());
  }
  if (z == 0.0) return 1.0;

  complex sum = 1.0;
  complex term = 1.0;
  int small_run = 0;
  for (int n = 0; n < ctrl.max_terms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    sum += term;
    if (std::abs(term) < ctrl.rel_tol * std::abs(sum) || term == 0.0) {
      if (++small_run == 3) return sum;
    } else {
      small_run = 0;
    }
  }
  std::ostringstream os;
  os << "gauss_2f1: no convergence after " << ctrl.max_terms << " terms, last term magnitude "
     << std::abs(term);
  throw ScatterError(ErrorCode::non_convergence, os.str());
}

}  // namespace qscat

#endif  // QSCAT_SPECFUN_HPP
