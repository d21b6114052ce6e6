#ifndef QSCAT_QUADRATURE_HPP
#define QSCAT_QUADRATURE_HPP

#include <cmath>
#include <limits>

#include "qscat/core.hpp"

namespace qscat {

struct QuadratureControl {
  double abs_tol = 1e-10;
  int max_depth = 40;

  void validate() const {
    if (!(abs_tol > 0.0)) throw ScatterError(ErrorCode::invalid_input, "quadrature abs_tol must be positive");
    if (max_depth < 1) throw ScatterError(ErrorCode::invalid_input, "quadrature max_depth must be >= 1");
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

namespace detail {

// Forced splits before the error test; five samples can agree by accident.
inline constexpr int kMinDepth = 4;

template <class F>
struct SimpsonState {
  const F& f;
  int max_depth;
  QuadratureResult result;

  void recurse(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    // Interval collapsed to adjacent doubles: nothing more to gain.
    const bool exhausted = !(lm > a && m > lm && rm > m && b > rm);
    const bool accept = depth >= kMinDepth && std::abs(delta) <= 15.0 * tol;
    if (accept || exhausted || depth >= max_depth) {
      if (std::abs(delta) > 15.0 * tol) result.converged = false;
      result.value += left + right + delta / 15.0;
      result.error_estimate += std::abs(delta) / 15.0;
      return;
    }
    recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1);
    recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace detail

/// Adaptive Simpson with Richardson correction. The error budget is halved
/// on each split; an interval that reaches max_depth above budget marks the
/// result as not converged but still contributes its best estimate.
template <class F>
QuadratureResult adaptive_simpson(const F& f, double a, double b, const QuadratureControl& ctrl = {}) {
  ctrl.validate();
  if (a == b) return {};
  if (a > b) {
    auto r = adaptive_simpson(f, b, a, ctrl);
    r.value = -r.value;
    return r;
  }
  detail::SimpsonState<F> state{f, ctrl.max_depth, {}};
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  state.recurse(a, b, fa, fm, fb, whole, ctrl.abs_tol, 0);
  return state.result;
}

}  // namespace qscat

#endif  // QSCAT_QUADRATURE_HPP
