#ifndef QSCAT_CORE_HPP
#define QSCAT_CORE_HPP

// Shared value types for one-dimensional scattering: physical constants,
// amplitude pairs, probabilities and the error type used across the library.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qscat {

using complex = std::complex<double>;

enum class ErrorCode {
  invalid_input,
  unsupported,
  degenerate_energy,
  invalid_energy,
  wrong_case,
  pole,
  non_convergence,
  invalid_region,
  no_barrier,
  not_applicable,
  invalid_channel,
  tolerance,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::degenerate_energy: return "degenerate_energy";
    case ErrorCode::invalid_energy: return "invalid_energy";
    case ErrorCode::wrong_case: return "wrong_case";
    case ErrorCode::pole: return "pole";
    case ErrorCode::non_convergence: return "non_convergence";
    case ErrorCode::invalid_region: return "invalid_region";
    case ErrorCode::no_barrier: return "no_barrier";
    case ErrorCode::not_applicable: return "not_applicable";
    case ErrorCode::invalid_channel: return "invalid_channel";
    case ErrorCode::tolerance: return "tolerance";
  }
  return "unknown";
}

/// Error raised by every physics routine. The code is stable and is what the
/// CLI prints as ERR:<code>; the message is for humans.
class ScatterError : public std::runtime_error {
 public:
  ScatterError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Values of hbar and the particle mass. Defaults are natural units.
struct PhysicsContext {
  double hbar = 1.0;
  double mass = 1.0;

  void validate() const {
    if (!(hbar > 0.0) || !std::isfinite(hbar))
      throw ScatterError(ErrorCode::invalid_input, "hbar must be positive and finite");
    if (!(mass > 0.0) || !std::isfinite(mass))
      throw ScatterError(ErrorCode::invalid_input, "mass must be positive and finite");
  }

  /// 2m/hbar^2, the factor turning an energy into a squared wavenumber.
  double energy_to_k2() const { return 2.0 * mass / (hbar * hbar); }
};

struct ScatteringAmplitudes {
  complex t;
  complex r;
  double k_in = 0.0;
  double k_out = 0.0;
};

struct Probabilities {
  double transmission = 0.0;
  double reflection = 0.0;
};

inline bool is_finite(complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline Probabilities probabilities_from_amplitudes(const ScatteringAmplitudes& a) {
  if (!is_finite(a.t) || !is_finite(a.r))
    throw ScatterError(ErrorCode::invalid_input, "non-finite scattering amplitude");
  return {std::norm(a.t), std::norm(a.r)};
}

/// |T + R - 1|
inline double unitarity_defect(const Probabilities& p) {
  return std::abs(p.transmission + p.reflection - 1.0);
}

/// Clamp to [0, 1] for display. Computation paths never call this.
inline double clamp_probability(double p) { return p < 0.0 ? 0.0 : (p > 1.0 ? 1.0 : p); }

}  // namespace qscat

#endif  // QSCAT_CORE_HPP
