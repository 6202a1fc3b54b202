#ifndef PLD_CORE_KERNELS_HPP
#define PLD_CORE_KERNELS_HPP

#include <cmath>

// Deformation kernels shared by the catalog models. Each one is a smooth
// function of (u, eta) whose closed form is 0/0 at eta = 0; near that line we
// switch to a 4-term Taylor expansion in eta so that values and eta->0 limits
// stay accurate:
//
//   S(u;eta) = sin(eta u)/eta              -> u
//   V(u;eta) = (cos(eta u) - 1)/eta        -> 0
//   E(u;eta) = (exp(-2 eta u) - 1)/(2 eta) -> -u
//   W(u;eta) = (exp(eta u) + exp(-eta u) - 2)/eta^2 -> u^2
//
// The u-derivatives of S, V, E are regular (cos, -sin, -exp), W' needs the
// same treatment as S.

namespace pld {

inline constexpr double kKernelTaylorThreshold = 1e-4;

inline bool kernel_use_taylor(double u, double eta) {
  return std::abs(eta) * (1.0 + std::abs(u)) < kKernelTaylorThreshold;
}

inline double kernel_S(double u, double eta) {
  if (kernel_use_taylor(u, eta)) {
    const double t = eta * u * eta * u;
    return u * (1.0 - t / 6.0 * (1.0 - t / 20.0 * (1.0 - t / 42.0)));
  }
  return std::sin(eta * u) / eta;
}

inline double kernel_V(double u, double eta) {
  if (kernel_use_taylor(u, eta)) {
    const double t = eta * u * eta * u;
    return -0.5 * eta * u * u *
           (1.0 - t / 12.0 * (1.0 - t / 30.0 * (1.0 - t / 56.0)));
  }
  return (std::cos(eta * u) - 1.0) / eta;
}

inline double kernel_E(double u, double eta) {
  if (kernel_use_taylor(u, eta)) {
    const double x = -2.0 * eta * u;
    return -u * (1.0 + x / 2.0 * (1.0 + x / 3.0 * (1.0 + x / 4.0)));
  }
  return (std::exp(-2.0 * eta * u) - 1.0) / (2.0 * eta);
}

inline double kernel_W(double u, double eta) {
  if (kernel_use_taylor(u, eta)) {
    const double t = eta * u * eta * u;
    return u * u * (1.0 + t / 12.0 * (1.0 + t / 30.0 * (1.0 + t / 56.0)));
  }
  const double ex = std::exp(eta * u);
  return (ex + 1.0 / ex - 2.0) / (eta * eta);
}

// d/du of the kernels above.
inline double kernel_S_du(double u, double eta) { return std::cos(eta * u); }
inline double kernel_V_du(double u, double eta) { return -std::sin(eta * u); }
inline double kernel_E_du(double u, double eta) { return -std::exp(-2.0 * eta * u); }

inline double kernel_W_du(double u, double eta) {
  if (kernel_use_taylor(u, eta)) {
    const double t = eta * u * eta * u;
    return 2.0 * u * (1.0 + t / 6.0 * (1.0 + t / 20.0 * (1.0 + t / 42.0)));
  }
  const double ex = std::exp(eta * u);
  return (ex - 1.0 / ex) / eta;  // 2 sinh(eta u)/eta
}

}  // namespace pld

#endif
