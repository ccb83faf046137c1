#pragma once

#include <cmath>

#include "zerofree/core.hpp"
#include "zerofree/errors.hpp"
#include "zerofree/function.hpp"
#include "zerofree/logspace.hpp"

namespace zerofree {
namespace detail {

// Lanczos, g = 7, 9 coefficients. Relative error around 1e-13 on the
// half-plane Re(s) >= 1/2 at double precision.
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczosCoeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

inline Complex lanczos_series(const Complex& z) {
  Complex a(kLanczosCoeff[0], 0.0);
  for (int k = 1; k < 9; ++k) a += kLanczosCoeff[k] / (z + static_cast<double>(k));
  return a;
}

inline Complex lanczos_series_deriv(const Complex& z) {
  Complex a(0.0, 0.0);
  for (int k = 1; k < 9; ++k) {
    const Complex d = z + static_cast<double>(k);
    a -= kLanczosCoeff[k] / (d * d);
  }
  return a;
}

// log Gamma on Re(s) >= 1/2, principal branch, continuous on vertical
// lines (the Lanczos series stays clear of the negative real axis there).
inline Complex log_gamma_right(const Complex& s) {
  const Complex z = s - 1.0;
  const Complex t = z + kLanczosG + 0.5;
  return Complex(kLogSqrt2Pi, 0.0) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_series(z));
}

// log Gamma anywhere away from poles. For Re(s) < 1/2 the reflection
// formula is applied in log space; the branch there is only meaningful
// modulo 2*pi*i, which is all the exponentiating callers need.
inline Complex log_gamma_any(const Complex& s) {
  if (s.real() >= 0.5) return log_gamma_right(s);
  return Complex(kLogPi, 0.0) - log_sin(kPi * s) - log_gamma_right(1.0 - s);
}

inline void check_gamma_pole(const Complex& s, double clearance) {
  if (s.real() > 0.5) return;
  const double n = std::round(s.real());
  if (n <= 0.0 && modulus(s - Complex(n, 0.0)) < clearance)
    throw PoleAt(Complex(n, 0.0));
}

}  // namespace detail

/// Gamma function. Lanczos approximation for Re(s) >= 1/2, reflection
/// formula elsewhere; large |Im(s)| is routed through log space.
inline Complex gamma(const Complex& s, double clearance = kDefaultPoleClearance) {
  detail::check_gamma_pole(s, clearance);
  if (s.real() >= 0.5) {
    const Complex lg = detail::log_gamma_right(s);
    if (lg.real() > kLogOverflow) return overflow_sentinel();
    const Complex z = s - 1.0;
    const Complex t = z + detail::kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) *
           detail::lanczos_series(z);
  }
  // Gamma(s) Gamma(1-s) = pi / sin(pi s)
  if (std::abs(s.imag()) * kPi < 700.0) {
    return kPi / (std::sin(kPi * s) * gamma(1.0 - s, clearance));
  }
  return checked_exp(Complex(kLogPi, 0.0) - log_sin(kPi * s) -
                     detail::log_gamma_right(1.0 - s));
}

/// Principal-branch log Gamma on the right half-plane, continuous along
/// vertical lines; exp(log_gamma(s)) == gamma(s) where both representable.
inline Complex log_gamma(const Complex& s) {
  if (s.real() <= 0.0)
    throw DomainError("log_gamma requires Re(s) > 0");
  if (s.real() < 0.5) return detail::log_gamma_right(s + 1.0) - std::log(s);
  return detail::log_gamma_right(s);
}

/// Digamma psi0 = Gamma'/Gamma, differentiated Lanczos plus reflection.
inline Complex digamma(const Complex& s, double clearance = kDefaultPoleClearance) {
  detail::check_gamma_pole(s, clearance);
  if (s.real() >= 0.5) {
    const Complex z = s - 1.0;
    const Complex t = z + detail::kLanczosG + 0.5;
    return std::log(t) + (z + 0.5) / t - 1.0 +
           detail::lanczos_series_deriv(z) / detail::lanczos_series(z);
  }
  return digamma(1.0 - s, clearance) - kPi * cot(kPi * s);
}

}  // namespace zerofree
