#pragma once

#include <cmath>

#include "zerofree/core.hpp"
#include "zerofree/errors.hpp"
#include "zerofree/function.hpp"
#include "zerofree/gamma.hpp"
#include "zerofree/logspace.hpp"

namespace zerofree {
namespace detail {

// B_{2k} / (2k)!  for 2k = 2..16
inline constexpr double kBernOverFact[8] = {
    8.3333333333333333e-02,  -1.3888888888888889e-03,
    3.3068783068783069e-05,  -8.2671957671957672e-07,
    2.0876756987868099e-08,  -5.2841901386874932e-10,
    1.3382536530684679e-11,  -3.3896802963225829e-13,
};

inline int euler_maclaurin_terms(const Complex& s) {
  return std::max(20, static_cast<int>(std::ceil(1.3 * std::abs(s.imag()))));
}

// Euler-Maclaurin tail-corrected partial sum; accurate for Re(s) >= 1/2
// with N proportional to |Im(s)|.
inline Complex zeta_em(const Complex& s) {
  const int N = euler_maclaurin_terms(s);
  Complex sum(0.0, 0.0);
  for (int n = 1; n < N; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
  const double dN = static_cast<double>(N);
  const double logN = std::log(dN);
  const Complex N_minus_s = std::exp(-s * logN);
  sum += N_minus_s * dN / (s - 1.0);  // N^{1-s}/(s-1)
  sum += 0.5 * N_minus_s;
  Complex npow = N_minus_s / dN;  // N^{1-s-2k} at k = 1
  Complex poch = s;               // (s)_{2k-1} at k = 1
  const double inv_n2 = 1.0 / (dN * dN);
  for (int k = 1; k <= 8; ++k) {
    sum += kBernOverFact[k - 1] * poch * npow;
    poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    npow *= inv_n2;
  }
  return sum;
}

inline Complex zeta_em_deriv(const Complex& s) {
  const int N = euler_maclaurin_terms(s);
  Complex sum(0.0, 0.0);
  for (int n = 2; n < N; ++n) {
    const double ln = std::log(static_cast<double>(n));
    sum -= ln * std::exp(-s * ln);
  }
  const double dN = static_cast<double>(N);
  const double logN = std::log(dN);
  const Complex N_minus_s = std::exp(-s * logN);
  const Complex tail = N_minus_s * dN / (s - 1.0);
  sum += -logN * tail - tail / (s - 1.0);
  sum += -0.5 * logN * N_minus_s;
  Complex npow = N_minus_s / dN;
  Complex poch = s;
  Complex harmonic = 1.0 / s;  // sum_{j=0}^{2k-2} 1/(s+j)
  const double inv_n2 = 1.0 / (dN * dN);
  for (int k = 1; k <= 8; ++k) {
    sum += kBernOverFact[k - 1] * poch * npow * (harmonic - logN);
    poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    harmonic += 1.0 / (s + static_cast<double>(2 * k - 1)) + 1.0 / (s + static_cast<double>(2 * k));
    npow *= inv_n2;
  }
  return sum;
}

// log of chi(s) in zeta(s) = chi(s) zeta(1-s); valid for Re(s) < 1/2.
inline Complex log_zeta_fe_factor(const Complex& s) {
  return s * kLog2 + (s - 1.0) * kLogPi + log_sin(kPi * s / 2.0) +
         log_gamma_right(1.0 - s);
}

// d/ds log chi(s)
inline Complex zeta_fe_factor_logderiv(const Complex& s) {
  return Complex(kLog2 + kLogPi, 0.0) + (kPi / 2.0) * cot(kPi * s / 2.0) -
         digamma(1.0 - s);
}

// The functional-equation product degenerates to 0 * inf at s = 0; patch
// a small disc with the series zeta(s) = -1/2 - s log(2 pi)/2 + O(s^2).
inline constexpr double kZetaOriginPatch = 1e-4;

}  // namespace detail

/// Riemann zeta. Euler-Maclaurin for Re(s) >= 1/2; functional equation
/// zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s) otherwise.
inline Complex zeta(const Complex& s, double clearance = kDefaultPoleClearance) {
  if (modulus(s - Complex(1.0, 0.0)) < clearance) throw PoleAt(Complex(1.0, 0.0));
  if (s.real() >= 0.5) return detail::zeta_em(s);
  if (modulus(s) < detail::kZetaOriginPatch) return Complex(-0.5, 0.0) - kLogSqrt2Pi * s;
  const Complex chi = checked_exp(detail::log_zeta_fe_factor(s));
  if (is_overflow(chi)) return chi;
  return chi * detail::zeta_em(1.0 - s);
}

/// zeta'(s), term-by-term differentiated Euler-Maclaurin, with the
/// log-differentiated functional equation on the left of the strip.
inline Complex zeta_derivative(const Complex& s, double clearance = kDefaultPoleClearance) {
  if (modulus(s - Complex(1.0, 0.0)) < clearance) throw PoleAt(Complex(1.0, 0.0));
  if (s.real() >= 0.5) return detail::zeta_em_deriv(s);
  if (modulus(s) < detail::kZetaOriginPatch) return Complex(-kLogSqrt2Pi, 0.0);
  const Complex chi = checked_exp(detail::log_zeta_fe_factor(s));
  if (is_overflow(chi)) return chi;
  const Complex w = 1.0 - s;
  // zeta' = chi * (logderiv(chi) * zeta(1-s) - zeta'(1-s)); written so a
  // zero of zeta(1-s) never meets a pole of its log-derivative.
  return chi * (detail::zeta_fe_factor_logderiv(s) * detail::zeta_em(w) -
                detail::zeta_em_deriv(w));
}

}  // namespace zerofree
