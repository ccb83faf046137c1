#pragma once

#include <cmath>

#include "zerofree/core.hpp"
#include "zerofree/errors.hpp"
#include "zerofree/gamma.hpp"
#include "zerofree/logspace.hpp"
#include "zerofree/zeta.hpp"

namespace zerofree {
namespace detail {

// psi(s) = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2), no clearance checks;
// overflow near the numerator poles is the caller's business.
inline Complex psi_ratio_raw(const Complex& s) {
  return checked_exp((s - 0.5) * kLogPi + log_gamma_any(0.5 * (1.0 - s)) -
                     log_gamma_any(0.5 * s));
}

inline Complex psi_ratio_logderiv(const Complex& s, double clearance) {
  return Complex(kLogPi, 0.0) -
         0.5 * digamma(0.5 * (1.0 - s), clearance) - 0.5 * digamma(0.5 * s, clearance);
}

inline void check_clearance(const Complex& s, const Complex& pole, double clearance) {
  if (modulus(s - pole) < clearance) throw PoleAt(pole);
}

// 1 / (psi + (1 + psi)^2), stable for very large |psi|.
inline Complex denominator_inverse(const Complex& s, const Complex& psi) {
  const double m = modulus(psi);
  if (m > 1e8) {
    const Complex inv = 1.0 / psi;
    return inv * inv / (1.0 + 3.0 * inv + inv * inv);
  }
  const Complex den = psi + (1.0 + psi) * (1.0 + psi);
  if (modulus(den) < 1e-12 * (1.0 + m * m)) throw DenominatorZero(s);
  return 1.0 / den;
}

}  // namespace detail

/// xi(s) = pi^{-s/2} zeta(s) Gamma(s/2), log-space prefactor.
inline Complex xi(const Complex& s, double clearance = kDefaultPoleClearance) {
  detail::check_clearance(s, Complex(0.0, 0.0), clearance);
  detail::check_clearance(s, Complex(1.0, 0.0), clearance);
  const Complex pref = checked_exp(-0.5 * s * kLogPi + detail::log_gamma_any(0.5 * s));
  if (is_overflow(pref)) return pref;
  return pref * zeta(s, clearance);
}

inline Complex xi_derivative(const Complex& s, double clearance = kDefaultPoleClearance) {
  detail::check_clearance(s, Complex(0.0, 0.0), clearance);
  detail::check_clearance(s, Complex(1.0, 0.0), clearance);
  const Complex pref = checked_exp(-0.5 * s * kLogPi + detail::log_gamma_any(0.5 * s));
  if (is_overflow(pref)) return pref;
  const Complex logderiv = 0.5 * (digamma(0.5 * s, 1e-12) - Complex(kLogPi, 0.0));
  return pref * (logderiv * zeta(s, clearance) + zeta_derivative(s, clearance));
}

/// psi(s) = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2); reciprocal under
/// s <-> 1-s, modulus O(t^{1/2-sigma}) up vertical lines.
inline Complex psi_ratio(const Complex& s, double clearance = kDefaultPoleClearance) {
  const double nearest_odd = 2.0 * std::round((s.real() - 1.0) / 2.0) + 1.0;
  if (nearest_odd >= 1.0)
    detail::check_clearance(s, Complex(nearest_odd, 0.0), clearance);
  return detail::psi_ratio_raw(s);
}

inline Complex psi_ratio_derivative(const Complex& s, double clearance = kDefaultPoleClearance) {
  const double nearest_odd = 2.0 * std::round((s.real() - 1.0) / 2.0) + 1.0;
  if (nearest_odd >= 1.0)
    detail::check_clearance(s, Complex(nearest_odd, 0.0), clearance);
  return detail::psi_ratio_raw(s) * detail::psi_ratio_logderiv(s, 1e-12);
}

/// F(s) = Gamma(s) Gamma(1-s) s (1-s); equals pi s (1-s) / sin(pi s),
/// which fills the removable points s = 0, 1.
inline Complex f_gamma(const Complex& s, double clearance = kDefaultPoleClearance) {
  const Complex n(std::round(s.real()), 0.0);
  const bool near_int = modulus(s - n) < clearance;
  if (near_int && n.real() != 0.0 && n.real() != 1.0) throw PoleAt(n);
  if (near_int) {
    if (s == Complex(0.0, 0.0) || s == Complex(1.0, 0.0)) return Complex(1.0, 0.0);
    return kPi * s * (1.0 - s) / std::sin(kPi * s);
  }
  return gamma(s, clearance) * gamma(1.0 - s, clearance) * s * (1.0 - s);
}

inline Complex f_gamma_derivative(const Complex& s, double clearance = kDefaultPoleClearance) {
  const Complex n(std::round(s.real()), 0.0);
  if (modulus(s - n) < clearance && n.real() != 0.0 && n.real() != 1.0) throw PoleAt(n);
  if (s == Complex(0.0, 0.0)) return Complex(-1.0, 0.0);
  if (s == Complex(1.0, 0.0)) return Complex(1.0, 0.0);
  // F'/F = 1/s - 1/(1-s) - pi cot(pi s); the 1/s and cot poles cancel
  // near 0 (and symmetrically near 1) to machine accuracy.
  return f_gamma(s, clearance) *
         (1.0 / s - 1.0 / (1.0 - s) - kPi * cot(kPi * s));
}

/// F(s) = 1/(1/2-s) * zeta(s)^2 / (psi(s) + (1+psi(s))^2).
inline Complex f_zeta(const Complex& s, double clearance = kDefaultPoleClearance) {
  detail::check_clearance(s, Complex(0.5, 0.0), clearance);
  detail::check_clearance(s, Complex(1.0, 0.0), clearance);
  const Complex z = zeta(s, clearance);
  const Complex dinv = detail::denominator_inverse(s, detail::psi_ratio_raw(s));
  return z * z * dinv / (0.5 - s);
}

inline Complex f_zeta_derivative(const Complex& s, double clearance = kDefaultPoleClearance) {
  detail::check_clearance(s, Complex(0.5, 0.0), clearance);
  detail::check_clearance(s, Complex(1.0, 0.0), clearance);
  const Complex z = zeta(s, clearance);
  const Complex dz = zeta_derivative(s, clearance);
  const Complex psi = detail::psi_ratio_raw(s);
  const Complex dinv = detail::denominator_inverse(s, psi);
  const Complex dpsi = psi * detail::psi_ratio_logderiv(s, 1e-12);
  const Complex g = dinv / (0.5 - s);
  const Complex dg = g * (1.0 / (0.5 - s) - dpsi * (3.0 + 2.0 * psi) * dinv);
  return 2.0 * z * dz * g + z * z * dg;
}

}  // namespace zerofree
