#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace zerofree {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLog2 = 0.693147180559945309417232121458176568;
inline constexpr double kLogPi = 1.14472988584940017414342735135305871;
inline constexpr double kLogSqrt2Pi = 0.918938533204672741780329736405617639;

// Values whose log-magnitude exceeds this are reported as overflow
// sentinels instead of entering ordinary arithmetic.
inline constexpr double kLogOverflow = 690.0;

inline Complex overflow_sentinel() {
  const double inf = std::numeric_limits<double>::infinity();
  return {inf, inf};
}

inline bool is_overflow(const Complex& z) {
  return !std::isfinite(z.real()) || !std::isfinite(z.imag());
}

// Overflow-safe |z|; never intermediate-overflows for finite components.
inline double modulus(const Complex& z) { return std::hypot(z.real(), z.imag()); }

inline Complex conjugate(const Complex& z) { return std::conj(z); }

// exp of a log-space value, collapsing to the overflow sentinel instead
// of producing infinities mid-computation.
inline Complex checked_exp(const Complex& log_value) {
  if (log_value.real() > kLogOverflow) return overflow_sentinel();
  return std::exp(log_value);
}

}  // namespace zerofree
