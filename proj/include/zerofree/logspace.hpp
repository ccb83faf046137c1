#pragma once

#include "zerofree/core.hpp"

namespace zerofree {

/// log(sin(w)) computed without forming sin(w); safe for |Im(w)| far
/// beyond the overflow range of sin itself. Branch is continuous within
/// each open half-plane and conjugate-symmetric across the real axis.
inline Complex log_sin(const Complex& w) {
  if (w.imag() < 0.0) return std::conj(log_sin(std::conj(w)));
  // sin w = (i/2) e^{-iw} (1 - e^{2iw}),   |e^{2iw}| <= 1 for Im w >= 0
  const Complex i(0.0, 1.0);
  const Complex q = std::exp(2.0 * i * w);
  return Complex(-kLog2, kPi / 2.0) - i * w + std::log(Complex(1.0, 0.0) - q);
}

/// cot(w) without overflow for large |Im(w)|; tends to -i (resp. +i) in
/// the upper (lower) half-plane.
inline Complex cot(const Complex& w) {
  if (w.imag() < 0.0) return std::conj(cot(std::conj(w)));
  const Complex i(0.0, 1.0);
  const Complex q = std::exp(2.0 * i * w);  // |q| <= 1
  return i * (q + 1.0) / (q - 1.0);
}

}  // namespace zerofree
