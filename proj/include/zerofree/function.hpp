#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zerofree/core.hpp"
#include "zerofree/errors.hpp"

namespace zerofree {

// Points and paths are rejected (never silently perturbed) inside this
// distance of a known pole.
inline constexpr double kDefaultPoleClearance = 1e-3;

/// A complex function together with the metadata the certification
/// pipeline needs: known poles and real-on-the-real-axis symmetry.
/// `derivative` may be empty; numeric differentiation is substituted.
struct HolomorphicFunction {
  std::string name;
  std::function<Complex(const Complex&)> value;
  std::function<Complex(const Complex&)> derivative;  // optional
  std::vector<Complex> known_poles;
  bool real_on_reals = false;
  double pole_clearance = kDefaultPoleClearance;

  Complex operator()(const Complex& s) const { return value(s); }

  double distance_to_pole(const Complex& s) const {
    double d = std::numeric_limits<double>::infinity();
    for (const Complex& p : known_poles) d = std::min(d, modulus(s - p));
    return d;
  }
};

inline double derivative_step(const Complex& s) {
  return 1e-6 * std::max(1.0, modulus(s));
}

/// Central difference (f(s+h) - f(s-h)) / 2h with real step
/// h = 1e-6 * max(1, |s|); O(h^2) for analytic f.
inline Complex numeric_derivative(const HolomorphicFunction& f, const Complex& s) {
  const double h = derivative_step(s);
  if (f.distance_to_pole(s) <= 2.0 * h) throw PoleTooClose(s);
  return (f.value(s + Complex(h, 0.0)) - f.value(s - Complex(h, 0.0))) / (2.0 * h);
}

/// Analytic derivative when the function carries one, numeric fallback
/// otherwise.
inline Complex derivative_at(const HolomorphicFunction& f, const Complex& s) {
  if (f.derivative) return f.derivative(s);
  return numeric_derivative(f, s);
}

/// Monic polynomial with the given roots; derivative by the product rule.
inline HolomorphicFunction polynomial_from_roots(std::string name, std::vector<Complex> roots) {
  bool conj_closed = true;
  for (const Complex& r : roots) {
    bool found = false;
    for (const Complex& q : roots)
      if (modulus(q - std::conj(r)) < 1e-14) { found = true; break; }
    if (!found) { conj_closed = false; break; }
  }
  HolomorphicFunction f;
  f.name = std::move(name);
  f.real_on_reals = conj_closed;
  f.value = [roots](const Complex& z) {
    Complex p(1.0, 0.0);
    for (const Complex& r : roots) p *= z - r;
    return p;
  };
  f.derivative = [roots](const Complex& z) {
    Complex d(0.0, 0.0);
    for (std::size_t j = 0; j < roots.size(); ++j) {
      Complex term(1.0, 0.0);
      for (std::size_t i = 0; i < roots.size(); ++i)
        if (i != j) term *= z - roots[i];
      d += term;
    }
    return d;
  };
  return f;
}

/// Polynomial from coefficients c0 + c1 z + ... + cn z^n (Horner).
inline HolomorphicFunction polynomial_from_coeffs(std::string name, std::vector<Complex> coeffs) {
  if (coeffs.empty()) coeffs.push_back(Complex(0.0, 0.0));
  bool real_coeffs = true;
  for (const Complex& c : coeffs)
    if (c.imag() != 0.0) { real_coeffs = false; break; }
  std::vector<Complex> dcoeffs;
  for (std::size_t k = 1; k < coeffs.size(); ++k)
    dcoeffs.push_back(static_cast<double>(k) * coeffs[k]);
  auto horner = [](const std::vector<Complex>& c, const Complex& z) {
    Complex acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
  HolomorphicFunction f;
  f.name = std::move(name);
  f.real_on_reals = real_coeffs;
  f.value = [coeffs, horner](const Complex& z) { return horner(coeffs, z); };
  f.derivative = [dcoeffs, horner](const Complex& z) {
    if (dcoeffs.empty()) return Complex(0.0, 0.0);
    return horner(dcoeffs, z);
  };
  return f;
}

}  // namespace zerofree
