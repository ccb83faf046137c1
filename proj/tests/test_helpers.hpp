#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "zerofree/core.hpp"

namespace zftest {

using zerofree::Complex;

inline double rel_err(const Complex& got, const Complex& want) {
  const double scale = zerofree::modulus(want);
  if (scale == 0.0) return zerofree::modulus(got);
  return zerofree::modulus(got - want) / scale;
}

inline double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

struct Rng {
  explicit Rng(unsigned seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  Complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
    return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  std::mt19937 gen;
};

// Richardson-extrapolated central difference; far more accurate than the
// library's single-step rule, which it serves as an oracle for.
template <typename F>
Complex richardson_derivative(F&& f, const Complex& s, double h0 = 1e-2) {
  const int levels = 6;
  std::vector<Complex> row(levels);
  for (int i = 0; i < levels; ++i) {
    const double h = h0 / std::pow(2.0, i);
    row[i] = (f(s + Complex(h, 0.0)) - f(s - Complex(h, 0.0))) / (2.0 * h);
  }
  // Neville in h^2
  for (int k = 1; k < levels; ++k) {
    const double f4 = std::pow(4.0, k);
    for (int i = levels - 1; i >= k; --i)
      row[i] = (f4 * row[i] - row[i - 1]) / (f4 - 1.0);
  }
  return row[levels - 1];
}

// Borwein (1991) alternating-series acceleration for eta, giving a zeta
// route fully independent of Euler-Maclaurin summation.
inline Complex zeta_borwein(const Complex& s, int n = 70) {
  std::vector<double> d(static_cast<std::size_t>(n) + 1);
  double term = 1.0 / n;
  double sum = term;
  d[0] = n * sum;
  for (int j = 1; j <= n; ++j) {
    term *= 4.0 * (n + j - 1.0) * (n - j + 1.0) / ((2.0 * j) * (2.0 * j - 1.0));
    sum += term;
    d[static_cast<std::size_t>(j)] = n * sum;
  }
  Complex acc(0.0, 0.0);
  double sign = 1.0;
  for (int k = 0; k < n; ++k) {
    acc += sign * (d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(n)]) *
           std::exp(-s * std::log(k + 1.0));
    sign = -sign;
  }
  const Complex denom = 1.0 - std::exp((1.0 - s) * zerofree::kLog2);
  return -acc / (d[static_cast<std::size_t>(n)] * denom);
}

}  // namespace zftest
