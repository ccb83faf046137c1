#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"
#include "zerofree/zeta.hpp"

using namespace zerofree;
using zftest::rel_err;
using zftest::zeta_borwein;

TEST_CASE("zeta(2) = pi^2/6") {
  CHECK(rel_err(zeta(Complex(2.0, 0.0)), Complex(1.6449340668482264, 0.0)) < 1e-12);
}

TEST_CASE("zeta(0) = -1/2 against the alternating-series continuation") {
  // Borwein-accelerated eta both at 0 and extrapolated from s -> 0+.
  const Complex direct = zeta_borwein(Complex(0.0, 0.0));
  CHECK(rel_err(direct, Complex(-0.5, 0.0)) < 1e-9);
  std::vector<double> xs = {0.04, 0.02, 0.01, 0.005, 0.0025};
  std::vector<Complex> ys;
  for (double x : xs) ys.push_back(zeta_borwein(Complex(x, 0.0)));
  // Neville extrapolation to s = 0
  for (std::size_t k = 1; k < xs.size(); ++k)
    for (std::size_t i = xs.size() - 1; i >= k; --i)
      ys[i] = ys[i] + (ys[i] - ys[i - 1]) * xs[i] / (xs[i - k] - xs[i]);
  CHECK(rel_err(ys.back(), Complex(-0.5, 0.0)) < 1e-7);
  CHECK(rel_err(zeta(Complex(0.0, 0.0)), Complex(-0.5, 0.0)) < 1e-12);
}

TEST_CASE("zeta near the origin patch stays consistent with the oracle") {
  for (const Complex s : {Complex(5e-5, 0.0), Complex(-5e-5, 2e-5), Complex(2e-4, 0.0)}) {
    CHECK(rel_err(zeta(s), zeta_borwein(s)) < 1e-8);
  }
}

TEST_CASE("zeta negative-axis classics via the functional equation") {
  CHECK(rel_err(zeta(Complex(-1.0, 0.0)), Complex(-1.0 / 12.0, 0.0)) < 1e-10);
  CHECK(rel_err(zeta(Complex(-3.0, 0.0)), Complex(1.0 / 120.0, 0.0)) < 1e-10);
  CHECK(modulus(zeta(Complex(-2.0, 0.0))) < 1e-14);
}

TEST_CASE("functional equation at a spot point") {
  const Complex s(0.3, 5.0);
  const Complex rhs = std::pow(Complex(2.0, 0.0), s) * std::pow(Complex(kPi, 0.0), s - 1.0) *
                      std::sin(kPi * s / 2.0) * gamma(1.0 - s) * zeta(1.0 - s);
  CHECK(modulus(zeta(s) - rhs) < 1e-9);
}

TEST_CASE("functional equation on a 200-point grid straddling the critical line") {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    // half the grid sits exactly on Re = 1/2, where both sides use the
    // direct sum and the check is fully two-route
    const double re = (i % 2 == 0) ? 0.5 : 0.3 + 0.4 * ((i % 50) / 50.0);
    const double im = 1.0 + 59.0 * (i / 200.0);
    const Complex s(re, im);
    const Complex rhs = std::pow(Complex(2.0, 0.0), s) * std::pow(Complex(kPi, 0.0), s - 1.0) *
                        std::sin(kPi * s / 2.0) * gamma(1.0 - s) * zeta(1.0 - s);
    worst = std::max(worst, rel_err(zeta(s), rhs));
  }
  INFO("worst functional-equation deviation " << worst);
  CHECK(worst < 1e-9);
}

TEST_CASE("Euler-Maclaurin agrees with the independent Borwein route") {
  zftest::Rng rng(404);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Complex s = rng.box(0.5, 3.0, -30.0, 30.0);
    worst = std::max(worst, rel_err(zeta(s), zeta_borwein(s, 80)));
  }
  INFO("worst Euler-Maclaurin vs Borwein deviation " << worst);
  CHECK(worst < 1e-10);
}

TEST_CASE("zeta pole at 1") {
  CHECK_THROWS_AS(zeta(Complex(1.0, 0.0)), PoleAt);
  CHECK_THROWS_AS(zeta(Complex(1.0005, 0.0)), PoleAt);
  CHECK_NOTHROW(zeta(Complex(1.01, 0.0)));
}

TEST_CASE("zeta derivative against Richardson oracle on both branches") {
  for (const Complex s : {Complex(2.0, 0.0), Complex(0.6, 14.0), Complex(-1.2, 7.0),
                          Complex(0.2, -3.0), Complex(3.5, 40.0)}) {
    const Complex oracle =
        zftest::richardson_derivative([](const Complex& z) { return zeta(z); }, s, 1e-2);
    CHECK(rel_err(zeta_derivative(s), oracle) < 1e-8);
  }
}

TEST_CASE("growth report |zeta(sigma+it)| t^{-1/4}") {
  for (const double sigma : {0.6, 0.8, 1.0}) {
    double sup = 0.0;
    for (double t = 10.0; t <= 200.0; t += 0.5)
      sup = std::max(sup, modulus(zeta(Complex(sigma, t))) * std::pow(t, -0.25));
    INFO("sigma " << sigma << ": sup |zeta| t^{-1/4} = " << sup);
    CHECK(std::isfinite(sup));
    CHECK(sup < 10.0);
  }
}
