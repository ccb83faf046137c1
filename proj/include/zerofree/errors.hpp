#pragma once

#include <stdexcept>
#include <string>

#include "zerofree/core.hpp"

namespace zerofree {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline std::string point_str(const Complex& s) {
  return "(" + std::to_string(s.real()) + ", " + std::to_string(s.imag()) + ")";
}
}  // namespace detail

class PoleAt : public Error {
 public:
  explicit PoleAt(const Complex& where)
      : Error("evaluation inside pole clearance at " + detail::point_str(where)), where_(where) {}
  const Complex& where() const { return where_; }

 private:
  Complex where_;
};

class PoleTooClose : public Error {
 public:
  explicit PoleTooClose(const Complex& s)
      : Error("differentiation point too close to a pole: " + detail::point_str(s)) {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DenominatorZero : public Error {
 public:
  explicit DenominatorZero(const Complex& s)
      : Error("denominator vanishes near " + detail::point_str(s)), where_(s) {}
  const Complex& where() const { return where_; }

 private:
  Complex where_;
};

class UnboundedRegion : public Error {
 public:
  using Error::Error;
};

class InvalidRegion : public Error {
 public:
  using Error::Error;
};

class PoleOnBoundary : public Error {
 public:
  explicit PoleOnBoundary(const Complex& sample)
      : Error("boundary sample inside pole clearance at " + detail::point_str(sample)) {}
};

class PoleInRegion : public Error {
 public:
  explicit PoleInRegion(const Complex& sample)
      : Error("grid point inside pole clearance at " + detail::point_str(sample)) {}
};

class PoleOnCut : public Error {
 public:
  explicit PoleOnCut(const Complex& sample)
      : Error("horizontal cut passes pole clearance at " + detail::point_str(sample)) {}
};

class ZeroOnContour : public Error {
 public:
  explicit ZeroOnContour(const Complex& sample)
      : Error("|f| below safety threshold on contour at " + detail::point_str(sample)),
        where_(sample) {}
  const Complex& where() const { return where_; }

 private:
  Complex where_;
};

class QuadratureNotConverged : public Error {
 public:
  explicit QuadratureNotConverged(double estimate)
      : Error("contour quadrature error estimate " + std::to_string(estimate) +
              " above tolerance after maximal refinement") {}
};

class InvalidResidual : public Error {
 public:
  explicit InvalidResidual(double residual)
      : Error("winding integral residual " + std::to_string(residual) +
              " too far from an integer") {}
};

class MaxDepthExceeded : public Error {
 public:
  using Error::Error;
};

class ZeroOnCut : public Error {
 public:
  using Error::Error;
};

class UnknownFunction : public Error {
 public:
  explicit UnknownFunction(const std::string& name)
      : Error("unknown function name: " + name) {}
};

}  // namespace zerofree
