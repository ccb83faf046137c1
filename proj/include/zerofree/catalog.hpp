#pragma once

#include <map>
#include <string>
#include <vector>

#include "zerofree/errors.hpp"
#include "zerofree/function.hpp"
#include "zerofree/gamma.hpp"
#include "zerofree/special.hpp"
#include "zerofree/zeta.hpp"

namespace zerofree {

/// Named built-in functions: gamma, zeta, xi, psi-ratio, gamma-F, zeta-F.
/// Lookup of an unknown name is an error, never a default.
class FunctionCatalog {
 public:
  explicit FunctionCatalog(double clearance = kDefaultPoleClearance) {
    const int pole_range = 100;
    {
      HolomorphicFunction f;
      f.name = "gamma";
      f.value = [clearance](const Complex& s) { return gamma(s, clearance); };
      f.derivative = [clearance](const Complex& s) {
        return gamma(s, clearance) * digamma(s, clearance);
      };
      for (int n = 0; n <= pole_range; ++n) f.known_poles.emplace_back(-n, 0.0);
      f.real_on_reals = true;
      f.pole_clearance = clearance;
      add(f);
    }
    {
      HolomorphicFunction f;
      f.name = "zeta";
      f.value = [clearance](const Complex& s) { return zeta(s, clearance); };
      f.derivative = [clearance](const Complex& s) { return zeta_derivative(s, clearance); };
      f.known_poles.emplace_back(1.0, 0.0);
      f.real_on_reals = true;
      f.pole_clearance = clearance;
      add(f);
    }
    {
      HolomorphicFunction f;
      f.name = "xi";
      f.value = [clearance](const Complex& s) { return xi(s, clearance); };
      f.derivative = [clearance](const Complex& s) { return xi_derivative(s, clearance); };
      f.known_poles.emplace_back(0.0, 0.0);
      f.known_poles.emplace_back(1.0, 0.0);
      f.real_on_reals = true;
      f.pole_clearance = clearance;
      add(f);
    }
    {
      HolomorphicFunction f;
      f.name = "psi-ratio";
      f.value = [clearance](const Complex& s) { return psi_ratio(s, clearance); };
      f.derivative = [clearance](const Complex& s) {
        return psi_ratio_derivative(s, clearance);
      };
      for (int n = 1; n <= 2 * pole_range; n += 2) f.known_poles.emplace_back(n, 0.0);
      f.real_on_reals = true;
      f.pole_clearance = clearance;
      add(f);
    }
    {
      HolomorphicFunction f;
      f.name = "gamma-F";
      f.value = [clearance](const Complex& s) { return f_gamma(s, clearance); };
      f.derivative = [clearance](const Complex& s) {
        return f_gamma_derivative(s, clearance);
      };
      for (int n = -pole_range; n <= pole_range; ++n)
        if (n != 0 && n != 1) f.known_poles.emplace_back(n, 0.0);
      f.real_on_reals = true;
      f.pole_clearance = clearance;
      add(f);
    }
    {
      HolomorphicFunction f;
      f.name = "zeta-F";
      f.value = [clearance](const Complex& s) { return f_zeta(s, clearance); };
      f.derivative = [clearance](const Complex& s) { return f_zeta_derivative(s, clearance); };
      f.known_poles.emplace_back(0.5, 0.0);
      f.known_poles.emplace_back(1.0, 0.0);
      f.real_on_reals = true;
      f.pole_clearance = clearance;
      add(f);
    }
  }

  const HolomorphicFunction& lookup(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw UnknownFunction(name);
    return it->second;
  }

  bool contains(const std::string& name) const { return entries_.count(name) > 0; }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
  }

 private:
  void add(const HolomorphicFunction& f) { entries_[f.name] = f; }
  std::map<std::string, HolomorphicFunction> entries_;
};

inline const FunctionCatalog& builtin_catalog() {
  static const FunctionCatalog catalog;
  return catalog;
}

}  // namespace zerofree
