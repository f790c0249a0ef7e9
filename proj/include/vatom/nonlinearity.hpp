#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "vatom/errors.hpp"

namespace vatom {

// Photon-number dependence of the atom-field coupling. The coupling of the
// n-th Fock level enters the dynamics only through g(n) = sqrt(n) * f(n),
// so f is evaluated on non-negative integers and must stay real and finite.
class Nonlinearity {
 public:
  // f(n) = 1 for all n: constant (intensity-independent) coupling.
  static Nonlinearity one() { return Nonlinearity(Kind::One); }

  // f(n) = sqrt(n): the standard intensity-dependent coupling.
  static Nonlinearity sqrt_n() { return Nonlinearity(Kind::SqrtN); }

  // Arbitrary user-supplied f(n); values are checked for finiteness.
  static Nonlinearity custom(std::function<double(int)> f, std::string name) {
    Nonlinearity nl(Kind::Custom);
    nl.custom_ = std::move(f);
    nl.name_ = std::move(name);
    return nl;
  }

  double operator()(int n) const {
    switch (kind_) {
      case Kind::One:
        return 1.0;
      case Kind::SqrtN:
        return std::sqrt(static_cast<double>(n));
      case Kind::Custom: {
        double v = custom_(n);
        if (!std::isfinite(v)) {
          throw numerical_error("nonlinearity '" + name_ + "' returned a non-finite value at n=" +
                                std::to_string(n));
        }
        return v;
      }
    }
    return 1.0;  // unreachable
  }

  const std::string& name() const { return name_; }

  bool operator==(const Nonlinearity& other) const {
    return kind_ == other.kind_ && (kind_ != Kind::Custom || name_ == other.name_);
  }

 private:
  enum class Kind { One, SqrtN, Custom };

  explicit Nonlinearity(Kind kind) : kind_(kind) {
    name_ = (kind == Kind::One) ? "one" : (kind == Kind::SqrtN) ? "sqrt" : "custom";
  }

  Kind kind_;
  std::function<double(int)> custom_;
  std::string name_;
};

}  // namespace vatom
