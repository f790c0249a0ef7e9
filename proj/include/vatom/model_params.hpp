#pragma once

#include <string>

#include "vatom/errors.hpp"
#include "vatom/nonlinearity.hpp"

namespace vatom {

// Model parameters in scaled units: lambda2 is the reference rate (1 by
// convention) and all times are tau = lambda2 * t. Bare level frequencies
// never appear; the interaction-picture dynamics depends only on the two
// detunings.
struct ModelParams {
  double lambda1 = 0.9;  // e<->g coupling, in units of lambda2
  double lambda2 = 1.0;  // i<->g coupling, the reference scale
  double delta1 = 0.0;   // e<->g detuning, in units of lambda2
  double delta2 = 0.0;   // i<->g detuning, in units of lambda2
  Nonlinearity f = Nonlinearity::one();
  int n_max = 1;         // Fock truncation level (inclusive)

  void validate() const {
    if (!(lambda1 > 0.0)) throw validation_error("lambda1 must be > 0");
    if (!(lambda2 > 0.0)) throw validation_error("lambda2 must be > 0");
    if (n_max < 1) throw validation_error("n_max must be >= 1");
  }

  // g(n)^2 = (n+1) f(n+1)^2, the squared effective coupling of level n.
  double g_sq(int n) const {
    double fn = f(n + 1);
    return (n + 1) * fn * fn;
  }
};

}  // namespace vatom
