#pragma once

#include <array>

#include "vatom/model_params.hpp"

namespace vatom {

// Coefficients of the per-level characteristic cubic mu^3 + x1 mu^2 + x2 mu + x3.
struct CubicCoeffs {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  int level = 0;

  double scale() const;  // max(1, |x1|, |x2|, |x3|), used by residual tolerances
};

struct CubicRoots {
  std::array<double, 3> mu{};  // sorted ascending
  bool degenerate = false;     // some pairwise gap below the degeneracy tolerance

  double min_gap() const;
};

// Pairwise root gaps below tol*max(1, |mu|_max) mark the roots degenerate;
// the per-level propagator then switches to the matrix-exponential path.
inline constexpr double kRootDegeneracyTol = 1e-7;

// Characteristic cubic of level n for the given couplings/detunings:
//   x1 = d1 - 2 d2
//   x2 = d2^2 - d2 d1 - (l1^2 + l2^2) (n+1) f^2(n+1)
//   x3 = l2^2 (d2 - d1) (n+1) f^2(n+1)
CubicCoeffs cubic_coeffs(const ModelParams& params, int n);

// All-real-root cubic solve in trigonometric form:
//   mu_r = -x1/3 + (2/3) sqrt(x1^2 - 3 x2) cos(theta + 2 pi (r-1)/3)
//   theta = acos([9 x1 x2 - 2 x1^3 - 27 x3] / [2 (x1^2 - 3 x2)^{3/2}]) / 3
// The acos argument is clipped when within 1e-12 of [-1,1]; a negative
// x1^2 - 3 x2 beyond tolerance (complex root pair) raises numerical_error.
CubicRoots trig_cubic_roots(const CubicCoeffs& c);

// Same solver on raw coefficients (also used for density-matrix eigenvalues).
CubicRoots trig_cubic_roots(double x1, double x2, double x3);

}  // namespace vatom
