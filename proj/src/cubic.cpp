#include "vatom/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace vatom {

double CubicCoeffs::scale() const {
  return std::max({1.0, std::abs(x1), std::abs(x2), std::abs(x3)});
}

double CubicRoots::min_gap() const {
  return std::min({mu[1] - mu[0], mu[2] - mu[1], mu[2] - mu[0]});
}

CubicCoeffs cubic_coeffs(const ModelParams& params, int n) {
  const double g2 = params.g_sq(n);
  CubicCoeffs c;
  c.level = n;
  c.x1 = params.delta1 - 2.0 * params.delta2;
  c.x2 = params.delta2 * params.delta2 - params.delta2 * params.delta1 -
         (params.lambda1 * params.lambda1 + params.lambda2 * params.lambda2) * g2;
  c.x3 = params.lambda2 * params.lambda2 * (params.delta2 - params.delta1) * g2;
  return c;
}

CubicRoots trig_cubic_roots(double x1, double x2, double x3) {
  return trig_cubic_roots(CubicCoeffs{x1, x2, x3, 0});
}

CubicRoots trig_cubic_roots(const CubicCoeffs& c) {
  const double scale_sq = std::max({1.0, c.x1 * c.x1, std::abs(c.x2)});
  const double p = c.x1 * c.x1 - 3.0 * c.x2;

  CubicRoots roots;
  if (p <= 0.0) {
    if (p < -1e-12 * scale_sq) {
      throw numerical_error("cubic has a complex root pair (x1^2 - 3 x2 = " + std::to_string(p) +
                            " < 0); parameters are outside the all-real-roots regime");
    }
    // triple root
    roots.mu = {-c.x1 / 3.0, -c.x1 / 3.0, -c.x1 / 3.0};
    roots.degenerate = true;
    return roots;
  }

  double arg = (9.0 * c.x1 * c.x2 - 2.0 * c.x1 * c.x1 * c.x1 - 27.0 * c.x3) /
               (2.0 * p * std::sqrt(p));
  if (arg > 1.0 || arg < -1.0) {
    if (std::abs(arg) > 1.0 + 1e-12) {
      throw numerical_error("cubic acos argument " + std::to_string(arg) +
                            " outside [-1,1]: complex roots");
    }
    arg = std::clamp(arg, -1.0, 1.0);
  }

  const double theta = std::acos(arg) / 3.0;
  const double radius = (2.0 / 3.0) * std::sqrt(p);
  constexpr double two_thirds_pi = 2.0 * std::numbers::pi / 3.0;
  for (int r = 0; r < 3; ++r) {
    roots.mu[static_cast<size_t>(r)] = -c.x1 / 3.0 + radius * std::cos(theta + two_thirds_pi * r);
  }
  std::sort(roots.mu.begin(), roots.mu.end());

  const double mu_scale =
      std::max({1.0, std::abs(roots.mu[0]), std::abs(roots.mu[1]), std::abs(roots.mu[2])});
  roots.degenerate = roots.min_gap() < kRootDegeneracyTol * mu_scale;
  return roots;
}

}  // namespace vatom
