#include "vatom/fock.hpp"

#include <cmath>
#include <numeric>

namespace vatom {

double log_poisson_pmf(double nbar, int n) {
  if (nbar == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  return -nbar + n * std::log(nbar) - std::lgamma(n + 1.0);
}

int choose_truncation(double nbar, double tail_tol, bool iterative_search) {
  if (!(nbar >= 0.0)) throw validation_error("nbar must be >= 0");
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) throw validation_error("tail_tol must be in (0,1)");
  if (!iterative_search) {
    return std::max(1, static_cast<int>(std::ceil(nbar + 10.0 * std::sqrt(nbar) + 10.0)));
  }
  if (nbar == 0.0) return 1;
  double cdf = 0.0;
  for (int n = 0; n < 100000; ++n) {
    cdf += std::exp(log_poisson_pmf(nbar, n));
    if (1.0 - cdf < tail_tol) return std::max(1, n);
  }
  throw numerical_error("Poisson tail search did not converge (nbar too large?)");
}

FieldCoeffs FieldCoeffs::coherent(cdouble alpha, int n_max, double tail_tol) {
  if (n_max < 1) throw validation_error("n_max must be >= 1");
  const double nbar = std::norm(alpha);
  FieldCoeffs fc;
  fc.coeffs_.resize(static_cast<size_t>(n_max) + 1);
  if (nbar == 0.0) {
    fc.coeffs_[0] = 1.0;
    return fc;
  }
  // log-space magnitudes avoid factorial overflow past n ~ 170
  const double phase = std::arg(alpha);
  double kept = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    double lp = 0.5 * log_poisson_pmf(nbar, n);
    fc.coeffs_[static_cast<size_t>(n)] = std::polar(std::exp(lp), phase * n);
    kept += std::exp(2.0 * lp);
  }
  if (1.0 - kept >= tail_tol) {
    throw truncation_error("coherent-state tail mass " + std::to_string(1.0 - kept) +
                           " exceeds tail_tol at n_max=" + std::to_string(n_max));
  }
  const double inv_norm = 1.0 / std::sqrt(kept);
  for (auto& c : fc.coeffs_) c *= inv_norm;
  return fc;
}

FieldCoeffs::FieldCoeffs(std::vector<cdouble> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw validation_error("field coefficient vector is empty");
  double norm_sq = 0.0;
  for (const auto& c : coeffs_) norm_sq += std::norm(c);
  if (!(norm_sq > 0.0) || !std::isfinite(norm_sq)) {
    throw validation_error("field coefficient vector has zero or non-finite norm");
  }
  const double inv_norm = 1.0 / std::sqrt(norm_sq);
  for (auto& c : coeffs_) c *= inv_norm;
}

}  // namespace vatom
