#pragma once

#include <complex>
#include <span>
#include <vector>

#include "vatom/errors.hpp"

namespace vatom {

using cdouble = std::complex<double>;

// Pure single-mode field state as complex amplitudes over Fock levels
// 0..n_max. Instances are normalized on construction.
class FieldCoeffs {
 public:
  // Truncated coherent-state amplitudes alpha^n e^{-|alpha|^2/2}/sqrt(n!),
  // renormalized over the kept basis so the norm is exactly 1. Throws
  // truncation_error when the discarded Poisson tail mass is >= tail_tol.
  static FieldCoeffs coherent(cdouble alpha, int n_max, double tail_tol = 1e-12);

  // Wraps an arbitrary amplitude vector, renormalizing it.
  explicit FieldCoeffs(std::vector<cdouble> coeffs);

  int n_max() const { return static_cast<int>(coeffs_.size()) - 1; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  cdouble operator[](int n) const { return coeffs_[static_cast<size_t>(n)]; }
  std::span<const cdouble> coeffs() const { return coeffs_; }

 private:
  FieldCoeffs() = default;
  std::vector<cdouble> coeffs_;
};

// Smallest n_max with Poisson(nbar) tail mass below tail_tol. With the
// iterative search disabled, falls back to ceil(nbar + 10 sqrt(nbar) + 10).
// Always returns at least 1.
int choose_truncation(double nbar, double tail_tol, bool iterative_search = true);

// log of the Poisson pmf e^{-nbar} nbar^n / n!, stable for large n.
double log_poisson_pmf(double nbar, int n);

}  // namespace vatom
