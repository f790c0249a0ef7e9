#pragma once

#include <complex>
#include <vector>

#include "vatom/fock.hpp"

namespace vatom {

// Joint atom-field state during one passage, expanded over the invariant
// per-level subspaces {|e,n>, |i,n>, |g,n+1>}:
//   a[n] multiplies |e,n>, b[n] multiplies |i,n>, c[n] multiplies |g,n+1>.
// Note the offset: c[n] is the amplitude usually written C(n+1).
struct PassageState {
  std::vector<cdouble> a, b, c;
  double tau = 0.0;

  int levels() const { return static_cast<int>(a.size()); }

  double norm_sq() const {
    double s = 0.0;
    for (size_t n = 0; n < a.size(); ++n) s += std::norm(a[n]) + std::norm(b[n]) + std::norm(c[n]);
    return s;
  }

  // |A_n|^2 + |B_n|^2 + |C_{n+1}|^2 of one level block.
  double level_norm_sq(int n) const {
    auto i = static_cast<size_t>(n);
    return std::norm(a[i]) + std::norm(b[i]) + std::norm(c[i]);
  }
};

}  // namespace vatom
