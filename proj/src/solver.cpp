#include "vatom/solver.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>

namespace vatom {

namespace {

constexpr double kNormTol = 1e-9;  // whole-state normalization guard
constexpr double kSqrtHalf = std::numbers::sqrt2 / 2.0;

// Real symmetric generator of the rotated (autonomous) per-level system.
// Its characteristic polynomial in mu = -eigenvalue is the passage cubic.
Eigen::Matrix3d level_generator(const ModelParams& p, int n) {
  const double g = std::sqrt(p.g_sq(n));
  Eigen::Matrix3d m;
  m << p.delta1 - p.delta2, 0.0, p.lambda1 * g,
       0.0, 0.0, p.lambda2 * g,
       p.lambda1 * g, p.lambda2 * g, -p.delta2;
  return m;
}

}  // namespace

PassageSolver::PassageSolver(const FieldCoeffs& field, const ModelParams& params, Engine engine) {
  params.validate();
  delta1_ = params.delta1;
  delta2_ = params.delta2;
  levels_.resize(static_cast<size_t>(field.size()));

  for (int n = 0; n < field.size(); ++n) {
    Level& lev = levels_[static_cast<size_t>(n)];
    lev.cn = field[n];
    lev.populated = lev.cn != cdouble{0.0, 0.0};
    if (!lev.populated) continue;

    const double g2 = params.g_sq(n);
    CubicRoots roots;
    bool closed_ok = engine == Engine::auto_closed;
    if (closed_ok) {
      if (g2 == 0.0) {
        throw numerical_error("closed-form amplitudes are singular at level " + std::to_string(n) +
                              ": (n+1) f^2(n+1) = 0 (use the matrix-exponential engine)");
      }
      roots = trig_cubic_roots(cubic_coeffs(params, n));
      if (roots.degenerate) closed_ok = false;  // reroute this level
    }

    if (closed_ok) {
      const double g = std::sqrt(g2);
      const double weight_shift =
          (params.lambda2 * params.lambda2 + params.lambda1 * params.lambda2) * g2;
      lev.mu = roots.mu;
      for (int j = 0; j < 3; ++j) {
        const int jk = (j + 1) % 3, jl = (j + 2) % 3;
        const double mu_j = roots.mu[j], mu_k = roots.mu[jk], mu_l = roots.mu[jl];
        lev.k[j] = lev.cn * kSqrtHalf * (mu_k * mu_l + weight_shift) /
                   ((mu_j - mu_k) * (mu_j - mu_l));
        lev.a_factor[j] = (mu_j * mu_j - params.delta2 * mu_j - params.lambda2 * params.lambda2 * g2) /
                          (params.lambda1 * params.lambda2 * g2);
        lev.c_factor[j] = -mu_j / (params.lambda2 * g);
      }
    } else {
      lev.use_matrix = true;
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(level_generator(params, n));
      const Eigen::Vector3d ev = es.eigenvalues();
      const Eigen::Matrix3d u = es.eigenvectors();
      const cdouble v0 = lev.cn * kSqrtHalf;
      for (int j = 0; j < 3; ++j) {
        lev.eval[j] = ev(j);
        for (int r = 0; r < 3; ++r) lev.evec[r][j] = u(r, j);
        lev.w[j] = (u(0, j) + u(1, j)) * v0;  // U^T (v0, v0, 0)
      }
    }
  }
}

PassageState PassageSolver::at(double tau) const {
  PassageState st;
  st.tau = tau;
  const size_t n_levels = levels_.size();
  st.a.assign(n_levels, cdouble{});
  st.b.assign(n_levels, cdouble{});
  st.c.assign(n_levels, cdouble{});

  const cdouble phase_a = std::exp(cdouble{0.0, (delta1_ - delta2_) * tau});
  const cdouble phase_c = std::exp(cdouble{0.0, -delta2_ * tau});

  for (size_t n = 0; n < n_levels; ++n) {
    const Level& lev = levels_[n];
    if (!lev.populated) continue;
    if (!lev.use_matrix) {
      cdouble a{}, b{}, c{};
      for (int j = 0; j < 3; ++j) {
        const cdouble osc = lev.k[j] * std::exp(cdouble{0.0, lev.mu[j] * tau});
        a += osc * lev.a_factor[j];
        b += osc;
        c += osc * lev.c_factor[j];
      }
      st.a[n] = a * phase_a;
      st.b[n] = b;
      st.c[n] = c * phase_c;
    } else {
      cdouble v[3] = {};
      for (int j = 0; j < 3; ++j) {
        const cdouble amp = lev.w[j] * std::exp(cdouble{0.0, -lev.eval[j] * tau});
        for (int r = 0; r < 3; ++r) v[r] += lev.evec[r][j] * amp;
      }
      st.a[n] = v[0] * phase_a;
      st.b[n] = v[1];
      st.c[n] = v[2] * phase_c;
    }
  }

  const double norm_sq = st.norm_sq();
  if (std::abs(norm_sq - 1.0) > kNormTol) {
    throw numerical_error("passage state norm drifted to " + std::to_string(norm_sq));
  }
  return st;
}

PassageState passage_amplitudes(const FieldCoeffs& field, const ModelParams& params, double tau,
                                Engine engine) {
  return PassageSolver(field, params, engine).at(tau);
}

std::array<cdouble, 3> matrix_exp_level(cdouble cn, const ModelParams& params, int n, double tau) {
  params.validate();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(level_generator(params, n));
  const Eigen::Vector3d ev = es.eigenvalues();
  const Eigen::Matrix3d u = es.eigenvectors();

  const cdouble v0 = cn * kSqrtHalf;
  std::array<cdouble, 3> out{};
  for (int j = 0; j < 3; ++j) {
    const cdouble w = (u(0, j) + u(1, j)) * v0;
    const cdouble amp = w * std::exp(cdouble{0.0, -ev(j) * tau});
    for (int r = 0; r < 3; ++r) out[static_cast<size_t>(r)] += u(r, j) * amp;
  }
  out[0] *= std::exp(cdouble{0.0, (params.delta1 - params.delta2) * tau});
  out[2] *= std::exp(cdouble{0.0, -params.delta2 * tau});
  return out;
}

ProjectionResult project_ground(const PassageState& state, double probability_floor) {
  double probability = 0.0;
  for (const auto& cn : state.c) probability += std::norm(cn);
  if (probability < probability_floor) {
    throw projection_floor_error("ground-detection probability " + std::to_string(probability) +
                                 " is below the floor " + std::to_string(probability_floor));
  }
  // surviving branch lives on |n+1>; the basis grows by one level
  std::vector<cdouble> coeffs(state.c.size() + 1, cdouble{});
  const double inv = 1.0 / std::sqrt(probability);
  for (size_t n = 0; n < state.c.size(); ++n) coeffs[n + 1] = state.c[n] * inv;
  return ProjectionResult{FieldCoeffs(std::move(coeffs)), probability};
}

CascadeRun run_cascade(const ModelParams& params, cdouble alpha, double tau1,
                       std::span<const double> tau2_grid, const CascadeOptions& opts) {
  if (!(tau1 > 0.0)) throw validation_error("tau1 must be > 0");
  FieldCoeffs initial = FieldCoeffs::coherent(alpha, params.n_max);
  PassageState first = passage_amplitudes(initial, params, tau1);
  ProjectionResult proj = project_ground(first, opts.probability_floor);

  PassageSolver second(proj.field, params);
  std::vector<PassageState> states;
  states.reserve(tau2_grid.size());
  for (double tau2 : tau2_grid) states.push_back(second.at(tau2));
  return CascadeRun{std::move(initial), std::move(proj), std::move(states)};
}

}  // namespace vatom
