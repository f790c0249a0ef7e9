#pragma once

#include <span>
#include <vector>

#include "vatom/cubic.hpp"
#include "vatom/fock.hpp"
#include "vatom/model_params.hpp"
#include "vatom/passage_state.hpp"

namespace vatom {

// Which per-level propagator to use. auto_closed takes the closed form and
// reroutes individual levels to the matrix exponential when their cubic
// roots are degenerate; matrix_exp forces the fallback everywhere.
enum class Engine { auto_closed, matrix_exp };

// Field state conditioned on detecting the atom in its ground level.
struct ProjectionResult {
  FieldCoeffs field;   // support starts at |1>; normalized
  double probability;  // ground-detection probability
};

struct CascadeOptions {
  double probability_floor = 1e-8;  // minimum accepted ground-detection probability
};

struct CascadeRun {
  FieldCoeffs initial_field;
  ProjectionResult projection;       // after the first passage at tau1
  std::vector<PassageState> states;  // second-passage states, one per tau2
};

// Precomputes per-level spectral data for one atom passage so that states
// at many times can be evaluated cheaply. The atom starts in the symmetric
// superposition of its two upper levels; the field starts in `field`.
class PassageSolver {
 public:
  PassageSolver(const FieldCoeffs& field, const ModelParams& params,
                Engine engine = Engine::auto_closed);

  // State at scaled time tau (tau = 0 reproduces the initial condition).
  PassageState at(double tau) const;

  int levels() const { return static_cast<int>(levels_.size()); }

 private:
  struct Level {
    cdouble cn;                 // initial field amplitude
    bool populated = false;
    bool use_matrix = false;
    // closed form: roots and initial-condition weights
    std::array<double, 3> mu{};
    std::array<cdouble, 3> k{};
    std::array<double, 3> a_factor{};  // (mu^2 - d2 mu - l2^2 g^2)/(l1 l2 g^2)
    std::array<double, 3> c_factor{};  // -mu/(l2 g)
    // matrix fallback: eigen-decomposition of the per-level generator
    std::array<double, 3> eval{};
    std::array<std::array<double, 3>, 3> evec{};  // columns are eigenvectors
    std::array<cdouble, 3> w{};                   // initial vector in the eigenbasis
  };

  std::vector<Level> levels_;
  double delta1_ = 0.0, delta2_ = 0.0;
};

// One-shot convenience wrapper around PassageSolver.
PassageState passage_amplitudes(const FieldCoeffs& field, const ModelParams& params, double tau,
                                Engine engine = Engine::auto_closed);

// Exact propagation of the per-level 3-vector (cn/sqrt2, cn/sqrt2, 0) under
// the level-n generator; valid for degenerate roots and vanishing coupling.
std::array<cdouble, 3> matrix_exp_level(cdouble cn, const ModelParams& params, int n, double tau);

// Projects onto the atomic ground level and renormalizes the surviving
// field branch. Throws projection_floor_error below probability_floor.
ProjectionResult project_ground(const PassageState& state, double probability_floor = 1e-8);

// Full two-passage pipeline: coherent field -> first passage at tau1 ->
// ground-state projection -> second passage evaluated at each tau2.
CascadeRun run_cascade(const ModelParams& params, cdouble alpha, double tau1,
                       std::span<const double> tau2_grid, const CascadeOptions& opts = {});

}  // namespace vatom
