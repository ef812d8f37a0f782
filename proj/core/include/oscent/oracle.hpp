#pragma once

#include <Eigen/Dense>

#include "oscent/params.hpp"

namespace oscent {

// First-principles ground truth for the ground-state entanglement, built
// directly from the Hamiltonian's normal modes. Deliberately independent of
// z_pm, Delta(tau) and every closed form in the kernel/entropy modules.

// Normal modes of the mass-weighted potential matrix
//   K11 = omega^2 + kappa/m, K22 = Omega^2 + kappa/M, K12 = -kappa/sqrt(mM).
// Columns of mode_vectors are the orthonormal eigenvectors, column 0 for
// nu_plus, column 1 for nu_minus.
struct NormalModes {
  double nu_plus = 0.0;
  double nu_minus = 0.0;
  Eigen::Matrix2d mode_vectors = Eigen::Matrix2d::Identity();
};

// Closed-form 2x2 symmetric eigendecomposition.
// Throws Error(BoundStateAbsent) when K is not positive definite.
NormalModes normal_modes(const SystemParams& params);

// Ground-state second moments of one particle from the mode decomposition
// (hbar = 1, <u^2> = 1/(2 nu) per unit-mass normal mode).
struct ParticleMoments {
  double x_sq = 0.0;  // <x^2>
  double p_sq = 0.0;  // <p^2>
  // <xp + px>/2 = 0 for the real ground state; kept implicit.
};

ParticleMoments light_particle_moments(const NormalModes& modes,
                                       const SystemParams& params);

// Purity of the light particle's reduction: 1/(2 nu_tilde) with
// nu_tilde = sqrt(<x^2><p^2>), the symplectic eigenvalue of the one-mode
// Gaussian reduced state.
double purity_covariance(const NormalModes& modes, const SystemParams& params);

// Grid half-width: 8 times the larger ground-state positional standard
// deviation of the two particles.
double auto_halfwidth(const SystemParams& params);

// Brute-force partial trace on an n x n grid over [-l, l]^2.
struct GridState {
  Eigen::VectorXd grid;           // n coordinates
  double step = 0.0;              // grid spacing
  Eigen::MatrixXd psi;            // psi0(x_i, y_j)
  Eigen::MatrixXd rho_reduced;    // rho_A(x_i, x_j), continuum-normalized
};

// Builds psi0 analytically from the normal modes and traces out y.
// l <= 0 requests auto_halfwidth. Throws Error(GridTooSmall) when the
// boundary amplitude exceeds 1e-6; throws Error(InvalidParams) for n < 128.
GridState build_grid_state(const SystemParams& params, int n, double l = 0.0);

struct GridPurity {
  double purity = 0.0;
  double richardson_error = 0.0;  // |purity(n) - purity(n/2)|
};

// Tr rho_A^2 on the grid, with a Richardson-style error estimate from the
// half-resolution grid.
GridPurity purity_grid(const SystemParams& params, int n, double l = 0.0);

// Ground-truth linear entropy, 1 - purity_covariance.
double linear_entropy_oracle(const SystemParams& params);

}  // namespace oscent
