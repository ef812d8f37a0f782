#pragma once

#include "oscent/errors.hpp"

namespace oscent {

// Physical inputs in natural units (hbar = k_B = 1).
// m: light-particle mass, trapped with frequency omega.
// M: heavy-particle mass, vibrating with frequency Omega.
// kappa: Hooke coupling strength between the two.
// beta: inverse temperature; large beta selects the ground state.
struct SystemParams {
  double m = 1.0;
  double M = 1.0;
  double omega = 1.0;
  double Omega = 1.0;
  double kappa = 0.0;
  double beta = 50.0;

  // Throws Error(InvalidParams) unless m,M,beta > 0, omega,Omega,kappa >= 0
  // and at least one of omega, Omega, kappa is strictly positive.
  void validate() const;
};

// Frequencies derived from the influence-kernel algebra plus the two
// special confinement frequencies.
//
//   Omega_eff^2 = Omega^2 + kappa/M
//   2 z_pm^2    = (Omega_eff^2 + kappa/m) -+ sqrt(discriminant)
//   discriminant = (Omega_eff^2 + kappa/m)^2 - 4 omega^2 Omega_eff^2
//
// Note z+^2 + z-^2 = Omega_eff^2 + kappa/m, which is NOT the trace of the
// true normal-mode matrix (that has an extra omega^2). The kernel routes use
// z_pm as given; the oracle module never touches them.
struct DerivedFrequencies {
  double omega_eff_sq = 0.0;
  double z_plus = 0.0;
  double z_minus = 0.0;
  double mu = 0.0;       // reduced mass, 1/mu = 1/m + 1/M
  double omega_M = 0.0;  // maximal-entanglement confinement frequency
  double omega_S = 0.0;  // claimed separability frequency
  double discriminant = 0.0;
};

// Throws Error(ComplexRegime) when the discriminant is negative and z_pm
// would be complex. The confluent case z+ == z- (discriminant == 0) is valid.
DerivedFrequencies derive(const SystemParams& params);

double reduced_mass(const SystemParams& params);

// omega_M = sqrt[ (Omega^2 + kappa/mu)^2 / (4 (Omega^2 + kappa/M)) ].
// Throws Error(DegenerateSystem) when Omega^2 + kappa/M = 0.
double omega_max_entangled(const SystemParams& params);

// omega_S = sqrt[ (Omega^2 + kappa/M) / 16 ].
double omega_separable(const SystemParams& params);

// Documented stand-in for beta -> infinity: 50 / min(z_minus, Omega_eff, 1).
// Falls back to 50 / min(Omega_eff, 1) when z_pm are complex or zero.
double default_beta(const SystemParams& params);

}  // namespace oscent
