#pragma once

#include "oscent/params.hpp"

namespace oscent {

// Reduced density kernel in sum/difference coordinates,
//
//   rho(x, x') = norm * exp(-p (x - x')^2 - q (x + x')^2),
//
// with p, q > 0 required for normalizability. norm makes the diagonal
// integrate to 1. The prefactor printed in the source formula is kept only
// as metadata (stored as a log to survive large beta); the physics always
// uses the recomputed norm.
struct KernelCoefficients {
  double p = 0.0;
  double q = 0.0;
  double norm = 0.0;
  double log_prefactor_paper = 0.0;

  double value(double x, double xp) const;       // rho(x, x')
  double log_value(double x, double xp) const;   // log rho(x, x')
};

// Influence function Delta(tau): the two-term cosh/sinh expression, with the
// printed denominators read as z * sinh(z * beta / 2) (the literal nesting
// "sinh(z sinh(z beta/2))" is dimensionally broken and rejected). Evaluated
// in log-space, so beta up to 1e4 does not overflow. The confluent case
// z+ == z- is handled as the analytic limit of the divided difference.
//
// tau may sit slightly outside [0, beta] (finite-difference probes); the
// expression is the smooth extension in tau.
double delta_tau(double tau, const DerivedFrequencies& derived, double beta);

// Analytic second tau-derivative of delta_tau at tau = 0 (each cosh term
// differentiates to z^2 cosh). Positive for all real-z parameters.
double delta_ddot0(const DerivedFrequencies& derived, double beta);

// p = m * delta_ddot0 / 4, q = m / (4 * delta_tau(0)).
//
// Sign note: delta_tau is the smooth extension of a correlator that is even
// in tau with a cusp at 0; the kernel width is set by the magnitude of the
// one-sided curvature, so p uses +delta_ddot0 (which is positive), not the
// printed -Ddot(0).
//
// Throws Error(ComplexRegime) or Error(NonNormalizable).
KernelCoefficients kernel_coefficients(const SystemParams& params);

}  // namespace oscent
