#include "oscent/params.hpp"

#include <algorithm>
#include <cmath>

namespace oscent {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ComplexRegime: return "ComplexRegime";
    case ErrorCode::DegenerateSystem: return "DegenerateSystem";
    case ErrorCode::NonNormalizable: return "NonNormalizable";
    case ErrorCode::DivisionByZeroB: return "DivisionByZeroB";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::BoundStateAbsent: return "BoundStateAbsent";
    case ErrorCode::GridTooSmall: return "GridTooSmall";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
  }
  return "UnknownError";
}

void SystemParams::validate() const {
  auto bad = [](const std::string& msg) { throw Error(ErrorCode::InvalidParams, msg); };
  if (!(m > 0.0) || !std::isfinite(m)) bad("m must be > 0");
  if (!(M > 0.0) || !std::isfinite(M)) bad("M must be > 0");
  if (!(beta > 0.0) || !std::isfinite(beta)) bad("beta must be > 0");
  if (!(omega >= 0.0) || !std::isfinite(omega)) bad("omega must be >= 0");
  if (!(Omega >= 0.0) || !std::isfinite(Omega)) bad("Omega must be >= 0");
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) bad("kappa must be >= 0");
  if (omega == 0.0 && Omega == 0.0 && kappa == 0.0)
    bad("at least one of omega, Omega, kappa must be > 0 (no bound state)");
}

double reduced_mass(const SystemParams& params) {
  return 1.0 / (1.0 / params.m + 1.0 / params.M);
}

double omega_max_entangled(const SystemParams& params) {
  params.validate();
  const double omega_eff_sq = params.Omega * params.Omega + params.kappa / params.M;
  if (omega_eff_sq <= 0.0)
    throw Error(ErrorCode::DegenerateSystem, "Omega^2 + kappa/M = 0");
  const double top = params.Omega * params.Omega + params.kappa / reduced_mass(params);
  return std::sqrt(top * top / (4.0 * omega_eff_sq));
}

double omega_separable(const SystemParams& params) {
  params.validate();
  const double omega_eff_sq = params.Omega * params.Omega + params.kappa / params.M;
  return std::sqrt(omega_eff_sq / 16.0);
}

DerivedFrequencies derive(const SystemParams& params) {
  params.validate();
  DerivedFrequencies d;
  d.omega_eff_sq = params.Omega * params.Omega + params.kappa / params.M;
  d.mu = reduced_mass(params);
  if (d.omega_eff_sq > 0.0) {
    const double top = params.Omega * params.Omega + params.kappa / d.mu;
    d.omega_M = std::sqrt(top * top / (4.0 * d.omega_eff_sq));
  }
  d.omega_S = std::sqrt(d.omega_eff_sq / 16.0);

  // Factored discriminant (sum - 2 w Oe)(sum + 2 w Oe): the difference factor
  // cancels exactly at omega = omega_M, where the naive sum^2 - 4 w^2 Oe^2
  // leaves ~1e-16 relative noise that would leak into sqrt(A/B) as ~1e-8.
  // A residue below round-off scale is snapped to the double root.
  const double sum = d.omega_eff_sq + params.kappa / params.m;  // z+^2 + z-^2
  const double cross = 2.0 * params.omega * std::sqrt(d.omega_eff_sq);
  double diff = sum - cross;
  if (std::fabs(diff) <= 1e-12 * sum) diff = 0.0;
  d.discriminant = diff * (sum + cross);
  if (d.discriminant < 0.0)
    throw Error(ErrorCode::ComplexRegime,
                "discriminant < 0, z_pm complex at these parameters");
  const double root = std::sqrt(d.discriminant);
  d.z_plus = std::sqrt(0.5 * (sum + root));
  // z-^2 = (sum - root)/2 cancels badly when 4 w^2 Oe^2 << sum^2; use the
  // product z+^2 z-^2 = omega^2 Omega_eff^2 instead. On the snapped double
  // root the product form can still differ by an ulp, so copy z+ exactly.
  if (d.discriminant == 0.0)
    d.z_minus = d.z_plus;
  else
    d.z_minus = (d.z_plus > 0.0)
                    ? params.omega * std::sqrt(d.omega_eff_sq) / d.z_plus
                    : 0.0;
  return d;
}

double default_beta(const SystemParams& params) {
  double scale = 1.0;
  const double omega_eff_sq = params.Omega * params.Omega + params.kappa / params.M;
  if (omega_eff_sq > 0.0) scale = std::min(scale, std::sqrt(omega_eff_sq));
  try {
    const DerivedFrequencies d = derive(params);
    if (d.z_minus > 0.0) scale = std::min(scale, d.z_minus);
  } catch (const Error&) {
    // complex regime: Omega_eff and 1 still bound the relevant gaps
  }
  return 50.0 / scale;
}

}  // namespace oscent
