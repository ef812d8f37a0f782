#include "oscent/kernel.hpp"

#include <cmath>
#include <limits>

#include "oscent/quadrature.hpp"

namespace oscent {
namespace {

// Relative z+^2 - z-^2 gap below which the confluent (divided-difference
// limit) evaluation takes over. Direct evaluation loses ~gap^-1 digits to
// cancellation; at 1e-6 the crossover error is ~1e-10 either way.
constexpr double kConfluentGap = 1e-6;

// cosh(z*a)/sinh(z*b) without overflow, a >= 0, b > 0.
double cosh_over_sinh(double z, double a, double b) {
  return std::exp(z * (a - b)) * (1.0 + std::exp(-2.0 * z * a)) /
         (1.0 - std::exp(-2.0 * z * b));
}

// sinh(z*a)/sinh(z*b), a >= 0, b > 0.
double sinh_over_sinh(double z, double a, double b) {
  return std::exp(z * (a - b)) * (1.0 - std::exp(-2.0 * z * a)) /
         (1.0 - std::exp(-2.0 * z * b));
}

double coth(double x) {
  const double u = std::exp(-2.0 * x);
  return (1.0 + u) / (1.0 - u);
}

// coth(x)^2 - 1 = 4 e^{-2x} / (1 - e^{-2x})^2, stable for large x.
double coth_sq_minus_one(double x) {
  const double u = std::exp(-2.0 * x);
  const double d = 1.0 - u;
  return 4.0 * u / (d * d);
}

struct TauKernel {
  double a;  // |tau - beta/2|
  double b;  // beta/2

  // h(z) = cosh(z a) / (z sinh(z b)): one partial-fraction term of Delta.
  double h(double z) const { return cosh_over_sinh(z, a, b) / z; }

  double h_prime(double z) const {
    const double c = cosh_over_sinh(z, a, b);
    const double s = sinh_over_sinh(z, a, b);
    return (a * s - b * c * coth(z * b)) / z - c / (z * z);
  }
};

// Delta and its second derivative are both divided differences
// [F(z+^2) - F(z-^2)] / (z+^2 - z-^2); the confluent z+ = z- case is the
// derivative F'(t) at the common point.
template <typename F, typename Fprime>
double divided_difference(const DerivedFrequencies& d, F&& f, Fprime&& fp) {
  const double tp = d.z_plus * d.z_plus;
  const double tm = d.z_minus * d.z_minus;
  if (tp - tm <= kConfluentGap * (tp + tm)) {
    const double t = 0.5 * (tp + tm);
    const double z = std::sqrt(t);
    return f(z) + (t - d.omega_eff_sq) * fp(z) / (2.0 * z);
  }
  return ((tp - d.omega_eff_sq) * f(d.z_plus) -
          (tm - d.omega_eff_sq) * f(d.z_minus)) /
         (tp - tm);
}

double log_sinh(double x) {  // x > 0
  return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
}

}  // namespace

double delta_tau(double tau, const DerivedFrequencies& derived, double beta) {
  const TauKernel k{std::fabs(tau - 0.5 * beta), 0.5 * beta};
  return divided_difference(
      derived, [&](double z) { return k.h(z); },
      [&](double z) { return k.h_prime(z); });
}

double delta_ddot0(const DerivedFrequencies& derived, double beta) {
  const double b = 0.5 * beta;
  // d^2/dtau^2 of cosh(z(tau - beta/2)) brings down z^2; at tau = 0 each
  // term is z coth(z beta / 2).
  return divided_difference(
      derived, [&](double z) { return z * coth(z * b); },
      [&](double z) { return coth(z * b) - z * b * coth_sq_minus_one(z * b); });
}

double KernelCoefficients::log_value(double x, double xp) const {
  const double r = x - xp;
  const double s = x + xp;
  return std::log(norm) - p * r * r - q * s * s;
}

double KernelCoefficients::value(double x, double xp) const {
  const double r = x - xp;
  const double s = x + xp;
  return norm * std::exp(-p * r * r - q * s * s);
}

KernelCoefficients kernel_coefficients(const SystemParams& params) {
  const DerivedFrequencies d = derive(params);
  if (!(d.z_minus > 0.0))
    throw Error(ErrorCode::NonNormalizable,
                "z- = 0: kernel has no confining center coordinate");

  const double d0 = delta_tau(0.0, d, params.beta);
  const double dd0 = delta_ddot0(d, params.beta);

  KernelCoefficients coeffs;
  coeffs.p = params.m * dd0 / 4.0;
  coeffs.q = params.m / (4.0 * d0);
  if (!(coeffs.p > 0.0) || !(coeffs.q > 0.0) || !std::isfinite(coeffs.p) ||
      !std::isfinite(coeffs.q))
    throw Error(ErrorCode::NonNormalizable, "kernel exponent p or q <= 0");

  // Normalization recomputed from scratch: 1 / integral of the diagonal.
  const double sigma = 1.0 / std::sqrt(8.0 * coeffs.q);  // e^{-4q x^2} width
  const double span = 12.0 * sigma;
  const double q4 = 4.0 * coeffs.q;
  const double diag_integral = integrate(
      [q4](double x) { return std::exp(-q4 * x * x); }, -span, span, 1e-12);
  coeffs.norm = 1.0 / diag_integral;

  // Printed prefactor of the source formula, metadata only.
  const double omega_eff = std::sqrt(d.omega_eff_sq);
  const double half_beta = 0.5 * params.beta;
  double lp = 0.5 * std::log(params.m / (4.0 * M_PI * d0));
  lp += (omega_eff > 0.0) ? log_sinh(omega_eff * half_beta)
                          : -std::numeric_limits<double>::infinity();
  lp -= log_sinh(d.z_plus * half_beta);
  lp -= log_sinh(d.z_minus * half_beta);
  coeffs.log_prefactor_paper = lp;
  return coeffs;
}

}  // namespace oscent
