#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscent/kernel.hpp"
#include "oscent/params.hpp"

namespace oscent {

enum class PaperMode {
  Literal,    // keep the e^{beta (Omega_eff - z+ - z-)} prefactor at finite beta
  Algebraic,  // drop the prefactor: the beta -> infinity reading, 1 - sqrt(A/B)
};

// A = [(Omega_eff^2 + kappa/m)^2 - 4 omega^2 Omega_eff^2] * omega * Omega_eff.
// A vanishes identically at omega = omega_M.
double a_value(const SystemParams& params);

// B = omega Omega_eff (kappa/m - Omega_eff^2)^2
//     - (Omega_eff^2 + kappa/m + 2 omega Omega_eff)
//       * (omega^2 Omega_eff^2 - (kappa/m) Omega_eff^2),
// exactly as printed, sign structure included.
double b_value(const SystemParams& params);

// Closed-form linear entropy. Log-space evaluation; no clamping, values
// outside [0, 1] are returned raw.
// Throws ComplexRegime, DivisionByZeroB, NegativeRadicand.
double linear_entropy_paper(const SystemParams& params, PaperMode mode);

// Tr rho^2 of the normalized Gaussian kernel by nested adaptive quadrature.
double purity_quadrature(const KernelCoefficients& coeffs);

// Tr rho^2 of the same kernel in closed form: sqrt(q/p).
double purity_gaussian_closed(const KernelCoefficients& coeffs);

// One parameter point, all entanglement routes. Routes that fail carry an
// error-code flag instead of a value; nothing is clamped.
struct EntropyReport {
  std::optional<double> s_l_paper_literal;
  std::optional<double> s_l_paper_algebraic;
  std::optional<double> s_l_kernel;      // 1 - sqrt(q/p)
  std::optional<double> s_l_quadrature;  // 1 - Tr rho^2 by quadrature
  std::optional<double> s_l_oracle;      // 1 - covariance-oracle purity
  std::optional<double> a_value;
  std::optional<double> b_value;
  double deviation = 0.0;  // max pairwise difference among defined S_L values
  bool out_of_range = false;  // some defined S_L lies outside [0, 1]
  std::vector<std::pair<std::string, std::string>> flags;  // (route, code)
};

enum class Verdict { Pass, Fail, Discrepant, Error };

const char* verdict_name(Verdict verdict);

struct Claim {
  std::string name;
  Verdict verdict = Verdict::Error;
  double measured = 0.0;
  double expected = 0.0;
  double deviation = 0.0;
  std::string note;
};

struct ConditionReport {
  SystemParams params;
  std::vector<Claim> claims;
};

// Evaluates the special-frequency claims for the given (m, M, Omega, kappa):
// S_L at omega_M and omega_S on every route, and the large/small-Omega
// asymptotics of omega_M, omega_S. Per-claim errors are captured, never
// propagated. Asymptotic tolerance 1e-3.
ConditionReport condition_report(const SystemParams& params);

}  // namespace oscent
