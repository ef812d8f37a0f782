#include <cmath>
#include <random>

#include <doctest.h>

#include "oscent/entropy.hpp"
#include "oscent/oracle.hpp"

using namespace oscent;

namespace {

SystemParams make(double m, double M, double omega, double Omega,
                  double kappa, double beta = 50.0) {
  SystemParams p;
  p.m = m;
  p.M = M;
  p.omega = omega;
  p.Omega = Omega;
  p.kappa = kappa;
  p.beta = beta;
  return p;
}

KernelCoefficients make_coeffs(double p, double q) {
  KernelCoefficients c;
  c.p = p;
  c.q = q;
  c.norm = std::sqrt(4.0 * q / M_PI);  // diagonal integrates to 1
  return c;
}

}  // namespace

TEST_CASE("A vanishes identically at omega = omega_M") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> mass(0.3, 3.0);
  std::uniform_real_distribution<double> freq(0.1, 3.0);
  for (int i = 0; i < 100; ++i) {
    SystemParams p = make(mass(rng), mass(rng), 1.0, freq(rng), freq(rng));
    p.omega = omega_max_entangled(p);
    const double omega_eff_sq = p.Omega * p.Omega + p.kappa / p.M;
    const double sum = omega_eff_sq + p.kappa / p.m;
    const double scale = sum * sum * p.omega * std::sqrt(omega_eff_sq);
    CHECK(std::fabs(a_value(p)) <= 1e-12 * scale);
    CHECK(linear_entropy_paper(p, PaperMode::Algebraic) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("exponent sign: Omega_eff < z+ + z- whenever omega, kappa > 0") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> mass(0.3, 3.0);
  std::uniform_real_distribution<double> freq(0.1, 3.0);
  int accepted = 0;
  while (accepted < 100) {
    const SystemParams p =
        make(mass(rng), mass(rng), freq(rng), freq(rng), freq(rng));
    DerivedFrequencies d;
    try {
      d = derive(p);
    } catch (const Error&) {
      continue;
    }
    ++accepted;
    CHECK(std::sqrt(d.omega_eff_sq) - d.z_plus - d.z_minus < 0.0);
  }
}

TEST_CASE("literal mode approaches the algebraic-limit value 1 - 0 as beta grows") {
  // With kappa, omega > 0 the exponential prefactor decays, so the literal
  // value drifts toward 1 regardless of sqrt(A/B).
  SystemParams p = make(1, 1, 0.6, 1.4, 0.8);
  const double s40 = linear_entropy_paper(make(1, 1, 0.6, 1.4, 0.8, 40),
                                          PaperMode::Literal);
  const double s200 = linear_entropy_paper(make(1, 1, 0.6, 1.4, 0.8, 200),
                                           PaperMode::Literal);
  CHECK(std::fabs(1.0 - s200) < std::fabs(1.0 - s40));
  CHECK(s200 == doctest::Approx(1.0).epsilon(1e-10));
  (void)p;
}

TEST_CASE("A and B share their only positive root; A = 0 wins the 0/0") {
  // kappa = 0, omega = Omega_eff/2 sits exactly on omega = omega_M, where
  // both A and B vanish identically. The closed form asserts S_L = 1 there.
  const SystemParams p = make(1, 1, 1.5, 3, 0);
  CHECK(a_value(p) == 0.0);
  CHECK(b_value(p) == 0.0);
  CHECK(linear_entropy_paper(p, PaperMode::Algebraic) == 1.0);
  CHECK(linear_entropy_paper(p, PaperMode::Literal) == 1.0);
}

TEST_CASE("complex regime propagates from derive") {
  CHECK_THROWS_AS(linear_entropy_paper(make(1, 2, 1, 1, 0), PaperMode::Algebraic),
                  Error);
}

TEST_CASE("closed-form Gaussian purity: trivial values") {
  CHECK(purity_gaussian_closed(make_coeffs(0.7, 0.7)) == doctest::Approx(1.0));
  CHECK(purity_gaussian_closed(make_coeffs(0.8, 0.2)) == doctest::Approx(0.5));
  CHECK_THROWS_AS(purity_gaussian_closed(make_coeffs(-1.0, 1.0)), Error);
}

TEST_CASE("quadrature purity equals sqrt(q/p) on random coefficients") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> expo(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const double p = std::exp(expo(rng));
    const double q = std::exp(expo(rng));
    const KernelCoefficients coeffs = make_coeffs(p, q);
    CHECK(purity_quadrature(coeffs) ==
          doctest::Approx(purity_gaussian_closed(coeffs)).epsilon(1e-8));
  }
}

TEST_CASE("quadrature purity agrees with the closed form on real kernels") {
  for (const SystemParams& p :
       {make(1, 1, 1, 3, 0), make(1, 1, 1, 1, 1), make(0.8, 1.6, 0.5, 1.3, 0.4)}) {
    const KernelCoefficients coeffs = kernel_coefficients(p);
    const double closed = purity_gaussian_closed(coeffs);
    CHECK(purity_quadrature(coeffs) == doctest::Approx(closed).epsilon(1e-8));
  }
}

TEST_CASE("p = q kernel is a pure projector") {
  const KernelCoefficients coeffs = make_coeffs(0.42, 0.42);
  CHECK(purity_quadrature(coeffs) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("condition report: every claim receives a verdict") {
  const ConditionReport report = condition_report(make(1, 1, 1, 1, 1));
  CHECK(report.claims.size() >= 10);
  for (const Claim& c : report.claims) {
    CHECK((c.verdict == Verdict::Pass || c.verdict == Verdict::Fail ||
           c.verdict == Verdict::Discrepant || c.verdict == Verdict::Error));
  }
  auto find = [&](const std::string& name) -> const Claim& {
    for (const Claim& c : report.claims)
      if (c.name == name) return c;
    static Claim missing;
    FAIL("missing claim ", name);
    return missing;
  };
  CHECK(find("A_vanishes_at_omega_M").verdict == Verdict::Pass);
  CHECK(find("paper_SL_at_omega_M").verdict == Verdict::Pass);
  CHECK(find("omega_M_sq_large_Omega").verdict == Verdict::Pass);
  CHECK(find("omega_S_sq_large_Omega").verdict == Verdict::Pass);
  CHECK(find("omega_M_sq_small_Omega").verdict == Verdict::Pass);
  CHECK(find("omega_S_sq_small_Omega").verdict == Verdict::Pass);
  // The paper's separability point is arbitrated by the oracle; whatever the
  // verdict, the deviation must have been measured.
  const Claim& sep = find("oracle_SL_at_omega_S");
  CHECK((sep.verdict == Verdict::Pass || sep.verdict == Verdict::Discrepant));
}

TEST_CASE("oracle arbitration at omega_S: measured value is recorded raw") {
  SystemParams p = make(1, 1, 1, 1, 1);
  p.omega = omega_separable(p);
  const double oracle = linear_entropy_oracle(p);
  const ConditionReport report = condition_report(make(1, 1, 1, 1, 1));
  for (const Claim& c : report.claims) {
    if (c.name == "oracle_SL_at_omega_S") {
      CHECK(c.measured == doctest::Approx(oracle).epsilon(1e-12));
    }
  }
}
