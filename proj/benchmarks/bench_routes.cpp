#include <benchmark/benchmark.h>

#include "oscent/entropy.hpp"
#include "oscent/kernel.hpp"
#include "oscent/oracle.hpp"
#include "oscent/sweep.hpp"

namespace {

oscent::SystemParams reference_point() {
  oscent::SystemParams p;
  p.m = 1.0;
  p.M = 1.0;
  p.omega = 1.0;
  p.Omega = 1.0;
  p.kappa = 1.0;
  p.beta = 50.0;
  return p;
}

void BM_DeltaTau(benchmark::State& state) {
  const oscent::SystemParams p = reference_point();
  const oscent::DerivedFrequencies d = oscent::derive(p);
  double tau = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oscent::delta_tau(tau, d, p.beta));
    tau += 1e-6;
  }
}
BENCHMARK(BM_DeltaTau);

void BM_ClosedForm(benchmark::State& state) {
  const oscent::SystemParams p = reference_point();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        oscent::linear_entropy_paper(p, oscent::PaperMode::Algebraic));
}
BENCHMARK(BM_ClosedForm);

void BM_KernelCoefficients(benchmark::State& state) {
  const oscent::SystemParams p = reference_point();
  for (auto _ : state)
    benchmark::DoNotOptimize(oscent::kernel_coefficients(p));
}
BENCHMARK(BM_KernelCoefficients);

void BM_PurityQuadrature(benchmark::State& state) {
  const oscent::KernelCoefficients coeffs =
      oscent::kernel_coefficients(reference_point());
  for (auto _ : state)
    benchmark::DoNotOptimize(oscent::purity_quadrature(coeffs));
}
BENCHMARK(BM_PurityQuadrature);

void BM_PurityCovariance(benchmark::State& state) {
  const oscent::SystemParams p = reference_point();
  const oscent::NormalModes modes = oscent::normal_modes(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(oscent::purity_covariance(modes, p));
}
BENCHMARK(BM_PurityCovariance);

void BM_PurityGrid(benchmark::State& state) {
  const oscent::SystemParams p = reference_point();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(oscent::purity_grid(p, n).purity);
}
BENCHMARK(BM_PurityGrid)->Arg(128)->Arg(256)->Arg(512);

void BM_RunPoint(benchmark::State& state) {
  const oscent::SystemParams p = reference_point();
  const oscent::RouteSet routes = oscent::all_routes();
  for (auto _ : state)
    benchmark::DoNotOptimize(oscent::run_point(p, routes));
}
BENCHMARK(BM_RunPoint);

}  // namespace
