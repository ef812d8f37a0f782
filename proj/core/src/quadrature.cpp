#include "oscent/quadrature.hpp"

#include <array>
#include <cmath>

#include "oscent/errors.hpp"

namespace oscent {
namespace {

// Gauss-Kronrod 7-15 pair on [-1, 1].
constexpr std::array<double, 8> kKronrodNodes = {
    0.000000000000000000000000000000000e+00,
    2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01,
    5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01,
    8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01,
    9.914553711208126392068546975263285e-01,
};
constexpr std::array<double, 8> kKronrodWeights = {
    2.094821410847278280129991748917143e-01,
    2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01,
    1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01,
    1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02,
    2.293532201052922496373200805896959e-02,
};
// Gauss weights attach to Kronrod nodes 0, 2, 4, 6.
constexpr std::array<double, 4> kGaussWeights = {
    4.179591836734693877551020408163265e-01,
    3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01,
    1.294849661688696932706114326790820e-01,
};

struct PanelResult {
  double kronrod;
  double error;
};

PanelResult gauss_kronrod(const std::function<double(double)>& f, double a,
                          double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(center);
  double kronrod = kKronrodWeights[0] * f0;
  double gauss = kGaussWeights[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * fsum;
    if (i % 2 == 0) gauss += kGaussWeights[i / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::fabs(kronrod - gauss)};
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, const PanelResult& whole, int depth) {
  if (whole.error <= tol || depth <= 0) {
    if (depth <= 0 && whole.error > tol)
      throw Error(ErrorCode::QuadratureFailure,
                  "subdivision budget exhausted before tolerance");
    return whole.kronrod;
  }
  const double mid = 0.5 * (a + b);
  const PanelResult left = gauss_kronrod(f, a, mid);
  const PanelResult right = gauss_kronrod(f, mid, b);
  return adapt(f, a, mid, 0.5 * tol, left, depth - 1) +
         adapt(f, mid, b, 0.5 * tol, right, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, int max_depth) {
  const PanelResult whole = gauss_kronrod(f, a, b);
  const double tol = std::max(abs_tol, rel_tol * std::fabs(whole.kronrod));
  return adapt(f, a, b, tol, whole, max_depth);
}

}  // namespace oscent
