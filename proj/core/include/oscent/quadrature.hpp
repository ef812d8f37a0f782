#pragma once

#include <functional>

namespace oscent {

// Adaptive Gauss-Kronrod (G7, K15) integration on [a, b]. Bisects until the
// local Kronrod-Gauss difference is below the requested tolerance; throws
// Error(QuadratureFailure) when the subdivision budget is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, double abs_tol = 0.0,
                 int max_depth = 60);

}  // namespace oscent
