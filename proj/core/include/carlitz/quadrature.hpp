#pragma once

#include <functional>

namespace carlitz {

// Adaptive Gauss-Kronrod (7,15) integration on [a,b].  Bisects until the
// local Kronrod-Gauss discrepancy meets the tolerance; throws
// std::runtime_error when the subdivision budget is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-12);

}  // namespace carlitz
