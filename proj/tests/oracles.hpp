#pragma once

// Independent numerical oracles for the test suite.  Everything here is
// deliberately primitive (plain adaptive Simpson, direct power series,
// classical RK4) so the library paths are checked against arithmetic that
// shares none of their machinery.

#include <cstddef>
#include <functional>

namespace oracles {

// Adaptive Simpson quadrature with absolute tolerance.
double simpson(const std::function<double(double)>& f, double a, double b,
               double tol = 1e-13);

// 2F1 by direct term-by-term summation of the defining series; no
// transformations, long double accumulator.
double hyp2f1_series(double a, double b, double c, double z);

struct EllipticState {
  double sn, cn, dn;
};

// Integrates sn' = cn dn, cn' = -sn dn, dn' = -k^2 sn cn from u = 0 with
// classical RK4 at the given step count.
EllipticState integrate_elliptic(double u, double k, int steps = 20000);

}  // namespace oracles
