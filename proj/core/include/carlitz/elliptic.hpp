#pragma once

#include <cstddef>

namespace carlitz {

// Complete elliptic integrals and the nome for a modulus k, computed once
// and shared by everything downstream.  Immutable after construction.
struct EllipticContext {
  double k;       // modulus, 0 < k < 1
  double K;       // complete elliptic integral of the first kind
  double Kprime;  // K evaluated at the complementary modulus sqrt(1-k^2)
  double Eint;    // complete elliptic integral of the second kind
  double q;       // nome exp(-pi K'/K), in (0,1)
};

// Builds the context by AGM iteration.  Throws std::domain_error unless
// 0 < k < 1 strictly.  Full accuracy is guaranteed for k in [1e-6, 0.99];
// K itself stays finite (logarithmic growth) up to k = 1 - 1e-12.
EllipticContext make_context(double k);

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

// sn, cn, dn at real u via the descending Landen transformation on the
// AGM ladder.  Absolute accuracy <= 1e-13 for |u| <= 4K.
JacobiTriple jacobi_elliptic(double u, const EllipticContext& ctx);

enum class FourierSeries { sn, cn, dn, sn2, sn3 };

struct FourierEval {
  double value;
  double tail_bound;  // q^terms / (1 - q)
  bool within_tol;    // tail_bound below the requested tolerance
};

// Partial sum of the q-series of the named function.  Argument convention:
// the sn, cn and sn3 series approximate the function at u = 2Kv/pi, the
// dn and sn2 series at u = Kv/pi.  `terms` counts the oscillatory terms;
// the constant term of dn and sn2 is always included.
FourierEval fourier_eval(FourierSeries s, double v, const EllipticContext& ctx,
                         std::size_t terms, double tol = 1e-13);

// Smallest term count with q^n/(1-q) < tol, capped at 512.
std::size_t fourier_terms(const EllipticContext& ctx, double tol = 1e-15);

}  // namespace carlitz
