#pragma once

#include <cstddef>

namespace carlitz {

struct HypergeoArgs {
  double a;
  double b;
  double c;
  double z;  // real argument, |z| < 1
};

// Gauss hypergeometric function 2F1(a,b;c;z) for real parameters and
// |z| < 1.  Stays accurate in the regimes used here: parameters of the
// form (n + const, const; n + const) with n up to several hundred and
// z = k^2 up to 0.98.  Throws std::domain_error when c is a non-positive
// integer that the series does not terminate before, std::runtime_error
// when no evaluation path converges.
double gauss_2f1(double a, double b, double c, double z);
inline double gauss_2f1(const HypergeoArgs& p) {
  return gauss_2f1(p.a, p.b, p.c, p.z);
}

// Maximum absolute residual of the three contiguous-parameter relations
// linking 2F1 at shifted (a, b, c).  Self-test utility.
double contiguous_residual(const HypergeoArgs& p);

// Absolute residual of the quadratic two-product identity
//   (a-c+1) F(a,b;c;z) F(a-c+2,b-c+1;2-c;z)
//     - a F(a+1,b;c;z) F(a-c+1,b-c+1;2-c;z) = (1-c)(1-z)^(c-a-b-1).
double quadratic_identity_residual(double a, double b, double c, double z);

// Moment integrals over [0,1] of t^(2n) sqrt((1-t^2)/(1-k^2 t^2)) and of
// t^(2n) sqrt((1-k^2 t^2)/(1-t^2)), via their hypergeometric closed forms
// with gamma ratios in log space.
double moment_E(std::size_t n, double k);
double moment_F(std::size_t n, double k);

// Gamma(x)/Gamma(y).  Log-space when both arguments are positive (stable
// for x, y up to thousands), direct gamma otherwise.
double gamma_ratio(double x, double y);

// log of the Pochhammer symbol (a)_n, requiring a > 0.
double log_pochhammer(double a, std::size_t n);

namespace detail {

// Extended-precision variants used where correctly rounded doubles are not
// enough: eigenvalues of the Hankel truncations span more decades than a
// binary64 entry grid can resolve, so the spectral oracle assembles its
// matrices from these.
long double gauss_2f1_ld(long double a, long double b, long double c,
                         long double z);
long double gamma_ratio_ld(long double x, long double y);

}  // namespace detail

}  // namespace carlitz
