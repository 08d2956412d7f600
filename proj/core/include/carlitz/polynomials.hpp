#pragma once

#include <cstddef>
#include <vector>

#include "carlitz/elliptic.hpp"

namespace carlitz {

// The six orthogonal polynomial families tied to the Laplace transforms of
// the Jacobian elliptic functions.  Letters follow the customary monic
// sequences f, g, p, q, r, s.
enum class Family { f, g, p, q, r, s };

const char* family_name(Family fam);

// One family at a fixed modulus: monic recurrence data, orthonormalization
// divisors, and the discrete orthogonality measure.
struct FamilySpec {
  Family id;
  double k;

  // Monic recurrence P_{n+1} = (x - beta(n)) P_n - alpha_sq(n) P_{n-1}.
  double beta(std::size_t n) const;
  double alpha_sq(std::size_t n) const;

  // Positive divisor turning the monic value into the orthonormal one,
  // e.g. k^n (2n)! for family p; overflows past n ~ 85, use log_norm then.
  double norm(std::size_t n) const;
  double log_norm(std::size_t n) const;

  // Sign in front of P_n(x)/norm(n): (-1)^n for p, q, r, s; +1 for f, g.
  double sign(std::size_t n) const;

  // Families f and g are evaluated at -x against their positive-axis
  // measures.
  bool negate_argument() const { return id == Family::f || id == Family::g; }
};

// Orthonormal-recurrence coefficients of the family's Jacobi matrix, with
// the customary negative off-diagonal.
double jacobi_alpha(Family fam, double k, std::size_t n);
double jacobi_beta(Family fam, double k, std::size_t n);

// Value of the degree-n monic polynomial by forward recurrence.  Throws
// std::overflow_error once the values leave the finite range (factorial
// growth, n ~ 85 at moderate x).
double monic_eval(const FamilySpec& spec, std::size_t n, double x);

// Orthonormal value sign(n) P_n(x) / norm(n), computed by the rescaled
// recurrence; no factorials are formed.
double orthonormal_eval(const FamilySpec& spec, std::size_t n, double x);

struct OrthonormalSequence {
  std::vector<double> value;  // entries 0 .. count-1
  std::size_t trusted;        // entries [0, trusted) stable under x-perturbation
};

// Whole orthonormal sequence at one point.  Forward recurrence is unstable
// at spectral points, so each entry is cross-checked against runs with x
// perturbed by +-1e-9 relative; entries past the first divergence beyond
// 1e-6 relative are reported untrusted.
OrthonormalSequence orthonormal_sequence(const FamilySpec& spec, double x,
                                         std::size_t count);

struct SpectralPoint {
  double lambda;
  double mass;  // coefficient of the unit Dirac mass in the family measure
};

// m-th spectral point and raw measure mass.  Family g has no mass at m = 0
// (throws std::out_of_range there).
SpectralPoint spectral_point(const FamilySpec& spec, const EllipticContext& ctx,
                             std::size_t m);

// Mass of the m-th point in the Hilbert space the family is orthonormal in
// (raw measure for f, p, r, g; x dmu for q; x dmu / k^2 for s).
double hilbert_mass(const FamilySpec& spec, const EllipticContext& ctx,
                    std::size_t m);

// Number of measure terms needed so the neglected mass tail stays below
// tol (geometric in the nome).
std::size_t measure_terms(const EllipticContext& ctx, double tol = 1e-12);

struct GeneratingCheck {
  double partial_sum;
  double closed_form;
};

// N-term partial sum of the family's elliptic generating series at (x, u)
// against the closed form.
GeneratingCheck generating_check(const FamilySpec& spec,
                                 const EllipticContext& ctx, double x,
                                 double u, std::size_t terms);

struct AsymptoticPair {
  double exact_scaled;  // factorial-scaled polynomial value
  double leading_term;  // leading term of its large-degree expansion
};

AsymptoticPair asymptotic_leading(const FamilySpec& spec,
                                  const EllipticContext& ctx, std::size_t n,
                                  double x);

// Factorial scalings used by the generating series and the asymptotics.
enum class FactorialScaling { even, odd };  // (2n)! or (2n+1)!

// v_n = P_n(x) / c_n for c_n = (2n)! or (2n+1)!, by the divided recurrence;
// bounded for fixed x, any count.
std::vector<double> scaled_monic_sequence(const FamilySpec& spec, double x,
                                          std::size_t count,
                                          FactorialScaling scaling);

// phi_n = k^n Phat_n(x): the orthonormal value damped by k^n.  Bounded for
// fixed x off the spectrum (the orthonormal values grow like k^-n), so the
// sequence is safe for arbitrarily long series.
std::vector<double> scaled_orthonormal_sequence(const FamilySpec& spec,
                                                double x, std::size_t count);

}  // namespace carlitz
