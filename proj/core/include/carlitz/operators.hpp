#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "carlitz/polynomials.hpp"

namespace carlitz {

// The eleven operator tags: four Hankel matrices (p, q, r, s), two weighted
// ones for families f and g, and the five parameter-permuted weighted
// variants qp (q'), sp (s'), fp (f'), fpp (f''), gp (g').
enum class Tag { p, q, r, s, f, g, qp, sp, fp, fpp, gp };

const std::vector<Tag>& all_tags();
const char* tag_name(Tag t);
Tag parse_tag(const std::string& name);  // throws std::invalid_argument

// Family whose orthonormal polynomials diagonalize the tag's operator.
Family family_of(Tag t);

// First index carrying an eigenvalue (1 for s, g, sp, gp, else 0).
std::size_t m_start(Tag t);

// Parameters (a, b, c) of the weight generator and the recurrence data
// (sigma, xi = a, eta = b + c + 2) of the tag's moment equation.
struct TagParameters {
  double a;
  double b;
  double c;
  double sigma;
  double xi;
  double eta;
  double omega;
};
TagParameters tag_parameters(Tag t, double k);

struct JacobiOperator {
  Tag tag;
  double k;
  std::size_t N;
  std::vector<double> alpha;  // off-diagonal, N-1 entries, negative
  std::vector<double> beta;   // diagonal, N entries
};

// Tridiagonal truncation of the tag's commuting Jacobi matrix.  The primed
// tags share the matrix of their base tag.
JacobiOperator build_jacobi(Tag t, double k, std::size_t N);

struct WeightedHankelOperator {
  Tag tag;
  double k;
  std::size_t N;
  std::vector<double> h;  // moments h_0 .. h_{2N-2}
  std::vector<double> w;  // weights w_0 .. w_{N-1} (all ones when unweighted)

  double entry(std::size_t m, std::size_t n) const {
    return w[m] * w[n] * h[m + n];
  }
  std::vector<double> dense() const;  // row-major N x N
  double trace() const;
};

WeightedHankelOperator build_hankel(Tag t, double k, std::size_t N);

// Single moment h_n of the tag's sequence (closed form).
double moment(Tag t, double k, std::size_t n);

// h_n / k^n: the moment with its geometric factor removed.  Decays only
// polynomially, so it stays representable for any n.
double reduced_moment(Tag t, double k, std::size_t n);

// sqrt((b+1)_n (c+1)_n / (n! (a+1)_n)), parameters > -1.
double weight_sequence(double a, double b, double c, std::size_t n);

// Moment sequence of the Hankel matrix commuting with the Jacobi matrix of
// diagonal (k+1/k) n (n+sigma) and off-diagonal -(n+1)(n+a+1): the unique
// square-summable solution of the associated three-term equation.
double general_commuting_moments(double a, double sigma, double k,
                                 std::size_t n);

// Growth exponent of that solution.
double commuting_omega(double a, double sigma, double k);

// max |(HJ - JH)_{m,n}| over the interior 0 <= m, n <= N-2; the outermost
// row and column only see the truncation edge and are excluded.
double commutator_residual(const WeightedHankelOperator& H,
                           const JacobiOperator& J);

namespace detail {

// Extended-precision entry pipeline for the spectral oracle (see
// hypergeometric.hpp).
long double reduced_moment_ld(Tag t, double k, std::size_t n);
long double weight_ld(Tag t, double k, std::size_t n);
std::vector<long double> dense_ld(Tag t, double k, std::size_t N);

}  // namespace detail

}  // namespace carlitz
