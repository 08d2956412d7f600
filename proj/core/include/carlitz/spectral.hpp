#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "carlitz/elliptic.hpp"
#include "carlitz/operators.hpp"

namespace carlitz {

// Closed-form eigenvalue nu_m of the tag's operator; strictly decreasing
// in m, geometric in the nome.  Throws std::out_of_range below m_start.
double closed_eigenvalue(Tag t, const EllipticContext& ctx, std::size_t m);

// lambda_m, the spectral point of the commuting Jacobi matrix the
// eigenvector is evaluated at.
double spectral_lambda(Tag t, const EllipticContext& ctx, std::size_t m);

// Entry n of the closed-form eigenvector: the family's orthonormal
// polynomial at lambda_m.
double closed_eigvec(Tag t, const EllipticContext& ctx, std::size_t m,
                     std::size_t n);

// The whole eigenvector prefix with its forward-recurrence trust range.
OrthonormalSequence closed_eigvec_sequence(Tag t, const EllipticContext& ctx,
                                           std::size_t m, std::size_t count);

// Closed-form squared l2 norm of the eigenvector.  The primed tags share
// the eigenvectors, hence the norms, of their base tag.
double eigvec_norm_sq(Tag t, const EllipticContext& ctx, std::size_t m);

// The multiplier function h(x) the operator becomes after diagonalization,
// evaluated by adaptive quadrature of its elliptic integral form.  At the
// spectral points it reproduces the eigenvalues.
double multiplier_function(Tag t, const EllipticContext& ctx, double x);

struct SeriesValue {
  double partial;  // plain partial sum
  double tail;     // fitted power-law tail estimate
  double value;    // partial + tail
};

// Series form sum_n H_{n,0} Phat_n(x) of the multiplier function.  The
// terms decay like a power of n (exponent 2, or 3/2 for fp/fpp/gp), so the
// tail is estimated by fitting the leading two tail coefficients to the
// computed terms.
SeriesValue multiplier_series(Tag t, const EllipticContext& ctx, double x,
                              std::size_t terms);

// Fits t_n ~ n^(-alpha) (A + B/n) over the trailing terms (first_index is
// the index of terms[0]) and returns the estimated tail sum_{n >= end}.
double power_tail_estimate(std::span<const double> terms,
                           std::size_t first_index, double alpha);

struct DenseEigenResult {
  std::vector<double> values;   // descending
  std::vector<double> vectors;  // column j is the eigenvector of values[j]
  std::size_t sweeps;
};

// Cyclic Jacobi rotations on a dense symmetric matrix (row-major n x n,
// n <= 512).  Rotations run until every off-diagonal entry is below
// 1e-15 sqrt(|a_pp a_qq|), which preserves the high relative accuracy of
// the small eigenvalues of positive definite matrices; throws
// std::runtime_error after 30 sweeps.
DenseEigenResult dense_symmetric_eigen(std::vector<double> M, std::size_t n,
                                       std::size_t want);

// Smallest `want` eigenvalues (ascending) of the Jacobi truncation by the
// implicit-shift QL algorithm.
std::vector<double> tridiagonal_eigen(const JacobiOperator& J,
                                      std::size_t want);

struct EigenRecord {
  std::size_t m;
  double closed_form;
  double numeric;
  double rel_err;
  double eigvec_residual;  // ||H psi - nu psi|| / (nu ||psi||); NaN if skipped
  double norm_gap;         // relative gap between partial-sum and closed norm
};

struct VerifyConfig {
  std::size_t truncation = 0;  // 0: max(64, ceil(ln 1e-18 / ln k))
  std::size_t m_count = 8;     // eigenvalues compared, starting at m_start
  std::size_t eigvec_m_count = 6;  // eigenvector/norm checks (m_start..+count-1)
  double tol_eigenvalue = 1e-8;
  double tol_commutator = 1e-8;
  double tol_trace = 1e-9;
  double tol_eigvec = 1e-6;
  double tol_norm = 1e-6;
};

struct SpectralReport {
  Tag tag{};
  double k = 0.0;
  std::size_t truncation = 0;
  std::vector<EigenRecord> eigen;
  double commutator_residual = 0.0;
  double trace_gap = 0.0;
  bool pass = false;
  std::string failure;  // first failed check, empty when pass
};

std::size_t default_truncation(double k);

// Runs the full per-tag verification: commutator, closed vs dense
// spectrum, eigenvector residuals and norms, trace identity.  Component
// failures are recorded in the report, never thrown.
SpectralReport verify(Tag t, double k, const VerifyConfig& config = {});

}  // namespace carlitz
