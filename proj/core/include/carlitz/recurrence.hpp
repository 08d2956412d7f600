#pragma once

#include <cstddef>
#include <vector>

namespace carlitz {

// Parameters of the three-term recurrence
//   (k + 1/k)(n + sigma) h_n - (n + xi) h_{n-1} - (n + eta) h_{n+1} = 0,
// n >= 1, with coefficients depending linearly on the index.
struct RecurrenceParams {
  double k;
  double sigma;
  double xi;
  double eta;
};

// The growth exponent (-xi - k^2 eta + (1 + k^2) sigma) / (1 - k^2).
double omega(const RecurrenceParams& p);

struct SolutionPair {
  double hI;
  double hII;
};

// The two explicit hypergeometric solutions, linearly independent when
// xi - eta is not an integer (throws std::domain_error otherwise).  Valid
// for n large enough that the gamma arguments are positive.
SolutionPair solution_basis(const RecurrenceParams& p, std::size_t n);

// The square-summable solution (unique up to scale).  Requires -xi not a
// positive integer.
double solution_plus(const RecurrenceParams& p, std::size_t n);

// Truncated matrices of the fixed-point construction behind the
// square-summable solution: the discrete transfer operator L, its
// geometric quasi-inverse G with kernel k^(|m-n|+1)/(1-k^2), and the
// index-shifted tridiagonal perturbation R.
class BandSystem {
 public:
  // `shift` is the tail offset (row m of R uses index shift + m); `size`
  // the truncation order of all matrices.
  BandSystem(const RecurrenceParams& p, std::size_t shift, std::size_t size);

  std::size_t size() const { return size_; }
  std::size_t shift() const { return shift_; }

  double L(std::size_t m, std::size_t n) const;
  double G(std::size_t m, std::size_t n) const;
  double R(std::size_t m, std::size_t n) const;
  double kvec(std::size_t n) const;

  // Numerical estimate of the spectral norm of G*R on the truncation
  // (power iteration).
  double gr_norm_estimate() const;

 private:
  RecurrenceParams params_;
  std::size_t shift_;
  std::size_t size_;
};

// Independent oracle for the square-summable solution: solves the
// fixed-point system (I - GR) h = kvec on a tail window and extends
// downward by the descending recurrence.  Entries are normalized so that
// h_0 = 1 when h_0 is nonzero, else to unit l2 norm.  `shift_override`
// (when nonzero) fixes the tail offset, otherwise it is chosen from the
// contraction bound; throws std::runtime_error if no valid offset exists
// and std::domain_error when the descending division hits n + xi = 0.
std::vector<double> minimal_solution_oracle(const RecurrenceParams& p,
                                            std::size_t truncation,
                                            std::size_t shift_override = 0);

// Residual of the three-term recurrence at index n for a candidate
// solution triple (h_{n-1}, h_n, h_{n+1}).
double recurrence_residual(const RecurrenceParams& p, std::size_t n,
                           double hm, double h0, double hp);

}  // namespace carlitz
