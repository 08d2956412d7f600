#include "carlitz/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "carlitz/hypergeometric.hpp"

namespace carlitz {

namespace {

bool near_integer(double x, double tol = 1e-9) {
  return std::abs(x - std::round(x)) < tol;
}

// Dense LU solve with partial pivoting; A is row-major size x size.
std::vector<double> lu_solve(std::vector<double> A, std::vector<double> rhs,
                             std::size_t n) {
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    double best_val = std::abs(A[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(A[r * n + col]);
      if (v > best_val) {
        best_val = v;
        best = r;
      }
    }
    if (best_val == 0.0) throw std::runtime_error("lu_solve: singular matrix");
    if (best != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A[col * n + j], A[best * n + j]);
      std::swap(rhs[col], rhs[best]);
    }
    const double d = A[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double m = A[r * n + col] / d;
      if (m == 0.0) continue;
      A[r * n + col] = 0.0;
      for (std::size_t j = col + 1; j < n; ++j) A[r * n + j] -= m * A[col * n + j];
      rhs[r] -= m * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = rhs[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= A[ii * n + j] * x[j];
    x[ii] = s / A[ii * n + ii];
  }
  return x;
}

}  // namespace

double omega(const RecurrenceParams& p) {
  const double k2 = p.k * p.k;
  return (-p.xi - k2 * p.eta + (1.0 + k2) * p.sigma) / (1.0 - k2);
}

SolutionPair solution_basis(const RecurrenceParams& p, std::size_t n) {
  if (near_integer(p.xi - p.eta)) {
    throw std::domain_error("solution_basis: xi - eta must not be an integer");
  }
  const double w = omega(p);
  const double nn = static_cast<double>(n);
  const double z = 1.0 - p.k * p.k;
  const double kn = std::pow(p.k, nn);
  SolutionPair out;
  out.hI = kn * gauss_2f1(nn + p.eta, w, p.eta - p.xi, z);
  out.hII = kn * gamma_ratio(nn + p.xi + 1.0, nn + p.eta) *
            gauss_2f1(nn + p.xi + 1.0, w + p.xi - p.eta + 1.0,
                      p.xi - p.eta + 2.0, z);
  return out;
}

double solution_plus(const RecurrenceParams& p, std::size_t n) {
  if (p.xi < -0.5 && near_integer(p.xi) && std::round(p.xi) <= -1.0) {
    throw std::domain_error("solution_plus: -xi must not be a positive integer");
  }
  const double w = omega(p);
  const double nn = static_cast<double>(n);
  return std::pow(p.k, nn) * gamma_ratio(nn + p.xi + 1.0, nn + w + p.xi + 1.0) *
         gauss_2f1(nn + p.xi + 1.0, w + p.xi - p.eta + 1.0,
                   nn + w + p.xi + 1.0, p.k * p.k);
}

BandSystem::BandSystem(const RecurrenceParams& p, std::size_t shift,
                       std::size_t size)
    : params_(p), shift_(shift), size_(size) {
  if (!(p.k > 0.0) || !(p.k < 1.0)) {
    throw std::domain_error("BandSystem: k must lie in (0,1)");
  }
}

double BandSystem::L(std::size_t m, std::size_t n) const {
  const double k = params_.k;
  if (m == n) return k + 1.0 / k;
  if (m == n + 1 || n == m + 1) return -1.0;
  return 0.0;
}

double BandSystem::G(std::size_t m, std::size_t n) const {
  const double k = params_.k;
  const double d = static_cast<double>(m > n ? m - n : n - m);
  return std::pow(k, d + 1.0) / (1.0 - k * k);
}

double BandSystem::R(std::size_t m, std::size_t n) const {
  // Row m moves the rewritten equation's perturbation to the right-hand
  // side: (L h)_m = -(k+1/k) s h_m + x h_{m-1} + y h_{m+1}, with the
  // sequences evaluated at the shifted index.
  const double idx = static_cast<double>(shift_ + m);
  const double k = params_.k;
  if (m == n) return -(k + 1.0 / k) * params_.sigma / idx;
  if (m == n + 1) return params_.xi / idx;
  if (n == m + 1) return params_.eta / idx;
  return 0.0;
}

double BandSystem::kvec(std::size_t n) const {
  return std::pow(params_.k, static_cast<double>(n));
}

double BandSystem::gr_norm_estimate() const {
  // Power iteration on (GR)^T (GR).
  std::vector<double> v(size_, 1.0);
  double norm = 0.0;
  for (int it = 0; it < 40; ++it) {
    // u = G R v, then w = R^T G u (G symmetric).
    std::vector<double> rv(size_, 0.0);
    for (std::size_t m = 0; m < size_; ++m) {
      double s = 0.0;
      if (m > 0) s += R(m, m - 1) * v[m - 1];
      s += R(m, m) * v[m];
      if (m + 1 < size_) s += R(m, m + 1) * v[m + 1];
      rv[m] = s;
    }
    std::vector<double> u(size_, 0.0);
    for (std::size_t m = 0; m < size_; ++m) {
      double s = 0.0;
      for (std::size_t n = 0; n < size_; ++n) s += G(m, n) * rv[n];
      u[m] = s;
    }
    std::vector<double> gu(size_, 0.0);
    for (std::size_t m = 0; m < size_; ++m) {
      double s = 0.0;
      for (std::size_t n = 0; n < size_; ++n) s += G(m, n) * u[n];
      gu[m] = s;
    }
    std::vector<double> w(size_, 0.0);
    for (std::size_t m = 0; m < size_; ++m) {
      double s = 0.0;
      if (m > 0) s += R(m - 1, m) * gu[m - 1];
      s += R(m, m) * gu[m];
      if (m + 1 < size_) s += R(m + 1, m) * gu[m + 1];
      w[m] = s;
    }
    double nrm = 0.0;
    for (double x : w) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) return 0.0;
    double vnrm = 0.0;
    for (double x : v) vnrm += x * x;
    norm = std::sqrt(nrm / std::sqrt(vnrm));
    for (std::size_t i = 0; i < size_; ++i) v[i] = w[i] / nrm;
  }
  return norm;
}

std::vector<double> minimal_solution_oracle(const RecurrenceParams& p,
                                            std::size_t truncation,
                                            std::size_t shift_override) {
  const double k = p.k;
  const double big = std::max({std::abs(p.sigma), std::abs(p.xi), std::abs(p.eta)});

  std::size_t shift = shift_override;
  if (shift == 0) {
    // ||R|| <= rho (k + 1/k + 2) with rho = big/shift, ||G|| <= k/(1-k)^2.
    const double gnorm = k / ((1.0 - k) * (1.0 - k));
    const double target = 0.5;
    shift = static_cast<std::size_t>(
        std::ceil(big * (k + 1.0 / k + 2.0) * gnorm / target)) + 1;
  }

  // Reject parameters that break the descending division.
  for (std::size_t n = 1; n <= shift; ++n) {
    if (std::abs(static_cast<double>(n) + p.xi) < 1e-12) {
      throw std::domain_error("minimal_solution_oracle: n + xi vanishes in the descent");
    }
  }

  // Tail window size: twice the requested truncation keeps the tail error
  // below k^truncation.
  const std::size_t tail = 2 * truncation + 8;
  BandSystem sys(p, shift, tail);

  const double gr = sys.gr_norm_estimate();
  if (!(gr < 1.0)) {
    throw std::runtime_error("minimal_solution_oracle: ||GR|| >= 1 on the truncation");
  }

  // Solve (I - M) g = 1 in the scaled variable h_{shift+j} = k^j g_j, where
  // M_{mn} = k^(n-m) (GR)_{mn}.  The scaling keeps every component O(1) so
  // the solve is componentwise accurate.
  std::vector<double> A(tail * tail, 0.0);
  for (std::size_t m = 0; m < tail; ++m) {
    for (std::size_t n = 0; n < tail; ++n) {
      double gr_mn = 0.0;
      if (n > 0) gr_mn += sys.G(m, n - 1) * sys.R(n - 1, n);
      gr_mn += sys.G(m, n) * sys.R(n, n);
      if (n + 1 < tail) gr_mn += sys.G(m, n + 1) * sys.R(n + 1, n);
      const double scale = std::pow(k, static_cast<double>(n) - static_cast<double>(m));
      A[m * tail + n] = (m == n ? 1.0 : 0.0) - scale * gr_mn;
    }
  }
  std::vector<double> ones(tail, 1.0);
  const std::vector<double> g = lu_solve(std::move(A), std::move(ones), tail);

  // Assemble h on [0, shift + tail) and extend downward.
  std::vector<double> h(shift + tail, 0.0);
  for (std::size_t j = 0; j < tail; ++j) {
    h[shift + j] = std::pow(k, static_cast<double>(j)) * g[j];
  }
  for (std::size_t n = shift; n >= 1; --n) {
    const double nn = static_cast<double>(n);
    h[n - 1] = ((k + 1.0 / k) * (nn + p.sigma) * h[n] - (nn + p.eta) * h[n + 1]) /
               (nn + p.xi);
  }

  h.resize(truncation);

  // Normalization: h_0 = 1 when meaningful, else unit l2 norm.
  double l2 = 0.0;
  for (double x : h) l2 += x * x;
  l2 = std::sqrt(l2);
  if (std::abs(h[0]) > 1e-8 * l2) {
    const double scale = 1.0 / h[0];
    for (double& x : h) x *= scale;
  } else if (l2 > 0.0) {
    for (double& x : h) x /= l2;
  }
  return h;
}

double recurrence_residual(const RecurrenceParams& p, std::size_t n,
                           double hm, double h0, double hp) {
  const double nn = static_cast<double>(n);
  return (p.k + 1.0 / p.k) * (nn + p.sigma) * h0 - (nn + p.xi) * hm -
         (nn + p.eta) * hp;
}

}  // namespace carlitz
