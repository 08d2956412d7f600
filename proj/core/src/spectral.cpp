#include "carlitz/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "carlitz/quadrature.hpp"

namespace carlitz {

namespace {

constexpr double kPi = std::numbers::pi;

double sqrt_pi() { return std::sqrt(kPi); }

void require_m(Tag t, std::size_t m) {
  if (m < m_start(t)) {
    throw std::out_of_range("closed_eigenvalue: index below the first eigenvalue");
  }
}

}  // namespace

double closed_eigenvalue(Tag t, const EllipticContext& ctx, std::size_t m) {
  require_m(t, m);
  const double q = ctx.q;
  const double k = ctx.k;
  const double K = ctx.K;
  const double mm = static_cast<double>(m);
  const double qh = std::pow(q, mm + 0.5);   // q^(m+1/2)
  const double qi = std::pow(q, mm);         // q^m
  switch (t) {
    case Tag::p: return 4.0 * sqrt_pi() / k * qh / (1.0 + qh * qh);
    case Tag::q: return 2.0 * sqrt_pi() / k * qh / (1.0 + qh * qh);
    case Tag::r: return 2.0 * sqrt_pi() * qi / (1.0 + qi * qi);
    case Tag::s: return 4.0 * sqrt_pi() / (k * k) * qi / (1.0 + qi * qi);
    case Tag::f: return 4.0 / k * qh / (1.0 + qh * qh);
    case Tag::g: return 8.0 / (k * k) * qi / (1.0 + qi * qi);
    case Tag::qp:
      return 2.0 * kPi / (k * K) * (2.0 * mm + 1.0) * qh / (1.0 - qh * qh);
    case Tag::sp:
      return 4.0 * kPi / (k * k * K) * mm * qi / (1.0 - qi * qi);
    case Tag::fp:
      return 4.0 * K / (sqrt_pi() * k) * qh / ((2.0 * mm + 1.0) * (1.0 - qh * qh));
    case Tag::fpp:
      return 2.0 * std::pow(kPi, 1.5) / (k * K) * (2.0 * mm + 1.0) * qh /
             (1.0 - qh * qh);
    case Tag::gp:
      return 2.0 * std::pow(kPi, 1.5) / (k * k * K) * mm * qi / (1.0 - qi * qi);
  }
  throw std::invalid_argument("closed_eigenvalue: unknown tag");
}

double spectral_lambda(Tag t, const EllipticContext& ctx, std::size_t m) {
  const FamilySpec spec{family_of(t), ctx.k};
  return spectral_point(spec, ctx, m).lambda;
}

double closed_eigvec(Tag t, const EllipticContext& ctx, std::size_t m,
                     std::size_t n) {
  require_m(t, m);
  const FamilySpec spec{family_of(t), ctx.k};
  return orthonormal_eval(spec, n, spectral_lambda(t, ctx, m));
}

OrthonormalSequence closed_eigvec_sequence(Tag t, const EllipticContext& ctx,
                                           std::size_t m, std::size_t count) {
  require_m(t, m);
  const FamilySpec spec{family_of(t), ctx.k};
  return orthonormal_sequence(spec, spectral_lambda(t, ctx, m), count);
}

double eigvec_norm_sq(Tag t, const EllipticContext& ctx, std::size_t m) {
  require_m(t, m);
  const double q = ctx.q;
  const double k = ctx.k;
  const double K = ctx.K;
  const double mm = static_cast<double>(m);
  const double qh = std::pow(q, mm + 0.5);
  const double qi = std::pow(q, mm);
  switch (family_of(t)) {
    case Family::p:
      return k * K / (2.0 * kPi) * (1.0 + qh * qh) / qh;
    case Family::q:
      return 2.0 * k * K * K * K / (kPi * kPi * kPi) * (1.0 + qh * qh) /
             ((2.0 * mm + 1.0) * (2.0 * mm + 1.0) * qh);
    case Family::r:
      // m = 0 carries the halved measure atom, hence the doubled norm.
      return (m == 0 ? 2.0 : 1.0) * K / (2.0 * kPi) * (1.0 + qi * qi) / qi;
    case Family::s:
      return k * k * K * K * K / (2.0 * kPi * kPi * kPi) * (1.0 + qi * qi) /
             (mm * mm * qi);
    case Family::f:
      return k * K * K / (kPi * kPi) * (1.0 - qh * qh) / ((2.0 * mm + 1.0) * qh);
    case Family::g:
      return k * k * std::pow(K, 4.0) / std::pow(kPi, 4.0) * (1.0 - qi * qi) /
             (mm * mm * mm * qi);
  }
  throw std::invalid_argument("eigvec_norm_sq: unknown tag");
}

double multiplier_function(Tag t, const EllipticContext& ctx, double x) {
  if (!(x > 0.0)) throw std::domain_error("multiplier_function: require x > 0");
  const double k = ctx.k;
  const double K = ctx.K;
  const double rx = std::sqrt(x);
  const double tol_abs = 3e-15;
  const double tol_rel = 1e-12;

  const auto cn_kernel = [&](double u) {
    return std::cos(rx * u) * jacobi_elliptic(u, ctx).cn;
  };
  const auto dn_kernel = [&](double u) {
    return std::cos(rx * u) * jacobi_elliptic(u, ctx).dn;
  };
  const auto sn_sin_kernel = [&](double u) {
    return std::sin(rx * u) * jacobi_elliptic(u, ctx).sn;
  };
  const auto sn2_kernel = [&](double u) {
    const double sn = jacobi_elliptic(u, ctx).sn;
    return std::cos(rx * u) * sn * sn;
  };

  switch (t) {
    case Tag::p:
      return 4.0 / sqrt_pi() * integrate(cn_kernel, 0.0, K, tol_abs, tol_rel);
    case Tag::q:
      return 2.0 / sqrt_pi() * integrate(cn_kernel, 0.0, K, tol_abs, tol_rel);
    case Tag::r:
      return 2.0 / sqrt_pi() * integrate(dn_kernel, 0.0, K, tol_abs, tol_rel);
    case Tag::s: {
      const double k2 = k * k;
      return -4.0 * std::sqrt(1.0 - k2) * std::sin(rx * K) /
                 (k2 * sqrt_pi() * rx) +
             4.0 / (k2 * sqrt_pi()) * integrate(dn_kernel, 0.0, K, tol_abs, tol_rel);
    }
    case Tag::f:
      return 4.0 / kPi * integrate(cn_kernel, 0.0, K, tol_abs, tol_rel);
    case Tag::g: {
      const double k2 = k * k;
      return -8.0 * std::sqrt(1.0 - k2) * std::sin(rx * K) / (kPi * k2 * rx) +
             8.0 / (kPi * k2) * integrate(dn_kernel, 0.0, K, tol_abs, tol_rel);
    }
    case Tag::qp: {
      const double k2 = k * k;
      const auto kernel = [&](double u) {
        const double sn = jacobi_elliptic(u, ctx).sn;
        return std::sin(rx * u) / rx * ((1.0 + k2) * sn - 2.0 * k2 * sn * sn * sn);
      };
      return 4.0 / kPi * integrate(kernel, 0.0, K, tol_abs, tol_rel);
    }
    case Tag::sp:
      return 4.0 / kPi * (std::sin(rx * K) / rx -
                          integrate(sn2_kernel, 0.0, K, tol_abs, tol_rel));
    case Tag::fp:
      return 2.0 / sqrt_pi() / rx *
             integrate(sn_sin_kernel, 0.0, K, tol_abs, tol_rel);
    case Tag::fpp:
      return 4.0 / sqrt_pi() *
             (std::cos(rx * K) +
              rx * integrate(sn_sin_kernel, 0.0, K, tol_abs, tol_rel));
    case Tag::gp:
      // The prefactor is 2/sqrt(pi): differentiating the generating series
      // of family g gives sum g_n(-x) sn^(2n+1) cn dn / (2n+1)! and one
      // integration by parts against sn cn dn = (sn^2)'/2.
      return 2.0 / sqrt_pi() * (std::sin(rx * K) / rx -
                                integrate(sn2_kernel, 0.0, K, tol_abs, tol_rel));
  }
  throw std::invalid_argument("multiplier_function: unknown tag");
}

double power_tail_estimate(std::span<const double> terms,
                           std::size_t first_index, double alpha) {
  // Least squares for t_n n^alpha = A + B/n over the sample window.
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, y0 = 0.0, y1 = 0.0;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const double n = static_cast<double>(first_index + j);
    const double w = 1.0 / n;
    const double y = terms[j] * std::pow(n, alpha);
    s0 += 1.0;
    s1 += w;
    s2 += w * w;
    y0 += y;
    y1 += y * w;
  }
  const double det = s0 * s2 - s1 * s1;
  double A = 0.0, B = 0.0;
  if (std::abs(det) > 1e-14 * (std::abs(s0 * s2) + s1 * s1)) {
    A = (y0 * s2 - y1 * s1) / det;
    B = (s0 * y1 - s1 * y0) / det;
  } else if (s0 > 0.0) {
    A = y0 / s0;
  }

  // Tail sums of n^(-alpha) and n^(-alpha-1) from N on (Euler-Maclaurin).
  const double N = static_cast<double>(first_index + terms.size());
  const auto zeta_tail = [](double s, double N_) {
    return std::pow(N_, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N_, -s) +
           s / 12.0 * std::pow(N_, -s - 1.0);
  };
  return A * zeta_tail(alpha, N) + B * zeta_tail(alpha + 1.0, N);
}

SeriesValue multiplier_series(Tag t, const EllipticContext& ctx, double x,
                              std::size_t terms) {
  const FamilySpec spec{family_of(t), ctx.k};
  // Terms H_{n,0} Phat_n(x) = w_n h_n Phat_n(x) (w_0 = 1), assembled as
  // w_n (h_n/k^n)(k^n Phat_n) so both factors stay representable at any n.
  const std::vector<double> phi = scaled_orthonormal_sequence(spec, x, terms);
  const TagParameters par = tag_parameters(t, ctx.k);
  const bool unweighted =
      t == Tag::p || t == Tag::q || t == Tag::r || t == Tag::s;
  std::vector<double> term(terms);
  double partial = 0.0;
  for (std::size_t n = 0; n < terms; ++n) {
    const double wn = unweighted ? 1.0 : weight_sequence(par.a, par.b, par.c, n);
    term[n] = wn * reduced_moment(t, ctx.k, n) * phi[n];
    partial += term[n];
  }

  // Terms decay like n^-2 for every tag: the polynomial, moment and weight
  // exponents always combine to two.
  const double alpha = 2.0;
  SeriesValue out;
  out.partial = partial;
  const std::size_t window = std::min<std::size_t>(terms / 2, 512);
  if (window >= 8) {
    out.tail = power_tail_estimate(
        std::span<const double>(term).last(window), terms - window, alpha);
  } else {
    out.tail = 0.0;
  }
  out.value = out.partial + out.tail;
  return out;
}

namespace {

DenseEigenResult dense_eigen_core(std::vector<long double> A, std::size_t n,
                                  std::size_t want) {
  if (n > 512) throw std::domain_error("dense_symmetric_eigen: n > 512");
  if (want > n) throw std::domain_error("dense_symmetric_eigen: want > n");
  if (A.size() != n * n) throw std::invalid_argument("dense_symmetric_eigen: bad size");

  // The spectra handled here span far more than 16 decades (nu_m decays
  // like q^m), so the rotations are accumulated in extended precision to
  // keep the relative accuracy of the smallest wanted eigenvalues.
  const auto at = [&](std::size_t i, std::size_t j) -> long double& {
    return A[i * n + j];
  };

  long double frob_sq = 0.0L;
  for (std::size_t i = 0; i < n * n; ++i) frob_sq += A[i] * A[i];

  std::vector<long double> V(n * n, 0.0L);
  for (std::size_t i = 0; i < n; ++i) V[i * n + i] = 1.0L;

  constexpr long double kRelTol = 1e-15L;
  constexpr std::size_t kMaxSweeps = 48;
  std::size_t sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    std::size_t rotations = 0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const long double apq = at(p, q);
        const long double app = at(p, p);
        const long double aqq = at(q, q);
        if (fabsl(apq) <= kRelTol * sqrtl(fabsl(app * aqq))) continue;
        ++rotations;
        const long double theta = 0.5L * (aqq - app) / apq;
        const long double tan_phi =
            (theta >= 0.0L ? 1.0L : -1.0L) /
            (fabsl(theta) + sqrtl(theta * theta + 1.0L));
        const long double c = 1.0L / sqrtl(tan_phi * tan_phi + 1.0L);
        const long double s = tan_phi * c;
        const long double tau = s / (1.0L + c);

        at(p, p) = app - tan_phi * apq;
        at(q, q) = aqq + tan_phi * apq;
        at(p, q) = 0.0L;
        at(q, p) = 0.0L;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == p || j == q) continue;
          const long double ajp = at(j, p);
          const long double ajq = at(j, q);
          at(j, p) = ajp - s * (ajq + tau * ajp);
          at(j, q) = ajq + s * (ajp - tau * ajq);
          at(p, j) = at(j, p);
          at(q, j) = at(j, q);
        }
        for (std::size_t j = 0; j < n; ++j) {
          const long double vjp = V[j * n + p];
          const long double vjq = V[j * n + q];
          V[j * n + p] = vjp - s * (vjq + tau * vjp);
          V[j * n + q] = vjq + s * (vjp - tau * vjq);
        }
      }
    }
    if (rotations == 0) break;
  }
  if (sweep >= kMaxSweeps) {
    throw std::runtime_error("dense_symmetric_eigen: no convergence within the sweep cap");
  }

  // The relative stopping criterion implies the coarser global one.
  long double off_sq = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) off_sq += at(i, j) * at(i, j);
    }
  }
  if (!(off_sq <= 1e-26L * frob_sq)) {
    throw std::runtime_error("dense_symmetric_eigen: off-diagonal norm not reduced");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return at(i, i) > at(j, j);
  });

  DenseEigenResult out;
  out.sweeps = sweep + 1;
  out.values.resize(n);
  out.vectors.assign(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = static_cast<double>(at(order[j], order[j]));
    for (std::size_t i = 0; i < n; ++i) {
      out.vectors[i * n + j] = static_cast<double>(V[i * n + order[j]]);
    }
  }
  return out;
}

}  // namespace

DenseEigenResult dense_symmetric_eigen(std::vector<double> M, std::size_t n,
                                       std::size_t want) {
  std::vector<long double> A(M.size());
  for (std::size_t i = 0; i < M.size(); ++i) A[i] = M[i];
  return dense_eigen_core(std::move(A), n, want);
}

std::vector<double> tridiagonal_eigen(const JacobiOperator& J,
                                      std::size_t want) {
  const std::size_t n = J.N;
  if (want > n / 4) {
    throw std::domain_error("tridiagonal_eigen: want exceeds N/4 convergence margin");
  }
  std::vector<double> d = J.beta;
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = J.alpha[i];

  const auto pythag = [](double a, double b) {
    const double aa = std::abs(a), ab = std::abs(b);
    if (aa > ab) {
      const double r = ab / aa;
      return aa * std::sqrt(1.0 + r * r);
    }
    if (ab == 0.0) return 0.0;
    const double r = aa / ab;
    return ab * std::sqrt(1.0 + r * r);
  };

  // Implicit-shift QL on the tridiagonal (d, e); eigenvalues only.
  for (std::size_t l = 0; l < n; ++l) {
    std::size_t iter = 0;
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-16 * dd) break;
      }
      if (m == l) break;
      if (++iter > 50) {
        throw std::runtime_error("tridiagonal_eigen: QL did not converge");
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = pythag(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = pythag(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::sort(d.begin(), d.end());
  d.resize(want);
  return d;
}

std::size_t default_truncation(double k) {
  const double n = std::ceil(std::log(1e-18) / std::log(k));
  return std::max<std::size_t>(64, static_cast<std::size_t>(n));
}

SpectralReport verify(Tag t, double k, const VerifyConfig& config) {
  SpectralReport rep;
  rep.tag = t;
  rep.k = k;
  rep.truncation = config.truncation ? config.truncation : default_truncation(k);
  rep.pass = true;
  const auto fail = [&rep](const std::string& what) {
    if (rep.pass) rep.failure = what;
    rep.pass = false;
  };

  try {
    const EllipticContext ctx = make_context(k);
    const std::size_t N = rep.truncation;
    const WeightedHankelOperator H = build_hankel(t, k, N);
    const JacobiOperator J = build_jacobi(t, k, N);

    rep.commutator_residual = commutator_residual(H, J);
    if (!(rep.commutator_residual < config.tol_commutator)) fail("commutator");

    const DenseEigenResult eig =
        dense_eigen_core(detail::dense_ld(t, k, N), N, config.m_count);

    // Trace identity: matrix trace against the eigenvalue sum.
    double nu_sum = 0.0;
    std::size_t m = m_start(t);
    for (;; ++m) {
      const double nu = closed_eigenvalue(t, ctx, m);
      nu_sum += nu;
      if (std::pow(ctx.q, static_cast<double>(m)) < 1e-14) break;
      if (m > 20000) break;
    }
    rep.trace_gap = std::abs(H.trace() - nu_sum);
    if (!(rep.trace_gap < config.tol_trace)) fail("trace");

    for (std::size_t j = 0; j < config.m_count; ++j) {
      const std::size_t mm = m_start(t) + j;
      EigenRecord rec{};
      rec.m = mm;
      rec.closed_form = closed_eigenvalue(t, ctx, mm);
      rec.numeric = j < eig.values.size() ? eig.values[j] : 0.0;
      rec.rel_err = std::abs(rec.numeric - rec.closed_form) /
                    std::abs(rec.closed_form);
      rec.eigvec_residual = std::numeric_limits<double>::quiet_NaN();
      rec.norm_gap = std::numeric_limits<double>::quiet_NaN();
      if (!(rec.rel_err < config.tol_eigenvalue)) fail("eigenvalue");

      if (j < config.eigvec_m_count) {
        // Closed-form eigenvector residual on the trusted prefix.
        const OrthonormalSequence psi = closed_eigvec_sequence(t, ctx, mm, N);
        const std::size_t T = std::min(psi.trusted, N);
        if (T >= 8) {
          const double norm_closed = eigvec_norm_sq(t, ctx, mm);
          double norm_partial = 0.0;
          for (std::size_t i = 0; i < T; ++i) {
            norm_partial += psi.value[i] * psi.value[i];
          }
          rec.norm_gap = std::abs(norm_partial - norm_closed) / norm_closed;
          if (!(rec.norm_gap < config.tol_norm)) fail("norm");

          double res2 = 0.0;
          for (std::size_t i = 0; i < T; ++i) {
            double hv = 0.0;
            for (std::size_t jj = 0; jj < T; ++jj) {
              hv += H.entry(i, jj) * psi.value[jj];
            }
            const double r = hv - rec.closed_form * psi.value[i];
            res2 += r * r;
          }
          rec.eigvec_residual = std::sqrt(res2) /
                                (rec.closed_form * std::sqrt(norm_partial));
          if (!(rec.eigvec_residual < config.tol_eigvec)) fail("eigvec");
        }
      }
      rep.eigen.push_back(rec);
    }
  } catch (const std::exception& e) {
    fail(std::string("exception: ") + e.what());
  }
  return rep;
}

}  // namespace carlitz
