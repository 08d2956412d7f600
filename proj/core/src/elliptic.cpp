#include "carlitz/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace carlitz {

namespace {

constexpr int kMaxAgmIter = 32;

// AGM of (1, b0).  When esum is non-null it accumulates sum 2^(j-1) c_j^2
// with c_0 = sqrt(1 - b0^2), which yields E via E = K (1 - esum).
double agm(double b0, double c0, double* esum) {
  double a = 1.0;
  double b = b0;
  double c = c0;
  double sum = 0.5 * c * c;
  double scale = 0.5;
  for (int i = 0; i < kMaxAgmIter; ++i) {
    const double an = 0.5 * (a + b);
    c = 0.5 * (a - b);
    b = std::sqrt(a * b);
    a = an;
    scale *= 2.0;
    sum += scale * c * c;
    if (std::abs(c) <= a * 1e-17) break;
  }
  if (esum) *esum = sum;
  return a;
}

}  // namespace

EllipticContext make_context(double k) {
  if (!(k > 0.0) || !(k < 1.0)) {
    throw std::domain_error("make_context: modulus k must lie strictly in (0,1)");
  }
  const double kc = std::sqrt((1.0 - k) * (1.0 + k));
  double esum = 0.0;
  const double agm_k = agm(kc, k, &esum);
  const double agm_kc = agm(k, kc, nullptr);

  EllipticContext ctx;
  ctx.k = k;
  ctx.K = std::numbers::pi / (2.0 * agm_k);
  ctx.Kprime = std::numbers::pi / (2.0 * agm_kc);
  ctx.Eint = ctx.K * (1.0 - esum);
  ctx.q = std::exp(-std::numbers::pi * ctx.Kprime / ctx.K);
  return ctx;
}

JacobiTriple jacobi_elliptic(double u, const EllipticContext& ctx) {
  const double k = ctx.k;
  if (!(k > 0.0) || !(k < 1.0) || !(ctx.K > 0.0)) {
    throw std::domain_error("jacobi_elliptic: invalid context");
  }

  double a[kMaxAgmIter + 1];
  double c[kMaxAgmIter + 1];
  a[0] = 1.0;
  c[0] = k;
  double b = std::sqrt((1.0 - k) * (1.0 + k));
  int n = 0;
  while (n < kMaxAgmIter && std::abs(c[n]) > a[n] * 1e-17) {
    const double an = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
    a[n] = an;
  }

  // Descending phase recursion.
  double phi = std::ldexp(a[n] * u, n);
  for (int j = n; j >= 1; --j) {
    const double s = std::clamp(c[j] / a[j] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(s));
  }

  JacobiTriple t;
  t.sn = std::sin(phi);
  t.cn = std::cos(phi);
  t.dn = std::sqrt(1.0 - (k * t.sn) * (k * t.sn));
  return t;
}

std::size_t fourier_terms(const EllipticContext& ctx, double tol) {
  const double q = ctx.q;
  std::size_t n = 1;
  double tail = q / (1.0 - q);
  while (tail >= tol && n < 512) {
    tail *= q;
    ++n;
  }
  return n;
}

FourierEval fourier_eval(FourierSeries s, double v, const EllipticContext& ctx,
                         std::size_t terms, double tol) {
  if (terms < 1) throw std::domain_error("fourier_eval: terms must be >= 1");
  const double q = ctx.q;
  const double K = ctx.K;
  const double k = ctx.k;
  const double pi = std::numbers::pi;

  double sum = 0.0;
  switch (s) {
    case FourierSeries::sn:
      for (std::size_t n = 0; n < terms; ++n) {
        const double qn = std::pow(q, n + 0.5);
        sum += qn / (1.0 - qn * qn) * std::sin((2.0 * n + 1.0) * v);
      }
      sum *= 2.0 * pi / (k * K);
      break;
    case FourierSeries::cn:
      for (std::size_t n = 0; n < terms; ++n) {
        const double qn = std::pow(q, n + 0.5);
        sum += qn / (1.0 + qn * qn) * std::cos((2.0 * n + 1.0) * v);
      }
      sum *= 2.0 * pi / (k * K);
      break;
    case FourierSeries::dn:
      sum = pi / (2.0 * K);
      for (std::size_t n = 1; n <= terms; ++n) {
        const double qn = std::pow(q, static_cast<double>(n));
        sum += 2.0 * pi / K * qn / (1.0 + qn * qn) * std::cos(n * v);
      }
      break;
    case FourierSeries::sn2:
      sum = (K - ctx.Eint) / (k * k * K);
      for (std::size_t n = 1; n <= terms; ++n) {
        const double qn = std::pow(q, static_cast<double>(n));
        sum -= 2.0 * pi * pi / (k * k * K * K) * n * qn / (1.0 - qn * qn) *
               std::cos(n * v);
      }
      break;
    case FourierSeries::sn3:
      for (std::size_t n = 0; n < terms; ++n) {
        const double qn = std::pow(q, n + 0.5);
        const double freq = (2.0 * n + 1.0) * pi / (2.0 * K);
        sum += qn / (1.0 - qn * qn) * (1.0 + k * k - freq * freq) *
               std::sin((2.0 * n + 1.0) * v);
      }
      sum *= pi / (k * k * k * K);
      break;
  }

  FourierEval out;
  out.value = sum;
  out.tail_bound = std::pow(q, static_cast<double>(terms)) / (1.0 - q);
  out.within_tol = out.tail_bound < tol;
  return out;
}

}  // namespace carlitz
