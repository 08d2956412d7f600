#include "carlitz/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "carlitz/hypergeometric.hpp"

namespace carlitz {

const std::vector<Tag>& all_tags() {
  static const std::vector<Tag> tags = {Tag::p,  Tag::q,  Tag::r,  Tag::s,
                                        Tag::f,  Tag::g,  Tag::qp, Tag::sp,
                                        Tag::fp, Tag::fpp, Tag::gp};
  return tags;
}

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::p: return "p";
    case Tag::q: return "q";
    case Tag::r: return "r";
    case Tag::s: return "s";
    case Tag::f: return "f";
    case Tag::g: return "g";
    case Tag::qp: return "qp";
    case Tag::sp: return "sp";
    case Tag::fp: return "fp";
    case Tag::fpp: return "fpp";
    case Tag::gp: return "gp";
  }
  return "?";
}

Tag parse_tag(const std::string& name) {
  for (Tag t : all_tags()) {
    if (name == tag_name(t)) return t;
  }
  throw std::invalid_argument("unknown tag: " + name);
}

Family family_of(Tag t) {
  switch (t) {
    case Tag::p: return Family::p;
    case Tag::q: case Tag::qp: return Family::q;
    case Tag::r: return Family::r;
    case Tag::s: case Tag::sp: return Family::s;
    case Tag::f: case Tag::fp: case Tag::fpp: return Family::f;
    case Tag::g: case Tag::gp: return Family::g;
  }
  return Family::p;
}

std::size_t m_start(Tag t) {
  switch (t) {
    case Tag::s: case Tag::g: case Tag::sp: case Tag::gp: return 1;
    default: return 0;
  }
}

TagParameters tag_parameters(Tag t, double k) {
  const double k2 = k * k;
  TagParameters p{};
  switch (t) {
    case Tag::p:
      p = {-0.5, -0.5, 0.0, 1.0 / (1.0 + k2), 0.0, 0.0, 0.0};
      break;
    case Tag::q:
      p = {0.5, 0.5, 0.0, (1.0 + 2.0 * k2) / (1.0 + k2), 0.0, 0.0, 0.0};
      break;
    case Tag::r:
      p = {-0.5, -0.5, 0.0, k2 / (1.0 + k2), 0.0, 0.0, 0.0};
      break;
    case Tag::s:
      p = {0.5, 0.5, 0.0, (2.0 + k2) / (1.0 + k2), 0.0, 0.0, 0.0};
      break;
    case Tag::f:
      p = {0.0, 0.5, -0.5, 1.0, 0.0, 0.0, 0.0};
      break;
    case Tag::g:
      p = {1.0, 0.5, 0.5, 2.0, 0.0, 0.0, 0.0};
      break;
    case Tag::qp:
      p = {0.0, 0.5, 0.5, (1.0 + 2.0 * k2) / (1.0 + k2), 0.0, 0.0, 0.0};
      break;
    case Tag::sp:
      p = {0.0, 0.5, 0.5, (2.0 + k2) / (1.0 + k2), 0.0, 0.0, 0.0};
      break;
    case Tag::fp:
      p = {0.5, 0.0, -0.5, 1.0, 0.0, 0.0, 0.0};
      break;
    case Tag::fpp:
      p = {-0.5, 0.0, 0.5, 1.0, 0.0, 0.0, 0.0};
      break;
    case Tag::gp:
      p = {0.5, 0.5, 1.0, 2.0, 0.0, 0.0, 0.0};
      break;
  }
  p.xi = p.a;
  p.eta = p.b + p.c + 2.0;
  p.omega = (-p.xi - k2 * p.eta + (1.0 + k2) * p.sigma) / (1.0 - k2);
  return p;
}

JacobiOperator build_jacobi(Tag t, double k, std::size_t N) {
  if (!(k > 0.0) || !(k < 1.0)) {
    throw std::domain_error("build_jacobi: k must lie in (0,1)");
  }
  if (N < 2) throw std::domain_error("build_jacobi: need N >= 2");
  const Family fam = family_of(t);
  JacobiOperator J;
  J.tag = t;
  J.k = k;
  J.N = N;
  J.alpha.resize(N - 1);
  J.beta.resize(N);
  for (std::size_t n = 0; n + 1 < N; ++n) J.alpha[n] = jacobi_alpha(fam, k, n);
  for (std::size_t n = 0; n < N; ++n) J.beta[n] = jacobi_beta(fam, k, n);
  return J;
}

namespace {

// Gamma(n+1/2)/Gamma(n+1), accurate to ~0.5 ulp of long double.  The
// spectral oracle needs entry errors below ~1e-18; lgamma differences are
// two orders too loose, so the ratio is carried as an unevaluated sum of
// two long doubles through the product over j of (j-1/2)/j.  Values are
// memoized per thread (the ratio does not depend on k, and fmal is slow).
long double half_integer_gamma_ratio(std::size_t n) {
  thread_local std::vector<long double> hi_tab = {
      1.77245385090551602731093888687L};   // sqrt(pi), head
  thread_local std::vector<long double> lo_tab = {
      -1.277140353282479458932842e-20L};   // sqrt(pi), tail
  while (hi_tab.size() <= n) {
    const std::size_t j = hi_tab.size();
    const long double jm = static_cast<long double>(j) - 0.5L;
    const long double jj = static_cast<long double>(j);
    const long double r_hi = jm / jj;
    const long double r_lo = fmal(-r_hi, jj, jm) / jj;
    const long double hi = hi_tab.back();
    const long double lo = lo_tab.back();
    const long double p = hi * r_hi;
    long double e = fmal(hi, r_hi, -p);
    e += hi * r_lo + lo * r_hi;
    const long double nhi = p + e;
    hi_tab.push_back(nhi);
    lo_tab.push_back(e - (nhi - p));
  }
  return hi_tab[n] + lo_tab[n];
}

}  // namespace

namespace detail {

long double reduced_moment_ld(Tag t, double k, std::size_t n) {
  const long double nn = static_cast<long double>(n);
  const long double kl = k;
  const long double z = kl * kl;
  // All gamma ratios here are half-integer shifts of R = G(n+1/2)/G(n+1).
  const long double R = half_integer_gamma_ratio(n);
  switch (t) {
    case Tag::p:
      return R / (nn + 1.0L) * gauss_2f1_ld(nn + 0.5L, 0.5L, nn + 2.0L, z);
    case Tag::q:
      return (nn + 0.5L) * R / (nn + 1.0L) *
             gauss_2f1_ld(nn + 1.5L, -0.5L, nn + 2.0L, z);
    case Tag::r:
      return R * gauss_2f1_ld(nn + 0.5L, -0.5L, nn + 1.0L, z);
    case Tag::s:
      return (nn + 0.5L) * R / ((nn + 1.0L) * (nn + 2.0L)) *
             gauss_2f1_ld(nn + 1.5L, 0.5L, nn + 3.0L, z);
    case Tag::f:
      return 1.0L / (nn + 1.0L);
    case Tag::g:
      return 1.0L / (nn + 2.0L);
    case Tag::qp:
      return (nn + 2.0L - (nn + 1.0L) * z) / ((nn + 1.0L) * (nn + 2.0L));
    case Tag::sp:
      return 1.0L / ((nn + 1.0L) * (nn + 2.0L));
    case Tag::fp:
      return (nn + 0.5L) * R / (nn + 1.0L) *
             gauss_2f1_ld(nn + 1.5L, 0.5L, nn + 2.0L, z);
    case Tag::fpp:
      return R / (nn + 1.0L) * gauss_2f1_ld(nn + 0.5L, -0.5L, nn + 2.0L, z);
    case Tag::gp:
      return (nn + 0.5L) * R / ((nn + 1.0L) * (nn + 2.0L)) *
             gauss_2f1_ld(nn + 1.5L, -0.5L, nn + 3.0L, z);
  }
  throw std::invalid_argument("reduced_moment: unknown tag");
}

long double weight_ld(Tag t, double /*k*/, std::size_t n) {
  const long double nn = static_cast<long double>(n);
  const long double sqrt_pi_hi = 1.77245385090551602731093888687L;
  switch (t) {
    case Tag::p: case Tag::q: case Tag::r: case Tag::s:
      return 1.0L;
    case Tag::f:  // sqrt(2n+1) binom(2n,n)/4^n
      return sqrtl(2.0L * nn + 1.0L) * half_integer_gamma_ratio(n) / sqrt_pi_hi;
    case Tag::g:  // sqrt(n+1) binom(2n+1,n)/4^n
      return (2.0L * nn + 1.0L) * half_integer_gamma_ratio(n) /
             (sqrt_pi_hi * sqrtl(nn + 1.0L));
    case Tag::qp: case Tag::sp:  // (2n+1) binom(2n,n)/4^n
      return (2.0L * nn + 1.0L) * half_integer_gamma_ratio(n) / sqrt_pi_hi;
    case Tag::fp:
      return 1.0L / sqrtl(2.0L * nn + 1.0L);
    case Tag::fpp:
      return sqrtl(2.0L * nn + 1.0L);
    case Tag::gp:
      return sqrtl(nn + 1.0L);
  }
  throw std::invalid_argument("weight_ld: unknown tag");
}

std::vector<long double> dense_ld(Tag t, double k, std::size_t N) {
  std::vector<long double> h(2 * N - 1);
  std::vector<long double> w(N);
  const long double kl = k;
  for (std::size_t n = 0; n < h.size(); ++n) {
    h[n] = powl(kl, static_cast<long double>(n)) * reduced_moment_ld(t, k, n);
  }
  for (std::size_t n = 0; n < N; ++n) w[n] = weight_ld(t, k, n);
  std::vector<long double> M(N * N);
  for (std::size_t m = 0; m < N; ++m) {
    for (std::size_t n = 0; n < N; ++n) M[m * N + n] = w[m] * w[n] * h[m + n];
  }
  return M;
}

}  // namespace detail

double reduced_moment(Tag t, double k, std::size_t n) {
  return static_cast<double>(detail::reduced_moment_ld(t, k, n));
}

double moment(Tag t, double k, std::size_t n) {
  return static_cast<double>(
      powl(static_cast<long double>(k), static_cast<long double>(n)) *
      detail::reduced_moment_ld(t, k, n));
}

double weight_sequence(double a, double b, double c, std::size_t n) {
  if (!(a > -1.0) || !(b > -1.0) || !(c > -1.0)) {
    throw std::domain_error("weight_sequence: parameters must exceed -1");
  }
  const auto lpoch = [n](double x) {
    const long double xl = static_cast<long double>(x);
    return lgammal(xl + static_cast<long double>(n)) - lgammal(xl);
  };
  const long double log_w = 0.5L * (lpoch(b + 1.0) + lpoch(c + 1.0) -
                                    lpoch(1.0) - lpoch(a + 1.0));
  return static_cast<double>(expl(log_w));
}

WeightedHankelOperator build_hankel(Tag t, double k, std::size_t N) {
  if (!(k > 0.0) || !(k < 1.0)) {
    throw std::domain_error("build_hankel: k must lie in (0,1)");
  }
  if (N < 2) throw std::domain_error("build_hankel: need N >= 2");
  WeightedHankelOperator H;
  H.tag = t;
  H.k = k;
  H.N = N;
  H.h.resize(2 * N - 1);
  H.w.resize(N);
  for (std::size_t n = 0; n < H.h.size(); ++n) H.h[n] = moment(t, k, n);
  const bool unweighted =
      t == Tag::p || t == Tag::q || t == Tag::r || t == Tag::s;
  const TagParameters par = tag_parameters(t, k);
  for (std::size_t n = 0; n < N; ++n) {
    H.w[n] = unweighted ? 1.0 : weight_sequence(par.a, par.b, par.c, n);
  }
  return H;
}

std::vector<double> WeightedHankelOperator::dense() const {
  std::vector<double> M(N * N);
  for (std::size_t m = 0; m < N; ++m) {
    for (std::size_t n = 0; n < N; ++n) M[m * N + n] = entry(m, n);
  }
  return M;
}

double WeightedHankelOperator::trace() const {
  double t = 0.0;
  for (std::size_t n = N; n-- > 0;) t += entry(n, n);
  return t;
}

double commuting_omega(double a, double sigma, double k) {
  const double k2 = k * k;
  return (-2.0 * k2 + (1.0 + k2) * (sigma - a)) / (1.0 - k2);
}

double general_commuting_moments(double a, double sigma, double k,
                                 std::size_t n) {
  if (!(a > -1.0)) throw std::domain_error("general_commuting_moments: a <= -1");
  const double w = commuting_omega(a, sigma, k);
  const double nn = static_cast<double>(n);
  return std::pow(k, nn) * gamma_ratio(nn + a + 1.0, nn + a + w + 1.0) *
         gauss_2f1(nn + a + 1.0, w - 1.0, nn + a + w + 1.0, k * k);
}

double commutator_residual(const WeightedHankelOperator& H,
                           const JacobiOperator& J) {
  if (H.N != J.N) throw std::invalid_argument("commutator_residual: size mismatch");
  const std::size_t N = H.N;
  if (N < 3) return 0.0;  // interior index set is empty for N = 2
  double worst = 0.0;
  for (std::size_t m = 0; m + 1 < N; ++m) {
    for (std::size_t n = 0; n + 1 < N; ++n) {
      // (H J)_{m,n}
      double hj = H.entry(m, n) * J.beta[n];
      if (n > 0) hj += H.entry(m, n - 1) * J.alpha[n - 1];
      hj += H.entry(m, n + 1) * J.alpha[n];
      // (J H)_{m,n}
      double jh = J.beta[m] * H.entry(m, n);
      if (m > 0) jh += J.alpha[m - 1] * H.entry(m - 1, n);
      jh += J.alpha[m] * H.entry(m + 1, n);
      worst = std::max(worst, std::abs(hj - jh));
    }
  }
  return worst;
}

}  // namespace carlitz
