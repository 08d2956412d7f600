#include "carlitz/hypergeometric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace carlitz {

namespace {

constexpr int kMaxTerms = 20000;

bool is_nonpositive_integer(double x) {
  return x <= 1e-12 && std::abs(x - std::round(x)) < 1e-12;
}

// Plain power series at z, accumulated in extended precision so the
// returned double carries an error of a few ulp even after thousands of
// terms.  Stops when three consecutive terms fall below 1e-19 of the
// running sum while the term ratio is below one.
long double series_2f1(long double a, long double b, long double c,
                       long double z) {
  long double term = 1.0L;
  long double sum = 1.0L;
  int quiet = 0;
  for (int j = 0; j < kMaxTerms; ++j) {
    const long double ratio = (a + j) * (b + j) / ((c + j) * (1.0L + j)) * z;
    term *= ratio;
    if (term == 0.0L) return sum;
    sum += term;
    if (fabsl(term) < 1e-19L * fabsl(sum) && fabsl(ratio) < 1.0L) {
      if (++quiet >= 3) return sum;
    } else {
      quiet = 0;
    }
  }
  throw std::runtime_error("gauss_2f1: series did not converge");
}

// Terminating series when a or b is a non-positive integer.
long double polynomial_2f1(long double a, long double b, long double c,
                           long double z) {
  if (is_nonpositive_integer(static_cast<double>(b)) &&
      (!is_nonpositive_integer(static_cast<double>(a)) || b > a)) {
    std::swap(a, b);
  }
  const long terms = std::lround(static_cast<double>(-a));
  long double term = 1.0L;
  long double sum = 1.0L;
  for (long j = 0; j < terms; ++j) {
    term *= (a + j) * (b + j) / ((c + j) * (1.0L + j)) * z;
    sum += term;
  }
  return sum;
}

}  // namespace

namespace detail {

long double gauss_2f1_ld(long double a, long double b, long double c,
                         long double z) {
  if (!(fabsl(z) < 1.0L)) {
    throw std::domain_error("gauss_2f1: require |z| < 1");
  }
  const bool a_term = is_nonpositive_integer(static_cast<double>(a));
  const bool b_term = is_nonpositive_integer(static_cast<double>(b));
  if (is_nonpositive_integer(static_cast<double>(c))) {
    // Allowed only when the series terminates before the pole in (c)_j.
    const long double stop = a_term ? (b_term ? std::max(a, b) : a)
                                    : (b_term ? b : 1.0L);
    if (!(a_term || b_term) || !(stop > c)) {
      throw std::domain_error("gauss_2f1: c is a non-positive integer");
    }
  }
  if (z == 0.0L || a == 0.0L || b == 0.0L) return 1.0L;
  if (a_term || b_term) return polynomial_2f1(a, b, c, z);

  // Large denominator parameter with small companion parameters: map to
  // w = z/(z-1), where the terms decay like (w/c)^j from the start.
  const long double w = z / (z - 1.0L);
  if (c >= 64.0L && fabsl(w) <= 0.9L) {
    if (fabsl(c - a) <= 16.0L && fabsl(b) <= 16.0L) {
      return powl(1.0L - z, -b) * series_2f1(c - a, b, c, w);
    }
    if (fabsl(c - b) <= 16.0L && fabsl(a) <= 16.0L) {
      return powl(1.0L - z, -a) * series_2f1(a, c - b, c, w);
    }
  }

  if (z <= 0.5L) return series_2f1(a, b, c, z);

  // z close to 1: prefer the variant whose terms keep one sign.
  if (a >= 0.0L && b >= 0.0L) return series_2f1(a, b, c, z);
  const long double s = c - a - b;
  if (c - a >= 0.0L && c - b >= 0.0L && fabsl(s) <= 12.0L) {
    return powl(1.0L - z, s) * series_2f1(c - a, c - b, c, z);
  }
  return series_2f1(a, b, c, z);
}

long double gamma_ratio_ld(long double x, long double y) {
  if (x > 0.0L && y > 0.0L) return expl(lgammal(x) - lgammal(y));
  return tgammal(x) / tgammal(y);
}

}  // namespace detail

double gauss_2f1(double a, double b, double c, double z) {
  return static_cast<double>(detail::gauss_2f1_ld(a, b, c, z));
}

double contiguous_residual(const HypergeoArgs& p) {
  const double a = p.a, b = p.b, c = p.c, z = p.z;
  const double f = gauss_2f1(a, b, c, z);
  const double f_am = gauss_2f1(a - 1.0, b, c, z);
  const double f_ap = gauss_2f1(a + 1.0, b, c, z);

  const double r1 = (c - a) * f_am + (2.0 * a - c + (b - a) * z) * f +
                    a * (z - 1.0) * f_ap;

  double r2 = 0.0;
  if (b != 0.0) {
    const double f_bp = gauss_2f1(a, b + 1.0, c, z);
    r2 = f_bp - (a - c) / (b * (z - 1.0)) * f_am -
         (c - a - b) / (b * (z - 1.0)) * f;
  }

  double r3 = 0.0;
  if (z != 0.0 && c != b) {
    const double f_cp = gauss_2f1(a, b, c + 1.0, z);
    r3 = f_cp - c / ((c - b) * z) * f_am - c * (z - 1.0) / ((c - b) * z) * f;
  }

  return std::max({std::abs(r1), std::abs(r2), std::abs(r3)});
}

double quadratic_identity_residual(double a, double b, double c, double z) {
  const double lhs =
      (a - c + 1.0) * gauss_2f1(a, b, c, z) *
          gauss_2f1(a - c + 2.0, b - c + 1.0, 2.0 - c, z) -
      a * gauss_2f1(a + 1.0, b, c, z) *
          gauss_2f1(a - c + 1.0, b - c + 1.0, 2.0 - c, z);
  const double rhs = (1.0 - c) * std::pow(1.0 - z, c - a - b - 1.0);
  return std::abs(lhs - rhs);
}

double moment_E(std::size_t n, double k) {
  if (!(k > 0.0) || !(k < 1.0)) {
    throw std::domain_error("moment_E: k must lie in (0,1)");
  }
  const long double nn = static_cast<long double>(n);
  const long double kl = k;
  const long double log_pre =
      logl(static_cast<long double>(std::numbers::pi)) +
      lgammal(2.0L * nn + 1.0L) - (2.0L * nn + 2.0L) * logl(2.0L) -
      lgammal(nn + 1.0L) - lgammal(nn + 2.0L);
  return static_cast<double>(
      expl(log_pre) *
      detail::gauss_2f1_ld(nn + 0.5L, 0.5L, nn + 2.0L, kl * kl));
}

double moment_F(std::size_t n, double k) {
  if (!(k > 0.0) || !(k < 1.0)) {
    throw std::domain_error("moment_F: k must lie in (0,1)");
  }
  const long double nn = static_cast<long double>(n);
  const long double kl = k;
  const long double log_pre =
      logl(static_cast<long double>(std::numbers::pi)) +
      lgammal(2.0L * nn + 1.0L) - (2.0L * nn + 1.0L) * logl(2.0L) -
      2.0L * lgammal(nn + 1.0L);
  return static_cast<double>(
      expl(log_pre) *
      detail::gauss_2f1_ld(nn + 0.5L, -0.5L, nn + 1.0L, kl * kl));
}

double gamma_ratio(double x, double y) {
  if (x > 0.0 && y > 0.0) {
    return static_cast<double>(
        expl(lgammal(static_cast<long double>(x)) -
             lgammal(static_cast<long double>(y))));
  }
  return std::tgamma(x) / std::tgamma(y);
}

double log_pochhammer(double a, std::size_t n) {
  if (!(a > 0.0)) throw std::domain_error("log_pochhammer: require a > 0");
  return std::lgamma(a + static_cast<double>(n)) - std::lgamma(a);
}

}  // namespace carlitz
