#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>

#include "carlitz/elliptic.hpp"
#include "oracles.hpp"

using namespace carlitz;

namespace {
constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_SUITE("elliptic") {

TEST_CASE("context rejects endpoints") {
  CHECK_THROWS_AS(make_context(0.0), std::domain_error);
  CHECK_THROWS_AS(make_context(1.0), std::domain_error);
  CHECK_THROWS_AS(make_context(-0.2), std::domain_error);
  CHECK_THROWS_AS(make_context(1.5), std::domain_error);
}

TEST_CASE("context invariants") {
  for (double k : {1e-6, 0.1, 0.3, 0.5, 0.8, 0.99}) {
    const EllipticContext c = make_context(k);
    CHECK(c.K > kPi / 2.0);
    CHECK(c.Kprime > 0.0);
    CHECK(c.q > 0.0);
    CHECK(c.q < 1.0);
    // The stored nome matches its definition to ulp scale.
    CHECK(rel(c.q, std::exp(-kPi * c.Kprime / c.K)) < 1e-15);
  }
  // Logarithmic growth only: no overflow close to 1.
  CHECK(std::isfinite(make_context(1.0 - 1e-12).K));
}

TEST_CASE("K at the small-modulus limit") {
  const EllipticContext c = make_context(1e-8);
  CHECK(std::abs(c.K - kPi / 2.0) < 1e-8);
  CHECK(c.q < 1e-15);
}

TEST_CASE("K against direct quadrature at k = 1/sqrt(2)") {
  const double k = 1.0 / std::sqrt(2.0);
  const EllipticContext c = make_context(k);
  const double k2 = k * k;
  const double quad = oracles::simpson(
      [k2](double th) {
        const double s = std::sin(th);
        return 1.0 / std::sqrt(1.0 - k2 * s * s);
      },
      0.0, kPi / 2.0, 1e-15);
  CHECK(rel(c.K, quad) < 1e-12);
  // E by the same route.
  const double quad_e = oracles::simpson(
      [k2](double th) {
        const double s = std::sin(th);
        return std::sqrt(1.0 - k2 * s * s);
      },
      0.0, kPi / 2.0, 1e-15);
  CHECK(rel(c.Eint, quad_e) < 1e-12);
}

TEST_CASE("K against the hypergeometric series at k = 0.5") {
  const EllipticContext c = make_context(0.5);
  const double series = kPi / 2.0 * oracles::hyp2f1_series(0.5, 0.5, 1.0, 0.25);
  CHECK(rel(c.K, series) < 1e-13);
}

TEST_CASE("sn cn dn special values") {
  for (double k : {0.2, 0.5, 0.9}) {
    const EllipticContext c = make_context(k);
    const JacobiTriple at0 = jacobi_elliptic(0.0, c);
    CHECK(at0.sn == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(at0.cn == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(at0.dn == doctest::Approx(1.0).epsilon(1e-15));
    const JacobiTriple atK = jacobi_elliptic(c.K, c);
    CHECK(std::abs(atK.sn - 1.0) < 1e-14);
    CHECK(std::abs(atK.cn) < 1e-14);
    CHECK(std::abs(atK.dn - std::sqrt(1.0 - k * k)) < 1e-14);
  }
}

TEST_CASE("sn cn dn against the integrated derivative system") {
  const EllipticContext c = make_context(0.5);
  const oracles::EllipticState ref = oracles::integrate_elliptic(0.7, 0.5);
  const JacobiTriple t = jacobi_elliptic(0.7, c);
  CHECK(std::abs(t.sn - ref.sn) < 1e-10);
  CHECK(std::abs(t.cn - ref.cn) < 1e-10);
  CHECK(std::abs(t.dn - ref.dn) < 1e-10);
}

TEST_CASE("pythagorean identities at random points") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> kd(0.05, 0.95);
  for (int i = 0; i < 200; ++i) {
    const double k = kd(rng);
    const EllipticContext c = make_context(k);
    std::uniform_real_distribution<double> ud(-4.0 * c.K, 4.0 * c.K);
    const double u = ud(rng);
    const JacobiTriple t = jacobi_elliptic(u, c);
    CHECK(std::abs(t.sn * t.sn + t.cn * t.cn - 1.0) < 1e-13);
    CHECK(std::abs(k * k * t.sn * t.sn + t.dn * t.dn - 1.0) < 1e-13);
  }
}

TEST_CASE("derivatives by central differences") {
  const EllipticContext c = make_context(0.6);
  const double h = 1e-5;
  for (double u : {-1.3, 0.25, 0.9, 2.1}) {
    const JacobiTriple t = jacobi_elliptic(u, c);
    const JacobiTriple tp = jacobi_elliptic(u + h, c);
    const JacobiTriple tm = jacobi_elliptic(u - h, c);
    CHECK(std::abs((tp.sn - tm.sn) / (2.0 * h) - t.cn * t.dn) < 1e-7);
    CHECK(std::abs((tp.cn - tm.cn) / (2.0 * h) + t.sn * t.dn) < 1e-7);
    CHECK(std::abs((tp.dn - tm.dn) / (2.0 * h) + 0.36 * t.sn * t.cn) < 1e-7);
  }
}

TEST_CASE("fourier series argument conventions") {
  const EllipticContext c = make_context(0.5);
  SUBCASE("odd series vanish at v = 0") {
    for (std::size_t terms : {1u, 5u, 60u}) {
      CHECK(fourier_eval(FourierSeries::sn, 0.0, c, terms).value == 0.0);
      CHECK(fourier_eval(FourierSeries::sn3, 0.0, c, terms).value == 0.0);
    }
  }
  SUBCASE("dn series matches the Landen value") {
    for (double v : {0.3, 1.1, 2.7}) {
      const double direct = jacobi_elliptic(c.K * v / kPi, c).dn;
      CHECK(std::abs(fourier_eval(FourierSeries::dn, v, c, 60).value - direct) <
            1e-12);
    }
  }
  SUBCASE("sn^2 series at v = pi hits sn(K)^2 = 1") {
    const FourierEval e = fourier_eval(FourierSeries::sn2, kPi, c, 60);
    CHECK(std::abs(e.value - 1.0) < 1e-12);
  }
}

TEST_CASE("fourier tail bound governs the warning status") {
  const EllipticContext c = make_context(0.5);
  const FourierEval coarse = fourier_eval(FourierSeries::cn, 0.7, c, 2, 1e-13);
  CHECK_FALSE(coarse.within_tol);
  const FourierEval fine =
      fourier_eval(FourierSeries::cn, 0.7, c, fourier_terms(c, 1e-13), 1e-13);
  CHECK(fine.within_tol);
  CHECK(fine.tail_bound < 1e-13);
}

TEST_CASE("fourier versus landen for all five series") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> vd(-3.0, 3.0);
  for (double k : {0.2, 0.5, 0.75, 0.9}) {
    const EllipticContext c = make_context(k);
    const std::size_t terms = fourier_terms(c, 1e-13);
    for (int i = 0; i < 50; ++i) {
      const double v = vd(rng);
      const JacobiTriple th = jacobi_elliptic(c.K * v / kPi, c);
      const JacobiTriple tf = jacobi_elliptic(2.0 * c.K * v / kPi, c);
      CHECK(std::abs(fourier_eval(FourierSeries::sn, v, c, terms).value - tf.sn) < 1e-11);
      CHECK(std::abs(fourier_eval(FourierSeries::cn, v, c, terms).value - tf.cn) < 1e-11);
      CHECK(std::abs(fourier_eval(FourierSeries::dn, v, c, terms).value - th.dn) < 1e-11);
      CHECK(std::abs(fourier_eval(FourierSeries::sn2, v, c, terms).value -
                     th.sn * th.sn) < 1e-11);
      CHECK(std::abs(fourier_eval(FourierSeries::sn3, v, c, terms).value -
                     tf.sn * tf.sn * tf.sn) < 1e-11);
    }
  }
}

TEST_CASE("nome increases with the modulus") {
  double prev = 0.0;
  for (double k = 0.05; k < 0.99; k += 0.05) {
    const double q = make_context(k).q;
    CHECK(q > prev);
    prev = q;
  }
}

TEST_CASE("K decreases as k decreases") {
  double prev = make_context(0.98).K;
  for (double k = 0.9; k > 0.04; k -= 0.05) {
    const double K = make_context(k).K;
    CHECK(K < prev);
    prev = K;
  }
}

}  // TEST_SUITE
