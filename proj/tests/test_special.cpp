#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ert/chebyshev.hpp"
#include "ert/quadrature.hpp"

using namespace ert;

namespace {

// extended-precision recurrence oracle for the classical polynomials
long double cheb_recurrence(int m, long double x, bool second_kind) {
  long double p0 = 1.0L, p1 = second_kind ? 2.0L * x : x;
  if (m == 0) return p0;
  if (m == 1) return p1;
  for (int k = 2; k <= m; ++k) {
    const long double p2 = 2.0L * x * p1 - p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

// extended-precision direct evaluation of the exponential Chebyshev pair
std::complex<long double> direct_T(int n, long double s, long double r,
                                   std::complex<long double> mu) {
  const std::complex<long double> sigma = s * s - r * r;
  const std::complex<long double> u = std::sqrt(sigma);  // principal branch
  const std::complex<long double> iu(0.0L, 1.0L);
  const std::complex<long double> ap = (s + u) / r, am = (s - u) / r;
  return 0.5L * (std::exp(iu * mu * u) * std::pow(ap, n) + std::exp(-iu * mu * u) * std::pow(am, n));
}

std::complex<long double> direct_U(int nm1, long double s, long double r,
                                   std::complex<long double> mu) {
  const int n = nm1 + 1;
  const std::complex<long double> sigma = s * s - r * r;
  const std::complex<long double> u = std::sqrt(sigma);
  const std::complex<long double> iu(0.0L, 1.0L);
  const std::complex<long double> ap = (s + u) / r, am = (s - u) / r;
  return (r / (2.0L * u)) * (std::exp(iu * mu * u) * std::pow(ap, n) - std::exp(-iu * mu * u) * std::pow(am, n));
}

cplx narrow(std::complex<long double> z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace

TEST_CASE("classical T: fixed values") {
  CHECK(cheb_T_classical(0, 0.7) == doctest::Approx(1.0));
  CHECK(cheb_T_classical(2, 0.5) == doctest::Approx(-0.5));
  // recurrence oracle at extended precision, |x| > 1 branch
  const double want = static_cast<double>(cheb_recurrence(7, 1.3L, false));
  CHECK(std::abs(cheb_T_classical(7, 1.3) - want) <= 1e-13 * std::abs(want));
}

TEST_CASE("classical T: relative accuracy across orders and arguments") {
  for (int m : {1, 3, 8, 16, 33, 64}) {
    for (double x : {-3.0, -1.0, -0.73, 0.0, 0.2, 0.99, 1.0, 1.7, 3.0}) {
      const long double want = cheb_recurrence(m, static_cast<long double>(x), false);
      const double got = cheb_T_classical(m, x);
      CHECK(std::abs(got - static_cast<double>(want)) <=
            1e-13 * std::max(1.0, std::abs(static_cast<double>(want))));
    }
  }
}

TEST_CASE("classical U: fixed values and limits") {
  CHECK(cheb_U_classical(-1, 0.3) == 0.0);
  CHECK(cheb_U_classical(0, -0.9) == doctest::Approx(1.0));
  CHECK(cheb_U_classical(1, 0.6) == doctest::Approx(1.2));
  CHECK(cheb_U_classical(5, 1.0) == doctest::Approx(6.0));
  CHECK(cheb_U_classical(5, -1.0) == doctest::Approx(-6.0));
  // series/recurrence fallback engaged near x = 1
  const double want = static_cast<double>(cheb_recurrence(5, 0.999999L, true));
  CHECK(std::abs(cheb_U_classical(5, 0.999999) - want) <= 1e-10 * std::abs(want));
}

TEST_CASE("atten_path_a closed forms") {
  const cplx c(0.4, -0.7);
  const Attenuation att = Attenuation::constant(c);
  SUBCASE("constant, |s| <= r") {
    const cplx got = atten_path_a(0.3, 0.8, att);
    CHECK(std::abs(got - c * std::sqrt(0.64 - 0.09)) < 1e-14);
  }
  SUBCASE("constant, |s| > r") {
    const cplx got = atten_path_a(1.1, 0.8, att);
    CHECK(std::abs(got - cplx(0, 1) * c * std::sqrt(1.21 - 0.64)) < 1e-14);
  }
  SUBCASE("eta(rho) = rho^2 antiderivative") {
    const int N = 512;
    RadialGrid g = RadialGrid::uniform(N, 1.3);
    std::vector<cplx> prof(N);
    for (int j = 0; j < N; ++j) prof[j] = cplx(g.node(j) * g.node(j), 0.0);
    const Attenuation eta = Attenuation::radial(g, prof);
    const double s = 0.3, r = 0.8;
    const double W = std::sqrt(r * r - s * s);
    const double want = s * s * W + W * W * W / 3.0;
    CHECK(std::abs(atten_path_a(s, r, eta) - cplx(want, 0.0)) < 1e-10);
  }
}

TEST_CASE("ert_cheb_T spec values") {
  // mu = 0 reduces to T_n(s/r)
  CHECK(std::abs(ert_cheb_T(1, 0.5, 1.0, cplx(0, 0)) - cplx(0.5, 0.0)) < 1e-14);
  // n = 0 exterior collapses to cos(mu u)
  CHECK(std::abs(ert_cheb_T(0, 2.0, 1.0, cplx(1, 0)) - cplx(std::cos(std::sqrt(3.0)), 0.0)) < 1e-13);
  // complex mu, exterior: extended-precision direct evaluation
  const cplx want = narrow(direct_T(3, 1.2L, 0.8L, {0.5L, 0.3L}));
  CHECK(std::abs(ert_cheb_T(3, 1.2, 0.8, cplx(0.5, 0.3)) - want) < 1e-12);
}

TEST_CASE("ert_cheb_U spec values") {
  CHECK(std::abs(ert_cheb_U(0, 0.2, 0.9, cplx(0, 0)) - cplx(1.0, 0.0)) < 1e-14);
  CHECK(std::abs(ert_cheb_U(1, 0.6, 1.0, cplx(0, 0)) - cplx(1.2, 0.0)) < 1e-14);
}

TEST_CASE("series fallback agrees with extended-precision direct evaluation") {
  // the spec's degenerate point: s = r (1 + 1e-9), U~ with index 2
  const double r = 0.7, s = r * (1.0 + 1e-9);
  const cplx mu(0.0, 0.4);
  {
    const cplx want = narrow(direct_U(2, static_cast<long double>(s), 0.7L, {0.0L, 0.4L}));
    const cplx got = ert_cheb_U(2, s, r, mu);
    CHECK(std::abs(got - want) <= 1e-8 * std::abs(want));
  }
  // walk the band on both sides, T and U, against long-double direct eval;
  // interior side compares against the continuation (C2)
  for (double offset : {-3e-7, -1e-8, 1e-8, 3e-7}) {
    const double sb = r * (1.0 + offset);
    const std::complex<long double> muL{0.3L, 0.2L};
    const cplx wantT = narrow(direct_T(4, static_cast<long double>(sb), 0.7L, muL));
    const cplx wantU = narrow(direct_U(3, static_cast<long double>(sb), 0.7L, muL));
    const cplx gotT = ert_cheb_T(4, sb, r, cplx(0.3, 0.2), BranchConvention::C2);
    const cplx gotU = ert_cheb_U(3, sb, r, cplx(0.3, 0.2), BranchConvention::C2);
    CHECK(std::abs(gotT - wantT) <= 1e-10 * std::max(1.0, std::abs(wantT)));
    CHECK(std::abs(gotU - wantU) <= 1e-10 * std::max(1.0, std::abs(wantU)));
  }
}

TEST_CASE("identity suite on random samples") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> us(-1.25, 1.25), ur(0.6, 1.2), um(-1.0, 1.0);
  std::uniform_int_distribution<int> un(-8, 8);
  int done = 0;
  while (done < 500) {
    const int n = un(rng);
    const double s = us(rng), r = ur(rng);
    if (std::abs(s * s - r * r) < 1e-4) continue;
    const cplx mu(um(rng), um(rng));
    ++done;
    for (BranchConvention conv : {BranchConvention::C1, BranchConvention::C2}) {
      const double pn = (n & 1) ? -1.0 : 1.0;
      CHECK(std::abs(ert_cheb_T(n, -s, r, mu, conv) - pn * ert_cheb_T(n, s, r, -mu, conv)) < 1e-10);
      CHECK(std::abs(ert_cheb_T(n, s, r, -mu, conv) - ert_cheb_T(-n, s, r, mu, conv)) < 1e-10);
      const double pm = ((n - 1) & 1) ? -1.0 : 1.0;
      CHECK(std::abs(ert_cheb_U(n - 1, -s, r, mu, conv) - pm * ert_cheb_U(n - 1, s, r, -mu, conv)) < 1e-10);
      CHECK(std::abs(ert_cheb_U(n - 1, s, r, -mu, conv) + ert_cheb_U(-n - 1, s, r, mu, conv)) < 1e-10);
    }
  }
}

TEST_CASE("orthogonality integral equals pi/2 (constant attenuation)") {
  const double half_pi = M_PI / 2.0;
  const cplx mus[] = {{0, 0}, {0.5, 0}, {0, 1}, {1, 0.5}};
  const double st[][2] = {{0.5, 1.0}, {0.3, 0.9}, {0.1, 0.4}};
  for (int n : {0, 1, 2, 5, 10}) {
    for (const cplx& mu : mus) {
      for (const auto& p : st) {
        const cplx v = orthogonality_integral(n, p[0], p[1], Attenuation::constant(mu));
        INFO("n=", n, " mu=(", mu.real(), ",", mu.imag(), ") s=", p[0], " t=", p[1]);
        CHECK(std::abs(v - half_pi) <= 1e-6 * half_pi);
      }
    }
  }
}

TEST_CASE("orthogonality integral rejects bad arguments") {
  CHECK_THROWS_AS(orthogonality_integral(1, 0.9, 0.5, Attenuation::constant({0, 0})),
                  std::domain_error);
  CHECK_THROWS_AS(orthogonality_integral(1, -0.1, 0.5, Attenuation::constant({0, 0})),
                  std::domain_error);
}

TEST_CASE("gauss-legendre sanity") {
  // integrate x^6 on [0,1]
  const cplx v = integrate_gl([](double x) { return cplx(x * x * x * x * x * x, 0.0); }, 0.0, 1.0, 8);
  CHECK(std::abs(v - cplx(1.0 / 7.0, 0.0)) < 1e-14);
  const cplx w = integrate_adaptive([](double x) { return cplx(std::exp(-x * x), 0.0); }, -3.0, 3.0);
  CHECK(std::abs(w.real() - std::sqrt(M_PI) * std::erf(3.0)) < 1e-12);
}
