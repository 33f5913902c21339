#include <doctest.h>

#include <cmath>

#include "ert/interp.hpp"
#include "ert/types.hpp"

using namespace ert;

TEST_CASE("grid constructors reject bad input") {
  CHECK_THROWS_AS(RadialGrid::from_nodes({}), std::invalid_argument);
  CHECK_THROWS_AS(RadialGrid::from_nodes({0.5, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(RadialGrid::from_nodes({-0.1, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(DetectorGrid(1, 1.2), std::invalid_argument);
  CHECK_THROWS_AS(DetectorGrid(128, 0.5), std::invalid_argument);  // s_max >= 1
  CHECK_THROWS_AS(AngleGrid(15), std::invalid_argument);           // K even
}

TEST_CASE("detector grid is symmetric about zero") {
  DetectorGrid det(512, 1.2);
  for (int i = 0; i < det.count(); ++i)
    CHECK(det.node(det.mirror_index(i)) == doctest::Approx(-det.node(i)).epsilon(1e-15));
  CHECK(det.node(0) == -1.2);
  CHECK(det.node(det.count() - 1) == 1.2);
}

TEST_CASE("interp_complex reproduces constants") {
  std::vector<cplx> prof(64, cplx(2.5, -1.0));
  for (double x : {0.0, 0.31, 0.62999, 0.015})
    CHECK(std::abs(interp_complex(prof, 0.0, 0.01, x) - cplx(2.5, -1.0)) < 1e-14);
}

TEST_CASE("interp_complex exact on cubics") {
  const double h = 0.01;
  std::vector<cplx> prof;
  for (int j = 0; j <= 200; ++j) {
    const double x = -1.0 + h * j;
    prof.emplace_back(x * x * x, 0.0);
  }
  const double x = 0.345;
  CHECK(std::abs(interp_complex(prof, -1.0, h, x) - cplx(x * x * x, 0.0)) < 1e-12);
  // exact at a node
  CHECK(interp_complex(prof, -1.0, h, -1.0 + 57 * h) == prof[57]);
}

TEST_CASE("interp_complex against dense sine samples") {
  const int N = 512;
  const double h = 2.0 / (N - 1);
  std::vector<cplx> prof;
  for (int j = 0; j < N; ++j) prof.emplace_back(std::sin(M_PI * (-1.0 + h * j)), 0.0);
  CHECK(std::abs(interp_complex(prof, -1.0, h, 0.3) - cplx(std::sin(0.3 * M_PI), 0.0)) < 1e-8);
}

TEST_CASE("interp_complex vanishes outside the grid span") {
  std::vector<cplx> prof(16, cplx(1.0, 0.0));
  CHECK(interp_complex(prof, 0.0, 0.1, -0.05) == cplx(0.0, 0.0));
  CHECK(interp_complex(prof, 0.0, 0.1, 1.55) == cplx(0.0, 0.0));
}

TEST_CASE("derivative_s on zero input") {
  HarmonicSinogram h(-2, 2, DetectorGrid(64, 1.2), Attenuation::constant({0.3, 0.0}));
  HarmonicSinogram d = derivative_s(h);
  for (const cplx& v : d.values()) CHECK(v == cplx(0.0, 0.0));
}

TEST_CASE("derivative_s matches the analytic derivative of (1-s^2)^2") {
  DetectorGrid det(512, 1.2);
  HarmonicSinogram h(0, 0, det, Attenuation::constant({0.0, 0.0}));
  for (int i = 0; i < det.count(); ++i) {
    const double s = det.node(i);
    h.at(0, i) = std::abs(s) < 1.0 ? cplx(std::pow(1.0 - s * s, 2), 0.0) : cplx(0.0, 0.0);
  }
  HarmonicSinogram d = derivative_s(h);
  double worst = 0.0;
  for (int i = 4; i < det.count() - 4; ++i) {
    const double s = det.node(i);
    if (std::abs(s) >= 1.0) continue;
    worst = std::max(worst, std::abs(d.at(0, i) - cplx(-4.0 * s * (1.0 - s * s), 0.0)));
  }
  CHECK(worst < 1e-7);
}

TEST_CASE("derivative_s exact on quartics at interior nodes") {
  DetectorGrid det(101, 1.0);
  HarmonicSinogram h(0, 0, det, Attenuation::none());
  for (int i = 0; i < det.count(); ++i) h.at(0, i) = std::pow(det.node(i), 4);
  HarmonicSinogram d = derivative_s(h);
  for (int i = 2; i < det.count() - 2; ++i) {
    const double s = det.node(i);
    CHECK(std::abs(d.at(0, i) - cplx(4.0 * s * s * s, 0.0)) < 1e-12);
  }
}

TEST_CASE("derivative_s is linear") {
  DetectorGrid det(128, 1.1);
  HarmonicSinogram p(0, 0, det, Attenuation::none()), q(0, 0, det, Attenuation::none());
  for (int i = 0; i < det.count(); ++i) {
    const double s = det.node(i);
    p.at(0, i) = cplx(std::exp(-4.0 * s * s), 0.2 * s);
    q.at(0, i) = cplx(s * s, std::cos(s));
  }
  const cplx a(1.25, -0.5), b(-0.75, 2.0);
  HarmonicSinogram combo(0, 0, det, Attenuation::none());
  for (int i = 0; i < det.count(); ++i) combo.at(0, i) = a * p.at(0, i) + b * q.at(0, i);
  HarmonicSinogram dc = derivative_s(combo), dp = derivative_s(p), dq = derivative_s(q);
  for (int i = 0; i < det.count(); ++i)
    CHECK(std::abs(dc.at(0, i) - (a * dp.at(0, i) + b * dq.at(0, i))) < 1e-12);
}

TEST_CASE("derivative_s requires five nodes") {
  // DetectorGrid itself enforces count >= 2; derivative needs >= 5
  HarmonicSinogram h(0, 0, DetectorGrid(4, 1.0), Attenuation::none());
  CHECK_THROWS_AS(derivative_s(h), std::length_error);
}
