#include "ert/kernels.hpp"

#include <cmath>
#include <sstream>

namespace ert {

cplx kernel_unified(int n, double r, double s, cplx mu, BranchConvention conv) {
  if (!(r > 0.0)) throw std::domain_error("kernel_unified: r must be > 0");
  const double sigma = s * s - r * r;
  if (sigma == 0.0) throw std::domain_error("kernel_unified: |s| = r is a degenerate point");
  const Attenuation neg = Attenuation::constant(-mu);
  const double sn = sgn_harmonic(n);
  if (std::abs(s) < r) {
    return sn * ert_cheb_U(n - 1, s, r, neg, flipped(conv)) / (2.0 * r);
  }
  const double u = std::sqrt(sigma);
  const cplx term1 = sn * ert_cheb_U(n - 1, s, r, neg);
  const cplx term2 = sgn(s) * (r / u) * ert_cheb_T(n, s, r, neg);
  return (term1 - term2) / (2.0 * r);
}

cplx kernel_series(int n, double s, double r, cplx mu) {
  const int an = std::abs(n);
  if (an == 0) return cplx(0.0, 0.0);
  const double sn = sgn_harmonic(n);
  const cplx base = sn * cplx(0.0, 1.0) * mu * r;
  cplx coef(1.0, 0.0);
  cplx acc(0.0, 0.0);
  for (int k = 0; k < an; ++k) {
    if (k > 0) coef *= base / static_cast<double>(k);
    acc += coef * cheb_U_classical(an - k - 1, s / r);
  }
  return std::exp(-cplx(0.0, 1.0) * sn * mu * s) * acc;
}

namespace {

cplx circle_quadrature(int n, double r, double s, cplx mu, int sign, double rho, int points) {
  cplx acc(0.0, 0.0);
  const double x = s / r;
  for (int j = 0; j < points; ++j) {
    const double th = 2.0 * M_PI * j / points;
    const cplx z = std::polar(rho, th);
    const cplx denom = z * z - 2.0 * x * z + 1.0;
    cplx zp(1.0, 0.0);
    const int e = sign * n;
    const cplx zb = e >= 0 ? z : 1.0 / z;
    for (int k = 0; k < std::abs(e); ++k) zp *= zb;
    acc += std::exp(static_cast<double>(sign) * cplx(0.0, 1.0) * mu * (s - r * z)) / denom * zp * z;
  }
  return acc / (static_cast<double>(points) * r);
}

}  // namespace

cplx kernel_oracle(int n, double r, double s, cplx mu, int sign, const std::vector<double>& delta_seq) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("kernel_oracle: sign must be +1 or -1");
  if (!(r > 0.0)) throw std::domain_error("kernel_oracle: r must be > 0");
  if (std::abs(std::abs(s) - r) < 1e-12 * r)
    throw std::domain_error("kernel_oracle: |s| = r is a degenerate point");

  if (std::abs(s) > r) {
    // poles off the circle; single quadrature, resolution set by pole distance
    const double u = std::sqrt(s * s - r * r);
    const double bm = (std::abs(s) - u) / r;  // inner pole magnitude, in (0,1)
    const double dist = std::max(1.0 - bm, 1e-3);
    int points = 1024;
    while (points * dist < 60.0 && points < (1 << 16)) points *= 2;
    return circle_quadrature(n, r, s, mu, sign, 1.0, points);
  }

  if (delta_seq.empty()) throw std::invalid_argument("kernel_oracle: empty delta sequence");
  cplx prev(0.0, 0.0);
  bool have_prev = false;
  for (double delta : delta_seq) {
    int points = 1024;
    while (points * delta < 80.0 && points < (1 << 16)) points *= 2;
    const cplx inner = circle_quadrature(n, r, s, mu, sign, 1.0 - delta, points);
    const cplx outer = circle_quadrature(n, r, s, mu, sign, 1.0 + delta, points);
    const cplx avg = 0.5 * (inner + outer);
    if (have_prev && std::abs(avg - prev) > 1e-6 * (1.0 + std::abs(avg))) {
      std::ostringstream msg;
      msg << "kernel_oracle: contour averages did not converge (n=" << n << ", r=" << r
          << ", s=" << s << ", |delta step| = " << std::abs(avg - prev) << ")";
      throw accuracy_error(msg.str());
    }
    prev = avg;
    have_prev = true;
  }
  return prev;
}

}  // namespace ert
