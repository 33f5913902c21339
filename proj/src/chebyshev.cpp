#include "ert/chebyshev.hpp"

#include <array>
#include <cmath>

#include "ert/quadrature.hpp"

namespace ert {

namespace {

constexpr double kDegenerateEps = 1e-6;   // |s^2-r^2| < eps*r^2 -> series
constexpr double kLogFormThreshold = 500.0;

// x^n for integer n; uses (s+u)(s-u) = r^2 so negative powers of a_+ are
// positive powers of a_-.
double ipow(double x, int e) {
  double acc = 1.0, base = x;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) acc *= base;
    base *= base;
  }
  return acc;
}

// Mean of eta along the chord between radii min(|s|,r) and max(|s|,r);
// equals mu for constant attenuation. The exponent of the exponential
// Chebyshev functions is i*u*mean (exterior) or w*mean (interior).
cplx eta_path_mean(double s, double r, const Attenuation& att) {
  if (att.is_constant()) return att.mu();
  const double s2 = s * s, r2 = r * r;
  return integrate_adaptive(
      [&](double tau) { return att.eta_at(std::sqrt(std::max(0.0, s2 + tau * tau * (r2 - s2)))); },
      0.0, 1.0, 1e-12, 32, 1024);
}

struct ChebPair {
  cplx T;
  cplx U;  // subscript n-1
};

// Taylor coefficients c_0..c_5 of g(u) = e^{i mu u} ((s+u)/r)^n about u = 0;
// then T = c0 + c2 s + c4 s^2 and U_{n-1} = r (c1 + c3 s + c5 s^2) in
// s = sigma = s^2 - r^2. Valid for |u| << |s|.
ChebPair series_eval(int n, double s, double r, cplx mu) {
  std::array<cplx, 6> expc;  // (i mu)^k / k!
  expc[0] = cplx(1.0, 0.0);
  const cplx imu1 = cplx(0.0, 1.0) * mu;
  for (int k = 1; k < 6; ++k) expc[static_cast<size_t>(k)] = expc[static_cast<size_t>(k - 1)] * imu1 / static_cast<double>(k);
  std::array<double, 6> binc;  // n(n-1)...(n-j+1)/j! / s^j
  binc[0] = 1.0;
  for (int j = 1; j < 6; ++j)
    binc[static_cast<size_t>(j)] = binc[static_cast<size_t>(j - 1)] * static_cast<double>(n - j + 1) / (static_cast<double>(j) * s);
  const double lead = n >= 0 ? ipow(s / r, n) : ipow(r / s, -n);
  std::array<cplx, 6> c{};
  for (int m = 0; m < 6; ++m)
    for (int k = 0; k <= m; ++k) c[static_cast<size_t>(m)] += expc[static_cast<size_t>(k)] * binc[static_cast<size_t>(m - k)];
  const double sigma = s * s - r * r;
  ChebPair out;
  out.T = lead * (c[0] + sigma * (c[2] + sigma * c[4]));
  out.U = lead * r * (c[1] + sigma * (c[3] + sigma * c[5]));
  return out;
}

ChebPair eval_pair(int n, double s, double r, const Attenuation& att, BranchConvention conv) {
  if (!(r > 0.0)) throw std::domain_error("ert_cheb: r must be > 0");
  const double sigma = s * s - r * r;

  if (std::abs(sigma) < kDegenerateEps * r * r) {
    cplx mu_eff = eta_path_mean(s, r, att);
    // The series continues the exterior form; C1 flips mu in the interior.
    if (sigma < 0.0 && conv == BranchConvention::C1) mu_eff = -mu_eff;
    return series_eval(n, s, r, mu_eff);
  }

  if (sigma > 0.0) {
    const double u = std::sqrt(sigma);
    const cplx A = att.is_constant() ? cplx(0.0, 1.0) * att.mu() * u : atten_path_a(s, r, att);
    const double ap = (s + u) / r, am = (s - u) / r;
    const double lg = std::abs(n) * std::log(std::max(std::abs(ap), std::abs(am)));
    if (lg > kLogFormThreshold) {
      // log-magnitude + phase form; ap*am = 1 so one factor is tiny
      const double L = static_cast<double>(n) * std::log(std::abs(ap));
      const double sign = (s < 0.0 && (n & 1)) ? -1.0 : 1.0;
      const cplx big = std::exp(A + cplx(L, 0.0));
      const cplx small = std::exp(-A - cplx(L, 0.0));
      return {0.5 * sign * (big + small), sign * (r / (2.0 * u)) * (big - small)};
    }
    const double apn = n >= 0 ? ipow(ap, n) : ipow(am, -n);
    const double amn = n >= 0 ? ipow(am, n) : ipow(ap, -n);
    const cplx ea = std::exp(A), eb = std::exp(-A);
    return {0.5 * (ea * apn + eb * amn), (r / (2.0 * u)) * (ea * apn - eb * amn)};
  }

  const double w = std::sqrt(-sigma);
  const double phi = std::acos(std::clamp(s / r, -1.0, 1.0));
  cplx A;  // pairing exponent, multiplies e^{+i n phi}
  if (att.is_constant()) {
    A = att.mu() * w;
  } else {
    A = atten_path_a(s, r, att);  // real-path integral, |s| < r
  }
  if (conv == BranchConvention::C2) A = -A;
  const cplx eP = std::exp(A), eM = std::exp(-A);
  const cplx zP = std::polar(1.0, n * phi), zM = std::conj(zP);
  ChebPair out;
  out.T = 0.5 * (eP * zP + eM * zM);
  out.U = (eP * zP - eM * zM) * r / (cplx(0.0, 2.0) * w);
  return out;
}

}  // namespace

double cheb_T_classical(int m, double x) {
  if (m < 0) m = -m;  // T_{-m} = T_m
  if (std::abs(x) <= 1.0) return std::cos(m * std::acos(x));
  const double t = std::acosh(std::abs(x));
  const double v = std::cosh(m * t);
  return x > 0.0 ? v : ((m & 1) ? -v : v);
}

double cheb_U_classical(int m, double x) {
  if (m < -1) throw std::domain_error("cheb_U_classical: m must be >= -1");
  if (m == -1) return 0.0;
  if (m == 0) return 1.0;
  if (std::abs(x) < 1.0) {
    const double th = std::acos(x);
    const double sn = std::sin(th);
    if (sn > 1e-5) return std::sin((m + 1) * th) / sn;
    // three-term recurrence near |x| = 1 where the trig form is 0/0
    double u0 = 1.0, u1 = 2.0 * x;
    for (int k = 2; k <= m; ++k) {
      const double u2 = 2.0 * x * u1 - u0;
      u0 = u1;
      u1 = u2;
    }
    return u1;
  }
  if (std::abs(x) == 1.0) {
    const double v = static_cast<double>(m + 1);
    return x > 0.0 ? v : ((m & 1) ? -v : v);
  }
  const double t = std::acosh(std::abs(x));
  const double v = std::sinh((m + 1) * t) / std::sinh(t);
  return x > 0.0 ? v : ((m & 1) ? -v : v);
}

cplx atten_path_a(double s, double r, const Attenuation& eta) {
  if (!(r > 0.0)) throw std::domain_error("atten_path_a: r must be > 0");
  if (eta.is_constant()) {
    const cplx c = eta.mu();
    if (std::abs(s) <= r) return c * std::sqrt(r * r - s * s);
    return cplx(0.0, 1.0) * c * std::sqrt(s * s - r * r);
  }
  const double s2 = s * s, r2 = r * r;
  if (std::abs(s) <= r) {
    const double W = std::sqrt(r2 - s2);
    return integrate_adaptive(
        [&](double t) { return eta.eta_at(std::sqrt(s2 + t * t)); }, 0.0, W, 1e-10, 32, 2048);
  }
  const double u = std::sqrt(s2 - r2);
  const cplx mean = integrate_adaptive(
      [&](double tau) { return eta.eta_at(std::sqrt((1.0 - tau * tau) * s2 + tau * tau * r2)); },
      0.0, 1.0, 1e-10, 32, 2048);
  return cplx(0.0, 1.0) * u * mean;
}

cplx ert_cheb_T(int n, double s, double r, const Attenuation& att, BranchConvention conv) {
  return eval_pair(n, s, r, att, conv).T;
}

cplx ert_cheb_U(int nm1, double s, double r, const Attenuation& att, BranchConvention conv) {
  return eval_pair(nm1 + 1, s, r, att, conv).U;
}

cplx ert_cheb_T(int n, double s, double r, cplx mu, BranchConvention conv) {
  return ert_cheb_T(n, s, r, Attenuation::constant(mu), conv);
}

cplx ert_cheb_U(int nm1, double s, double r, cplx mu, BranchConvention conv) {
  return ert_cheb_U(nm1, s, r, Attenuation::constant(mu), conv);
}

cplx orthogonality_integral(int n, double s, double t, const Attenuation& att) {
  if (!(0.0 < s && s < t)) throw std::domain_error("orthogonality_integral: need 0 < s < t");
  const double m = 0.5 * (s + t);
  // lower half, r = sqrt(s^2 + v^2): removes the 1/sqrt(r^2-s^2) singularity
  const double V1 = std::sqrt(m * m - s * s);
  const cplx I1 = integrate_adaptive(
      [&](double v) {
        const double r = std::sqrt(s * s + v * v);
        return ert_cheb_T(n, t, r, att) *
               ert_cheb_T(n, s, r, att, BranchConvention::C2) / std::sqrt(t * t - r * r);
      },
      0.0, V1, 1e-11, 32, 2048);
  // upper half, r = sqrt(t^2 - v^2): removes the 1/sqrt(t^2-r^2) singularity
  const double V2 = std::sqrt(t * t - m * m);
  const cplx I2 = integrate_adaptive(
      [&](double v) {
        const double r = std::sqrt(t * t - v * v);
        return ert_cheb_T(n, t, r, att) *
               ert_cheb_T(n, s, r, att, BranchConvention::C2) / std::sqrt(r * r - s * s);
      },
      0.0, V2, 1e-11, 32, 2048);
  return I1 + I2;
}

}  // namespace ert
