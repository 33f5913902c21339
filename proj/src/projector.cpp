#include "ert/projector.hpp"

#include <cmath>

#include "ert/interp.hpp"
#include "ert/quadrature.hpp"

namespace ert {

namespace {

// Cumulative attenuation A(t) = int_0^t eta(sqrt(s^2+tau^2)) dtau along one
// ray, evaluated at an ascending list of non-negative t values. The integrand
// is even in tau, so A is odd and negative t mirrors for free.
void cumulative_path(const Attenuation& att, double s, const std::vector<double>& tpos,
                     std::vector<cplx>& out) {
  out.resize(tpos.size());
  cplx acc(0.0, 0.0);
  double t_prev = 0.0;
  const double s2 = s * s;
  for (size_t k = 0; k < tpos.size(); ++k) {
    acc += integrate_gl(
        [&](double tau) { return att.eta_at(std::sqrt(s2 + tau * tau)); }, t_prev, tpos[k], 16);
    out[k] = acc;
    t_prev = tpos[k];
  }
}

}  // namespace

Sinogram project_direct(const Field& f, const DetectorGrid& det, const AngleGrid& ang,
                        const Attenuation& att, double reltol) {
  Sinogram sino(det, ang, att);
  const bool radial = att.is_radial();
  const cplx mu = att.is_constant() ? att.mu() : cplx(0.0, 0.0);

  std::vector<double> tpos;
  std::vector<cplx> apos;
  for (int k = 0; k < ang.count(); ++k) {
    const double th = ang.node(k);
    const double cx = std::cos(th), sx = std::sin(th);
    for (int i = 0; i < det.count(); ++i) {
      const double s = det.node(i);
      if (std::abs(s) >= 1.0) continue;  // support in the unit disk
      const double T = std::sqrt(1.0 - s * s);
      auto ray_value = [&](int order) {
        const GaussLegendre& gl = gauss_legendre(order);
        cplx acc(0.0, 0.0);
        if (radial) {
          // nodes come out symmetric and ascending; A(-t) = -A(t)
          const int half = order / 2;
          tpos.clear();
          for (int q = half; q < order; ++q) tpos.push_back(T * gl.nodes[static_cast<size_t>(q)]);
          cumulative_path(att, s, tpos, apos);
          for (int q = 0; q < order; ++q) {
            const double t = T * gl.nodes[static_cast<size_t>(q)];
            const cplx A = q >= half ? apos[static_cast<size_t>(q - half)]
                                     : -apos[static_cast<size_t>(order - 1 - q - half)];
            acc += gl.weights[static_cast<size_t>(q)] *
                   f(s * cx - t * sx, s * sx + t * cx) * std::exp(A);
          }
        } else {
          for (int q = 0; q < order; ++q) {
            const double t = T * gl.nodes[static_cast<size_t>(q)];
            acc += gl.weights[static_cast<size_t>(q)] *
                   f(s * cx - t * sx, s * sx + t * cx) * std::exp(t * mu);
          }
        }
        return T * acc;
      };
      cplx prev = ray_value(64);
      for (int order = 128; order <= 1024; order *= 2) {
        const cplx cur = ray_value(order);
        if (std::abs(cur - prev) <= reltol * std::abs(cur) + 1e-300) {
          prev = cur;
          break;
        }
        prev = cur;
      }
      sino.at(k, i) = prev;
    }
  }
  return sino;
}

HarmonicSinogram decompose_angular(const Sinogram& sino, int n_min, int n_max) {
  const int K = sino.ang().count();
  const int max_abs_n = std::max(std::abs(n_min), std::abs(n_max));
  if (K < 2 * max_abs_n + 2)
    throw std::invalid_argument("decompose_angular: angle count too small for requested harmonics (aliasing)");
  HarmonicSinogram h(n_min, n_max, sino.det(), sino.att());
  const int I = sino.det().count();
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<cplx> phase(static_cast<size_t>(K));
    for (int k = 0; k < K; ++k) phase[static_cast<size_t>(k)] = std::polar(1.0 / K, -n * sino.ang().node(k));
    for (int i = 0; i < I; ++i) {
      cplx acc(0.0, 0.0);
      for (int k = 0; k < K; ++k) acc += sino.at(k, i) * phase[static_cast<size_t>(k)];
      h.at(n, i) = acc;
    }
  }
  return h;
}

Sinogram synthesize_angular(const HarmonicSinogram& h, const AngleGrid& ang) {
  Sinogram sino(h.det(), ang, h.att());
  const int I = h.det().count();
  for (int k = 0; k < ang.count(); ++k) {
    for (int i = 0; i < I; ++i) {
      cplx acc(0.0, 0.0);
      for (int n = h.n_min(); n <= h.n_max(); ++n)
        acc += h.at(n, i) * std::polar(1.0, n * ang.node(k));
      sino.at(k, i) = acc;
    }
  }
  return sino;
}

cplx synthesize_at(const PolarImage& img, double x, double y) {
  const double r = std::hypot(x, y);
  const RadialGrid& g = img.grid();
  if (r > g.last()) return cplx(0.0, 0.0);
  const double phi = std::atan2(y, x);
  cplx acc(0.0, 0.0);
  for (int n = img.n_min(); n <= img.n_max(); ++n) {
    const cplx* prof = &img.values()[static_cast<size_t>(n - img.n_min()) * g.count()];
    const cplx fn = interp_complex(prof, g.count(), g.first(), g.step(), r, true);
    acc += fn * std::polar(1.0, n * phi);
  }
  return acc;
}

HarmonicSinogram project_harmonic(const PolarImage& img, const Attenuation& att,
                                  const DetectorGrid& det, BranchConvention conv, double reltol) {
  const RadialGrid& rg = img.grid();
  if (!rg.is_uniform()) throw std::invalid_argument("project_harmonic: radial grid must be uniform");
  HarmonicSinogram out(img.n_min(), img.n_max(), det, att);
  const int N = img.harmonic_count();
  const bool radial = att.is_radial();
  const cplx mu = att.is_constant() ? att.mu() : cplx(0.0, 0.0);
  const double pair_sign = conv == BranchConvention::C1 ? 1.0 : -1.0;

  std::vector<cplx> prev(static_cast<size_t>(N)), cur(static_cast<size_t>(N));
  std::vector<double> tpos;
  std::vector<cplx> apos;
  for (int i = 0; i < det.count(); ++i) {
    const double s = det.node(i);
    if (std::abs(s) >= 1.0) continue;
    const double T = std::sqrt(1.0 - s * s);
    auto eval_all = [&](int order, std::vector<cplx>& res) {
      std::fill(res.begin(), res.end(), cplx(0.0, 0.0));
      const GaussLegendre& gl = gauss_legendre(order);
      if (radial) {
        tpos.clear();
        for (int q = 0; q < order; ++q) tpos.push_back(T * 0.5 * (gl.nodes[static_cast<size_t>(q)] + 1.0));
        cumulative_path(att, s, tpos, apos);
      }
      for (int q = 0; q < order; ++q) {
        const double t = T * 0.5 * (gl.nodes[static_cast<size_t>(q)] + 1.0);
        const double w = T * 0.5 * gl.weights[static_cast<size_t>(q)];
        const double r = std::sqrt(s * s + t * t);
        const double phi = std::acos(std::clamp(s / r, -1.0, 1.0));
        const cplx A = pair_sign * (radial ? apos[static_cast<size_t>(q)] : mu * t);
        const cplx eP = std::exp(A), eM = std::exp(-A);
        for (int m = 0; m < N; ++m) {
          const int n = img.n_min() + m;
          const cplx* prof = &img.values()[static_cast<size_t>(m) * rg.count()];
          const cplx fn = interp_complex(prof, rg.count(), rg.first(), rg.step(), r, true);
          if (fn == cplx(0.0, 0.0)) continue;
          const cplx zP = std::polar(1.0, n * phi);
          res[static_cast<size_t>(m)] += w * (eP * zP + eM * std::conj(zP)) * fn;
        }
      }
    };
    eval_all(64, prev);
    for (int order = 128; order <= 1024; order *= 2) {
      eval_all(order, cur);
      double worst = 0.0, scale = 0.0;
      for (int m = 0; m < N; ++m) {
        worst = std::max(worst, std::abs(cur[static_cast<size_t>(m)] - prev[static_cast<size_t>(m)]));
        scale = std::max(scale, std::abs(cur[static_cast<size_t>(m)]));
      }
      std::swap(prev, cur);
      if (worst <= reltol * scale + 1e-300) break;
    }
    // the integrand above is T~ * f_n without the leading 1/2, so p_n = sum
    for (int m = 0; m < N; ++m) out.at(img.n_min() + m, i) = prev[static_cast<size_t>(m)];
  }
  return out;
}

namespace {

// radix-2 in-place FFT (decimation in time), forward sign e^{-2 pi i jk/M}
void fft_pow2(std::vector<cplx>& a) {
  const size_t M = a.size();
  for (size_t i = 1, j = 0; i < M; ++i) {
    size_t bit = M >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= M; len <<= 1) {
    const double ang = -2.0 * M_PI / static_cast<double>(len);
    const cplx wl = std::polar(1.0, ang);
    for (size_t i = 0; i < M; i += len) {
      cplx w(1.0, 0.0);
      for (size_t j = 0; j < len / 2; ++j) {
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

}  // namespace

FourierSinogram fourier_in_s(const HarmonicSinogram& h, int pad_factor) {
  if (pad_factor < 1) throw std::invalid_argument("fourier_in_s: pad_factor must be >= 1");
  const int count = h.det().count();
  const double hs = h.det().step();
  size_t M = 1;
  while (M < static_cast<size_t>(count) * static_cast<size_t>(pad_factor)) M <<= 1;
  const double dw = 2.0 * M_PI / (static_cast<double>(M) * hs);
  const int half = static_cast<int>(M) / 2;
  // keep k in [-(half-1), half-1]: symmetric about 0 including 0
  FourierSinogram out(h.n_min(), h.n_max(), 2 * half - 1, -dw * (half - 1), dw);
  const double s0 = h.det().node(0);
  std::vector<cplx> buf(M);
  for (int n = h.n_min(); n <= h.n_max(); ++n) {
    std::fill(buf.begin(), buf.end(), cplx(0.0, 0.0));
    const cplx* p = h.harmonic(n);
    for (int i = 0; i < count; ++i) buf[static_cast<size_t>(i)] = p[i];
    fft_pow2(buf);
    for (int k = -(half - 1); k <= half - 1; ++k) {
      const size_t idx = static_cast<size_t>(k >= 0 ? k : k + static_cast<int>(M));
      const double w = dw * k;
      out.at(n, k + half - 1) = hs * std::polar(1.0, -s0 * w) * buf[idx];
    }
  }
  return out;
}

}  // namespace ert
