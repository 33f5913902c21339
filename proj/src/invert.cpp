#include "ert/invert.hpp"

#include <cmath>
#include <cstdio>

#include "ert/interp.hpp"
#include "ert/kernels.hpp"
#include "ert/quadrature.hpp"

namespace ert {

namespace {

struct DataView {
  const HarmonicSinogram& dpn;
  cplx at(int n, double s) const {
    return interp_complex(dpn.harmonic(n), dpn.det().count(), dpn.det().node(0),
                          dpn.det().step(), s);
  }
};

// int_{|s|>r} sgn(s) r/sqrt(s^2-r^2) T~_n(s,r,-mu) p'_n(s) ds via s = +/- sqrt(r^2+u^2);
// the weight becomes r/sqrt(r^2+u^2), bounded.
cplx term_T_exterior(int n, double r, const Attenuation& neg, const DataView& view,
                     double s_max) {
  const double U = std::sqrt(s_max * s_max - r * r);
  return integrate_adaptive(
      [&](double u) {
        const double s = std::sqrt(r * r + u * u);
        const cplx f1 = ert_cheb_T(n, s, r, neg) * view.at(n, s);
        const cplx f2 = ert_cheb_T(n, -s, r, neg) * view.at(n, -s);
        return (r / s) * (f1 - f2);
      },
      0.0, U, 1e-10, 32, 512);
}

// int_{|s|>r} E_n(s,r) p'_n(s) ds with the same substitution (ds = u/s du).
cplx term_E_exterior(int n, double r, cplx mu, const DataView& view, double s_max) {
  if (n == 0) return cplx(0.0, 0.0);
  const double U = std::sqrt(s_max * s_max - r * r);
  return integrate_adaptive(
      [&](double u) {
        const double s = std::sqrt(r * r + u * u);
        return (u / s) * (kernel_series(n, s, r, mu) * view.at(n, s) +
                          kernel_series(n, -s, r, mu) * view.at(n, -s));
      },
      0.0, U, 1e-10, 32, 512);
}

// trapezoid over the detector grid; the data vanish near the ends, so this is
// spectrally accurate for the smooth kernels used here
template <class F>
cplx trapezoid_grid(const HarmonicSinogram& dpn, int n, F&& kernel) {
  const int count = dpn.det().count();
  const double h = dpn.det().step();
  const cplx* p = dpn.harmonic(n);
  cplx acc(0.0, 0.0);
  for (int i = 0; i < count; ++i) {
    const double w = (i == 0 || i == count - 1) ? 0.5 * h : h;
    acc += w * kernel(dpn.det().node(i)) * p[i];
  }
  return acc;
}

void require_constant(const Attenuation& att, const char* op) {
  if (!att.is_constant())
    throw std::domain_error(std::string(op) + ": only Constant attenuation is supported");
}

}  // namespace

InversionMethod inversion_method_from_string(const std::string& name) {
  if (name == "unified") return InversionMethod::Unified;
  if (name == "interior") return InversionMethod::InteriorSeries;
  if (name == "exterior") return InversionMethod::ExteriorSeries;
  if (name == "cormack") return InversionMethod::CormackExterior;
  throw std::invalid_argument("unknown inversion method '" + name + "'");
}

std::string to_string(InversionMethod m) {
  switch (m) {
    case InversionMethod::Unified: return "unified";
    case InversionMethod::InteriorSeries: return "interior";
    case InversionMethod::ExteriorSeries: return "exterior";
    case InversionMethod::CormackExterior: return "cormack";
  }
  return "?";
}

PolarImage invert_unified(const HarmonicSinogram& dpn, const RadialGrid& grid,
                          BranchConvention conv) {
  require_constant(dpn.att(), "invert_unified");
  const cplx mu = dpn.att().mu();
  const Attenuation neg = Attenuation::constant(-mu);
  const double s_max = dpn.det().s_max();
  PolarImage img(dpn.n_min(), dpn.n_max(), grid);
  DataView view{dpn};
  for (int n = dpn.n_min(); n <= dpn.n_max(); ++n) {
    const double sn = sgn_harmonic(n);
    for (int j = 0; j < grid.count(); ++j) {
      const double r = grid.node(j);
      const cplx I1 = trapezoid_grid(dpn, n, [&](double s) {
        return sn * ert_cheb_U(n - 1, s, r, neg, flipped(conv));
      });
      const cplx I2 = term_T_exterior(n, r, neg, view, s_max);
      img.at(n, j) = (I1 - I2) / (2.0 * M_PI * r);
    }
  }
  return img;
}

PolarImage invert_interior_series(const HarmonicSinogram& dpn, const RadialGrid& grid,
                                  BranchConvention conv) {
  require_constant(dpn.att(), "invert_interior_series");
  (void)conv;  // the series kernels involve no interior branch pairing
  const cplx mu = dpn.att().mu();
  const Attenuation neg = Attenuation::constant(-mu);
  const double s_max = dpn.det().s_max();
  PolarImage img(dpn.n_min(), dpn.n_max(), grid);
  DataView view{dpn};
  for (int n = dpn.n_min(); n <= dpn.n_max(); ++n) {
    for (int j = 0; j < grid.count(); ++j) {
      const double r = grid.node(j);
      const cplx I1 =
          n == 0 ? cplx(0.0, 0.0)
                 : integrate_adaptive(
                       [&](double s) { return kernel_series(n, s, r, mu) * view.at(n, s); }, -r,
                       r, 1e-10, 32, 512);
      // the exterior kernel carries the z=0 residue series along with the
      // T~ part; without it the formula does not invert
      const cplx I2 = term_T_exterior(n, r, neg, view, s_max) -
                      term_E_exterior(n, r, mu, view, s_max);
      img.at(n, j) = (I1 - I2) / (2.0 * M_PI * r);
    }
  }
  return img;
}

PolarImage invert_exterior_series(const HarmonicSinogram& dpn, const RadialGrid& grid,
                                  BranchConvention conv) {
  require_constant(dpn.att(), "invert_exterior_series");
  (void)conv;  // exterior-only evaluations, where the conventions coincide
  const cplx mu = dpn.att().mu();
  const Attenuation neg = Attenuation::constant(-mu);
  const double s_max = dpn.det().s_max();
  const int max_abs_n = std::max(std::abs(dpn.n_min()), std::abs(dpn.n_max()));
  if (max_abs_n > 12)
    std::fprintf(stderr,
                 "invert_exterior_series: conditioning degrades for |n| > 12 (have %d)\n",
                 max_abs_n);
  PolarImage img(dpn.n_min(), dpn.n_max(), grid);
  DataView view{dpn};
  for (int n = dpn.n_min(); n <= dpn.n_max(); ++n) {
    for (int j = 0; j < grid.count(); ++j) {
      const double r = grid.node(j);
      // exterior data only: the interior series integral is traded away via
      // the derivative moment condition, leaving the T~ term
      img.at(n, j) = -term_T_exterior(n, r, neg, view, s_max) / (2.0 * M_PI * r);
    }
  }
  return img;
}

PolarImage invert_cormack_exterior(const HarmonicSinogram& dpn, const RadialGrid& grid,
                                   BranchConvention conv) {
  (void)conv;  // kernel is exterior-only, where the conventions coincide
  const Attenuation neg = dpn.att().negated();
  if (dpn.att().is_none())
    throw std::domain_error("invert_cormack_exterior: attenuation required");
  const double s_max = dpn.det().s_max();
  PolarImage img(dpn.n_min(), dpn.n_max(), grid);
  DataView view{dpn};
  for (int n = dpn.n_min(); n <= dpn.n_max(); ++n) {
    for (int j = 0; j < grid.count(); ++j) {
      const double r = grid.node(j);
      const double U = std::sqrt(s_max * s_max - r * r);
      const cplx I = integrate_adaptive(
          [&](double u) {
            const double t = std::sqrt(r * r + u * u);
            return ert_cheb_T(n, t, r, neg) * view.at(n, t) / t;
          },
          0.0, U, 1e-9, 32, 512);
      img.at(n, j) = -I / M_PI;
    }
  }
  return img;
}

PolarImage invert(const HarmonicSinogram& dpn, const RadialGrid& grid, InversionMethod method,
                  BranchConvention conv) {
  switch (method) {
    case InversionMethod::Unified: return invert_unified(dpn, grid, conv);
    case InversionMethod::InteriorSeries: return invert_interior_series(dpn, grid, conv);
    case InversionMethod::ExteriorSeries: return invert_exterior_series(dpn, grid, conv);
    case InversionMethod::CormackExterior: return invert_cormack_exterior(dpn, grid, conv);
  }
  throw std::invalid_argument("invert: bad method");
}

cplx central_value(const PolarImage& img, int n) {
  if (n != 0) return cplx(0.0, 0.0);
  const RadialGrid& g = img.grid();
  if (g.count() < 3) return img.at(0, 0);
  const double r1 = g.node(0), r2 = g.node(1), r3 = g.node(2);
  const cplx f1 = img.at(0, 0), f2 = img.at(0, 1), f3 = img.at(0, 2);
  // quadratic Lagrange extrapolation to r = 0
  const double l1 = (r2 * r3) / ((r1 - r2) * (r1 - r3));
  const double l2 = (r1 * r3) / ((r2 - r1) * (r2 - r3));
  const double l3 = (r1 * r2) / ((r3 - r1) * (r3 - r2));
  return f1 * l1 + f2 * l2 + f3 * l3;
}

}  // namespace ert
