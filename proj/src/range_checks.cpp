#include "ert/range_checks.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "ert/chebyshev.hpp"
#include "ert/interp.hpp"
#include "ert/kernels.hpp"
#include "ert/quadrature.hpp"

namespace ert {

namespace {

double floor_scale(double scale, double data_norm) {
  return std::max(scale, std::numeric_limits<double>::epsilon() * data_norm);
}

double data_norm_inf(const HarmonicSinogram& h) {
  double m = 0.0;
  for (const cplx& v : h.values()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

void RangeReport::add(RangeEntry e) {
  pass = pass && e.pass;
  entries.push_back(std::move(e));
}

void RangeReport::merge(const RangeReport& other) {
  for (const RangeEntry& e : other.entries) add(e);
}

std::string RangeReport::to_json(bool with_timestamp) const {
  nlohmann::json rows = nlohmann::json::array();
  for (const RangeEntry& e : entries)
    rows.push_back({{"check", e.check},
                    {"n", e.n},
                    {"param", e.param},
                    {"raw", e.raw},
                    {"scale", e.scale},
                    {"scaled", e.scaled},
                    {"pass", e.pass}});
  nlohmann::json doc{{"tolerance", tolerance}, {"pass", pass}, {"entries", rows}};
  if (with_timestamp) {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    doc["timestamp"] = buf;
  }
  return doc.dump(2);
}

RangeReport check_evenness(const HarmonicSinogram& h_plus, const HarmonicSinogram& h_minus,
                           double tol) {
  if (h_plus.det().count() != h_minus.det().count() ||
      h_plus.det().s_max() != h_minus.det().s_max() || h_plus.n_min() != h_minus.n_min() ||
      h_plus.n_max() != h_minus.n_max())
    throw std::invalid_argument("check_evenness: grid or harmonic range mismatch");
  if (!(h_plus.att().negated() == h_minus.att()))
    throw std::invalid_argument("check_evenness: attenuations must be negatives of each other");
  RangeReport rep;
  rep.tolerance = tol;
  const int count = h_plus.det().count();
  const double dn = std::max(data_norm_inf(h_plus), data_norm_inf(h_minus));
  for (int n = h_plus.n_min(); n <= h_plus.n_max(); ++n) {
    const double parity = (n & 1) ? -1.0 : 1.0;
    double raw = 0.0, scale = 0.0;
    for (int i = 0; i < count; ++i) {
      const cplx a = h_plus.at(n, h_plus.det().mirror_index(i));  // p_n(-s_i, mu)
      const cplx b = parity * h_minus.at(n, i);                   // (-1)^n p_n(s_i, -mu)
      raw = std::max(raw, std::abs(a - b));
      scale = std::max(scale, 0.5 * (std::abs(a) + std::abs(b)));
    }
    scale = floor_scale(scale, dn);
    RangeEntry e{"evenness", n, "", raw, scale, raw / scale, raw / scale <= tol};
    rep.add(std::move(e));
  }
  return rep;
}

RangeReport check_moments(const HarmonicSinogram& h, const std::vector<double>& r_list,
                          double tol) {
  if (!h.att().is_constant())
    throw std::domain_error("check_moments: Constant attenuation required");
  const cplx mu = h.att().mu();
  RangeReport rep;
  rep.tolerance = tol;
  const double dn = data_norm_inf(h);
  const int count = h.det().count();
  const double hs = h.det().step();
  const double s_max = h.det().s_max();
  for (int n = h.n_min(); n <= h.n_max(); ++n) {
    if (n == 0) continue;
    const cplx nu = static_cast<double>(sgn_harmonic(n)) * mu;
    const cplx* p = h.harmonic(n);
    auto weighted = [&](double s, int m) {
      cplx w = std::exp(-cplx(0.0, 1.0) * nu * s);
      for (int k = 0; k < m; ++k) w *= s;
      return w * interp_complex6(p, count, h.det().node(0), hs, s);
    };
    for (int m = 0; m < std::abs(n); ++m) {
      for (double r : r_list) {
        cplx val;
        double mass;
        if (r == 0.0) {
          // full line: trapezoid on the grid (compact support makes it spectral)
          val = cplx(0.0, 0.0);
          mass = 0.0;
          for (int i = 0; i < count; ++i) {
            const double s = h.det().node(i);
            const double w = (i == 0 || i == count - 1) ? 0.5 * hs : hs;
            cplx f = std::exp(-cplx(0.0, 1.0) * nu * s) * p[i];
            for (int k = 0; k < m; ++k) f *= s;
            val += w * f;
            mass += w * std::abs(f);
          }
        } else {
          val = integrate_adaptive([&](double s) { return weighted(s, m); }, r, s_max, 1e-12, 64, 512) +
                integrate_adaptive([&](double s) { return weighted(s, m); }, -s_max, -r, 1e-12, 64, 512);
          mass = std::abs(integrate_gl([&](double s) { return std::abs(weighted(s, m)); }, r, s_max, 256)) +
                 std::abs(integrate_gl([&](double s) { return std::abs(weighted(s, m)); }, -s_max, -r, 256));
        }
        const double scale = floor_scale(mass, dn);
        const double scaled = std::abs(val) / scale;
        rep.add({"moments", n, "m=" + std::to_string(m) + ",r=" + std::to_string(r), std::abs(val),
                 scale, scaled, scaled <= tol});
      }
    }
  }
  return rep;
}

RangeReport check_moments_derivative(const HarmonicSinogram& dpn, double tol) {
  if (!dpn.att().is_constant())
    throw std::domain_error("check_moments_derivative: Constant attenuation required");
  const cplx mu = dpn.att().mu();
  RangeReport rep;
  rep.tolerance = tol;
  const double dn = data_norm_inf(dpn);
  const int count = dpn.det().count();
  const double hs = dpn.det().step();
  for (int n = dpn.n_min(); n <= dpn.n_max(); ++n) {
    if (n == 0) continue;
    const cplx nu = static_cast<double>(sgn_harmonic(n)) * mu;
    const cplx* p = dpn.harmonic(n);
    for (int m = 0; m < std::abs(n); ++m) {
      cplx val(0.0, 0.0);
      double mass = 0.0;
      for (int i = 0; i < count; ++i) {
        const double s = dpn.det().node(i);
        const double w = (i == 0 || i == count - 1) ? 0.5 * hs : hs;
        cplx f = std::exp(-cplx(0.0, 1.0) * nu * s) * p[i];
        for (int k = 0; k < m; ++k) f *= s;
        val += w * f;
        mass += w * std::abs(f);
      }
      const double scale = floor_scale(mass, dn);
      const double scaled = std::abs(val) / scale;
      rep.add({"moments-derivative", n, "m=" + std::to_string(m), std::abs(val), scale, scaled,
               scaled <= tol});
    }
  }
  return rep;
}

RangeReport check_novikov_harmonic(const HarmonicSinogram& dpn, const std::vector<double>& r_list,
                                   double tol) {
  if (!dpn.att().is_constant())
    throw std::domain_error("check_novikov_harmonic: Constant attenuation required");
  const cplx mu = dpn.att().mu();
  const Attenuation neg = Attenuation::constant(-mu);
  RangeReport rep;
  rep.tolerance = tol;
  const double dn = data_norm_inf(dpn);
  const int count = dpn.det().count();
  const double hs = dpn.det().step();
  const double s_max = dpn.det().s_max();
  for (int n = dpn.n_min(); n <= dpn.n_max(); ++n) {
    const double sn = sgn_harmonic(n);
    const cplx* p = dpn.harmonic(n);
    for (double r : r_list) {
      if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("check_novikov_harmonic: r must lie in (0, 1)");
      cplx lhs(0.0, 0.0);
      double mass = 0.0;
      for (int i = 0; i < count; ++i) {
        const double s = dpn.det().node(i);
        const double w = (i == 0 || i == count - 1) ? 0.5 * hs : hs;
        // principal-branch evaluation; entire in s^2 - r^2, so the grid sum
        // sees a smooth integrand
        const cplx f = sn * ert_cheb_U(n - 1, s, r, neg, BranchConvention::C2) * p[i];
        lhs += w * f;
        mass += w * std::abs(f);
      }
      cplx rhs(0.0, 0.0);
      if (n != 0) {
        auto dp = [&](double s) { return interp_complex6(p, count, dpn.det().node(0), hs, s); };
        rhs = integrate_adaptive(
                  [&](double s) { return kernel_series(n, s, r, mu) * dp(s); }, -r, r, 1e-12, 64, 512);
        rhs += integrate_adaptive(
            [&](double u) {
              const double s = std::sqrt(r * r + u * u);
              return (u / s) * (kernel_series(n, s, r, mu) * dp(s) +
                                kernel_series(n, -s, r, mu) * dp(-s));
            },
            0.0, std::sqrt(s_max * s_max - r * r), 1e-12, 64, 512);
      }
      const double scale = floor_scale(mass, dn);
      const double scaled = std::abs(lhs - rhs) / scale;
      rep.add({"novikov", n, "r=" + std::to_string(r), std::abs(lhs - rhs), scale, scaled,
               scaled <= tol});
    }
  }
  return rep;
}

RangeReport check_fourier_evenness(const FourierSinogram& ft, double mu, const FourierBand& band,
                                   double tol) {
  RangeReport rep;
  rep.tolerance = tol;
  const double omega_max = std::max(std::abs(ft.omega(0)), std::abs(ft.omega(ft.omega_count() - 1)));
  const double cut = band.omega_cut_frac * omega_max;
  const double lo = std::abs(mu) + band.delta_band;
  for (int n = ft.n_min(); n <= ft.n_max(); ++n) {
    double raw = 0.0, scale = 0.0, dn = 0.0;
    for (int k = 0; k < ft.omega_count(); ++k) {
      dn = std::max(dn, std::abs(ft.at(n, k)));
      const double w = ft.omega(k);
      if (!(std::abs(w) > lo && std::abs(w) < cut)) continue;
      const cplx lhs = std::pow(cplx(mu + w, 0.0), n) * ft.at(n, k);
      const cplx rhs = std::pow(cplx(mu - w, 0.0), n) * ft.at(n, ft.mirror_index(k));
      raw = std::max(raw, std::abs(lhs - rhs));
      scale = std::max(scale, std::abs(std::pow(std::abs(mu) + std::abs(w), n) * ft.at(n, k)));
    }
    scale = floor_scale(scale, dn);
    const double scaled = raw / scale;
    rep.add({"fourier-evenness", n, "band", raw, scale, scaled, scaled <= tol});
  }
  return rep;
}

}  // namespace ert
