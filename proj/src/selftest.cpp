#include "ert/selftest.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "ert/chebyshev.hpp"
#include "ert/interp.hpp"
#include "ert/invert.hpp"
#include "ert/kernels.hpp"
#include "ert/phantom.hpp"
#include "ert/projector.hpp"
#include "ert/range_checks.hpp"

namespace ert {

void SelftestResult::add(const std::string& label, double value, double threshold) {
  const bool ok = value <= threshold;
  rows.push_back({label, value, threshold, ok});
  pass = pass && ok;
}

namespace {

std::string fmt_mu(cplx mu) {
  std::ostringstream os;
  os << mu.real() << (mu.imag() < 0 ? "" : "+") << mu.imag() << "i";
  return os.str();
}

SelftestResult suite_identities() {
  SelftestResult res{"identities"};
  std::mt19937_64 rng(20240811);
  std::uniform_real_distribution<double> us(-1.25, 1.25), ur(0.6, 1.2), um(-1.0, 1.0);
  std::uniform_int_distribution<int> un(-6, 6);
  double e16 = 0.0, e17 = 0.0, e18 = 0.0, e_mu0 = 0.0, e_eta = 0.0, e_branch = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = un(rng);
    const double s = us(rng);
    const double r = ur(rng);
    if (std::abs(s * s - r * r) < 1e-4) continue;  // stay off the degenerate band
    const cplx mu(um(rng), um(rng));
    for (BranchConvention conv : {BranchConvention::C1, BranchConvention::C2}) {
      // (1.6)
      e16 = std::max(e16, std::abs(ert_cheb_T(n, -s, r, mu, conv) -
                                   (n & 1 ? -1.0 : 1.0) * ert_cheb_T(n, s, r, -mu, conv)));
      e16 = std::max(e16, std::abs(ert_cheb_T(n, s, r, -mu, conv) - ert_cheb_T(-n, s, r, mu, conv)));
      // (1.7) with subscript m = n-1
      e17 = std::max(e17, std::abs(ert_cheb_U(n - 1, -s, r, mu, conv) -
                                   ((n - 1) & 1 ? -1.0 : 1.0) * ert_cheb_U(n - 1, s, r, -mu, conv)));
      e17 = std::max(e17, std::abs(ert_cheb_U(n - 1, s, r, -mu, conv) + ert_cheb_U(-n - 1, s, r, mu, conv)));
      // mu = 0 reduction (|s/r| kept moderate by the sampling ranges)
      e_mu0 = std::max(e_mu0, std::abs(ert_cheb_T(n, s, r, cplx(0, 0), conv) - cheb_T_classical(n, s / r)));
      e_mu0 = std::max(e_mu0, std::abs(ert_cheb_U(n - 1, s, r, cplx(0, 0), conv) - cheb_U_classical(n - 1, s / r)));
    }
    // (1.8), exterior region only
    if (s * s > r * r + 1e-4) {
      const double u = std::sqrt(s * s - r * r);
      const cplx T = ert_cheb_T(n, s, r, mu);
      const cplx U = ert_cheb_U(n - 1, s, r, mu);
      const double apn = std::pow((s + u) / r, n), amn = std::pow((s - u) / r, n);
      const cplx rhs_p = (r / u) * std::exp(cplx(0, 1) * mu * u) * apn;
      const cplx rhs_m = -(r / u) * std::exp(-cplx(0, 1) * mu * u) * amn;
      e18 = std::max(e18, std::abs(U + (r / u) * T - rhs_p));
      e18 = std::max(e18, std::abs(U - (r / u) * T - rhs_m));
    }
    // constant-eta consistency; the profile grid must cover every radius the
    // evaluation touches, here up to max(|s|, r)
    {
      RadialGrid g = RadialGrid::uniform(64, 1.3);
      Attenuation eta = Attenuation::radial(g, std::vector<cplx>(64, mu));
      e_eta = std::max(e_eta, std::abs(ert_cheb_T(n, s, r, eta) - ert_cheb_T(n, s, r, mu)));
    }
    // exterior branch insensitivity
    if (s * s > r * r) {
      e_branch = std::max(e_branch,
                          std::abs(ert_cheb_T(n, s, r, mu, BranchConvention::C1) -
                                   ert_cheb_T(n, s, r, mu, BranchConvention::C2)));
    }
  }
  res.add("T relations (1.6), 1000 samples, both conventions", e16, 1e-10);
  res.add("U relations (1.7)", e17, 1e-10);
  res.add("b+/b- splitting (1.8), exterior", e18, 1e-10);
  res.add("mu=0 reduction to classical T_n, U_n", e_mu0, 1e-12);
  res.add("constant-profile radial == constant mu", e_eta, 1e-12);
  res.add("exterior C1 == C2", e_branch, 0.0);
  return res;
}

SelftestResult suite_orthogonality() {
  SelftestResult res{"orthogonality"};
  const double half_pi = M_PI / 2.0;
  const cplx mus[] = {{0, 0}, {0.5, 0}, {0, 1}, {1, 0.5}};
  const double st[][2] = {{0.5, 1.0}, {0.3, 0.9}, {0.1, 0.4}};
  for (int n : {0, 1, 2, 5, 10}) {
    for (const cplx& mu : mus) {
      for (const auto& p : st) {
        const cplx v = orthogonality_integral(n, p[0], p[1], Attenuation::constant(mu));
        std::ostringstream label;
        label << "n=" << n << " mu=" << fmt_mu(mu) << " (s,t)=(" << p[0] << "," << p[1] << ")";
        res.add(label.str(), std::abs(v - half_pi) / half_pi, 1e-6);
      }
    }
  }
  return res;
}

SelftestResult suite_kernels() {
  SelftestResult res{"kernels"};
  const cplx mu(0.3, 0.2);
  const double pts[][2] = {{0.6, 0.3}, {0.5, 1.0}, {0.8, -0.45}, {0.7, -1.1}};
  for (int n = -6; n <= 6; ++n) {
    double worst = 0.0;
    for (const auto& p : pts) {
      const cplx oracle = kernel_oracle(n, p[0], p[1], mu, n >= 0 ? 1 : -1);
      worst = std::max(worst, std::abs(kernel_unified(n, p[0], p[1], mu) - oracle));
    }
    res.add("kernel_unified vs oracle, n=" + std::to_string(n), worst, 1e-6);
  }
  return res;
}

SelftestResult suite_roundtrip() {
  SelftestResult res{"roundtrip"};
  const cplx mu(0.3, 0.2);
  const int nmax = 5;
  const PhantomSpec spec = PhantomSpec::default_test();
  const RadialGrid fine = RadialGrid::uniform(256);
  const PolarImage truth = phantom_harmonics(spec, fine, -nmax, nmax);
  const DetectorGrid det(512, 1.2);
  const Attenuation att = Attenuation::constant(mu);
  const HarmonicSinogram pn = project_harmonic(truth, att, det);
  const HarmonicSinogram dpn = derivative_s(pn);
  const RadialGrid recon = RadialGrid::uniform(96);
  const PolarImage ref = phantom_harmonics(spec, recon, -nmax, nmax);
  for (InversionMethod m : {InversionMethod::Unified, InversionMethod::InteriorSeries,
                            InversionMethod::ExteriorSeries, InversionMethod::CormackExterior}) {
    const PolarImage rec = invert(dpn, recon, m);
    double worst = 0.0;
    for (int n = -nmax; n <= nmax; ++n) {
      std::vector<cplx> a(static_cast<size_t>(recon.count())), b(a.size());
      for (int j = 0; j < recon.count(); ++j) {
        a[static_cast<size_t>(j)] = rec.at(n, j);
        b[static_cast<size_t>(j)] = ref.at(n, j);
      }
      worst = std::max(worst, rel_l2(a, b, recon));
    }
    res.add("round trip rel L2, method=" + to_string(m) + ", |n|<=" + std::to_string(nmax),
            worst, 1e-2);
  }
  return res;
}

SelftestResult suite_range() {
  SelftestResult res{"range"};
  const cplx mu(0.3, 0.2);
  const int nmax = 5;
  const PhantomSpec spec = PhantomSpec::default_test();
  const RadialGrid fine = RadialGrid::uniform(256);
  const PolarImage truth = phantom_harmonics(spec, fine, -nmax, nmax);
  const DetectorGrid det(512, 1.2);
  const HarmonicSinogram pn = project_harmonic(truth, Attenuation::constant(mu), det);
  const HarmonicSinogram pm = project_harmonic(truth, Attenuation::constant(-mu), det);
  const HarmonicSinogram dpn = derivative_s(pn);

  auto worst_of = [](const RangeReport& rep) {
    double w = 0.0;
    for (const RangeEntry& e : rep.entries) w = std::max(w, e.scaled);
    return w;
  };
  res.add("evenness (1.10)", worst_of(check_evenness(pn, pm)), 1e-8);
  res.add("moments (1.11), r=0", worst_of(check_moments(pn, {0.0})), 1e-8);
  res.add("derivative moments (1.12)", worst_of(check_moments_derivative(dpn)), 1e-7);
  res.add("harmonic range condition", worst_of(check_novikov_harmonic(dpn, {0.3, 0.6, 0.9})), 1e-6);
  const HarmonicSinogram pr = project_harmonic(truth, Attenuation::constant(cplx(0.5, 0.0)), det);
  FourierBand band;
  band.omega_cut_frac = 0.3;
  res.add("fourier evenness (real mu=0.5)",
          worst_of(check_fourier_evenness(fourier_in_s(pr), 0.5, band)), 1e-3);
  return res;
}

}  // namespace

std::vector<std::string> selftest_suites() {
  return {"identities", "orthogonality", "kernels", "roundtrip", "range"};
}

SelftestResult run_selftest(const std::string& suite) {
  if (suite == "identities") return suite_identities();
  if (suite == "orthogonality") return suite_orthogonality();
  if (suite == "kernels") return suite_kernels();
  if (suite == "roundtrip") return suite_roundtrip();
  if (suite == "range") return suite_range();
  throw std::invalid_argument("unknown selftest suite '" + suite + "'");
}

}  // namespace ert
