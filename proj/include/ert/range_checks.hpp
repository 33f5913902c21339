#pragma once

#include <string>
#include <vector>

#include "ert/types.hpp"

namespace ert {

struct RangeEntry {
  std::string check;
  int n = 0;
  std::string param;   // "m=..,r=.." / "r=.." / "band"
  double raw = 0.0;    // |residual|
  double scale = 0.0;  // L1 mass of the integrand (floored)
  double scaled = 0.0;
  bool pass = false;
};

struct RangeReport {
  double tolerance = 0.0;
  std::vector<RangeEntry> entries;
  bool pass = true;

  void add(RangeEntry e);
  void merge(const RangeReport& other);
  std::string to_json(bool with_timestamp = true) const;
};

// Evenness (p_n(-s, mu) = (-1)^n p_n(s, -mu)): needs data at mu and at -mu on
// the same grids.
RangeReport check_evenness(const HarmonicSinogram& h_plus, const HarmonicSinogram& h_minus,
                           double tol = 1e-8);

// Moment condition: int_{|s|>=r} s^m e^{-i sgn(n) mu s} p_n(s) ds for
// 0 <= m < |n| and each r in r_list. (Vanishes for r = 0; the paper's claim
// for r > 0 does not hold numerically -- the residuals are reported as
// computed either way.)
RangeReport check_moments(const HarmonicSinogram& h, const std::vector<double>& r_list,
                          double tol = 1e-8);

// Derivative moment condition (full line, data p'_n).
RangeReport check_moments_derivative(const HarmonicSinogram& dpn, double tol = 1e-7);

// Harmonic range condition linking the unified and series kernels:
//   int sgn(n) U~_{n-1}(s, r, -mu) p'_n ds  ==  int E_n(s, r) p'_n ds,
// both over the full line (each side vanishes on range data; the kernels
// differ pointwise, so perturbations are detected).
RangeReport check_novikov_harmonic(const HarmonicSinogram& dpn, const std::vector<double>& r_list,
                                   double tol = 1e-6);

struct FourierBand {
  double delta_band = 0.1;       // exclude |omega| <= |mu| + delta_band
  double omega_cut_frac = 0.75;  // upper cut as a fraction of pi/h_s
};

// Fourier evenness (mu + omega)^n p~_n(omega) = (mu - omega)^n p~_n(-omega),
// |omega| > |mu|, real mu only.
RangeReport check_fourier_evenness(const FourierSinogram& ft, double mu,
                                   const FourierBand& band = {}, double tol = 1e-3);

}  // namespace ert
