#pragma once

#include <functional>

#include "ert/chebyshev.hpp"
#include "ert/phantom.hpp"
#include "ert/types.hpp"

namespace ert {

using Field = std::function<cplx(double, double)>;

// Direct line-integral ERT (the brute-force oracle):
//   p(s, theta) = int f(s theta_v + t theta_perp) w(t) dt,
// w(t) = e^{t mu} for Constant attenuation and e^{sgn(t) a(s, sqrt(s^2+t^2), eta)}
// for Radial. Rays are integrated over t in [-sqrt(1-s^2), sqrt(1-s^2)];
// |s| >= 1 gives exactly 0.
Sinogram project_direct(const Field& f, const DetectorGrid& det, const AngleGrid& ang,
                        const Attenuation& att, double reltol = 1e-9);

// p_n(s_i) = (1/K) sum_k p(s_i, theta_k) e^{-i n theta_k}.
HarmonicSinogram decompose_angular(const Sinogram& sino, int n_min, int n_max);

// Pointwise Fourier synthesis back to a sinogram.
Sinogram synthesize_angular(const HarmonicSinogram& h, const AngleGrid& ang);

// Field value at (x, y) from radial harmonic profiles (cubic interpolation in r).
cplx synthesize_at(const PolarImage& img, double x, double y);

// Harmonic forward operator:
//   p_n(s) = 2 int_0^{sqrt(1-s^2)} T~_n(s, sqrt(s^2+t^2), att) f_n(sqrt(s^2+t^2)) dt,
// the substitution r = sqrt(s^2+t^2) removing the 1/sqrt(r^2-s^2) endpoint
// singularity exactly. Coefficients are normalized to match decompose_angular.
HarmonicSinogram project_harmonic(const PolarImage& img, const Attenuation& att,
                                  const DetectorGrid& det,
                                  BranchConvention conv = BranchConvention::C1,
                                  double reltol = 1e-10);

// Zero-padded discrete approximation of p~_n(omega) = int p_n(s) e^{-i s omega} ds.
// Frequency grid is uniform and symmetric about 0 with span ~pi/h_s.
FourierSinogram fourier_in_s(const HarmonicSinogram& h, int pad_factor = 4);

}  // namespace ert
