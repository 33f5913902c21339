#pragma once

#include <vector>

#include "ert/chebyshev.hpp"
#include "ert/types.hpp"

namespace ert {

// Closed-form unified inversion kernel:
//   |s| < r : (1/2r) sgn(n) U~_{n-1}(s,r,-mu)
//   |s| > r : (1/2r) [sgn(n) U~_{n-1}(s,r,-mu) - sgn(s) r/sqrt(s^2-r^2) T~_n(s,r,-mu)]
// The interior U~ is the principal-branch (continuation) evaluation; under
// the shipped C1 default that is the flipped pairing, which is what the
// Plemelj evaluation of the contour integrals produces.
cplx kernel_unified(int n, double r, double s, cplx mu,
                    BranchConvention conv = BranchConvention::C1);

// Truncated-exponential series kernel
//   E_n(s, r) = e^{-i sgn(n) mu s} sum_{k=0}^{|n|-1} (sgn(n) i mu r)^k / k! U_{|n|-k-1}(s/r);
// empty sum (0) for n = 0. This is the z=0 residue of the opposite-sign
// contour kernel and appears in the series inversion formulas and the
// harmonic range condition.
cplx kernel_series(int n, double s, double r, cplx mu);

// Numerical contour oracle for the kernels:
//   K_n^{+/-}(r,s,mu) = (1/2pi) int_0^{2pi} e^{+/- i mu (s - r e^{i th})} /
//                       (2 r cos th - 2 s) e^{+/- i n th} dth
// evaluated as (1/r) (1/2pi i) oint e^{+/- i mu(s-rz)}/(z^2-2(s/r)z+1) z^{+/-n} dz
// by trapezoid quadrature on circles. For |s| < r the poles sit on the unit
// circle and the principal value is the average of the |z| = 1-delta and
// |z| = 1+delta contours, extrapolated over delta_seq; for |s| > r a single
// |z| = 1 quadrature suffices.
cplx kernel_oracle(int n, double r, double s, cplx mu, int sign,
                   const std::vector<double>& delta_seq = {0.08, 0.04, 0.02});

}  // namespace ert
