#pragma once

#include "ert/types.hpp"

namespace ert {

// Interior-region (|s| < r) pairing of the exponential and phase factors in
// the exponential Chebyshev functions. The two conventions differ by
// mu -> -mu in the interior only and coincide for |s| >= r.
//   C1: pairs e^{+mu*w} with e^{+i n phi}, w = sqrt(r^2-s^2) -- the pairing
//       the forward transform produces (shipped default).
//   C2: pairs e^{-mu*w} with e^{+i n phi} -- the principal-branch evaluation,
//       i.e. the analytic continuation in s^2-r^2 of the exterior form.
enum class BranchConvention { C1, C2 };

inline BranchConvention flipped(BranchConvention c) {
  return c == BranchConvention::C1 ? BranchConvention::C2 : BranchConvention::C1;
}

// Classical Chebyshev polynomials, stable for |x| <= 1 (trig form) and
// |x| > 1 (hyperbolic form).
double cheb_T_classical(int m, double x);
double cheb_U_classical(int m, double x);  // m >= -1, U_{-1} = 0

// Attenuation path integral a(s, r, eta):
//   |s| <= r : integral of eta(sqrt(s^2+t^2)) over t in [0, sqrt(r^2-s^2)]
//   |s| >  r : i*sqrt(s^2-r^2) * integral of eta(sqrt((1-tau^2)s^2+tau^2 r^2))
// For Constant attenuation both reduce to closed forms.
cplx atten_path_a(double s, double r, const Attenuation& eta);

// Exponential Chebyshev functions T~_n(s,r,mu) and U~_{n-1}(s,r,mu) for
// Constant or Radial attenuation. Near |s| = r the closed forms degenerate
// and a Taylor series in sigma = s^2 - r^2 takes over.
cplx ert_cheb_T(int n, double s, double r, const Attenuation& att,
                BranchConvention conv = BranchConvention::C1);
cplx ert_cheb_U(int nm1, double s, double r, const Attenuation& att,
                BranchConvention conv = BranchConvention::C1);

// Convenience overloads for constant mu.
cplx ert_cheb_T(int n, double s, double r, cplx mu, BranchConvention conv = BranchConvention::C1);
cplx ert_cheb_U(int nm1, double s, double r, cplx mu, BranchConvention conv = BranchConvention::C1);

// Orthogonality integral of the exponential Chebyshev functions,
//   int_s^t  T~_n(t,r,mu)/sqrt(t^2-r^2) * T~_n(s,r,mu)/sqrt(r^2-s^2) r dr,
// 0 < s < t. Both endpoint singularities are removed exactly by splitting at
// the midpoint and substituting r = sqrt(s^2+v^2) / r = sqrt(t^2-v^2).
// The interior factor uses the principal (C2) evaluation, which is the one
// the identity holds for.
cplx orthogonality_integral(int n, double s, double t, const Attenuation& att);

}  // namespace ert
