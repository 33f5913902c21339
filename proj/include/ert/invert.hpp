#pragma once

#include "ert/chebyshev.hpp"
#include "ert/types.hpp"

namespace ert {

enum class InversionMethod { Unified, InteriorSeries, ExteriorSeries, CormackExterior };

InversionMethod inversion_method_from_string(const std::string& name);
std::string to_string(InversionMethod m);

// All methods take the s-derivative sinogram p'_n (from derivative_s) and
// reconstruct f_n on the given radial grid. CormackExterior is the only
// method accepting Radial attenuation; it uses s > 0 data only. The others
// require Constant attenuation.
//
// Singular weights are never integrated directly: the |s| > r integrals use
// the exact substitution s = +/- sqrt(r^2 + u^2), with p'_n interpolated.
PolarImage invert_unified(const HarmonicSinogram& dpn, const RadialGrid& grid,
                          BranchConvention conv = BranchConvention::C1);
PolarImage invert_interior_series(const HarmonicSinogram& dpn, const RadialGrid& grid,
                                  BranchConvention conv = BranchConvention::C1);
PolarImage invert_exterior_series(const HarmonicSinogram& dpn, const RadialGrid& grid,
                                  BranchConvention conv = BranchConvention::C1);
PolarImage invert_cormack_exterior(const HarmonicSinogram& dpn, const RadialGrid& grid,
                                   BranchConvention conv = BranchConvention::C1);

PolarImage invert(const HarmonicSinogram& dpn, const RadialGrid& grid, InversionMethod method,
                  BranchConvention conv = BranchConvention::C1);

// f_n(0): quadratic extrapolation of the n = 0 profile (f_n(0) = 0 for n != 0
// by smoothness).
cplx central_value(const PolarImage& img, int n);

}  // namespace ert
