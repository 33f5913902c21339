#pragma once

#include "ert/types.hpp"

namespace ert {

// Cubic (4-point Lagrange) interpolation of a profile sampled on the uniform
// grid x_j = first + j*step. Exact on cubics sampled on the grid; returns the
// stored sample exactly at a node; returns 0 outside [first, last] unless
// extrapolate_low is set, in which case the boundary cubic extends below the
// first node (used for radial attenuation profiles near r = 0).
cplx interp_complex(const cplx* values, int count, double first, double step, double x,
                    bool extrapolate_low = false);

inline cplx interp_complex(const std::vector<cplx>& values, double first, double step, double x) {
  return interp_complex(values.data(), static_cast<int>(values.size()), first, step, x);
}

// 6-point Lagrange variant, one order more accurate; used by the range
// checkers where the residual targets are tighter than cubic error allows.
cplx interp_complex6(const cplx* values, int count, double first, double step, double x);

// p'_n by 4th-order central differences with zero extension beyond the grid
// (valid for compactly supported data with s_max > 1).
HarmonicSinogram derivative_s(const HarmonicSinogram& h);

}  // namespace ert
