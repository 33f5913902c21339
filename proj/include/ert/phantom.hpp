#pragma once

#include <string>
#include <vector>

#include "ert/types.hpp"

namespace ert {

// Smooth bump tied to a single harmonic: f_n(r) = amplitude * r^{|n|} (1-r^2)^q.
struct HarmonicBump {
  int n = 0;
  int q = 3;
  cplx amplitude{1.0, 0.0};
};

// Radially symmetric bump centered off the origin:
// amplitude * (1 - |p-c|^2/rho^2)^q inside the bump, 0 outside.
struct OffCenterBump {
  double x0 = 0.0, y0 = 0.0;
  double radius = 0.3;
  int q = 3;
  cplx amplitude{1.0, 0.0};
};

struct PhantomSpec {
  std::vector<HarmonicBump> harmonics;
  std::vector<OffCenterBump> bumps;

  // Throws if any term's support escapes the open unit disk or q < 3.
  void validate() const;

  std::string to_json() const;
  static PhantomSpec from_json(const std::string& text);

  // Harmonic bumps at n in {0, 1, -1, 2, 5} plus one off-center bump;
  // exercises both sgn(n) branches including n = -1.
  static PhantomSpec default_test();
};

cplx eval_phantom_cartesian(const PhantomSpec& spec, double x, double y);

// Exact harmonics for HarmonicBump terms; angular Fourier analysis (spectrally
// accurate) for OffCenterBump terms.
PolarImage phantom_harmonics(const PhantomSpec& spec, const RadialGrid& grid, int n_min, int n_max);

}  // namespace ert
