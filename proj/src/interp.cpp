#include "ert/interp.hpp"

#include <algorithm>
#include <cmath>

namespace ert {

cplx interp_complex(const cplx* values, int count, double first, double step, double x,
                    bool extrapolate_low) {
  if (count < 4) throw std::length_error("interp_complex: need at least 4 samples");
  if (!(step > 0.0)) throw std::invalid_argument("interp_complex: grid must be uniform with step > 0");
  const double last = first + step * (count - 1);
  if (x > last) return cplx(0.0, 0.0);
  if (x < first && !extrapolate_low) return cplx(0.0, 0.0);

  int j = static_cast<int>(std::floor((x - first) / step));
  // stencil [j-1, j+2], clamped at the boundaries
  int j0 = std::clamp(j - 1, 0, count - 4);
  const double t = (x - (first + step * j0)) / step;  // in stencil-local units
  // Lagrange weights at local coordinates 0,1,2,3
  const double l0 = -(t - 1.0) * (t - 2.0) * (t - 3.0) / 6.0;
  const double l1 = t * (t - 2.0) * (t - 3.0) / 2.0;
  const double l2 = -t * (t - 1.0) * (t - 3.0) / 2.0;
  const double l3 = t * (t - 1.0) * (t - 2.0) / 6.0;
  return values[j0] * l0 + values[j0 + 1] * l1 + values[j0 + 2] * l2 + values[j0 + 3] * l3;
}

cplx interp_complex6(const cplx* values, int count, double first, double step, double x) {
  if (count < 6) throw std::length_error("interp_complex6: need at least 6 samples");
  const double last = first + step * (count - 1);
  if (x < first || x > last) return cplx(0.0, 0.0);
  int j = static_cast<int>(std::floor((x - first) / step));
  int j0 = std::clamp(j - 2, 0, count - 6);
  const double t = (x - (first + step * j0)) / step;
  cplx out(0.0, 0.0);
  for (int i = 0; i < 6; ++i) {
    double li = 1.0;
    for (int m = 0; m < 6; ++m)
      if (m != i) li *= (t - m) / (i - m);
    out += values[j0 + i] * li;
  }
  return out;
}

HarmonicSinogram derivative_s(const HarmonicSinogram& h) {
  const int count = h.det().count();
  if (count < 5) throw std::length_error("derivative_s: need at least 5 detector nodes");
  const double hs = h.det().step();
  HarmonicSinogram out(h.n_min(), h.n_max(), h.det(), h.att());
  for (int n = h.n_min(); n <= h.n_max(); ++n) {
    const cplx* p = h.harmonic(n);
    cplx* d = out.harmonic(n);
    auto at = [&](int i) -> cplx {
      return (i < 0 || i >= count) ? cplx(0.0, 0.0) : p[i];
    };
    for (int i = 0; i < count; ++i)
      d[i] = (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) / (12.0 * hs);
  }
  return out;
}

}  // namespace ert
