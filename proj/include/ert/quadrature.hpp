#pragma once

#include <functional>
#include <vector>

#include "ert/types.hpp"

namespace ert {

struct GaussLegendre {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

// Cached Gauss-Legendre rule of the given order.
const GaussLegendre& gauss_legendre(int order);

template <class F>
cplx integrate_gl(F&& f, double a, double b, int order) {
  const GaussLegendre& gl = gauss_legendre(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  cplx acc(0.0, 0.0);
  for (size_t i = 0; i < gl.nodes.size(); ++i)
    acc += gl.weights[i] * f(mid + half * gl.nodes[i]);
  return half * acc;
}

// Order-doubling Gauss-Legendre until two consecutive levels agree to reltol
// (relative to the result magnitude, floored by abstol).
template <class F>
cplx integrate_adaptive(F&& f, double a, double b, double reltol = 1e-10, int start_order = 32,
                        int max_order = 2048, double abstol = 1e-300) {
  if (a == b) return cplx(0.0, 0.0);
  cplx prev = integrate_gl(f, a, b, start_order);
  for (int order = 2 * start_order; order <= max_order; order *= 2) {
    const cplx cur = integrate_gl(f, a, b, order);
    if (std::abs(cur - prev) <= reltol * std::abs(cur) + abstol) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace ert
