#ifndef AFPG_QUADRATURE_HPP
#define AFPG_QUADRATURE_HPP

#include <vector>

namespace afpg {

/// Gauss-Legendre rule on [-1/2, 1/2]; weights sum to 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (int q = 0; q < size(); ++q) acc += weights[q] * f(nodes[q]);
    return acc;
  }

  template <class F>
  double integrate2(F&& f) const {
    double acc = 0.0;
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < size(); ++b) acc += weights[a] * weights[b] * f(nodes[a], nodes[b]);
    return acc;
  }
};

/// n-point rule, exact for polynomials of degree <= 2n-1. Requires 1 <= n <= 16.
const QuadratureRule& gauss_rule(int n);

}  // namespace afpg

#endif  // AFPG_QUADRATURE_HPP
