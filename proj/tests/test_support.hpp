#ifndef AFPG_TEST_SUPPORT_HPP
#define AFPG_TEST_SUPPORT_HPP

// Quadrature oracles and random data shared by the test binaries. The oracles
// work in double precision and never call the exact inner products.

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <map>
#include <random>

#include "afpg/element2d.hpp"
#include "afpg/quadrature.hpp"

namespace afpg::testing {

inline double quad1(const Poly1<double>& a, const Poly1<double>& b, int n = 8) {
  return gauss_rule(n).integrate([&](double x) { return a(x) * b(x); });
}

inline double quad2(const Poly2<double>& a, const Poly2<double>& b, int n = 6) {
  return gauss_rule(n).integrate2([&](double x, double y) { return a(x, y) * b(x, y); });
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline Rational random_rational(std::mt19937& rng, int range = 9, int max_den = 7) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  return Rational(num(rng)) / Rational(den(rng));
}

inline double random_double(std::mt19937& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Values of global DOFs around an anchor cell (cell (0, 0) is centred at
/// the origin, unit spacing). Values are produced by a generator on first use;
/// with wrap > 0 offsets are taken modulo wrap (periodic patch).
class Field2D {
 public:
  Field2D(std::function<double(DofRef)> gen, int wrap) : gen_(std::move(gen)), wrap_(wrap) {}

  static Field2D random(unsigned seed, int wrap) {
    auto rng = std::make_shared<std::mt19937>(seed);
    return Field2D([rng](DofRef) { return random_double(*rng); }, wrap);
  }

  /// DOFs of a global function: point values, and cell averages by a
  /// 3-point rule per axis (exact for Q2).
  static Field2D sample(std::function<double(double, double)> f) {
    return Field2D(
        [f](DofRef d) {
          switch (d.cls) {
            case DofClass::Average:
              return gauss_rule(3).integrate2([&](double x, double y) { return f(d.di + x, d.dj + y); });
            case DofClass::EdgeX:
              return f(d.di + 0.5, d.dj);
            case DofClass::EdgeY:
              return f(d.di, d.dj + 0.5);
            case DofClass::Node:
              break;
          }
          return f(d.di + 0.5, d.dj + 0.5);
        },
        0);
  }

  double operator()(DofRef d) {
    if (wrap_ > 0) {
      d.di = ((d.di % wrap_) + wrap_) % wrap_;
      d.dj = ((d.dj % wrap_) + wrap_) % wrap_;
    }
    auto it = values_.find(d);
    if (it == values_.end()) it = values_.emplace(d, gen_(d)).first;
    return it->second;
  }

  /// Reconstruction of the cell at offset (ci, cj).
  Poly2<double> cell(const Element2D<double>& e, int ci, int cj) {
    std::array<double, 9> dofs{};
    for (int k = 0; k < 9; ++k) dofs[k] = (*this)(global_dof(ci, cj, LocalDof::from_index(k)));
    return reconstruct2d(e, dofs);
  }

  /// One-sided derivative of the reconstruction in cell (ci, cj) at local point p.
  double deriv(const Element2D<double>& e, int ci, int cj, LocalDof p, Axis axis) {
    return diff2(cell(e, ci, cj), axis)(p.r / 2.0, p.s / 2.0);
  }

 private:
  std::function<double(DofRef)> gen_;
  int wrap_;
  std::map<DofRef, double> values_;
};

/// Value of either stencil form on a field.
inline double apply_flat(const DerivStencil2D<double>& s, Field2D& f) {
  double acc = 0;
  for (const auto& e : s.flat) acc += e.w * f(e.dof);
  return acc;
}

inline double apply_d_form(const DerivStencil2D<double>& s, const Element2D<double>& e, Field2D& f) {
  double acc = 0;
  for (const auto& t : s.d_form) {
    acc += t.w * f.deriv(e, t.ci, t.cj, t.at, s.axis);
  }
  return acc;
}

/// Direct quadrature of sum over support cells of (A, d/d axis q_h).
inline double quad_pairing(const TestSupport<double>& support, const Element2D<double>& e, Field2D& f,
                           Axis axis) {
  double acc = 0;
  for (const auto& [cell, A] : support.pieces) acc += quad2(A, diff2(f.cell(e, cell[0], cell[1]), axis));
  return acc;
}

}  // namespace afpg::testing

#endif  // AFPG_TEST_SUPPORT_HPP
