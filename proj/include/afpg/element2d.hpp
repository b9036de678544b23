#ifndef AFPG_ELEMENT2D_HPP
#define AFPG_ELEMENT2D_HPP

#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "afpg/poly.hpp"

// Biparabolic (Q2) Active Flux element on [-1/2, 1/2]^2 with nine DOFs:
// four nodes, four edge midpoints and the cell average.

namespace afpg {

/// Local DOF in half-cell units: r, s in {-1, 0, 1}. (0, 0) is the average,
/// (+-1, 0) and (0, +-1) edge midpoints, (+-1, +-1) nodes.
struct LocalDof {
  int r = 0;
  int s = 0;

  constexpr int index() const { return (r + 1) * 3 + (s + 1); }
  static constexpr LocalDof from_index(int k) { return {k / 3 - 1, k % 3 - 1}; }
  constexpr bool is_average() const { return r == 0 && s == 0; }
  friend constexpr bool operator==(LocalDof a, LocalDof b) { return a.r == b.r && a.s == b.s; }
};

inline constexpr LocalDof kAverage{0, 0};

template <class Scalar>
struct Element2D {
  std::array<Poly2<Scalar>, 9> basis;

  const Poly2<Scalar>& operator[](LocalDof d) const { return basis[d.index()]; }

  /// Point evaluation at (r/2, s/2), or the cell integral for the average.
  Scalar functional(LocalDof d, const Poly2<Scalar>& v) const {
    if (d.is_average()) return integrate2(v);
    return v(Scalar(d.r) / Scalar(2), Scalar(d.s) / Scalar(2));
  }

  template <class T>
  Element2D<T> cast() const {
    Element2D<T> e;
    for (int k = 0; k < 9; ++k) e.basis[k] = basis[k].template cast<T>();
    return e;
  }
};

/// Solves the 9x9 duality system in the tensor Legendre basis and checks the
/// result against the closed-form basis; throws std::logic_error on mismatch.
Element2D<Rational> build_element_2d();

/// Closed-form expressions of the nine basis functions.
Element2D<Rational> closed_form_basis_2d();

/// Representer of point evaluation at (r/2, s/2) within Q2.
template <class Scalar>
Poly2<Scalar> evaluation_kernel_2d(LocalDof p) {
  return tensor(evaluation_kernel<Scalar>(2, Scalar(p.r) / Scalar(2)),
                evaluation_kernel<Scalar>(2, Scalar(p.s) / Scalar(2)));
}

template <class Scalar>
Poly2<Scalar> reconstruct2d(const Element2D<Scalar>& element, const std::array<Scalar, 9>& dofs) {
  Poly2<Scalar> p;
  for (int k = 0; k < 9; ++k) p += element.basis[k] * dofs[k];
  return p;
}

// ---------------------------------------------------------------------------
// Test functions.

/// Vertical: edge x = x_{i+1/2}, support C_ij (A_plus) and C_{i+1,j} (A_minus).
/// Horizontal: edge y = y_{j+1/2}, support C_ij (A_plus) and C_{i,j+1} (A_minus).
enum class EdgeOrientation { Vertical, Horizontal };

/// alphas = (alpha_1, alpha_2, alpha_3). alpha_3 splits the self pairing,
/// alpha_1 and alpha_2 weight the edge's end nodes (upper/lower for vertical
/// edges, right/left for horizontal ones).
template <class Scalar>
struct EdgeTest2D {
  EdgeOrientation orientation = EdgeOrientation::Vertical;
  std::array<Scalar, 3> alphas{};
  Poly2<Scalar> A_plus;
  Poly2<Scalar> A_minus;
};

template <class Scalar>
EdgeTest2D<Scalar> build_edge_test(const std::array<Scalar, 3>& alphas,
                                   EdgeOrientation orientation = EdgeOrientation::Vertical) {
  const Scalar one(1), half = Scalar(1) / Scalar(2);
  const auto k = [](int r, int s) { return evaluation_kernel_2d<Scalar>({r, s}); };
  const auto& [a1, a2, a3] = alphas;
  EdgeTest2D<Scalar> t;
  t.orientation = orientation;
  t.alphas = alphas;
  t.A_plus = k(1, 1) * a1 + k(1, -1) * a2 + k(1, 0) * (half * (one + a3));
  t.A_minus = k(-1, 1) * (-a1) + k(-1, -1) * (-a2) + k(-1, 0) * (half * (one - a3));
  if (orientation == EdgeOrientation::Horizontal) {
    t.A_plus = t.A_plus.transposed();
    t.A_minus = t.A_minus.transposed();
  }
  return t;
}

/// Node (i+1/2, j+1/2) with support C_ij (pp), C_{i+1,j} (mp), C_{i,j+1} (pm)
/// and C_{i+1,j+1} (mm); the suffix names the node's position in that cell.
template <class Scalar>
struct NodeTest2D {
  std::array<Scalar, 11> alphas{};
  Poly2<Scalar> A_pp;
  Poly2<Scalar> A_mp;
  Poly2<Scalar> A_pm;
  Poly2<Scalar> A_mm;

  const Poly2<Scalar>& piece(int ci, int cj) const {
    if (ci == 0) return cj == 0 ? A_pp : A_pm;
    return cj == 0 ? A_mp : A_mm;
  }
};

/// alphas[0..10] hold alpha_1..alpha_11. Pairing table (values of inner2):
///   A_pp: B(1,0)=a1  B(0,1)=a2  B(1,-1)=a3  B(-1,1)=a4  B(1,1)=1/4+a9/4+a10
///   A_mp: B(-1,0)=-a1 B(-1,-1)=-a3 B(0,1)=a5  B(1,1)=a7  B(-1,1)=1/4+a9/4-a10
///   A_pm: B(0,-1)=-a2 B(-1,-1)=-a4 B(1,0)=a6  B(1,1)=a8  B(1,-1)=1/4-a9/4+a11
///   A_mm: B(0,-1)=-a5 B(-1,0)=-a6 B(1,-1)=-a7 B(-1,1)=-a8 B(-1,-1)=1/4-a9/4-a11
/// and zero against every other local basis function.
template <class Scalar>
NodeTest2D<Scalar> build_node_test(const std::array<Scalar, 11>& a) {
  const Scalar quarter = Scalar(1) / Scalar(4);
  const auto k = [](int r, int s) { return evaluation_kernel_2d<Scalar>({r, s}); };
  NodeTest2D<Scalar> t;
  t.alphas = a;
  t.A_pp = k(1, 0) * a[0] + k(0, 1) * a[1] + k(1, -1) * a[2] + k(-1, 1) * a[3] +
           k(1, 1) * (quarter + quarter * a[8] + a[9]);
  t.A_mp = k(-1, 0) * (-a[0]) + k(-1, -1) * (-a[2]) + k(0, 1) * a[4] + k(1, 1) * a[6] +
           k(-1, 1) * (quarter + quarter * a[8] - a[9]);
  t.A_pm = k(0, -1) * (-a[1]) + k(-1, -1) * (-a[3]) + k(1, 0) * a[5] + k(1, 1) * a[7] +
           k(1, -1) * (quarter - quarter * a[8] + a[10]);
  t.A_mm = k(0, -1) * (-a[4]) + k(-1, 0) * (-a[5]) + k(1, -1) * (-a[6]) + k(-1, 1) * (-a[7]) +
           k(-1, -1) * (quarter - quarter * a[8] - a[10]);
  return t;
}

/// Node parameters from the x/y upwind weights: the x-derivative weights the
/// left cells by 1/2 + (a10 + a11), the y-derivative the lower cells by
/// 1/2 + a9/2. `extra` holds alpha_1..alpha_8.
template <class Scalar>
std::array<Scalar, 11> node_alphas(const Scalar& beta_x, const Scalar& beta_y,
                                   const std::array<Scalar, 8>& extra = {}) {
  std::array<Scalar, 11> a{};
  for (int k = 0; k < 8; ++k) a[k] = extra[k];
  a[8] = Scalar(2) * beta_y;
  a[9] = beta_x / Scalar(2);
  a[10] = beta_x / Scalar(2);
  return a;
}

// ---------------------------------------------------------------------------
// Derivative stencils.

enum class DofClass { Average, EdgeX, EdgeY, Node };

/// Global DOF relative to an anchor cell (i, j): EdgeX(di, dj) is
/// q_{i+di+1/2, j+dj}, EdgeY is q_{i+di, j+dj+1/2}, Node is
/// q_{i+di+1/2, j+dj+1/2}.
struct DofRef {
  DofClass cls = DofClass::Average;
  int di = 0;
  int dj = 0;
  friend bool operator<(const DofRef& a, const DofRef& b) {
    return std::tie(a.cls, a.di, a.dj) < std::tie(b.cls, b.di, b.dj);
  }
  friend bool operator==(const DofRef& a, const DofRef& b) {
    return a.cls == b.cls && a.di == b.di && a.dj == b.dj;
  }
};

/// The global DOF seen as local DOF `d` of the cell at offset (ci, cj).
inline DofRef global_dof(int ci, int cj, LocalDof d) {
  if (d.is_average()) return {DofClass::Average, ci, cj};
  const int di = d.r == 1 ? ci : ci - 1;
  const int dj = d.s == 1 ? cj : cj - 1;
  if (d.s == 0) return {DofClass::EdgeX, di, cj};
  if (d.r == 0) return {DofClass::EdgeY, ci, dj};
  return {DofClass::Node, di, dj};
}

/// One-sided derivative term: w * (d/d axis of the reconstruction in the cell
/// at offset (ci, cj)) evaluated at that cell's point `at`.
template <class Scalar>
struct DerivTerm {
  int ci = 0;
  int cj = 0;
  LocalDof at;
  Scalar w{};
};

template <class Scalar>
struct FlatEntry {
  DofRef dof;
  Scalar w{};
};

/// (psi, d/d axis q_h) in two equivalent forms, both in units of 1/dx (Xi)
/// or 1/dy (Eta): a combination of one-sided point derivatives, and weights
/// over raw DOFs.
template <class Scalar>
struct DerivStencil2D {
  Axis axis = Axis::Xi;
  std::vector<DerivTerm<Scalar>> d_form;
  std::vector<FlatEntry<Scalar>> flat;
};

/// Support cell offsets and the local test function piece living on each.
template <class Scalar>
struct TestSupport {
  std::vector<std::pair<std::array<int, 2>, Poly2<Scalar>>> pieces;
};

template <class Scalar>
TestSupport<Scalar> support_of(const EdgeTest2D<Scalar>& t) {
  TestSupport<Scalar> s;
  s.pieces.push_back({{0, 0}, t.A_plus});
  if (t.orientation == EdgeOrientation::Vertical)
    s.pieces.push_back({{1, 0}, t.A_minus});
  else
    s.pieces.push_back({{0, 1}, t.A_minus});
  return s;
}

template <class Scalar>
TestSupport<Scalar> support_of(const NodeTest2D<Scalar>& t) {
  TestSupport<Scalar> s;
  for (int ci = 0; ci <= 1; ++ci)
    for (int cj = 0; cj <= 1; ++cj) s.pieces.push_back({{ci, cj}, t.piece(ci, cj)});
  return s;
}

/// Builds both forms of (psi, d/d axis q_h) for a test function given by its
/// support pieces. The d-form uses the pairings inner2(A, B_p) at the eight
/// boundary points (the average coefficient of d/d axis q_h is annihilated);
/// the flat form uses inner2(A, d/d axis B_s) directly.
template <class Scalar>
DerivStencil2D<Scalar> derivative_stencil_2d(const Element2D<Scalar>& element, const TestSupport<Scalar>& support,
                                             Axis axis) {
  DerivStencil2D<Scalar> st;
  st.axis = axis;
  std::map<DofRef, Scalar> flat;
  for (const auto& [cell, A] : support.pieces) {
    for (int k = 0; k < 9; ++k) {
      const LocalDof d = LocalDof::from_index(k);
      if (!d.is_average()) {
        const Scalar w = inner2(A, element.basis[k]);
        if (w != Scalar(0)) st.d_form.push_back({cell[0], cell[1], d, w});
      }
      const Scalar fw = inner2(A, diff2(element.basis[k], axis));
      if (fw != Scalar(0)) flat[global_dof(cell[0], cell[1], d)] += fw;
    }
  }
  for (const auto& [dof, w] : flat)
    if (w != Scalar(0)) st.flat.push_back({dof, w});
  return st;
}

template <class Scalar>
struct EdgeDerivStencils {
  DerivStencil2D<Scalar> normal;
  DerivStencil2D<Scalar> tangential;
};

template <class Scalar>
EdgeDerivStencils<Scalar> edge_derivative_stencils(const Element2D<Scalar>& element, const EdgeTest2D<Scalar>& test) {
  const auto support = support_of(test);
  const bool vertical = test.orientation == EdgeOrientation::Vertical;
  return {derivative_stencil_2d(element, support, vertical ? Axis::Xi : Axis::Eta),
          derivative_stencil_2d(element, support, vertical ? Axis::Eta : Axis::Xi)};
}

template <class Scalar>
struct NodeDerivStencils {
  DerivStencil2D<Scalar> x;
  DerivStencil2D<Scalar> y;
};

template <class Scalar>
NodeDerivStencils<Scalar> node_derivative_stencils(const Element2D<Scalar>& element, const NodeTest2D<Scalar>& test) {
  const auto support = support_of(test);
  return {derivative_stencil_2d(element, support, Axis::Xi), derivative_stencil_2d(element, support, Axis::Eta)};
}

template <class T, class Scalar>
DerivStencil2D<T> cast_stencil(const DerivStencil2D<Scalar>& s) {
  DerivStencil2D<T> out;
  out.axis = s.axis;
  for (const auto& t : s.d_form) out.d_form.push_back({t.ci, t.cj, t.at, scalar_cast<T>(t.w)});
  for (const auto& f : s.flat) out.flat.push_back({f.dof, scalar_cast<T>(f.w)});
  return out;
}

}  // namespace afpg

#endif  // AFPG_ELEMENT2D_HPP
