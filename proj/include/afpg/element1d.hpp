#ifndef AFPG_ELEMENT1D_HPP
#define AFPG_ELEMENT1D_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "afpg/poly.hpp"

namespace afpg {

/// Moment weight A_k in xi units, so that sigma_k(v) = inner1(A_k, v).
template <class Scalar>
struct MomentWeight {
  int k = 0;
  Poly1<Scalar> poly;
};

/// Only the classical monomial weights A_k = (k+1) 2^k xi^k are provided.
enum class MomentFamily { Monomial };

/// Active Flux element of degree K on [-1/2, 1/2].
///
/// Local DOFs are ordered (left point, moments 0..K-2, right point); `basis(s)`
/// is dual to that ordering: functional(r, basis(s)) == delta_rs.
template <class Scalar>
struct Element1D {
  int K = 2;
  Poly1<Scalar> basis_left;
  Poly1<Scalar> basis_right;
  std::vector<Poly1<Scalar>> basis_moments;
  std::vector<MomentWeight<Scalar>> moment_weights;

  int dofs() const { return K + 1; }

  const Poly1<Scalar>& basis(int s) const {
    if (s == 0) return basis_left;
    if (s == K) return basis_right;
    return basis_moments.at(s - 1);
  }

  Scalar functional(int r, const Poly1<Scalar>& v) const {
    const Scalar half = Scalar(1) / Scalar(2);
    if (r == 0) return v(-half);
    if (r == K) return v(half);
    return inner1(moment_weights.at(r - 1).poly, v);
  }

  template <class T>
  Element1D<T> cast() const {
    Element1D<T> e;
    e.K = K;
    e.basis_left = basis_left.template cast<T>();
    e.basis_right = basis_right.template cast<T>();
    for (const auto& b : basis_moments) e.basis_moments.push_back(b.template cast<T>());
    for (const auto& w : moment_weights) e.moment_weights.push_back({w.k, w.poly.template cast<T>()});
    return e;
  }
};

/// Builds the element for K >= 2; throws std::invalid_argument otherwise.
Element1D<Rational> build_element(int K, MomentFamily family = MomentFamily::Monomial);

/// Local point test functions A_{+1/2} (left cell of the interface) and
/// A_{-1/2} (right cell), both of degree K.
template <class Scalar>
struct PointTest1D {
  Scalar alpha{};
  Poly1<Scalar> A_plus;
  Poly1<Scalar> A_minus;

  template <class T>
  PointTest1D<T> cast() const {
    return {scalar_cast<T>(alpha), A_plus.template cast<T>(), A_minus.template cast<T>()};
  }
};

/// The pairing conditions against the dual basis only prescribe
/// inner1(A_{+1/2}, B_s) = (1+alpha)/2 delta_{s,right} (and mirrored), so each
/// test function is a scaled L2 representer of point evaluation at an endpoint.
/// In the Legendre basis that representer is explicit.
template <class Scalar>
PointTest1D<Scalar> build_point_test(const Element1D<Scalar>& element, const Scalar& alpha) {
  const Scalar half = Scalar(1) / Scalar(2);
  PointTest1D<Scalar> t;
  t.alpha = alpha;
  t.A_plus = evaluation_kernel<Scalar>(element.K, half) * ((Scalar(1) + alpha) / Scalar(2));
  t.A_minus = evaluation_kernel<Scalar>(element.K, -half) * ((Scalar(1) - alpha) / Scalar(2));
  return t;
}

/// Weights on the 2K+1 DOFs
///   (q_{i-1/2}, q_i^(0..K-2), q_{i+1/2}, q_{i+1}^(0..K-2), q_{i+3/2})
/// of the two cells adjacent to interface i+1/2. Multiply by 1/dx.
template <class Scalar>
struct DerivStencil1D {
  int K = 2;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;

  template <class T>
  DerivStencil1D<T> cast() const {
    DerivStencil1D<T> s;
    s.K = K;
    s.weights.resize(weights.size());
    for (Eigen::Index k = 0; k < weights.size(); ++k) s.weights(k) = scalar_cast<T>(weights(k));
    return s;
  }
};

/// dx * (psi_{i+1/2}, d/dx q_h), assembled from the Petrov-Galerkin pairings
/// inner1(A, B_s') over both support cells.
template <class Scalar>
DerivStencil1D<Scalar> derivative_stencil(const Element1D<Scalar>& element, const PointTest1D<Scalar>& test) {
  const int K = element.K;
  DerivStencil1D<Scalar> s;
  s.K = K;
  s.weights = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Constant(2 * K + 1, Scalar(0));
  for (int d = 0; d <= K; ++d) {
    const Poly1<Scalar> dB = differentiate1(element.basis(d));
    s.weights(d) += inner1(test.A_plus, dB);
    s.weights(K + d) += inner1(test.A_minus, dB);
  }
  return s;
}

/// dx * derivative of the cell reconstruction at xi = +1/2 (side = +1) or
/// xi = -1/2 (side = -1), as weights on that cell's K+1 local DOFs.
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> endpoint_derivative_weights(const Element1D<Scalar>& element, int side) {
  const Scalar xi = Scalar(side) / Scalar(2);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> w(element.K + 1);
  for (int d = 0; d <= element.K; ++d) w(d) = differentiate1(element.basis(d))(xi);
  return w;
}

/// Cell reconstruction sum_s dofs[s] B_s. `dofs` uses the local ordering.
template <class Scalar>
Poly1<Scalar> reconstruct(const Element1D<Scalar>& element, std::span<const Scalar> dofs) {
  if (static_cast<int>(dofs.size()) != element.dofs())
    throw std::invalid_argument("reconstruct: expected K+1 dofs");
  Poly1<Scalar> p;
  for (int s = 0; s <= element.K; ++s) p += element.basis(s) * dofs[s];
  return p;
}

}  // namespace afpg

#endif  // AFPG_ELEMENT1D_HPP
