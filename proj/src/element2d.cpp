#include "afpg/element2d.hpp"

#include <stdexcept>

#include "afpg/linalg.hpp"

namespace afpg {

namespace {

using R = Rational;
using P1 = Poly1<R>;
using P2 = Poly2<R>;

R q(int num, int den = 1) { return R(num) / R(den); }

// a + b xi (+ c eta + d xi eta) helpers
P2 bilinear(const R& c00, const R& c10, const R& c01, const R& c11) {
  P2::Coeffs c(2, 2);
  c << c00, c01, c10, c11;
  return P2(std::move(c));
}

P2 in_xi(const P1& p) { return tensor(p, P1::constant(R(1))); }
P2 in_eta(const P1& p) { return tensor(P1::constant(R(1)), p); }

}  // namespace

Element2D<Rational> closed_form_basis_2d() {
  const P1 xi_p = P1{R(1), R(2)};   // 2 xi + 1
  const P1 xi_m = P1{R(-1), R(2)};  // 2 xi - 1
  const P1 bubble = P1{R(-1), R(0), R(4)};  // 4 xi^2 - 1
  const P1 six_m = P1{R(-1), R(6)};  // 6 xi - 1
  const P1 six_p = P1{R(1), R(6)};   // 6 xi + 1

  Element2D<Rational> e;
  auto set = [&](int r, int s, P2 p) { e.basis[LocalDof{r, s}.index()] = std::move(p); };

  set(1, 1, in_xi(xi_p) * in_eta(xi_p) * bilinear(q(-1), q(2), q(2), q(12)) * q(1, 16));
  set(-1, 1, in_xi(xi_m) * in_eta(xi_p) * bilinear(q(1), q(2), q(-2), q(12)) * q(1, 16));
  set(-1, -1, in_xi(xi_m) * in_eta(xi_m) * bilinear(q(-1), q(-2), q(-2), q(12)) * q(1, 16));
  set(1, -1, in_xi(xi_p) * in_eta(xi_m) * bilinear(q(1), q(-2), q(2), q(12)) * q(1, 16));
  set(0, 1, in_xi(bubble) * in_eta(xi_p) * in_eta(six_m) * q(-1, 4));
  set(0, -1, in_xi(bubble) * in_eta(xi_m) * in_eta(six_p) * q(-1, 4));
  set(-1, 0, in_xi(xi_m) * in_xi(six_p) * in_eta(bubble) * q(-1, 4));
  set(1, 0, in_xi(xi_p) * in_xi(six_m) * in_eta(bubble) * q(-1, 4));
  set(0, 0, in_xi(bubble) * in_eta(bubble) * q(9, 4));
  return e;
}

Element2D<Rational> build_element_2d() {
  using Mat = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>;
  // Tensor Legendre basis L_a(xi) L_b(eta), column index 3a + b.
  std::array<P2, 9> legendre_basis;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) legendre_basis[3 * a + b] = tensor(legendre<R>(a), legendre<R>(b));

  Element2D<Rational> e;
  Mat S(9, 9);
  for (int r = 0; r < 9; ++r)
    for (int l = 0; l < 9; ++l) S(r, l) = e.functional(LocalDof::from_index(r), legendre_basis[l]);
  const Mat C = solve_exact<R>(S, Mat::Identity(9, 9));

  for (int s = 0; s < 9; ++s) {
    P2 b;
    for (int l = 0; l < 9; ++l) b += legendre_basis[l] * C(l, s);
    e.basis[s] = std::move(b);
  }

  const auto expected = closed_form_basis_2d();
  for (int s = 0; s < 9; ++s)
    if (e.basis[s] != expected.basis[s])
      throw std::logic_error("build_element_2d: dual basis disagrees with the closed form");
  return e;
}

}  // namespace afpg
