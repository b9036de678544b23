#include <cmath>
#include <random>

#include "doctest.h"

#include "afpg/linalg.hpp"
#include "afpg/poly.hpp"
#include "afpg/quadrature.hpp"

using namespace afpg;
using R = Rational;
using P1 = Poly1<R>;
using P2 = Poly2<R>;

namespace {

R q(int n, int d = 1) { return R(n) / R(d); }

P1 random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-9, 9), den(1, 7);
  const int n = deg(rng);
  P1::Coeffs c(n + 1);
  for (int k = 0; k <= n; ++k) c(k) = q(num(rng), den(rng));
  return P1(c);
}

}  // namespace

TEST_CASE("integrate1 on the reference interval") {
  CHECK(integrate1(P1{q(1)}) == q(1));
  CHECK(integrate1(P1{q(0), q(1)}) == q(0));
  const P1 B0 = P1{q(1), q(0), q(-4)} * q(3, 2);
  CHECK(integrate1(B0) == q(1));
}

TEST_CASE("inner1") {
  const P1 B0 = P1{q(3, 2), q(0), q(-6)};
  CHECK(inner1(B0, P1{q(1)}) == q(1));
  const P1 xi = P1::monomial(1);
  CHECK(inner1(xi, xi) == q(1, 12));
  const P1 Bp = P1{q(-1, 4), q(1), q(3)};
  const P1 Ap = P1{q(-3, 4), q(3), q(15)};
  CHECK(inner1(Bp, Ap) == q(1, 2));
}

TEST_CASE("differentiate1") {
  CHECK(differentiate1(P1{q(1)}).is_zero());
  CHECK(differentiate1(P1::monomial(2)) == P1{q(0), q(2)});
  const P1 Bp = P1{q(-1, 4), q(1), q(3)};
  const P1 dB = differentiate1(Bp);
  CHECK(dB == P1{q(1), q(6)});
  CHECK(dB(q(1, 2)) == q(4));
}

TEST_CASE("2d calculus") {
  const P1 bubble{q(-1), q(0), q(4)};
  const P2 B0 = tensor(bubble, bubble) * q(9, 4);
  CHECK(integrate2(B0) == q(1));
  CHECK(B0.coeff(2, 2) == q(36));

  // Node basis function (2xi+1)(2eta+1)(-1+2eta+2xi+12xi eta)/16
  P2::Coeffs c(2, 2);
  c << q(-1), q(2), q(2), q(12);
  const P2 Bpp = tensor(P1{q(1), q(2)}, P1{q(1), q(2)}) * P2(c) * q(1, 16);
  CHECK(inner2(P2::constant(q(1)), Bpp) == q(0));

  CHECK(diff2(P2::monomial(2, 0), Axis::Xi) == P2::monomial(1, 0, q(2)));
  CHECK(diff2(P2::monomial(2, 0), Axis::Eta).coeffs().isZero());
  CHECK(diff2(P2::monomial(1, 2), Axis::Eta) == P2::monomial(1, 1, q(2)));
  CHECK(restrict_xi(Bpp, q(1, 2)) == P1{q(0), q(1), q(2)});
  CHECK(restrict_eta(Bpp, q(-1, 2)).is_zero());
}

TEST_CASE("gauss_rule nodes and weights") {
  const auto& g1 = gauss_rule(1);
  REQUIRE(g1.size() == 1);
  CHECK(g1.nodes[0] == 0.0);
  CHECK(g1.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

  const auto& g2 = gauss_rule(2);
  CHECK(g2.nodes[0] == doctest::Approx(-1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-15));
  CHECK(g2.nodes[1] == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-15));
  CHECK(g2.integrate([](double x) { return x * x; }) == doctest::Approx(1.0 / 12).epsilon(1e-15));
  CHECK(std::abs(g2.integrate([](double x) { return x * x * x; })) < 1e-16);

  CHECK(gauss_rule(3).integrate([](double x) { return std::pow(x, 4); }) ==
        doctest::Approx(1.0 / 80).epsilon(1e-15));

  CHECK_THROWS_AS(gauss_rule(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_rule(17), std::invalid_argument);
}

TEST_CASE("gauss_rule exactness matches integrate1 for all monomials up to 2n-1") {
  for (int n = 1; n <= 16; ++n) {
    const auto& g = gauss_rule(n);
    double wsum = 0;
    for (double w : g.weights) {
      CHECK(w > 0);
      wsum += w;
    }
    CHECK(std::abs(wsum - 1.0) < 1e-14);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      const double exact = to_double(integrate1(P1::monomial(k)));
      const double approx = g.integrate([k](double x) { return std::pow(x, k); });
      INFO("n=" << n << " k=" << k);
      CHECK(std::abs(approx - exact) <= 1e-14);
    }
  }
}

TEST_CASE("inner1 is symmetric and bilinear (random rational polynomials)") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const P1 p = random_poly(rng, 5), r = random_poly(rng, 5), s = random_poly(rng, 5);
    const R a = q(static_cast<int>(rng() % 11) - 5, 3);
    CHECK(inner1(p, r) == inner1(r, p));
    CHECK(inner1(p * a + r, s) == a * inner1(p, s) + inner1(r, s));
    CHECK(integrate2(tensor(p, r)) == integrate1(p) * integrate1(r));
  }
}

TEST_CASE("Legendre basis is orthogonal and converts back exactly") {
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) {
      const R expected = m == n ? q(1, 2 * n + 1) : q(0);
      CHECK(inner1(legendre<R>(m), legendre<R>(n)) == expected);
    }
  CHECK(legendre<R>(2) == P1{q(-1, 2), q(0), q(6)});

  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const P1 p = random_poly(rng, 6);
    CHECK(from_legendre<R>(to_legendre(p)) == p);
  }
}

TEST_CASE("evaluation kernel reproduces point values") {
  std::mt19937 rng(3);
  for (int K = 2; K <= 5; ++K) {
    const R x0 = q(1, 2);
    const P1 k = evaluation_kernel<R>(K, x0);
    for (int trial = 0; trial < 10; ++trial) {
      const P1 p = random_poly(rng, K);
      CHECK(inner1(k, p) == p(x0));
    }
  }
  CHECK(evaluation_kernel<R>(2, q(1, 2)) == P1{q(-3, 2), q(6), q(30)});
  CHECK(evaluation_kernel<R>(2, q(0)) == P1{q(9, 4), q(0), q(-15)});
}

TEST_CASE("solve_exact and exact_rank") {
  using Mat = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>;
  Mat A(3, 3);
  A << q(0), q(1), q(2), q(1), q(0), q(3), q(4), q(-3), q(8);
  const Mat X = solve_exact<R>(A, Mat::Identity(3, 3));
  CHECK((A * X) == Mat::Identity(3, 3));
  CHECK(exact_rank<R>(A) == 3);
  Mat S(2, 2);
  S << q(1), q(2), q(2), q(4);
  CHECK(exact_rank<R>(S) == 1);
  CHECK_THROWS_AS(solve_exact<R>(S, Mat::Identity(2, 2)), std::domain_error);
}

TEST_CASE("rational parsing and rendering") {
  CHECK(to_string(q(3, 2)) == "3/2");
  CHECK(to_string(q(-6)) == "-6");
  CHECK(parse_rational("0.37") == q(37, 100));
  CHECK(parse_rational("-3/4") == q(-3, 4));
  CHECK(parse_rational(" 2 ") == q(2));
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}
