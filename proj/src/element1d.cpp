#include "afpg/element1d.hpp"

#include <string>

#include "afpg/linalg.hpp"

namespace afpg {

Element1D<Rational> build_element(int K, MomentFamily /*family*/) {
  if (K < 2) throw std::invalid_argument("build_element: K must be >= 2, got " + std::to_string(K));

  Element1D<Rational> e;
  e.K = K;
  for (int k = 0; k <= K - 2; ++k) {
    const Rational scale = Rational(k + 1) * Rational(1 << k);
    e.moment_weights.push_back({k, Poly1<Rational>::monomial(k, scale)});
  }

  // Dual basis in Legendre coordinates: S(r, l) = sigma_r(L_l), B = S^{-1}.
  // The moment rows vanish for l > k, which keeps S well conditioned.
  using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
  Mat S(K + 1, K + 1);
  for (int l = 0; l <= K; ++l) {
    const Poly1<Rational> L = legendre<Rational>(l);
    for (int r = 0; r <= K; ++r) S(r, l) = e.functional(r, L);
  }
  const Mat C = solve_exact<Rational>(S, Mat::Identity(K + 1, K + 1));

  std::vector<Poly1<Rational>> basis;
  for (int s = 0; s <= K; ++s) basis.push_back(from_legendre<Rational>(C.col(s)));
  e.basis_left = basis.front();
  e.basis_right = basis.back();
  e.basis_moments.assign(basis.begin() + 1, basis.end() - 1);
  return e;
}

}  // namespace afpg
