#ifndef AFPG_POLY_HPP
#define AFPG_POLY_HPP

#include <algorithm>
#include <cassert>
#include <initializer_list>

#include <Eigen/Core>

#include "afpg/rational.hpp"

// Polynomials on the reference cell in the dimensionless variables
// xi = x/dx and eta = y/dy, both ranging over [-1/2, 1/2]. Coefficients are
// monomial; the scalar is either Rational (exact) or double.

namespace afpg {

template <class Scalar>
class Poly1 {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Poly1() : c_(Coeffs::Constant(1, Scalar(0))) {}
  explicit Poly1(Coeffs c) : c_(std::move(c)) {
    if (c_.size() == 0) c_ = Coeffs::Constant(1, Scalar(0));
    trim();
  }
  Poly1(std::initializer_list<Scalar> c) : c_(static_cast<Eigen::Index>(c.size())) {
    Eigen::Index k = 0;
    for (const auto& v : c) c_(k++) = v;
    if (c_.size() == 0) c_ = Coeffs::Constant(1, Scalar(0));
    trim();
  }

  static Poly1 constant(const Scalar& v) { return Poly1(Coeffs::Constant(1, v)); }
  static Poly1 monomial(int k, const Scalar& v = Scalar(1)) {
    Coeffs c = Coeffs::Constant(k + 1, Scalar(0));
    c(k) = v;
    return Poly1(std::move(c));
  }

  /// Index of the last nonzero coefficient; the zero polynomial has degree 0.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Coeffs& coeffs() const { return c_; }
  Scalar operator[](int k) const { return k >= 0 && k <= degree() ? c_(k) : Scalar(0); }
  bool is_zero() const { return c_.size() == 1 && c_(0) == Scalar(0); }

  Scalar operator()(const Scalar& xi) const {
    Scalar acc = c_(c_.size() - 1);
    for (Eigen::Index k = c_.size() - 2; k >= 0; --k) acc = acc * xi + c_(k);
    return acc;
  }

  /// p(-xi)
  Poly1 reflected() const {
    Coeffs c = c_;
    for (Eigen::Index k = 1; k < c.size(); k += 2) c(k) = -c(k);
    return Poly1(std::move(c));
  }

  template <class T>
  Poly1<T> cast() const {
    typename Poly1<T>::Coeffs c(c_.size());
    for (Eigen::Index k = 0; k < c_.size(); ++k) c(k) = scalar_cast<T>(c_(k));
    return Poly1<T>(std::move(c));
  }

  Poly1& operator+=(const Poly1& o) {
    const Eigen::Index n = std::max(c_.size(), o.c_.size());
    Coeffs c = Coeffs::Constant(n, Scalar(0));
    c.head(c_.size()) = c_;
    c.head(o.c_.size()) += o.c_;
    c_ = std::move(c);
    trim();
    return *this;
  }
  Poly1& operator-=(const Poly1& o) { return *this += -o; }
  Poly1& operator*=(const Scalar& s) {
    c_ *= s;
    trim();
    return *this;
  }

  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator-(const Poly1& a) { return Poly1(Coeffs(-a.c_)); }
  friend Poly1 operator*(Poly1 a, const Scalar& s) { return a *= s; }
  friend Poly1 operator*(const Scalar& s, Poly1 a) { return a *= s; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    Coeffs c = Coeffs::Constant(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (Eigen::Index i = 0; i < a.c_.size(); ++i)
      for (Eigen::Index j = 0; j < b.c_.size(); ++j) c(i + j) += a.c_(i) * b.c_(j);
    return Poly1(std::move(c));
  }
  friend bool operator==(const Poly1& a, const Poly1& b) {
    return a.c_.size() == b.c_.size() && a.c_ == b.c_;
  }
  friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

 private:
  void trim() {
    Eigen::Index n = c_.size();
    while (n > 1 && c_(n - 1) == Scalar(0)) --n;
    if (n != c_.size()) c_.conservativeResize(n);
  }

  Coeffs c_;
};

enum class Axis { Xi, Eta };

/// Polynomial in (xi, eta); coefficient (k, l) multiplies xi^k eta^l.
template <class Scalar>
class Poly2 {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Poly2() : c_(Coeffs::Constant(1, 1, Scalar(0))) {}
  explicit Poly2(Coeffs c) : c_(std::move(c)) {
    if (c_.size() == 0) c_ = Coeffs::Constant(1, 1, Scalar(0));
    trim();
  }

  static Poly2 constant(const Scalar& v) { return Poly2(Coeffs::Constant(1, 1, v)); }
  static Poly2 monomial(int k, int l, const Scalar& v = Scalar(1)) {
    Coeffs c = Coeffs::Constant(k + 1, l + 1, Scalar(0));
    c(k, l) = v;
    return Poly2(std::move(c));
  }

  int degree_x() const { return static_cast<int>(c_.rows()) - 1; }
  int degree_y() const { return static_cast<int>(c_.cols()) - 1; }
  bool in_q2() const { return degree_x() <= 2 && degree_y() <= 2; }
  const Coeffs& coeffs() const { return c_; }
  Scalar coeff(int k, int l) const {
    return k >= 0 && l >= 0 && k <= degree_x() && l <= degree_y() ? c_(k, l) : Scalar(0);
  }

  Scalar operator()(const Scalar& xi, const Scalar& eta) const {
    Scalar acc(0);
    for (Eigen::Index k = c_.rows() - 1; k >= 0; --k) {
      Scalar row = c_(k, c_.cols() - 1);
      for (Eigen::Index l = c_.cols() - 2; l >= 0; --l) row = row * eta + c_(k, l);
      acc = acc * xi + row;
    }
    return acc;
  }

  /// Swaps the roles of xi and eta.
  Poly2 transposed() const { return Poly2(Coeffs(c_.transpose())); }

  template <class T>
  Poly2<T> cast() const {
    typename Poly2<T>::Coeffs c(c_.rows(), c_.cols());
    for (Eigen::Index k = 0; k < c_.rows(); ++k)
      for (Eigen::Index l = 0; l < c_.cols(); ++l) c(k, l) = scalar_cast<T>(c_(k, l));
    return Poly2<T>(std::move(c));
  }

  Poly2& operator+=(const Poly2& o) {
    const Eigen::Index r = std::max(c_.rows(), o.c_.rows());
    const Eigen::Index s = std::max(c_.cols(), o.c_.cols());
    Coeffs c = Coeffs::Constant(r, s, Scalar(0));
    c.topLeftCorner(c_.rows(), c_.cols()) = c_;
    c.topLeftCorner(o.c_.rows(), o.c_.cols()) += o.c_;
    c_ = std::move(c);
    trim();
    return *this;
  }
  Poly2& operator-=(const Poly2& o) { return *this += -o; }
  Poly2& operator*=(const Scalar& s) {
    c_ *= s;
    trim();
    return *this;
  }

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator-(const Poly2& a) { return Poly2(Coeffs(-a.c_)); }
  friend Poly2 operator*(Poly2 a, const Scalar& s) { return a *= s; }
  friend Poly2 operator*(const Scalar& s, Poly2 a) { return a *= s; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Coeffs c = Coeffs::Constant(a.c_.rows() + b.c_.rows() - 1, a.c_.cols() + b.c_.cols() - 1, Scalar(0));
    for (Eigen::Index i = 0; i < a.c_.rows(); ++i)
      for (Eigen::Index j = 0; j < a.c_.cols(); ++j) {
        if (a.c_(i, j) == Scalar(0)) continue;
        for (Eigen::Index k = 0; k < b.c_.rows(); ++k)
          for (Eigen::Index l = 0; l < b.c_.cols(); ++l) c(i + k, j + l) += a.c_(i, j) * b.c_(k, l);
      }
    return Poly2(std::move(c));
  }
  friend bool operator==(const Poly2& a, const Poly2& b) {
    return a.c_.rows() == b.c_.rows() && a.c_.cols() == b.c_.cols() && a.c_ == b.c_;
  }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

 private:
  void trim() {
    Eigen::Index r = c_.rows(), s = c_.cols();
    while (r > 1 && (c_.row(r - 1).head(s).array() == Scalar(0)).all()) --r;
    while (s > 1 && (c_.col(s - 1).head(r).array() == Scalar(0)).all()) --s;
    if (r != c_.rows() || s != c_.cols()) c_ = Coeffs(c_.topLeftCorner(r, s));
  }

  Coeffs c_;
};

// ---------------------------------------------------------------------------
// Calculus on the reference cell.

/// \int_{-1/2}^{1/2} xi^k dxi
template <class Scalar>
Scalar monomial_integral(int k) {
  if (k % 2 != 0) return Scalar(0);
  Scalar denom(k + 1);
  for (int i = 0; i < k; ++i) denom *= Scalar(2);
  return Scalar(1) / denom;
}

template <class Scalar>
Scalar integrate1(const Poly1<Scalar>& p) {
  Scalar acc(0);
  for (int k = 0; k <= p.degree(); k += 2) acc += p[k] * monomial_integral<Scalar>(k);
  return acc;
}

template <class Scalar>
Scalar inner1(const Poly1<Scalar>& p, const Poly1<Scalar>& q) {
  return integrate1(p * q);
}

template <class Scalar>
Poly1<Scalar> differentiate1(const Poly1<Scalar>& p) {
  if (p.degree() == 0) return Poly1<Scalar>();
  typename Poly1<Scalar>::Coeffs c(p.degree());
  for (int k = 1; k <= p.degree(); ++k) c(k - 1) = Scalar(k) * p[k];
  return Poly1<Scalar>(std::move(c));
}

template <class Scalar>
Poly2<Scalar> tensor(const Poly1<Scalar>& p, const Poly1<Scalar>& q) {
  return Poly2<Scalar>(typename Poly2<Scalar>::Coeffs(p.coeffs() * q.coeffs().transpose()));
}

template <class Scalar>
Scalar integrate2(const Poly2<Scalar>& p) {
  Scalar acc(0);
  for (int k = 0; k <= p.degree_x(); k += 2)
    for (int l = 0; l <= p.degree_y(); l += 2)
      acc += p.coeff(k, l) * monomial_integral<Scalar>(k) * monomial_integral<Scalar>(l);
  return acc;
}

template <class Scalar>
Scalar inner2(const Poly2<Scalar>& p, const Poly2<Scalar>& q) {
  return integrate2(p * q);
}

template <class Scalar>
Poly2<Scalar> diff2(const Poly2<Scalar>& p, Axis axis) {
  const auto& c = p.coeffs();
  if (axis == Axis::Xi) {
    if (c.rows() == 1) return Poly2<Scalar>();
    typename Poly2<Scalar>::Coeffs d(c.rows() - 1, c.cols());
    for (Eigen::Index k = 1; k < c.rows(); ++k) d.row(k - 1) = c.row(k) * Scalar(static_cast<int>(k));
    return Poly2<Scalar>(std::move(d));
  }
  if (c.cols() == 1) return Poly2<Scalar>();
  typename Poly2<Scalar>::Coeffs d(c.rows(), c.cols() - 1);
  for (Eigen::Index l = 1; l < c.cols(); ++l) d.col(l - 1) = c.col(l) * Scalar(static_cast<int>(l));
  return Poly2<Scalar>(std::move(d));
}

/// Restriction to the line xi = xi0, as a polynomial in eta.
template <class Scalar>
Poly1<Scalar> restrict_xi(const Poly2<Scalar>& p, const Scalar& xi0) {
  typename Poly1<Scalar>::Coeffs c = Poly1<Scalar>::Coeffs::Constant(p.degree_y() + 1, Scalar(0));
  Scalar power(1);
  for (int k = 0; k <= p.degree_x(); ++k) {
    c += p.coeffs().row(k).transpose() * power;
    power *= xi0;
  }
  return Poly1<Scalar>(std::move(c));
}

/// Restriction to the line eta = eta0, as a polynomial in xi.
template <class Scalar>
Poly1<Scalar> restrict_eta(const Poly2<Scalar>& p, const Scalar& eta0) {
  return restrict_xi(p.transposed(), eta0);
}

// ---------------------------------------------------------------------------
// Legendre polynomials on [-1/2, 1/2]: L_n(xi) = P_n(2 xi), with
// \int L_m L_n = delta_mn / (2n + 1).

template <class Scalar>
Poly1<Scalar> legendre(int n) {
  const Poly1<Scalar> t = Poly1<Scalar>::monomial(1, Scalar(2));
  Poly1<Scalar> prev = Poly1<Scalar>::constant(Scalar(1));
  if (n == 0) return prev;
  Poly1<Scalar> cur = t;
  for (int k = 1; k < n; ++k) {
    Poly1<Scalar> next = (t * cur) * (Scalar(2 * k + 1) / Scalar(k + 1)) - prev * (Scalar(k) / Scalar(k + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Coefficients a_0..a_degree with p = sum a_l L_l.
template <class Scalar>
typename Poly1<Scalar>::Coeffs to_legendre(const Poly1<Scalar>& p, int degree = -1) {
  const int n = std::max(degree, p.degree());
  typename Poly1<Scalar>::Coeffs a(n + 1);
  for (int l = 0; l <= n; ++l) a(l) = Scalar(2 * l + 1) * inner1(p, legendre<Scalar>(l));
  return a;
}

template <class Scalar>
Poly1<Scalar> from_legendre(const typename Poly1<Scalar>::Coeffs& a) {
  Poly1<Scalar> p;
  for (Eigen::Index l = 0; l < a.size(); ++l) p += legendre<Scalar>(static_cast<int>(l)) * a(l);
  return p;
}

/// L2 representer of point evaluation at xi0 within P^degree:
/// inner1(kernel, v) = v(xi0) for every v of degree <= degree. The Legendre
/// Gram matrix is diagonal, so the representer is sum (2l+1) L_l(xi0) L_l.
template <class Scalar>
Poly1<Scalar> evaluation_kernel(int degree, const Scalar& xi0) {
  Poly1<Scalar> k;
  for (int l = 0; l <= degree; ++l) {
    const Poly1<Scalar> L = legendre<Scalar>(l);
    k += L * (Scalar(2 * l + 1) * L(xi0));
  }
  return k;
}

}  // namespace afpg

#endif  // AFPG_POLY_HPP
