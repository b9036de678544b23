#ifndef AFPG_RATIONAL_HPP
#define AFPG_RATIONAL_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace afpg {

/// Exact arbitrary-precision rational. A thin value wrapper around
/// boost::multiprecision::cpp_rational with non-template constructors, so it
/// can be used as an Eigen scalar.
class Rational {
 public:
  using BigInt = boost::multiprecision::cpp_int;
  using Big = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT: implicit, like any numeric literal
  Rational(long v) : v_(v) {}  // NOLINT
  Rational(long long v) : v_(v) {}  // NOLINT
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {}
  explicit Rational(Big v) : v_(std::move(v)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  double to_double() const { return v_.convert_to<double>(); }
  const Big& value() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(Big(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  Big v_;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

/// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }

/// Parses "p/q", an integer, or a finite decimal such as "-0.375" exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

template <class To, class From>
To scalar_cast(const From& v) {
  if constexpr (std::is_same_v<From, Rational> && !std::is_same_v<To, Rational>) {
    return static_cast<To>(v.to_double());
  } else {
    return static_cast<To>(v);
  }
}

inline double to_double(const Rational& r) { return r.to_double(); }
inline double to_double(double v) { return v; }

}  // namespace afpg

namespace Eigen {

template <>
struct NumTraits<afpg::Rational> : GenericNumTraits<afpg::Rational> {
  using Real = afpg::Rational;
  using NonInteger = afpg::Rational;
  using Literal = afpg::Rational;
  using Nested = afpg::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 10
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // AFPG_RATIONAL_HPP
