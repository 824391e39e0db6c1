#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace verlinde {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact rational scalar, usable as an Eigen matrix scalar.
///
/// Thin wrapper over boost's cpp_rational. Conversions are restricted to
/// integral types so that Eigen expression types never match a constructor
/// of the scalar (the raw boost number has greedy template constructors
/// that collide with Eigen's expression templates).
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(long long num, long long den) : v_(BigInt(num), BigInt(den)) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
  }
  explicit Rational(BigInt n) : v_(std::move(n)) {}
  Rational(BigInt num, BigInt den) : v_(std::move(num), std::move(den)) {}
  explicit Rational(BigRat v) : v_(std::move(v)) {}

  const BigRat& raw() const { return v_; }
  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator(v_) == 1; }

  double to_double() const { return v_.convert_to<double>(); }

  /// "p/q", or just "p" when the value is integral.
  std::string str() const {
    std::string s = num().str();
    if (!is_integer()) s += "/" + den().str();
    return s;
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  BigRat v_;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

inline BigInt floor_int(const Rational& r) {
  BigInt q = numerator(r.raw()) / denominator(r.raw());
  if (r.raw() < 0 && q * denominator(r.raw()) != numerator(r.raw())) --q;
  return q;
}

/// Fractional part in [0, 1).
inline Rational frac1(const Rational& r) { return r - Rational(floor_int(r)); }

inline std::int64_t to_int64_exact(const Rational& r) {
  if (!r.is_integer()) throw std::domain_error("expected integral value, got " + r.str());
  return r.num().convert_to<std::int64_t>();
}

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact Gauss-Jordan inverse. Throws on a singular input.
RatMatrix inverse_exact(RatMatrix m);

} // namespace verlinde

namespace Eigen {

template <>
struct NumTraits<verlinde::Rational> {
  using Real = verlinde::Rational;
  using NonInteger = verlinde::Rational;
  using Literal = verlinde::Rational;
  using Nested = verlinde::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
  static inline Real epsilon() { return verlinde::Rational(0); }
  static inline Real dummy_precision() { return verlinde::Rational(0); }
  static inline int digits10() { return 0; }
};

} // namespace Eigen
