#pragma once

// Arbitrary-precision integers and rationals (GMP-backed).

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hankel_lab/ring.hpp"

namespace hankel_lab {

class Integer {
 public:
  Integer() = default;
  template <std::integral I>
  Integer(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  /// Decimal, optional leading sign. Throws std::invalid_argument.
  static Integer parse(std::string_view text);

  const mpz_class& mpz() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_one() const { return v_ == 1; }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const { return v_.get_si(); }
  std::string to_string() const { return v_.get_str(); }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
  friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class v_;
};

/// Quotient a / b; throws DivisionByZero for b = 0 and InexactDivision when
/// b does not divide a.
Integer exact_div(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer binomial(long n, long k);  // 0 outside 0 <= k <= n, n >= 0
Integer factorial(long n);

template <>
struct ring_traits<Integer> {
  static constexpr bool is_field = false;
  static constexpr Domain domain = Domain::Integer;
};

class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : v_(v.mpz()) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// "p", "-p" or "p/q". Throws std::invalid_argument, DivisionByZero.
  static Rational parse(std::string_view text);

  Integer numerator() const { return Integer(v_.get_num()); }
  Integer denominator() const { return Integer(v_.get_den()); }
  const mpq_class& mpq() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  std::string to_string() const { return v_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

Rational exact_div(const Rational& a, const Rational& b);

template <>
struct ring_traits<Rational> {
  static constexpr bool is_field = true;
  static constexpr Domain domain = Domain::Rational;
};

}  // namespace hankel_lab
