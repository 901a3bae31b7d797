#pragma once

// Rational functions over Q in one named parameter (q or u), kept in
// canonical form: monic denominator, numerator and denominator coprime.

#include <string>
#include <utility>

#include "hankel_lab/numbers.hpp"
#include "hankel_lab/poly.hpp"
#include "hankel_lab/ring.hpp"

namespace hankel_lab {

template <char P>
class RatFunc {
 public:
  using poly_type = Poly<Rational, P>;
  static constexpr char parameter = P;

  RatFunc() : den_(1) {}
  template <std::integral I>
  RatFunc(I v) : num_(Rational(v)), den_(1) {}                 // NOLINT(google-explicit-constructor)
  RatFunc(const Integer& v) : num_(Rational(v)), den_(1) {}     // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& v) : num_(v), den_(1) {}              // NOLINT(google-explicit-constructor)
  explicit RatFunc(poly_type num) : num_(std::move(num)), den_(1) {}
  RatFunc(poly_type num, poly_type den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  explicit RatFunc(const Poly<Integer, P>& num) : num_(to_rational(num)), den_(1) {}

  /// The parameter itself.
  static RatFunc param() { return RatFunc(poly_type::var()); }

  const poly_type& num() const { return num_; }
  const poly_type& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Value at a point of any field S that Q embeds into; throws
  /// DivisionByZero when the denominator vanishes there.
  template <class S>
  S eval(const S& at) const {
    const S d = den_.template eval<S>(at);
    if (d.is_zero()) throw DivisionByZero("rational function pole at the specialised parameter");
    return num_.template eval<S>(at) / d;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return from_poly(a.num_ + b.num_);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return from_poly(a.num_ * b.num_);
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-cancel first so the products stay small.
    const poly_type g1 = gcd(a.num_, b.den_);
    const poly_type g2 = gcd(b.num_, a.den_);
    RatFunc r;
    r.num_ = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    r.den_ = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    r.make_den_monic();
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero();
    RatFunc inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    inv.make_den_monic();
    return a * inv;
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// "num/den" with integer coefficients, multi-term parts parenthesised,
  /// e.g. "1/(2 + 2*q)".
  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    auto [n, d] = integer_form();
    auto wrap = [](const auto& p) {
      return p.term_count() > 1 ? "(" + p.to_string() + ")" : p.to_string();
    };
    return wrap(n) + "/" + wrap(d);
  }

 private:
  static RatFunc from_poly(poly_type p) {
    RatFunc r;
    r.num_ = std::move(p);
    return r;
  }

  void make_den_monic() {
    if (den_.lead() == Rational(1)) return;
    const poly_type s(Rational(1) / den_.lead());
    num_ = num_ * s;
    den_ = den_ * s;
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = poly_type(1);
      return;
    }
    const poly_type g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    make_den_monic();
  }

  std::pair<Poly<Integer, P>, Poly<Integer, P>> integer_form() const {
    mpz_class l = 1;
    for (const auto* p : {&num_, &den_}) {
      for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.mpq().get_den_mpz_t());
    }
    auto scale = [&l](const poly_type& p) {
      std::vector<Integer> v;
      for (const auto& c : p.coeffs()) v.emplace_back(mpz_class(mpq_class(c.mpq() * l).get_num()));
      return Poly<Integer, P>(std::move(v));
    };
    Poly<Integer, P> n = scale(num_);
    Poly<Integer, P> d = scale(den_);
    Integer g = gcd(content(d), content(n));
    if (g.sign() < 0) g = -g;
    if (!g.is_zero() && !g.is_one()) {
      n = exact_div(n, Poly<Integer, P>(g));
      d = exact_div(d, Poly<Integer, P>(g));
    }
    return {std::move(n), std::move(d)};
  }

  poly_type num_;
  poly_type den_;
};

template <char P>
bool is_compound(const RatFunc<P>& r) {
  return !r.is_polynomial() || r.num().term_count() > 1;
}

/// Field division; exact by definition.
template <char P>
RatFunc<P> exact_div(const RatFunc<P>& a, const RatFunc<P>& b) {
  return a / b;
}

template <class T>
inline constexpr bool is_ratfunc_v = false;
template <char P>
inline constexpr bool is_ratfunc_v<RatFunc<P>> = true;

using RatFuncQ = RatFunc<'q'>;
using RatFuncU = RatFunc<'u'>;

template <>
struct ring_traits<RatFuncQ> {
  static constexpr bool is_field = true;
  static constexpr Domain domain = Domain::RatFuncQ;
};

template <>
struct ring_traits<RatFuncU> {
  static constexpr bool is_field = true;
  static constexpr Domain domain = Domain::RatFuncU;
};

}  // namespace hankel_lab
