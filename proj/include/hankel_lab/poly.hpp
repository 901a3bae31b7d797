#pragma once

// Dense univariate polynomials over an exact coefficient ring. The variable
// name is part of the type, so mixing polynomials in different variables does
// not compile.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hankel_lab/numbers.hpp"
#include "hankel_lab/ring.hpp"

namespace hankel_lab {

inline bool is_compound(const Integer&) { return false; }
inline bool is_compound(const Rational&) { return false; }

template <Ring R, char Var>
class Poly {
 public:
  using coeff_type = R;
  static constexpr char variable = Var;

  Poly() = default;
  template <std::integral I>
  Poly(I v) : Poly(R(v)) {}  // NOLINT(google-explicit-constructor)
  Poly(const R& c) {         // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(c);
  }
  /// Constant from anything the coefficient ring is constructible from
  /// (e.g. an Integer inside nested polynomial rings).
  template <class T>
    requires(!std::integral<T> && !std::same_as<T, R> && !std::same_as<T, Poly> && std::constructible_from<R, T>)
  explicit Poly(const T& v) : Poly(R(v)) {}
  /// Ascending coefficients; trailing zeros are dropped.
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly var() { return Poly(std::vector<R>{R(0), R(1)}); }
  static Poly monomial(const R& c, std::size_t k) {
    if (c.is_zero()) return Poly();
    std::vector<R> v(k + 1, R(0));
    v[k] = c;
    return Poly(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
  const R& lead() const { return c_.back(); }
  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(c_.begin(), c_.end(), [](const R& c) { return !c.is_zero(); }));
  }

  /// Horner evaluation in any ring S that R embeds into.
  template <class S>
  S eval(const S& at) const {
    S result(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) result = result * at + S(*it);
    return result;
  }

  /// p(x) -> p(x^2)
  Poly substitute_square() const {
    if (c_.empty()) return {};
    std::vector<R> v(2 * c_.size() - 1, R(0));
    for (std::size_t k = 0; k < c_.size(); ++k) v[2 * k] = c_[k];
    return Poly(std::move(v));
  }

  /// Multiply by x^k.
  Poly shift_up(std::size_t k) const {
    if (c_.empty()) return {};
    std::vector<R> v(k, R(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<R> v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (k >= a.c_.size()) v.push_back(b.c_[k]);
      else if (k >= b.c_.size()) v.push_back(a.c_[k]);
      else v.push_back(a.c_[k] + b.c_[k]);
    }
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<R> v;
    v.reserve(a.c_.size());
    for (const R& c : a.c_) v.push_back(-c);
    Poly p;
    p.c_ = std::move(v);
    return p;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    if (b.c_.size() == 1) return a.scale(b.c_[0]);
    if (a.c_.size() == 1) return b.scale(a.c_[0], /*left=*/true);
    std::vector<R> v(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(v));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Ascending powers with explicit signs, e.g. "2 + x + x^2", "1 - 3/2*x^2".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      const std::string term = term_string(c_[k], k);
      if (out.empty()) {
        out = term;
      } else if (term.front() == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Poly scale(const R& s, bool left = false) const {
    std::vector<R> v;
    v.reserve(c_.size());
    for (const R& c : c_) v.push_back(left ? s * c : c * s);
    return Poly(std::move(v));
  }

  static std::string term_string(const R& c, std::size_t k) {
    if (k == 0) return c.to_string();
    std::string mono(1, Var);
    if (k > 1) mono += "^" + std::to_string(k);
    if (c == R(1)) return mono;
    if (c == R(-1)) return "-" + mono;
    const std::string s = c.to_string();
    if (is_compound(c)) return "(" + s + ")*" + mono;
    return s + "*" + mono;
  }

  std::vector<R> c_;
};

template <Ring R, char V>
bool is_compound(const Poly<R, V>& p) {
  return p.term_count() > 1;
}

template <Ring R, char V>
struct ring_traits<Poly<R, V>> {
  static constexpr bool is_field = false;
  static constexpr Domain domain = Domain::Polynomial;
};

/// Exact quotient a / b by long division; throws InexactDivision when the
/// remainder is nonzero and DivisionByZero when b = 0.
template <Ring R, char V>
Poly<R, V> exact_div(const Poly<R, V>& a, const Poly<R, V>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return {};
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) throw InexactDivision("inexact polynomial division (degree)");
  const auto& bc = b.coeffs();
  if (db == 0) {
    std::vector<R> q;
    q.reserve(a.coeffs().size());
    for (const R& c : a.coeffs()) q.push_back(exact_div(c, bc[0]));
    return Poly<R, V>(std::move(q));
  }
  std::vector<R> rem = a.coeffs();
  std::vector<R> q(static_cast<std::size_t>(da - db + 1), R(0));
  for (int i = da - db; i >= 0; --i) {
    const R& top = rem[static_cast<std::size_t>(i + db)];
    if (top.is_zero()) continue;
    R qi = exact_div(top, bc.back());
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i + j)];
      slot = slot - qi * bc[static_cast<std::size_t>(j)];
    }
    q[static_cast<std::size_t>(i)] = std::move(qi);
  }
  for (const R& r : rem) {
    if (!r.is_zero()) throw InexactDivision("inexact polynomial division (remainder)");
  }
  return Poly<R, V>(std::move(q));
}

/// Quotient and remainder over a coefficient field.
template <Field F, char V>
std::pair<Poly<F, V>, Poly<F, V>> divmod(const Poly<F, V>& a, const Poly<F, V>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) return {Poly<F, V>(), a};
  std::vector<F> rem = a.coeffs();
  std::vector<F> q(static_cast<std::size_t>(da - db + 1), F(0));
  const auto& bc = b.coeffs();
  for (int i = da - db; i >= 0; --i) {
    const F& top = rem[static_cast<std::size_t>(i + db)];
    if (top.is_zero()) continue;
    F qi = top / bc.back();
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i + j)];
      slot = slot - qi * bc[static_cast<std::size_t>(j)];
    }
    q[static_cast<std::size_t>(i)] = std::move(qi);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<F, V>(std::move(q)), Poly<F, V>(std::move(rem))};
}

template <Field F, char V>
Poly<F, V> monic(const Poly<F, V>& p) {
  if (p.is_zero()) return p;
  const F inv = F(1) / p.lead();
  return p * Poly<F, V>(inv);
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <Field F, char V>
Poly<F, V> gcd(Poly<F, V> a, Poly<F, V> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// gcd of the coefficients, sign taken from the leading coefficient.
template <char V>
Integer content(const Poly<Integer, V>& p) {
  Integer g(0);
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  if (!p.is_zero() && p.lead().sign() < 0) g = -g;
  return g;
}

template <char V>
Poly<Integer, V> primitive_part(const Poly<Integer, V>& p) {
  if (p.is_zero()) return p;
  return exact_div(p, Poly<Integer, V>(content(p)));
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x].
template <char V>
Poly<Integer, V> pseudo_remainder(const Poly<Integer, V>& a, const Poly<Integer, V>& b) {
  const int db = b.degree();
  std::vector<Integer> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const Integer& lb = bc.back();
  for (int i = a.degree(); i >= db; --i) {
    const Integer top = rem[static_cast<std::size_t>(i)];
    for (auto& r : rem) r *= lb;
    if (top.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= top * bc[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(std::max(db, 0)));
  return Poly<Integer, V>(std::move(rem));
}

/// Primitive gcd in Z[x] (primitive remainder sequence), positive leading
/// coefficient.
template <char V>
Poly<Integer, V> primitive_gcd(Poly<Integer, V> a, Poly<Integer, V> b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    auto r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return a;
}

/// Scale a rational polynomial to a primitive integer polynomial with the
/// same roots (positive leading coefficient).
template <char V>
Poly<Integer, V> to_primitive_integer(const Poly<Rational, V>& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.mpq().get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpq_class scaled = c.mpq() * l;
    v.emplace_back(mpz_class(scaled.get_num()));
  }
  return primitive_part(Poly<Integer, V>(std::move(v)));
}

template <char V>
Poly<Rational, V> to_rational(const Poly<Integer, V>& p) {
  std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
  return Poly<Rational, V>(std::move(v));
}

/// Rational coefficients: computed through primitive integer remainders to
/// keep coefficient growth in check.
template <char V>
Poly<Rational, V> gcd(const Poly<Rational, V>& a, const Poly<Rational, V>& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly<Rational, V>(1);
  return monic(to_rational(primitive_gcd(to_primitive_integer(a), to_primitive_integer(b))));
}

template <class S, Ring R, char V, class Fn>
Poly<S, V> map_coefficients(const Poly<R, V>& p, Fn&& fn) {
  std::vector<S> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(fn(c));
  return Poly<S, V>(std::move(v));
}

}  // namespace hankel_lab
