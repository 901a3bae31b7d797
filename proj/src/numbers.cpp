#include "hankel_lab/numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace hankel_lab {

namespace {

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer Integer::parse(std::string_view text) {
  if (!is_decimal(text)) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(mpz_class(std::string(text), 10));
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (!mpz_divisible_p(a.mpz().get_mpz_t(), b.mpz().get_mpz_t())) {
    throw InexactDivision("inexact integer division " + a.to_string() + " / " + b.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(std::move(q));
}

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(std::move(g));
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Integer(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Integer(std::move(r));
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Integer(std::move(r));
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw DivisionByZero();
  v_ = mpq_class(num.mpz(), den.mpz());
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  const Integer num = Integer::parse(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
  }
  return Rational(num, Integer::parse(den_text));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZero();
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

}  // namespace hankel_lab
