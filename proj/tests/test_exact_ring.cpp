#include <random>
#include <type_traits>

#include "doctest.h"
#include "hankel_lab/numbers.hpp"
#include "hankel_lab/poly.hpp"
#include "hankel_lab/qseries.hpp"
#include "hankel_lab/ratfunc.hpp"

using namespace hankel_lab;

namespace {

using QX = Poly<Rational, 'x'>;
using ZX = Poly<Integer, 'x'>;
using QQ = Poly<Rational, 'q'>;

struct Gen {
  std::mt19937 rng{20240611};
  long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  Integer integer() { return Integer(small(-50, 50)); }
  Rational rational() { return Rational(Integer(small(-20, 20)), Integer(small(1, 12))); }
  QQ qpoly(int max_deg) {
    std::vector<Rational> c;
    const long d = small(0, max_deg);
    for (long i = 0; i <= d; ++i) c.push_back(Rational(Integer(small(-4, 4)), Integer(small(1, 3))));
    return QQ(std::move(c));
  }
  RatFuncQ ratfunc() {
    QQ den = qpoly(2);
    while (den.is_zero()) den = qpoly(2);
    return RatFuncQ(qpoly(3), den);
  }
  QX xpoly() {
    std::vector<Rational> c;
    const long d = small(0, 4);
    for (long i = 0; i <= d; ++i) c.push_back(rational());
    return QX(std::move(c));
  }
  ZX zpoly() {
    std::vector<Integer> c;
    const long d = small(0, 4);
    for (long i = 0; i <= d; ++i) c.push_back(Integer(small(-9, 9)));
    return ZX(std::move(c));
  }
};

template <class T, class Make>
void ring_axioms(Make make) {
  for (int i = 0; i < 100; ++i) {
    const T a = make(), b = make(), c = make();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + (-a)).is_zero());
    CHECK(a - b == a + (-b));
    CHECK(a * T(1) == a);
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
  }
}

template <class A, class B>
concept Addable = requires(const A& a, const B& b) { a + b; };

}  // namespace

TEST_CASE("scalar_ops examples") {
  CHECK(exact_div(Integer(6), Integer(3)) == Integer(2));
  CHECK(Rational(Integer(1), Integer(2)) + Rational(Integer(1), Integer(3)) == Rational(Integer(5), Integer(6)));
  const QQ q = QQ::var();
  CHECK(exact_div(q * q - QQ(1), q - QQ(1)) == q + QQ(1));
}

TEST_CASE("scalar_ops errors") {
  CHECK_THROWS_AS(exact_div(Integer(6), Integer(0)), DivisionByZero);
  CHECK_THROWS_AS(exact_div(Integer(7), Integer(2)), InexactDivision);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(RatFuncQ(1) / RatFuncQ(0), DivisionByZero);
  const ZX x = ZX::var();
  CHECK_THROWS_AS(exact_div(x * x + ZX(1), x + ZX(1)), InexactDivision);
  CHECK_THROWS_AS(exact_div(ZX(2) * x, ZX(4)), InexactDivision);
  CHECK_THROWS_AS(exact_div(x, ZX()), DivisionByZero);
}

TEST_CASE("ring axioms on random inputs") {
  Gen g;
  ring_axioms<Integer>([&] { return g.integer(); });
  ring_axioms<Rational>([&] { return g.rational(); });
  ring_axioms<RatFuncQ>([&] { return g.ratfunc(); });
  ring_axioms<QX>([&] { return g.xpoly(); });
  ring_axioms<ZX>([&] { return g.zpoly(); });
}

TEST_CASE("poly_ops examples") {
  const QX x = QX::var();
  CHECK((QX(1) - x).substitute_square() == QX(1) - x * x);
  CHECK((x * x - QX(4) * x + QX(1)).eval(Rational(0)) == Rational(1));
  CHECK((QX(1) + x) * (QX(1) - x) == QX(1) - x * x);
  CHECK(QX().degree() == -1);
  CHECK((x * x).degree() == 2);
}

TEST_CASE("eval is a ring homomorphism") {
  Gen g;
  for (int i = 0; i < 50; ++i) {
    const QX a = g.xpoly(), b = g.xpoly();
    const Rational at = g.rational();
    CHECK((a * b).eval(at) == a.eval(at) * b.eval(at));
    CHECK((a + b).eval(at) == a.eval(at) + b.eval(at));
    CHECK((a * b).substitute_square() == a.substitute_square() * b.substitute_square());
  }
}

TEST_CASE("variables are part of the polynomial type") {
  static_assert(Addable<QX, QX>);
  static_assert(!Addable<QX, QQ>);
  static_assert(!Addable<RatFuncQ, RatFuncU>);
  static_assert(domain_of<Integer> == Domain::Integer);
  static_assert(domain_of<RatFuncU> == Domain::RatFuncU);
  static_assert(Field<RatFuncQ> && Field<Rational> && !Field<Integer> && !Field<QX>);
}

TEST_CASE("poly_gcd") {
  const QQ q = QQ::var();
  CHECK(gcd(q * q - QQ(1), q - QQ(1)) == q - QQ(1));
  CHECK(gcd(q, q + QQ(1)) == QQ(1));
  CHECK(gcd(QQ(), QQ()) == QQ());
  CHECK(gcd(QQ(3) * q + QQ(6), QQ()) == q + QQ(2));

  Gen g;
  for (int i = 0; i < 40; ++i) {
    const QQ a = g.qpoly(3), b = g.qpoly(3), c = g.qpoly(2);
    if (c.is_zero() || (a.is_zero() && b.is_zero())) continue;
    const QQ d = gcd(a * c, b * c);
    CHECK(divmod(d, monic(c)).second.is_zero());
    CHECK(divmod(a * c, d).second.is_zero());
    CHECK(divmod(b * c, d).second.is_zero());
    CHECK(d.lead() == Rational(1));
  }
}

TEST_CASE("RatFunc normalisation is canonical") {
  const QQ q = QQ::var();
  const RatFuncQ a(q * q - QQ(1), QQ(2) * q - QQ(2));  // (q+1)/2
  const RatFuncQ b(q + QQ(1), QQ(2));
  CHECK(a == b);
  CHECK(a.den() == QQ(1));
  CHECK(b.num() == QQ(Rational(Integer(1), Integer(2))) * (q + QQ(1)));

  const RatFuncQ p = RatFuncQ::param();
  const RatFuncQ x = RatFuncQ(1) / (RatFuncQ(1) + p) + RatFuncQ(1) / (RatFuncQ(1) - p);
  const RatFuncQ y = RatFuncQ(2) / (RatFuncQ(1) - p * p);
  CHECK(x == y);
  CHECK(x.den().lead() == Rational(1));

  Gen g;
  for (int i = 0; i < 40; ++i) {
    const RatFuncQ r = g.ratfunc(), s = g.ratfunc();
    if (s.is_zero()) continue;
    CHECK((r / s) * s == r);
    CHECK((r * s) / s == r);
  }
}

TEST_CASE("RatFunc rendering") {
  const RatFuncQ q = RatFuncQ::param();
  CHECK((RatFuncQ(1) + q).to_string() == "1 + q");
  CHECK((RatFuncQ(1) / (RatFuncQ(2) + RatFuncQ(2) * q)).to_string() == "1/(2 + 2*q)");
  CHECK((RatFuncQ(-1) / (RatFuncQ(1) + q * q)).to_string() == "-1/(1 + q^2)");
  CHECK(((RatFuncQ(1) + q) / q).to_string() == "(1 + q)/q");
  using QXR = Poly<RatFuncQ, 'x'>;
  const QXR x = QXR::var();
  const QXR p = x * x - QXR(RatFuncQ(1) / (RatFuncQ(1) + q));
  CHECK(p.to_string() == "-1/(1 + q) + x^2");
  CHECK((QXR(RatFuncQ(1) + q) * x).to_string() == "(1 + q)*x");
  CHECK((ZX(1) - ZX(3) * ZX::var()).to_string() == "1 - 3*x");
  CHECK(ZX().to_string() == "0");
}

TEST_CASE("RatFunc specialisation") {
  const RatFuncQ q = RatFuncQ::param();
  const RatFuncQ r = (RatFuncQ(1) + q) / (RatFuncQ(1) - q);
  CHECK(r.eval(Rational(3)) == Rational(-2));
  CHECK_THROWS_AS(r.eval(Rational(1)), DivisionByZero);
}

TEST_CASE("q_binomial and q_int") {
  const QPoly q = QPoly::var();
  for (long n = 0; n <= 6; ++n) CHECK(q_binomial(n, 0) == QPoly(1));
  CHECK(q_binomial(2, 1) == QPoly(1) + q);
  CHECK(q_binomial(4, 2) == QPoly(std::vector<Integer>{1, 1, 2, 1, 1}));
  CHECK(q_binomial(3, -1).is_zero());
  CHECK(q_binomial(3, 4).is_zero());
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == QPoly(1));
  CHECK(q_int(3) == QPoly(1) + q + q * q);
  CHECK(q_int(5).eval(Integer(1)) == Integer(5));
}

TEST_CASE("q-Pascal recurrence and q = 1 specialisation") {
  // Oracle: [n,k] = [n-1,k] + q^(n-k) [n-1,k-1].
  for (long n = 1; n <= 12; ++n) {
    for (long k = 0; k <= n; ++k) {
      const QPoly rhs = q_binomial(n - 1, k) +
                        QPoly::monomial(Integer(1), static_cast<std::size_t>(n - k)) * q_binomial(n - 1, k - 1);
      CHECK(q_binomial(n, k) == rhs);
    }
  }
  for (long n = 0; n <= 12; ++n) {
    for (long k = 0; k <= n; ++k) CHECK(q_binomial(n, k).eval(Integer(1)) == binomial(n, k));
  }
}

TEST_CASE("parsing") {
  CHECK(Rational::parse("3/4") == Rational(Integer(3), Integer(4)));
  CHECK(Rational::parse("-6/4") == Rational(Integer(-3), Integer(2)));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse("1/-2"));
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
}
