#include "hankel_lab/identities.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "hankel_lab/hankel.hpp"
#include "hankel_lab/qseries.hpp"
#include "hankel_lab/ratfunc.hpp"

namespace hankel_lab {

const char* to_string(ParamKind kind) {
  switch (kind) {
    case ParamKind::None: return "none";
    case ParamKind::Q: return "q";
    case ParamKind::U: return "u";
  }
  return "?";
}

bool CheckReport::passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const Outcome& o) { return o.pass; });
}

const Check* find_check(const Registry& registry, std::string_view id) {
  for (const Check& c : registry) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

CheckReport run_per_n(const std::string& id, std::size_t n_max, const std::function<Comparison(std::size_t)>& at) {
  using clock = std::chrono::steady_clock;
  const auto ms = [](clock::duration d) {
    return static_cast<std::int64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
  };
  CheckReport report;
  report.id = id;
  const auto start = clock::now();
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto t0 = clock::now();
    Outcome o;
    o.n = n;
    try {
      Comparison c = at(n);
      o.pass = c.pass;
      o.lhs = std::move(c.lhs);
      o.rhs = std::move(c.rhs);
    } catch (const DomainError& e) {
      o.pass = false;
      o.lhs = std::string("error: ") + e.what();
      o.rhs = "(not computed)";
    }
    o.millis = ms(clock::now() - t0);
    report.outcomes.push_back(std::move(o));
  }
  report.millis = ms(clock::now() - start);
  return report;
}

std::vector<SymRecurrence<Integer>> random_t_sequences(std::uint64_t seed, std::size_t count, std::size_t length) {
  std::mt19937_64 rng(seed);
  std::vector<SymRecurrence<Integer>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Integer> v;
    std::string desc = "random t #" + std::to_string(i) + " = (";
    for (std::size_t k = 0; k < length; ++k) {
      v.emplace_back(static_cast<long>(1 + rng() % 3));
      if (k < 10) desc += (k ? ", " : "") + v.back().to_string();
    }
    desc += ", ...)";
    out.emplace_back(
        [v](std::size_t n) {
          if (n >= v.size()) throw std::out_of_range("random t-sequence too short for this n");
          return v[n];
        },
        desc);
  }
  return out;
}

namespace {

using ZX = XPoly<Integer>;
using QX = XPoly<Rational>;

template <Ring R>
XPoly<R> cst(const R& c) {
  return XPoly<R>(c);
}

template <Ring R>
R sgn(std::size_t k) {
  return sign_pow<R>(static_cast<long>(k));
}

template <Ring R>
XPoly<R> x_pow(std::size_t k) {
  return XPoly<R>::monomial(R(1), k);
}

/// t_1 t_3 ... t_{2n-1}
template <Ring R>
R odd_t_product(const SymRecurrence<R>& rec, std::size_t n) {
  R p(1);
  for (std::size_t j = 1; j < 2 * n; j += 2) p = p * rec.t(j);
  return p;
}

/// t_0 t_2 ... t_{2n}
template <Ring R>
R even_t_product(const SymRecurrence<R>& rec, std::size_t n) {
  R p(1);
  for (std::size_t j = 0; j <= 2 * n; j += 2) p = p * rec.t(j);
  return p;
}

/// F_k(arg, -1) for an argument in any ring containing R.
template <Ring R, class S>
S fib(long k, const S& arg) {
  return fibonacci_poly<R>(k, R(-1)).template eval<S>(arg);
}

Integer fibonacci_number(long k) {
  Integer a(0), b(1);
  for (long i = 0; i < k; ++i) {
    Integer c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

template <Ring R>
XPoly<R> conv_det(const MomentSeq<R>& a, std::size_t n, std::size_t offset = 0) {
  return hankel_poly_det(RBuilder<R>{RKind::Conv, a}, n, offset);
}

template <Ring R>
XPoly<R> lin_det(const MomentSeq<R>& a, std::size_t n, std::size_t offset = 0) {
  return hankel_poly_det(RBuilder<R>{RKind::Lin, a}, n, offset);
}

template <Ring R>
R plain_det(const MomentSeq<R>& a, std::size_t n, std::size_t offset = 0) {
  return det_bareiss(hankel_matrix(a, n, offset));
}

/// (-1)^n / (t_1 t_3 ... t_{2n-1}) p_2n(x, T)
template <Field F>
XPoly<F> shifted_form(const SymRecurrence<F>& rec, std::size_t n) {
  return cst(sgn<F>(n) / odd_t_product(rec, n)) * sym_polys(shift_t(rec), 2 * n)[2 * n];
}

template <Ring R>
Comparison v_form_generic(const SymRecurrence<R>& rec, const MomentSeq<R>& a, std::size_t n) {
  const RBuilder<R> conv{RKind::Conv, a};
  const XPoly<R> d = hankel_poly_det(conv, n);
  const auto v = v_table(rec, 2 * n + 1);
  XPoly<R> sum;
  for (std::size_t j = 0; j <= n; ++j) {
    sum += cst(sgn<R>(j) * v.at(2 * n + 1, static_cast<long>(j))) * r_poly(conv, n - j);
  }
  return Verdict().expect("d(n,x) t_1...t_(2n-1) vs d(n,0) (-1)^n sum (-1)^j v(2n+1,j) r(n-j,x)",
                          d * cst(odd_t_product(rec, n)), cst(sgn<R>(n) * d.coeff(0)) * sum);
}

template <Ring R>
Comparison shifted_form_generic(const SymRecurrence<R>& rec, const MomentSeq<R>& a, std::size_t n) {
  const RBuilder<R> conv{RKind::Conv, a};
  const XPoly<R> d = hankel_poly_det(conv, n);
  const auto pT = sym_polys(shift_t(rec), 2 * n + 1);
  const auto v = v_table(rec, 2 * n + 2);
  XPoly<R> even_sum, odd_sum;
  for (std::size_t k = 0; k <= n; ++k) {
    even_sum += cst(sgn<R>(k) * v.at(2 * n + 1, static_cast<long>(k))) * r_poly(conv, n - k).substitute_square();
  }
  for (std::size_t k = 0; k <= n + 1; ++k) {
    odd_sum += cst(sgn<R>(k) * v.at(2 * n + 2, static_cast<long>(k))) * r_poly(conv, n + 1 - k).substitute_square();
  }
  return Verdict()
      .expect("d(n,x^2) t_1...t_(2n-1) vs d(n,0) (-1)^n p_2n(x,T)", d.substitute_square() * cst(odd_t_product(rec, n)),
              cst(sgn<R>(n) * d.coeff(0)) * pT[2 * n])
      .expect("sum (-1)^k v(2n+1,k) r(n-k,x^2) vs p_2n(x,T)", even_sum, pT[2 * n])
      .expect("sum (-1)^k v(2n+2,k) r(n+1-k,x^2) vs x p_(2n+1)(x,T)", odd_sum, pT[2 * n + 1].shift_up(1));
}

template <Ring R>
Comparison lin_form_generic(const SymRecurrence<R>& rec, const MomentSeq<R>& a, std::size_t n) {
  const auto p = sym_polys(rec, 2 * n + 3);
  return Verdict()
      .expect("det(r(i+j,x^2)) vs det(a(i+j)) p_(2n+2)(x)", lin_det(a, n, 0).substitute_square(),
              cst(plain_det(a, n, 0)) * p[2 * n + 2])
      .expect("x det(r(i+j+1,x^2)) vs det(a(i+j+1)) p_(2n+3)(x)", lin_det(a, n, 1).substitute_square().shift_up(1),
              cst(plain_det(a, n, 1)) * p[2 * n + 3])
      .expect("p_(2n+2)(0) vs (-1)^(n+1) t_0 t_2...t_2n", p[2 * n + 2].coeff(0), sgn<R>(n + 1) * even_t_product(rec, n));
}

ZX catalan_closed(std::size_t n) {
  ZX out;
  const long m = static_cast<long>(n);
  for (long j = 0; j <= m; ++j) out += ZX::monomial(sign_pow<Integer>(j) * binomial(m + j, m - j), static_cast<std::size_t>(2 * j));
  return out;
}

ZX motzkin_closed(std::size_t n) {
  const ZX arg = ZX::var() - ZX(1);
  const long m = static_cast<long>(n);
  if (n % 3 == 0) return fib<Integer>(m, arg) + fib<Integer>(m + 1, arg);
  return -fib<Integer>(3 * (m / 3) + 2, arg);
}

std::vector<SymRecurrence<Integer>> integer_families() {
  return {families::catalan<Integer>(), families::central_binomial<Integer>(), families::little_schroder<Integer>(),
          families::large_schroder<Integer>(), families::hermite<Integer>()};
}

using Probe = std::function<Comparison(std::size_t)>;

/// Runs every probe at each n and reports the first failure.
CheckReport run_probes(const std::string& id, const CheckContext& ctx, const std::vector<Probe>& probes) {
  return run_per_n(id, ctx.n_max, [&probes](std::size_t n) {
    Verdict v;
    for (const Probe& p : probes) {
      v.expect(p(n));
      if (!v.pass()) break;
    }
    return v.result();
  });
}

using FamilyComparator =
    std::function<Comparison(const SymRecurrence<Integer>&, const MomentSeq<Integer>&, std::size_t)>;

/// The comparator over the built-in integer families and the random t-sequences.
CheckReport run_on_families(const std::string& id, const CheckContext& ctx, const FamilyComparator& cmp) {
  auto fams = integer_families();
  for (auto& r : random_t_sequences(ctx.seed)) fams.push_back(std::move(r));
  std::vector<Probe> probes;
  for (const auto& rec : fams) {
    const auto a = sym_moments(rec);
    probes.emplace_back([rec, a, cmp](std::size_t n) {
      Verdict v;
      v.expect(cmp(rec, a, n), rec.description());
      return v.result();
    });
  }
  return run_probes(id, ctx, probes);
}

template <class Fn>
CheckReport with_q(const CheckContext& ctx, Fn&& fn) {
  if (ctx.param) return fn(*ctx.param);
  return fn(RatFuncQ::param());
}

template <class Fn>
CheckReport with_u(const CheckContext& ctx, Fn&& fn) {
  if (ctx.param) return fn(*ctx.param);
  return fn(RatFuncU::param());
}

/// prod_{j=lo}^{hi} (1 + q^j)
template <Field F>
F one_plus_q_product(long lo, long hi, const F& q) {
  F p(1);
  for (long j = lo; j <= hi; ++j) p = p * (F(1) + ipow(q, j));
  return p;
}

// ---------------------------------------------------------------------------
// Aeration

CheckReport run_aeration(const CheckContext& ctx) {
  const std::vector<MomentSeq<Integer>> bases = {sequences::catalan_numbers<Integer>(),
                                                 sequences::central_binomials<Integer>()};
  std::vector<Probe> probes;
  for (const auto& a : bases) {
    const auto aa = aerate(a);
    probes.emplace_back([a, aa](std::size_t n) {
      const ZX dn = conv_det(a, n).substitute_square();
      const ZX d2n = conv_det(aa, 2 * n);
      const ZX d2n1 = conv_det(aa, 2 * n + 1);
      const std::string who = a.source() + ": ";
      return Verdict()
          .expect(who + "D(2n,x) d(n,0) vs d(n,x^2) D(2n,0)", d2n * cst(dn.coeff(0)), dn * cst(d2n.coeff(0)))
          .expect(who + "D(2n+1,x) d(n,0) vs d(n,x^2) D(2n+1,0)", d2n1 * cst(dn.coeff(0)), dn * cst(d2n1.coeff(0)))
          .result();
    });
  }
  return run_probes("aeration", ctx, probes);
}

// ---------------------------------------------------------------------------
// q-corollaries

template <Field F>
CheckReport run_cor3(const CheckContext& ctx, const F& q) {
  const auto a = carlitz_q_catalan(q);
  return run_per_n("cor3", ctx.n_max, [a, q](std::size_t n) {
    const long m = static_cast<long>(n);
    const XPoly<F> d = conv_det(a, n);
    XPoly<F> closed;
    for (long k = 0; k <= m; ++k) {
      closed += XPoly<F>::monomial(sign_pow<F>(m - k) * ipow(q, k * k - m * m) * q_binomial_at<F>(2 * m - k, k, q),
                                   static_cast<std::size_t>(2 * m - 2 * k));
    }
    const XPoly<F> fib_form = cst(sgn<F>(n) / ipow(q, m * m)) * q_fibonacci(2 * m + 1, -q, q);
    return Verdict()
        .expect("d(n,x^2) vs d(n,0) sum (-1)^(n-k) q^(k^2-n^2) [2n-k,k] x^(2n-2k)", d.substitute_square(),
                cst(d.coeff(0)) * closed)
        .expect("(-1)^n q^(-n^2) F_(2n+1)(x,-q,q) vs closed sum", fib_form, closed)
        .expect("closed sum vs (-1)^n/(t_1...t_(2n-1)) p_2n(x,T)", closed, shifted_form(families::carlitz(q), n))
        .result();
  });
}

template <Field F>
CheckReport run_cor4(const CheckContext& ctx, const F& q) {
  const auto a = sequences::andrews_q_catalans(q);
  return run_per_n("cor4", ctx.n_max, [a, q](std::size_t n) {
    const long m = static_cast<long>(n);
    const XPoly<F> d = conv_det(a, n);
    XPoly<F> closed;
    for (long k = 0; k <= m; ++k) {
      const F c = ipow(q, k * k - m * m) * sign_pow<F>(m - k) * one_plus_q_product(k + 2, 2 * m - k + 1, q) *
                  q_binomial_at<F>(2 * m - k, k, q);
      closed += XPoly<F>::monomial(c, static_cast<std::size_t>(2 * m - 2 * k));
    }
    const XPoly<F> fib_form = cst(sgn<F>(n) / ipow(q, m * m) * one_plus_q_product(2, 2 * m + 1, q)) *
                              qb_fibonacci(2 * m + 1, -q, -q, q);
    return Verdict()
        .expect("d(n,x^2) vs d(n,0) closed sum", d.substitute_square(), cst(d.coeff(0)) * closed)
        .expect("(-1)^n q^(-n^2) prod (1+q^j) F_(2n+1)(x,-q,-q,q) vs closed sum", fib_form, closed)
        .expect("closed sum vs (-1)^n/(t_1...t_(2n-1)) p_2n(x,T)", closed, shifted_form(families::andrews(q), n))
        .result();
  });
}

template <Field F>
CheckReport run_cor5(const CheckContext& ctx, const F& q) {
  const auto a = sequences::q_central_binomials(q);
  return run_per_n("cor5", ctx.n_max, [a, q](std::size_t n) {
    const long m = static_cast<long>(n);
    const XPoly<F> d = conv_det(a, n);
    const XPoly<F> fib_form = cst(sgn<F>(n) / ipow(q, m * m) * one_plus_q_product(1, 2 * m, q)) *
                              qb_fibonacci(2 * m + 1, F(-1), -q, q);
    return Verdict()
        .expect("d(n,x^2) vs d(n,0) (-1)^n q^(-n^2) prod (1+q^j) F_(2n+1)(x,-1,-q,q)", d.substitute_square(),
                cst(d.coeff(0)) * fib_form)
        .expect("closed form vs (-1)^n/(t_1...t_(2n-1)) p_2n(x,T)", fib_form,
                shifted_form(families::q_central_binomial(q), n))
        .result();
  });
}

/// b^n times the double sum for d(n, x^2)/d(n, 0) with t_2n = q^n a, t_2n+1 = q^n b.
template <Ring R, class QPow, class QBin>
XPoly<R> schroder_scaled(std::size_t n, const R& a, const R& b, QPow&& qpow, QBin&& qbin) {
  const long m = static_cast<long>(n);
  XPoly<R> out;
  for (long k = 0; k <= m; ++k) {
    R inner(0);
    for (long j = 0; j <= m - k; ++j) {
      inner = inner + qpow(j) * qbin(m - j, k) * qbin(k + j - 1, j) * pow(a, static_cast<unsigned long>(j)) *
                          pow(b, static_cast<unsigned long>(m - k - j));
    }
    out += XPoly<R>::monomial(sign_pow<R>(k) * qpow(k * (k + 1) / 2 - m * k) * inner, static_cast<std::size_t>(2 * k));
  }
  return out;
}

template <Field F>
CheckReport run_eq36(const CheckContext& ctx, const F& qv) {
  using BP = Poly<F, 'b'>;
  using AB = Poly<BP, 'a'>;
  const AB a = AB::var();
  const AB b(BP::var());
  const AB q{BP(qv)};
  const auto rec = families::schroder(a, b, q);
  const auto mom = sym_moments(rec);
  return run_per_n("eq36", ctx.n_max, [=](std::size_t n) {
    const long m = static_cast<long>(n);
    const XPoly<AB> d = conv_det(mom, n);
    const auto qpow = [&qv](long e) { return AB(BP(ipow(qv, e))); };
    const auto qbin = [&qv](long top, long k) { return AB(BP(q_binomial_ext<F>(top, k, qv))); };
    const XPoly<AB> rhs = schroder_scaled<AB>(n, a, b, qpow, qbin);
    // T is again of this shape, with (a, b) -> (b, q a).
    const XPoly<AB> pT = schroder_sym_poly(2 * m, b, q * a, q);
    const AB odd = qpow(m * (m - 1) / 2) * pow(b, n);
    return Verdict()
        .expect("b^n d(n,x^2) vs d(n,0) b^n sum", d.substitute_square() * cst(pow(b, n)), cst(d.coeff(0)) * rhs)
        .expect("q^C(n,2) b^n d(n,x^2) vs d(n,0) (-1)^n p_2n(x,T)", d.substitute_square() * cst(odd),
                cst(sgn<AB>(n) * d.coeff(0)) * pT)
        .result();
  });
}

CheckReport run_cor6(const CheckContext& ctx) {
  const auto little = sequences::little_schroder_numbers<Rational>();
  const auto large = sequences::large_schroder_numbers<Rational>();
  return run_per_n("cor6", ctx.n_max, [little, large](std::size_t n) {
    const long m = static_cast<long>(n);
    QX closed_little, closed_large;
    for (long k = 0; k <= m; ++k) {
      Rational s_little(0), s_large(0);
      for (long j = 0; j <= m - k; ++j) {
        const Rational c(binomial(m - j, k) * binomial_ext(k + j - 1, j));
        s_little = s_little + c * ipow(Rational(2), -k - j);
        s_large = s_large + c * ipow(Rational(2), j);
      }
      closed_little += QX::monomial(sign_pow<Rational>(k) * s_little, static_cast<std::size_t>(2 * k));
      closed_large += QX::monomial(sign_pow<Rational>(k) * s_large, static_cast<std::size_t>(2 * k));
    }
    const auto t_little = families::little_schroder<Rational>();
    const QX mid_little = cst(sgn<Rational>(n) / ipow(Rational(2), m)) * sym_polys(shift_t(t_little), 2 * n)[2 * n];
    // For the large numbers T is the little sequence (1, 2, 1, 2, ...).
    const QX mid_large = cst(sgn<Rational>(n)) * sym_polys(t_little, 2 * n)[2 * n];
    const QX d_little = conv_det(little, n);
    const QX d_large = conv_det(large, n);
    const auto one = [](long) { return Rational(1); };
    const auto bin = [](long top, long k) { return Rational(binomial_ext(top, k)); };
    const Rational two(2);
    return Verdict()
        .expect("little: d(n,x^2) vs d(n,0) closed sum", d_little.substitute_square(), cst(d_little.coeff(0)) * closed_little)
        .expect("little: (-1)^n 2^-n p_2n(x,T) vs closed sum", mid_little, closed_little)
        .expect("little: 2^n closed sum vs general (a,b) = (1,2) sum at q = 1", closed_little * cst(ipow(two, m)),
                schroder_scaled<Rational>(n, Rational(1), two, one, bin))
        .expect("large: d(n,x^2) vs d(n,0) closed sum", d_large.substitute_square(), cst(d_large.coeff(0)) * closed_large)
        .expect("large: (-1)^n p_2n(x,(1,2,1,2,...)) vs closed sum", mid_large, closed_large)
        .expect("large: closed sum vs general (a,b) = (2,1) sum at q = 1", closed_large,
                schroder_scaled<Rational>(n, two, Rational(1), one, bin))
        .result();
  });
}

// ---------------------------------------------------------------------------
// Motzkin

CheckReport run_motzkin_prefix(const CheckContext& ctx) {
  const auto mot = sequences::motzkin_numbers<Integer>();
  const std::vector<ZX> printed = {ZX(1), ZX(std::vector<Integer>{1, 0, -1}), ZX(std::vector<Integer>{1, 0, -1}),
                                   ZX(std::vector<Integer>{1, 0, -1, 0, -2, 0, 1})};
  return run_per_n("motzkin-prefix", ctx.n_max, [mot, printed](std::size_t n) {
    const ZX d = conv_det(mot, n);
    const ZX expected = n < printed.size() ? printed[n] : motzkin_closed(n).substitute_square();
    return Verdict().expect("d(n,x^2) vs d(n,0) listed value", d.substitute_square(), cst(d.coeff(0)) * expected).result();
  });
}

template <Field F>
CheckReport run_eq41(const CheckContext& ctx, const F& u) {
  const auto a = motzkin_u(u);
  return run_per_n("eq41", ctx.n_max, [a, u](std::size_t n) {
    const long m = static_cast<long>(n);
    const auto t = motzkin_t(u);
    const XPoly<F> pT = sym_polys(shift_t(t), 2 * n)[2 * n];
    const XPoly<F> d = conv_det(a, n);
    const XPoly<F> arg = x_pow<F>(2) - cst(u);
    const F f1 = fib<F>(m + 1, u);
    const F f2 = fib<F>(m + 2, u);
    return Verdict()
        .expect("d(n,x^2) vs d(n,0) (-1)^n F_(n+1)(u,-1) p_2n(x,T)", d.substitute_square(),
                cst(d.coeff(0) * sgn<F>(n) * f1) * pT)
        .expect("F_(n+1)(u) p_2n(x,T) vs F_(n+1)(u) F_(n+1)(x^2-u) + F_(n+2)(u) F_n(x^2-u)", cst(f1) * pT,
                cst(f1) * fib<F>(m + 1, arg) + cst(f2) * fib<F>(m, arg))
        .result();
  });
}

template <Ring R>
Comparison eq42_at(const MomentSeq<R>& a, const R& u, std::size_t n) {
  const long m = static_cast<long>(n);
  const XPoly<R> d = conv_det(a, n);
  const XPoly<R> arg = XPoly<R>::var() - cst(u);
  const XPoly<R> rhs = cst(fib<R>(m + 1, u)) * fib<R>(m + 1, arg) + cst(fib<R>(m + 2, u)) * fib<R>(m, arg);
  return Verdict().expect("d(n,x) vs d(n,0) (-1)^n (F_(n+1)(u) F_(n+1)(x-u) + F_(n+2)(u) F_n(x-u))", d,
                          cst(d.coeff(0) * sgn<R>(n)) * rhs);
}

template <Ring R>
Comparison eq52_at(const MomentSeq<R>& a, const R& u, std::size_t n) {
  const XPoly<R> arg = XPoly<R>::var() - cst(u);
  return Verdict().expect("det(x M_(i+j) - M_(i+j+1)) vs det(M_(i+j)) F_(n+2)(x-u,-1)", lin_det(a, n),
                          cst(plain_det(a, n)) * fib<R>(static_cast<long>(n) + 2, arg));
}

template <Ring R>
Comparison eq53_at(const MomentSeq<R>& a, const R& u, std::size_t n) {
  const long m = static_cast<long>(n);
  const R det1 = plain_det(a, n, 1);
  return Verdict()
      .expect("det(M_(i+j+1)) vs F_(n+2)(u,-1)", det1, fib<R>(m + 2, u))
      .expect("det(M_(i+j+1)) vs (-1)^(n+1) F_(n+2)(-u,-1)", det1, sgn<R>(n + 1) * fib<R>(m + 2, -u));
}

template <Ring R>
Comparison eq54_at(const MomentSeq<R>& a, const R& u, std::size_t n) {
  const auto v = a.prefix(2 * n + 2);
  const R det = det_bareiss(hankel_from<R>([&v](std::size_t k) { return v[k] + v[k + 1]; }, n));
  return Verdict().expect("det(M_(i+j) + M_(i+j+1)) vs F_(n+2)(u+1,-1)", det,
                          fib<R>(static_cast<long>(n) + 2, u + R(1)));
}

/// sum_{k=0}^{n+1} (-1)^(n+1-k) F_(k+1)(u,-1) F_(k+1)(x-u,-1)
template <Ring R>
XPoly<R> eq56_rhs(const R& u, std::size_t n) {
  const XPoly<R> arg = XPoly<R>::var() - cst(u);
  XPoly<R> sum;
  for (std::size_t k = 0; k <= n + 1; ++k) {
    const long k1 = static_cast<long>(k) + 1;
    sum += cst(sgn<R>(n + 1 - k) * fib<R>(k1, u)) * fib<R>(k1, arg);
  }
  return sum;
}

template <Ring R>
Comparison eq56_at(const MomentSeq<R>& a, const R& u, std::size_t n) {
  return Verdict().expect("det(x M_(i+j+1) - M_(i+j+2)) vs sum (-1)^(n+1-k) F_(k+1)(u) F_(k+1)(x-u)",
                          lin_det(a, n, 1), eq56_rhs(u, n));
}

template <Ring R>
Comparison eq55_at(const MomentSeq<R>& a, const R& u, std::size_t n) {
  const R f = fib<R>(static_cast<long>(n) + 2, u);
  if (f.is_zero()) {
    throw DomainError("F_" + std::to_string(n + 2) + "(u,-1) vanishes at u = " + u.to_string() +
                      ", so the quotient is undefined");
  }
  return Verdict().expect("F_(n+2)(u) det(x M_(i+j+1) - M_(i+j+2)) vs det(M_(i+j+1)) sum",
                          lin_det(a, n, 1) * cst(f), cst(plain_det(a, n, 1)) * eq56_rhs(u, n));
}

using MotzkinComparator = std::function<Comparison(std::size_t)>;

/// Binds a comparator on (moments, u, n) to the requested parameter mode. In
/// symbolic mode the classical Motzkin numbers (u = 1) are checked as well
/// when `also_at_one` is set.
template <template <class> class Cmp>
CheckReport run_motzkin_u(const std::string& id, const CheckContext& ctx, bool also_at_one) {
  std::vector<Probe> probes;
  if (ctx.param) {
    const Rational u = *ctx.param;
    const auto a = motzkin_u(u);
    probes.emplace_back([a, u](std::size_t n) { return Cmp<Rational>{}(a, u, n); });
  } else {
    const RatFuncU u = RatFuncU::param();
    const auto a = motzkin_u(u);
    probes.emplace_back([a, u](std::size_t n) { return Cmp<RatFuncU>{}(a, u, n); });
    if (also_at_one) {
      const auto m1 = sequences::motzkin_numbers<Integer>();
      probes.emplace_back([m1](std::size_t n) {
        Verdict v;
        v.expect(Cmp<Integer>{}(m1, Integer(1), n), "u = 1");
        return v.result();
      });
    }
  }
  return run_probes(id, ctx, probes);
}

template <class R>
struct Eq42 {
  Comparison operator()(const MomentSeq<R>& a, const R& u, std::size_t n) const { return eq42_at(a, u, n); }
};
template <class R>
struct Eq52 {
  Comparison operator()(const MomentSeq<R>& a, const R& u, std::size_t n) const { return eq52_at(a, u, n); }
};
template <class R>
struct Eq53 {
  Comparison operator()(const MomentSeq<R>& a, const R& u, std::size_t n) const { return eq53_at(a, u, n); }
};
template <class R>
struct Eq54 {
  Comparison operator()(const MomentSeq<R>& a, const R& u, std::size_t n) const { return eq54_at(a, u, n); }
};
template <class R>
struct Eq55 {
  Comparison operator()(const MomentSeq<R>& a, const R& u, std::size_t n) const { return eq55_at(a, u, n); }
};
template <class R>
struct Eq56 {
  Comparison operator()(const MomentSeq<R>& a, const R& u, std::size_t n) const { return eq56_at(a, u, n); }
};

CheckReport run_eq43(const CheckContext& ctx) {
  const auto mot = sequences::motzkin_numbers<Integer>();
  return run_per_n("eq43", ctx.n_max, [mot](std::size_t n) {
    const ZX arg = ZX::var() - ZX(1);
    const long m = static_cast<long>(n);
    return Verdict()
        .expect("d(3n,x) vs F_3n(x-1,-1) + F_(3n+1)(x-1,-1)", conv_det(mot, 3 * n),
                fib<Integer>(3 * m, arg) + fib<Integer>(3 * m + 1, arg))
        .result();
  });
}

CheckReport run_eq44(const CheckContext& ctx) {
  const auto mot = sequences::motzkin_numbers<Integer>();
  return run_per_n("eq44", ctx.n_max, [mot](std::size_t n) {
    const ZX arg = ZX::var() - ZX(1);
    const ZX rhs = -fib<Integer>(3 * static_cast<long>(n) + 2, arg);
    return Verdict()
        .expect("d(3n+1,x) vs -F_(3n+2)(x-1,-1)", conv_det(mot, 3 * n + 1), rhs)
        .expect("d(3n+2,x) vs -F_(3n+2)(x-1,-1)", conv_det(mot, 3 * n + 2), rhs)
        .result();
  });
}

// ---------------------------------------------------------------------------
// Linear r-polynomials

CheckReport run_hermite(const CheckContext& ctx) {
  return run_per_n("hermite", ctx.n_max, [](std::size_t n) {
    const auto df = [](std::size_t m) { return double_factorial_moment(static_cast<long>(m)); };
    // (2m-1)!! (x^2 - 2m - 1) and (2m+1)!! (x^2 - 2m - 3), m = i + j
    const auto entry0 = [&df](std::size_t m) {
      return cst(df(m)) * (x_pow<Integer>(2) - ZX(Integer(2 * static_cast<long>(m) + 1)));
    };
    const auto entry1 = [&df](std::size_t m) {
      return cst(df(m + 1)) * (x_pow<Integer>(2) - ZX(Integer(2 * static_cast<long>(m) + 3)));
    };
    const Integer den0 = det_bareiss(hankel_from<Integer>(df, n));
    const Integer den1 = det_bareiss(hankel_from<Integer>([&df](std::size_t m) { return df(m + 1); }, n));
    const long m = static_cast<long>(n);
    return Verdict()
        .expect("det((2i+2j-1)!!(x^2-2i-2j-1)) vs det((2i+2j-1)!!) H_(2n+2)(x)",
                det_bareiss(hankel_from<ZX>(entry0, n)), cst(den0) * hermite_poly<Integer>(2 * m + 2))
        .expect("x det((2i+2j+1)!!(x^2-2i-2j-3)) vs det((2i+2j+1)!!) H_(2n+3)(x)",
                det_bareiss(hankel_from<ZX>(entry1, n)).shift_up(1), cst(den1) * hermite_poly<Integer>(2 * m + 3))
        .result();
  });
}

CheckReport run_eq48(const CheckContext& ctx) {
  const auto cat = sequences::catalan_numbers<Integer>();
  return run_per_n("eq48", ctx.n_max, [cat](std::size_t n) {
    const auto v = cat.prefix(2 * n + 3);
    const Integer det = det_bareiss(hankel_from<Integer>([&v](std::size_t k) { return v[k] + v[k + 1]; }, n));
    const long m = static_cast<long>(n);
    const ZX minus_x2 = ZX::monomial(Integer(-1), 2);
    return Verdict()
        .expect("det(C_(i+j) + C_(i+j+1)) vs F_(2n+3)", det, fibonacci_number(2 * m + 3))
        .expect("det(r(i+j,-x^2)) vs (-1)^(n+1) F_(2n+3)(x,1)", lin_det(cat, n).template eval<ZX>(minus_x2),
                cst(sgn<Integer>(n + 1)) * fibonacci_poly<Integer>(2 * m + 3, Integer(1)))
        .result();
  });
}

CheckReport run_eq49(const CheckContext& ctx) {
  const auto cat = sequences::catalan_numbers<Integer>();
  return run_per_n("eq49", ctx.n_max, [cat](std::size_t n) {
    const auto v = cat.prefix(2 * n + 3);
    const Integer det = det_bareiss(hankel_from<Integer>([&v](std::size_t k) { return v[k + 1] + v[k + 2]; }, n));
    return Verdict()
        .expect("det(C_(i+j+1) + C_(i+j+2)) vs F_(2n+4)", det, fibonacci_number(2 * static_cast<long>(n) + 4))
        .result();
  });
}

CheckReport run_catalan_shift(const CheckContext& ctx) {
  const auto cat = sequences::catalan_numbers<Integer>();
  return run_per_n("catalan-shift", ctx.n_max, [cat](std::size_t n) {
    return Verdict().expect("det(C_(i+j+1))", plain_det(cat, n, 1), Integer(1)).result();
  });
}

ZX schroder_lin_closed(std::size_t n, bool shifted) {
  const long m = static_cast<long>(n);
  ZX out;
  for (long k = 0; k <= m + 1; ++k) {
    Integer inner(0);
    for (long j = 0; j <= m + 1 - k; ++j) {
      const Integer second = shifted ? binomial(k + j, j) : binomial_ext(k + j - 1, j);
      inner += pow(Integer(2), static_cast<unsigned long>(j)) * binomial(m + 1 - j, k) * second;
    }
    out += ZX::monomial(sign_pow<Integer>(m + 1 - k) * inner, static_cast<std::size_t>(k));
  }
  return out;
}

CheckReport run_schroder_lin(const std::string& id, const CheckContext& ctx, bool shifted,
                             const std::vector<std::vector<long>>& printed) {
  const auto s = sequences::little_schroder_numbers<Integer>();
  return run_per_n(id, ctx.n_max, [s, shifted, printed](std::size_t n) {
    const std::size_t offset = shifted ? 1 : 0;
    const ZX closed = schroder_lin_closed(n, shifted);
    Verdict v;
    v.expect("det(x s(i+j+o) - s(i+j+o+1)) vs det(s(i+j+o)) closed sum", lin_det(s, n, offset),
             cst(plain_det(s, n, offset)) * closed);
    if (n < printed.size()) {
      v.expect("closed sum vs listed value", closed, ZX(std::vector<Integer>(printed[n].begin(), printed[n].end())));
    }
    return v.result();
  });
}

// ---------------------------------------------------------------------------
// Structural

template <Ring R>
Probe d0_probe(const SymRecurrence<R>& rec) {
  const auto a = sym_moments(rec);
  return [rec, a](std::size_t n) {
    return Verdict().expect(rec.description() + ": U_0^n...U_(n-1) vs det(a(i+j))", d0_product(rec, n),
                            plain_det(a, n)).result();
  };
}

template <Field F>
Probe invcol_probe(const SymRecurrence<F>& rec) {
  const auto a = sym_moments(rec);
  return [rec, a](std::size_t n) {
    const auto col = inverse_first_column(rec, n);
    const auto m = hankel_matrix(a, n, 0);
    Verdict v;
    for (std::size_t i = 0; i <= n; ++i) {
      F s(0);
      for (std::size_t j = 0; j <= n; ++j) s = s + m(i, j) * col[j];
      v.expect(rec.description() + ": row " + std::to_string(i) + " of A_n col", s, F(i == 0 ? 1 : 0));
    }
    return v.result();
  };
}

template <Field F>
Probe orth_probe(const SymRecurrence<F>& rec) {
  const auto a = sym_moments(rec);
  return [rec, a](std::size_t n) {
    const auto p = sym_polys(rec, 2 * n + 1);
    const std::string who = rec.description() + ": ";
    Verdict v;
    v.expect(who + "L(p_n)", apply_functional(p[n], a), F(n == 0 ? 1 : 0));
    for (std::size_t k = 1; k <= n; ++k) {
      v.expect(who + "L(x^(2k-1) p_(2n+1)), k = " + std::to_string(k),
               apply_functional(p[2 * n + 1].shift_up(2 * k - 1), a), F(0));
    }
    const XPoly<F> mn = exact_div(p[2 * n + 1], XPoly<F>::var()) * cst(sgn<F>(n) / odd_t_product(rec, n));
    for (std::size_t m = 0; m <= n; ++m) {
      v.expect(who + "L(x^2m M_n), m = " + std::to_string(m), apply_functional(mn.shift_up(2 * m), a),
               F(m == 0 ? 1 : 0));
    }
    return v.result();
  };
}

template <Ring R>
SymRecurrence<Rational> to_rational(const SymRecurrence<R>& rec) {
  return SymRecurrence<Rational>([rec](std::size_t n) { return Rational(rec.t(n)); }, rec.description());
}

CheckReport run_d0(const CheckContext& ctx) {
  const RatFuncQ q = RatFuncQ::param();
  std::vector<Probe> probes;
  for (const auto& rec : integer_families()) probes.push_back(d0_probe(rec));
  probes.push_back(d0_probe(families::carlitz(q)));
  probes.push_back(d0_probe(families::andrews(q)));
  probes.push_back(d0_probe(families::q_central_binomial(q)));
  probes.push_back(d0_probe(families::schroder(RatFuncQ(1), RatFuncQ(2), q)));
  probes.push_back(d0_probe(families::schroder(RatFuncQ(2), RatFuncQ(1), q)));
  probes.push_back(d0_probe(motzkin_t(RatFuncU::param())));
  const auto randoms = random_t_sequences(ctx.seed, 10);
  for (const auto& rec : randoms) probes.push_back(d0_probe(rec));
  return run_probes("d0", ctx, probes);
}

template <template <class> class Make>
std::vector<Probe> structural_probes(std::uint64_t seed) {
  const RatFuncQ q = RatFuncQ::param();
  std::vector<Probe> probes;
  for (const auto& rec : integer_families()) probes.push_back(Make<Rational>{}(to_rational(rec)));
  probes.push_back(Make<RatFuncQ>{}(families::carlitz(q)));
  probes.push_back(Make<RatFuncQ>{}(families::andrews(q)));
  probes.push_back(Make<RatFuncQ>{}(families::q_central_binomial(q)));
  probes.push_back(Make<RatFuncQ>{}(families::schroder(RatFuncQ(1), RatFuncQ(2), q)));
  probes.push_back(Make<RatFuncU>{}(motzkin_t(RatFuncU::param())));
  for (const auto& rec : random_t_sequences(seed, 5)) probes.push_back(Make<Rational>{}(to_rational(rec)));
  return probes;
}

template <class F>
struct InvcolMaker {
  Probe operator()(const SymRecurrence<F>& rec) const { return invcol_probe(rec); }
};
template <class F>
struct OrthMaker {
  Probe operator()(const SymRecurrence<F>& rec) const { return orth_probe(rec); }
};

CheckReport run_mutation(const CheckContext& ctx) {
  const auto cat = sequences::catalan_numbers<Integer>();
  const auto mot = sequences::motzkin_numbers<Integer>();
  const auto cat_rec = families::catalan<Integer>();
  using Cmp = std::function<Comparison(const MomentSeq<Integer>&, std::size_t)>;
  struct Target {
    std::string name;
    MomentSeq<Integer> base;
    Cmp cmp;
  };
  const std::vector<Target> targets = {
      {"Catalan closed form", cat, [](const MomentSeq<Integer>& a, std::size_t n) { return catalan_form_at(a, n); }},
      {"Catalan divided determinant", cat,
       [cat_rec](const MomentSeq<Integer>& a, std::size_t n) { return v_form_at(cat_rec, a, n); }},
      {"Motzkin determinants", mot, [](const MomentSeq<Integer>& a, std::size_t n) { return motzkin_form_at(a, n); }},
  };
  constexpr std::size_t window = 3;
  return run_per_n("mutation", ctx.n_max, [targets](std::size_t k) {
    for (const Target& t : targets) {
      const auto bad = perturb(t.base, k);
      bool detected = false;
      for (std::size_t n = k; n <= k + window; ++n) {
        const Comparison clean = t.cmp(t.base, n);
        if (!clean.pass) {
          return Comparison{false, t.name + ": unperturbed sequence fails at n = " + std::to_string(n), "pass"};
        }
        if (!t.cmp(bad, n).pass) {
          detected = true;
          break;
        }
      }
      if (!detected) {
        return Comparison{false,
                          t.name + ": a(" + std::to_string(k) + ") + 1 passes for n = " + std::to_string(k) + ".." +
                              std::to_string(k + window),
                          "some n fails"};
      }
    }
    return Comparison{};
  });
}

Check make_check(std::string id, std::string equations, std::string title, std::size_t default_n, ParamKind param,
                 std::function<CheckReport(const CheckContext&)> run) {
  return Check{std::move(id), std::move(equations), std::move(title), default_n, param, std::move(run)};
}

Registry build_registry() {
  Registry r;
  r.push_back(make_check("lemma", "(8)", "divided Conv-determinant through v(2n+1,k) and r(n-k,x)", 4, ParamKind::None,
                         [](const CheckContext& ctx) { return run_on_families("lemma", ctx, v_form_at); }));
  r.push_back(make_check("thm1", "(10), (12), (13)", "d(n,x^2)/d(n,0) through p_2n(x,T)", 4, ParamKind::None,
                         [](const CheckContext& ctx) { return run_on_families("thm1", ctx, shifted_form_at); }));
  r.push_back(make_check("aeration", "(9)", "aerated moments give the same divided determinants", 3, ParamKind::None,
                         run_aeration));
  r.push_back(make_check("cor1", "(17), (18)", "Catalan numbers", 8, ParamKind::None, [](const CheckContext& ctx) {
    const auto a = sequences::catalan_numbers<Integer>();
    return run_per_n("cor1", ctx.n_max, [a](std::size_t n) { return catalan_form_at(a, n); });
  }));
  r.push_back(make_check("cor2", "(20), (21)", "central binomial coefficients", 8, ParamKind::None,
                         [](const CheckContext& ctx) {
                           const auto a = sequences::central_binomials<Integer>();
                           return run_per_n("cor2", ctx.n_max, [a](std::size_t n) { return catalan_form_at(a, n); });
                         }));
  r.push_back(make_check("cor3", "(24), (25)", "Carlitz q-Catalan numbers", 4, ParamKind::Q, [](const CheckContext& ctx) {
    return with_q(ctx, [&ctx](const auto& q) { return run_cor3(ctx, q); });
  }));
  r.push_back(make_check("cor4", "(28), (29)", "Andrews q-Catalan numbers", 3, ParamKind::Q, [](const CheckContext& ctx) {
    return with_q(ctx, [&ctx](const auto& q) { return run_cor4(ctx, q); });
  }));
  r.push_back(make_check("cor5", "(32), (33)", "q-central binomial moments", 3, ParamKind::Q,
                         [](const CheckContext& ctx) {
                           return with_q(ctx, [&ctx](const auto& q) { return run_cor5(ctx, q); });
                         }));
  r.push_back(make_check("cor6", "(37), (38)", "little and large Schroeder numbers", 6, ParamKind::None, run_cor6));
  r.push_back(make_check("eq36", "(34), (36)", "t_2n = q^n a, t_2n+1 = q^n b with symbolic a, b", 3, ParamKind::Q,
                         [](const CheckContext& ctx) {
                           return with_q(ctx, [&ctx](const auto& q) { return run_eq36(ctx, q); });
                         }));
  r.push_back(make_check("motzkin-det", "remark before (39)", "det(M_(i+j)) = 1", 8, ParamKind::None,
                         [](const CheckContext& ctx) {
                           const auto m = sequences::motzkin_numbers<Integer>();
                           return run_per_n("motzkin-det", ctx.n_max, [m](std::size_t n) {
                             return Verdict().expect("det(M_(i+j))", plain_det(m, n), Integer(1)).result();
                           });
                         }));
  r.push_back(make_check("motzkin-prefix", "remark before (39), (43), (44)",
                         "divided Conv-determinants of Motzkin numbers", 5, ParamKind::None, run_motzkin_prefix));
  r.push_back(make_check("eq41", "(41)", "Motzkin polynomials M_n(u) through p_2n(x,T)", 4, ParamKind::U,
                         [](const CheckContext& ctx) {
                           return with_u(ctx, [&ctx](const auto& u) { return run_eq41(ctx, u); });
                         }));
  r.push_back(make_check("eq42", "(42)", "Motzkin polynomials M_n(u), Fibonacci form in x - u", 4, ParamKind::U,
                         [](const CheckContext& ctx) { return run_motzkin_u<Eq42>("eq42", ctx, true); }));
  r.push_back(make_check("eq43", "(43)", "d(3n,x) for Motzkin numbers", 4, ParamKind::None, run_eq43));
  r.push_back(make_check("eq44", "(44)", "d(3n+1,x) = d(3n+2,x) for Motzkin numbers", 4, ParamKind::None, run_eq44));
  r.push_back(make_check("thm2", "(45), (46), (47)", "r(n,x) = a(n)x - a(n+1)", 3, ParamKind::None,
                         [](const CheckContext& ctx) { return run_on_families("thm2", ctx, lin_form_at); }));
  r.push_back(make_check("hermite", "(50), (51)", "double factorial moments and Hermite polynomials", 3,
                         ParamKind::None, run_hermite));
  r.push_back(make_check("eq48", "(48)", "det(C_(i+j) + C_(i+j+1)) = F_(2n+3)", 8, ParamKind::None, run_eq48));
  r.push_back(make_check("eq49", "(49)", "det(C_(i+j+1) + C_(i+j+2)) = F_(2n+4)", 8, ParamKind::None, run_eq49));
  r.push_back(make_check("catalan-shift", "x = 0 in (46)", "det(C_(i+j+1)) = 1", 8, ParamKind::None,
                         run_catalan_shift));
  r.push_back(make_check("eq52", "(52)", "det(x M_(i+j) - M_(i+j+1))", 4, ParamKind::U,
                         [](const CheckContext& ctx) { return run_motzkin_u<Eq52>("eq52", ctx, true); }));
  r.push_back(make_check("eq53", "(53)", "det(M_(i+j+1)(u))", 4, ParamKind::U,
                         [](const CheckContext& ctx) { return run_motzkin_u<Eq53>("eq53", ctx, true); }));
  r.push_back(make_check("eq54", "(54)", "det(M_(i+j)(u) + M_(i+j+1)(u))", 4, ParamKind::U,
                         [](const CheckContext& ctx) { return run_motzkin_u<Eq54>("eq54", ctx, true); }));
  r.push_back(make_check("eq55", "(55)", "shifted linear quotient, where F_(n+2)(u,-1) != 0", 4, ParamKind::U,
                         [](const CheckContext& ctx) { return run_motzkin_u<Eq55>("eq55", ctx, false); }));
  r.push_back(make_check("eq56", "(56)", "det(x M_(i+j+1) - M_(i+j+2)), including u = 1", 4, ParamKind::U,
                         [](const CheckContext& ctx) { return run_motzkin_u<Eq56>("eq56", ctx, true); }));
  r.push_back(make_check("eq57", "(57)", "det(x s(i+j) - s(i+j+1)), little Schroeder", 5, ParamKind::None,
                         [](const CheckContext& ctx) {
                           return run_schroder_lin("eq57", ctx, false, {{-1, 1}, {1, -4, 1}, {-1, 11, -7, 1}});
                         }));
  r.push_back(make_check("eq58", "(58)", "det(x s(i+j+1) - s(i+j+2)), little Schroeder", 5, ParamKind::None,
                         [](const CheckContext& ctx) {
                           return run_schroder_lin("eq58", ctx, true, {{-3, 1}, {7, -6, 1}, {-15, 23, -9, 1}});
                         }));
  r.push_back(make_check("d0", "remark after (15)", "d(n,0) = U_0^n U_1^(n-1) ... U_(n-1)", 6, ParamKind::None, run_d0));
  r.push_back(make_check("invcol", "(7)", "first column of A_n^-1 from v(2n+1,k)", 5, ParamKind::None,
                         [](const CheckContext& ctx) {
                           return run_probes("invcol", ctx, structural_probes<InvcolMaker>(ctx.seed));
                         }));
  r.push_back(make_check("orth", "(4), (5), (6)", "L(p_n) = [n = 0] and L(x^2m M_n) = [m = 0]", 6, ParamKind::None,
                         [](const CheckContext& ctx) {
                           return run_probes("orth", ctx, structural_probes<OrthMaker>(ctx.seed));
                         }));
  r.push_back(make_check("mutation", "negative control", "perturbing a(n) by 1 makes a check fail", 3,
                         ParamKind::None, run_mutation));
  return r;
}

}  // namespace

Comparison v_form_at(const SymRecurrence<Integer>& rec, const MomentSeq<Integer>& a, std::size_t n) {
  return v_form_generic(rec, a, n);
}

Comparison shifted_form_at(const SymRecurrence<Integer>& rec, const MomentSeq<Integer>& a, std::size_t n) {
  return shifted_form_generic(rec, a, n);
}

Comparison lin_form_at(const SymRecurrence<Integer>& rec, const MomentSeq<Integer>& a, std::size_t n) {
  return lin_form_generic(rec, a, n);
}

Comparison catalan_form_at(const MomentSeq<Integer>& a, std::size_t n) {
  const long m = static_cast<long>(n);
  const ZX d = conv_det(a, n);
  const ZX closed = catalan_closed(n);
  ZX alt;
  for (long k = 0; k <= m; ++k) {
    alt += ZX::monomial(sign_pow<Integer>(m - k) * binomial(2 * m - k, k), static_cast<std::size_t>(2 * m - 2 * k));
  }
  return Verdict()
      .expect("d(n,x^2) vs d(n,0) sum (-1)^j binom(n+j,n-j) x^2j", d.substitute_square(), cst(d.coeff(0)) * closed)
      .expect("(-1)^n F_(2n+1)(x,-1) vs closed sum", cst(sgn<Integer>(n)) * fibonacci_poly<Integer>(2 * m + 1, Integer(-1)),
              closed)
      .expect("sum (-1)^(n-k) binom(2n-k,k) x^(2n-2k) vs closed sum", alt, closed)
      .result();
}

Comparison motzkin_form_at(const MomentSeq<Integer>& m, std::size_t n) {
  return Verdict()
      .expect("det(M_(i+j))", plain_det(m, n), Integer(1))
      .expect("d(n,x) vs period-six Fibonacci form in x-1", conv_det(m, n), motzkin_closed(n))
      .result();
}

MomentSeq<Integer> perturb(const MomentSeq<Integer>& a, std::size_t k) {
  return MomentSeq<Integer>(a.source() + " with a(" + std::to_string(k) + ") + 1", [a, k](std::size_t count) {
    auto v = a.prefix(count);
    if (k < v.size()) v[k] += Integer(1);
    return v;
  });
}

const Registry& default_registry() {
  static const Registry registry = build_registry();
  return registry;
}

}  // namespace hankel_lab
