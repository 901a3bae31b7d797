#pragma once

// Symmetric orthogonal polynomial sequences p_n = x p_{n-1} - t_{n-2} p_{n-2}
// (p_{-1} = 0, p_0 = 1), the general three-term form
// P_n = (x - S_{n-1}) P_{n-1} - U_{n-2} P_{n-2}, the coefficient table
// v(n, k), and the named polynomial families built on them. Every family has
// a recurrence and an independent closed-form evaluator.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hankel_lab/numbers.hpp"
#include "hankel_lab/poly.hpp"
#include "hankel_lab/qseries.hpp"
#include "hankel_lab/ring.hpp"

namespace hankel_lab {

template <Ring R>
using XPoly = Poly<R, 'x'>;

/// The 0-based coefficient sequence t of a symmetric recurrence. Values are
/// produced lazily; a zero value is reported when it is queried.
template <Ring R>
class SymRecurrence {
 public:
  using Generator = std::function<R(std::size_t)>;

  SymRecurrence(Generator t, std::string description)
      : t_(std::make_shared<Generator>(std::move(t))), description_(std::move(description)) {}

  /// t_n; throws ZeroCoefficient if it vanishes.
  R t(std::size_t n) const {
    R v = (*t_)(n);
    if (v.is_zero()) throw ZeroCoefficient("t", n);
    return v;
  }
  R operator()(std::size_t n) const { return t(n); }

  std::vector<R> prefix(std::size_t count) const {
    std::vector<R> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) out.push_back(t(n));
    return out;
  }

  const std::string& description() const { return description_; }

 private:
  std::shared_ptr<const Generator> t_;
  std::string description_;
};

/// T_n = t_{n+1}.
template <Ring R>
SymRecurrence<R> shift_t(const SymRecurrence<R>& rec) {
  return SymRecurrence<R>([rec](std::size_t n) { return rec.t(n + 1); }, "shift(" + rec.description() + ")");
}

/// p_0 ... p_{n_max}.
template <Ring R>
std::vector<XPoly<R>> sym_polys(const SymRecurrence<R>& rec, std::size_t n_max) {
  std::vector<XPoly<R>> p;
  p.reserve(n_max + 1);
  p.emplace_back(1);
  if (n_max >= 1) p.push_back(XPoly<R>::var());
  for (std::size_t n = 2; n <= n_max; ++n) {
    p.push_back(p[n - 1].shift_up(1) - p[n - 2] * XPoly<R>(rec.t(n - 2)));
  }
  return p;
}

/// Unsigned coefficients v(n, k) of x^(n-2k) in p_n, filled by
/// v(n, k) = v(n-1, k) + t_{n-2} v(n-2, k-1).
template <Ring R>
class VTable {
 public:
  VTable(const SymRecurrence<R>& rec, std::size_t n_max) {
    rows_.reserve(n_max + 1);
    rows_.push_back({R(1)});
    if (n_max >= 1) rows_.push_back({R(1)});
    for (std::size_t n = 2; n <= n_max; ++n) {
      const R tn = rec.t(n - 2);
      std::vector<R> row(n / 2 + 1, R(0));
      for (std::size_t k = 0; k < row.size(); ++k) {
        R v = at(n - 1, static_cast<long>(k));
        if (k >= 1) v = v + tn * at(n - 2, static_cast<long>(k) - 1);
        row[k] = std::move(v);
      }
      rows_.push_back(std::move(row));
    }
  }

  /// Zero outside 0 <= k <= n/2; throws std::out_of_range beyond n_max.
  R at(std::size_t n, long k) const {
    const auto& row = rows_.at(n);
    if (k < 0 || static_cast<std::size_t>(k) >= row.size()) return R(0);
    return row[static_cast<std::size_t>(k)];
  }
  R operator()(std::size_t n, long k) const { return at(n, k); }
  std::size_t n_max() const { return rows_.size() - 1; }

 private:
  std::vector<std::vector<R>> rows_;
};

template <Ring R>
VTable<R> v_table(const SymRecurrence<R>& rec, std::size_t n_max) {
  return VTable<R>(rec, n_max);
}

template <Ring R>
class GeneralRecurrence {
 public:
  using Generator = std::function<R(std::size_t)>;

  GeneralRecurrence(Generator s, Generator u, std::string description)
      : s_(std::make_shared<Generator>(std::move(s))),
        u_(std::make_shared<Generator>(std::move(u))),
        description_(std::move(description)) {}

  R S(std::size_t n) const { return (*s_)(n); }
  /// U_n; throws ZeroCoefficient if it vanishes.
  R U(std::size_t n) const {
    R v = (*u_)(n);
    if (v.is_zero()) throw ZeroCoefficient("U", n);
    return v;
  }
  const std::string& description() const { return description_; }

 private:
  std::shared_ptr<const Generator> s_;
  std::shared_ptr<const Generator> u_;
  std::string description_;
};

/// P_0 ... P_{n_max}.
template <Ring R>
std::vector<XPoly<R>> general_polys(const GeneralRecurrence<R>& rec, std::size_t n_max) {
  std::vector<XPoly<R>> p;
  p.reserve(n_max + 1);
  const XPoly<R> x = XPoly<R>::var();
  p.emplace_back(1);
  if (n_max >= 1) p.push_back(x - XPoly<R>(rec.S(0)));
  for (std::size_t n = 2; n <= n_max; ++n) {
    p.push_back((x - XPoly<R>(rec.S(n - 1))) * p[n - 1] - p[n - 2] * XPoly<R>(rec.U(n - 2)));
  }
  return p;
}

/// S_0 = t_0, S_n = t_{2n-1} + t_{2n}, U_n = t_{2n} t_{2n+1}; then
/// P_n(x^2) = p_{2n}(x).
template <Ring R>
GeneralRecurrence<R> sym_to_general(const SymRecurrence<R>& rec) {
  auto s = [rec](std::size_t n) { return n == 0 ? rec.t(0) : rec.t(2 * n - 1) + rec.t(2 * n); };
  auto u = [rec](std::size_t n) { return rec.t(2 * n) * rec.t(2 * n + 1); };
  return GeneralRecurrence<R>(s, u, "contraction(" + rec.description() + ")");
}

// ---------------------------------------------------------------------------
// Named polynomial families.

namespace detail {

/// f_n = x f_{n-1} + c(n) f_{n-2} from (f_0, f_1).
template <Ring R, class Coef>
XPoly<R> linear_recurrence(long n, XPoly<R> f0, XPoly<R> f1, Coef&& coef) {
  if (n == 0) return f0;
  for (long m = 2; m <= n; ++m) {
    XPoly<R> next = f1.shift_up(1);
    if (!f0.is_zero()) next = next + f0 * XPoly<R>(coef(m));
    f0 = std::move(f1);
    f1 = std::move(next);
  }
  return f1;
}

/// prod_{j=lo}^{hi} (1 + sign * q^j b)  (empty product = 1).
template <Field F>
F q_shifted_product(long lo, long hi, const F& b, const F& q, int sign) {
  F r(1);
  for (long j = lo; j <= hi; ++j) r = r * (F(1) + F(sign) * ipow(q, j) * b);
  return r;
}

}  // namespace detail

/// Gaussian binomial with the convention [n, 0] = 1 for every n (including
/// n = -1, which the double-sum closed forms use). Negative n with k > 0 is
/// outside every formula here and rejected.
template <class R>
R q_binomial_ext(long n, long k, const R& q) {
  if (k == 0) return R(1);
  if (k < 0) return R(0);
  if (n < 0) throw std::invalid_argument("q_binomial_ext: negative upper index with k > 0");
  return q_binomial_at<R>(n, k, q);
}

inline Integer binomial_ext(long n, long k) {
  if (k == 0) return Integer(1);
  if (k < 0) return Integer(0);
  if (n < 0) throw std::invalid_argument("binomial_ext: negative upper index with k > 0");
  return binomial(n, k);
}

/// F_n(x, s) = x F_{n-1} + s F_{n-2}, F_0 = 0, F_1 = 1.
template <Ring R>
XPoly<R> fibonacci_poly(long n, const R& s) {
  return detail::linear_recurrence<R>(n, XPoly<R>(), XPoly<R>(1), [&](long) { return s; });
}

/// sum_k s^k binom(n-1-k, k) x^(n-1-2k).
template <Ring R>
XPoly<R> fibonacci_poly_closed(long n, const R& s) {
  XPoly<R> out;
  for (long k = 0; 2 * k <= n - 1; ++k) {
    out += XPoly<R>::monomial(pow(s, static_cast<unsigned long>(k)) * R(binomial(n - 1 - k, k)),
                              static_cast<std::size_t>(n - 1 - 2 * k));
  }
  return out;
}

/// L_n(x, s) = x L_{n-1} + s L_{n-2}, L_0 = 2, L_1 = x.
template <Ring R>
XPoly<R> lucas_poly(long n, const R& s) {
  return detail::linear_recurrence<R>(n, XPoly<R>(2), XPoly<R>::var(), [&](long) { return s; });
}

/// sum_k n/(n-k) binom(n-k, k) s^k x^(n-2k) for n > 0; L_0 = 2.
template <Ring R>
XPoly<R> lucas_poly_closed(long n, const R& s) {
  if (n == 0) return XPoly<R>(2);
  XPoly<R> out;
  for (long k = 0; 2 * k <= n; ++k) {
    const Integer c = exact_div(Integer(n) * binomial(n - k, k), Integer(n - k));
    out += XPoly<R>::monomial(pow(s, static_cast<unsigned long>(k)) * R(c), static_cast<std::size_t>(n - 2 * k));
  }
  return out;
}

/// Carlitz q-Fibonacci: F_n = x F_{n-1} + q^(n-3) s F_{n-2}.
template <Field F>
XPoly<F> q_fibonacci(long n, const F& s, const F& q) {
  return detail::linear_recurrence<F>(n, XPoly<F>(), XPoly<F>(1), [&](long m) { return ipow(q, m - 3) * s; });
}

/// sum_k s^k q^(k^2-k) [n-1-k, k] x^(n-1-2k).
template <Ring R>
XPoly<R> q_fibonacci_closed(long n, const R& s, const R& q) {
  XPoly<R> out;
  for (long k = 0; 2 * k <= n - 1; ++k) {
    const R c = pow(s, static_cast<unsigned long>(k)) * pow(q, static_cast<unsigned long>(k * k - k)) *
                q_binomial_at<R>(n - 1 - k, k, q);
    out += XPoly<R>::monomial(c, static_cast<std::size_t>(n - 1 - 2 * k));
  }
  return out;
}

/// (q, b)-Fibonacci: F_n = x F_{n-1} + q^(n-3) s / ((1 - q^(n-2) b)(1 - q^(n-1) b)) F_{n-2}.
template <Field F>
XPoly<F> qb_fibonacci(long n, const F& b, const F& s, const F& q) {
  return detail::linear_recurrence<F>(n, XPoly<F>(), XPoly<F>(1), [&](long m) {
    const F den = (F(1) - ipow(q, m - 2) * b) * (F(1) - ipow(q, m - 1) * b);
    if (den.is_zero()) throw DivisionByZero("qb_fibonacci: vanishing denominator 1 - q^j b");
    return ipow(q, m - 3) * s / den;
  });
}

/// sum_k s^k q^(k^2-k) [n-1-k, k] x^(n-1-2k) / (prod_{j=1}^k (1-q^j b) prod_{j=n-k}^{n-1} (1-q^j b)).
template <Field F>
XPoly<F> qb_fibonacci_closed(long n, const F& b, const F& s, const F& q) {
  XPoly<F> out;
  for (long k = 0; 2 * k <= n - 1; ++k) {
    const F den = detail::q_shifted_product(1, k, b, q, -1) * detail::q_shifted_product(n - k, n - 1, b, q, -1);
    if (den.is_zero()) throw DivisionByZero("qb_fibonacci: vanishing denominator 1 - q^j b");
    const F c = pow(s, static_cast<unsigned long>(k)) * pow(q, static_cast<unsigned long>(k * k - k)) *
                q_binomial_at<F>(n - 1 - k, k, q) / den;
    out += XPoly<F>::monomial(c, static_cast<std::size_t>(n - 1 - 2 * k));
  }
  return out;
}

/// Generalised q-Lucas: L_n = x L_{n-1} + q^(n-2) s / ((1+q^(n-2))(1+q^(n-1))) L_{n-2},
/// L_0 = 2, L_1 = x.
template <Field F>
XPoly<F> q_lucas(long n, const F& s, const F& q) {
  return detail::linear_recurrence<F>(n, XPoly<F>(2), XPoly<F>::var(), [&](long m) {
    const F den = (F(1) + ipow(q, m - 2)) * (F(1) + ipow(q, m - 1));
    if (den.is_zero()) throw DivisionByZero("q_lucas: vanishing denominator 1 + q^j");
    return ipow(q, m - 2) * s / den;
  });
}

/// sum_k q^(k^2-k) s^k x^(n-2k) [n]/[n-k] [n-k, k] / (prod_{j=1}^k (1+q^j) prod_{j=n-k}^{n-1} (1+q^j)).
template <Field F>
XPoly<F> q_lucas_closed(long n, const F& s, const F& q) {
  if (n == 0) return XPoly<F>(2);
  XPoly<F> out;
  for (long k = 0; 2 * k <= n; ++k) {
    const F den = detail::q_shifted_product(1, k, F(1), q, 1) * detail::q_shifted_product(n - k, n - 1, F(1), q, 1);
    if (den.is_zero()) throw DivisionByZero("q_lucas: vanishing denominator 1 + q^j");
    const F c = pow(q, static_cast<unsigned long>(k * k - k)) * pow(s, static_cast<unsigned long>(k)) *
                q_int_at<F>(n, q) / q_int_at<F>(n - k, q) * q_binomial_at<F>(n - k, k, q) / den;
    out += XPoly<F>::monomial(c, static_cast<std::size_t>(n - 2 * k));
  }
  return out;
}

/// H_n = x H_{n-1} - (n-1) H_{n-2}, H_0 = 1, H_1 = x.
template <Ring R>
XPoly<R> hermite_poly(long n) {
  return detail::linear_recurrence<R>(n, XPoly<R>(1), XPoly<R>::var(), [](long m) { return R(-(m - 1)); });
}

/// Closed form of p_n for t_{2m} = q^m a, t_{2m+1} = q^m b:
///   p_{2n}   = sum_k (-a)^(n-k) q^binom(n-k,2) x^(2k)   sum_j [n-j,k][k+j-1,j] (b/a)^j
///   p_{2n+1} = sum_k (-a)^(n-k) q^binom(n-k,2) x^(2k+1) sum_j [n-j,k][k+j,j]   (b/a)^j
/// evaluated as (-1)^(n-k) a^(n-k-j) b^j so no division by a is needed.
template <Ring R>
XPoly<R> schroder_sym_poly(long index, const R& a, const R& b, const R& q) {
  const long n = index / 2;
  const bool odd = index % 2 == 1;
  XPoly<R> out;
  for (long k = 0; k <= n; ++k) {
    R inner(0);
    for (long j = 0; j <= n - k; ++j) {
      const R bin2 = odd ? q_binomial_ext<R>(k + j, j, q) : q_binomial_ext<R>(k + j - 1, j, q);
      inner = inner + q_binomial_at<R>(n - j, k, q) * bin2 * pow(a, static_cast<unsigned long>(n - k - j)) *
                          pow(b, static_cast<unsigned long>(j));
    }
    const R c = sign_pow<R>(n - k) * pow(q, static_cast<unsigned long>((n - k) * (n - k - 1) / 2)) * inner;
    out += XPoly<R>::monomial(c, static_cast<std::size_t>(2 * k + (odd ? 1 : 0)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named coefficient sequences.

namespace families {

/// t = 1, 1, 1, ...  (moments: Catalan numbers)
template <Ring R>
SymRecurrence<R> catalan() {
  return SymRecurrence<R>([](std::size_t) { return R(1); }, "t = 1");
}

/// t = 2, 1, 1, ...  (moments: central binomial coefficients)
template <Ring R>
SymRecurrence<R> central_binomial() {
  return SymRecurrence<R>([](std::size_t n) { return R(n == 0 ? 2 : 1); }, "t = (2, 1, 1, ...)");
}

/// t_n = q^n  (moments: Carlitz q-Catalan numbers)
template <Ring R>
SymRecurrence<R> carlitz(const R& q) {
  return SymRecurrence<R>([q](std::size_t n) { return pow(q, n); }, "t_n = q^n");
}

/// t_n = q^n / ((1 + q^(n+1)) (1 + q^(n+2)))  (moments: Andrews q-Catalan numbers)
template <Field F>
SymRecurrence<F> andrews(const F& q) {
  return SymRecurrence<F>(
      [q](std::size_t n) {
        const F den = (F(1) + pow(q, n + 1)) * (F(1) + pow(q, n + 2));
        if (den.is_zero()) throw DivisionByZero("andrews: 1 + q^j vanishes");
        return pow(q, n) / den;
      },
      "t_n = q^n/((1+q^(n+1))(1+q^(n+2)))");
}

/// t_0 = 1/(1+q), t_n = q^n / ((1 + q^n)(1 + q^(n+1)))  (moments: q-central binomial)
template <Field F>
SymRecurrence<F> q_central_binomial(const F& q) {
  return SymRecurrence<F>(
      [q](std::size_t n) {
        const F den = n == 0 ? F(1) + q : (F(1) + pow(q, n)) * (F(1) + pow(q, n + 1));
        if (den.is_zero()) throw DivisionByZero("q_central_binomial: 1 + q^j vanishes");
        return pow(q, n) / den;
      },
      "t_0 = 1/(1+q), t_n = q^n/((1+q^n)(1+q^(n+1)))");
}

/// t_{2n} = q^n a, t_{2n+1} = q^n b
template <Ring R>
SymRecurrence<R> schroder(const R& a, const R& b, const R& q) {
  return SymRecurrence<R>([a, b, q](std::size_t n) { return pow(q, n / 2) * (n % 2 == 0 ? a : b); },
                          "t_2n = q^n a, t_2n+1 = q^n b");
}

/// t = 1, 2, 1, 2, ...  (little Schroeder numbers)
template <Ring R>
SymRecurrence<R> little_schroder() {
  return SymRecurrence<R>([](std::size_t n) { return R(n % 2 == 0 ? 1 : 2); }, "t = (1, 2, 1, 2, ...)");
}

/// t = 2, 1, 2, 1, ...  (large Schroeder numbers)
template <Ring R>
SymRecurrence<R> large_schroder() {
  return SymRecurrence<R>([](std::size_t n) { return R(n % 2 == 0 ? 2 : 1); }, "t = (2, 1, 2, 1, ...)");
}

/// t_n = n + 1  (Hermite; moments (2n-1)!!)
template <Ring R>
SymRecurrence<R> hermite() {
  return SymRecurrence<R>([](std::size_t n) { return R(static_cast<long>(n) + 1); }, "t_n = n + 1");
}

/// The given values repeated periodically.
template <Ring R>
SymRecurrence<R> periodic(std::vector<R> values) {
  if (values.empty()) throw std::invalid_argument("periodic: empty list");
  std::string desc = "t = (";
  for (std::size_t i = 0; i < values.size(); ++i) desc += (i ? ", " : "") + values[i].to_string();
  desc += ", ...)";
  auto shared = std::make_shared<const std::vector<R>>(std::move(values));
  return SymRecurrence<R>([shared](std::size_t n) { return (*shared)[n % shared->size()]; }, desc);
}

}  // namespace families

}  // namespace hankel_lab
