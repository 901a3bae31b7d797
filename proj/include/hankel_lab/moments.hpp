#pragma once

// Moment sequences a(n) = L(x^2n) of a symmetric recurrence and mu(n) = L(x^n)
// of a general three-term recurrence, plus the named sequences with their own
// generators (closed forms or generating-function convolutions).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hankel_lab/numbers.hpp"
#include "hankel_lab/opseq.hpp"
#include "hankel_lab/qseries.hpp"
#include "hankel_lab/ring.hpp"

namespace hankel_lab {

/// A memoised sequence. Copies share the cache; growth is serialised by a
/// mutex and values are handed out by copy.
template <Ring R>
class MomentSeq {
 public:
  using value_type = R;
  /// Must return at least `count` leading values.
  using Generator = std::function<std::vector<R>(std::size_t count)>;

  MomentSeq(std::string source, Generator gen) : state_(std::make_shared<State>()) {
    state_->source = std::move(source);
    state_->gen = std::move(gen);
  }

  /// A finite sequence; asking beyond its end throws std::out_of_range.
  static MomentSeq from_values(std::string source, std::vector<R> values) {
    auto shared = std::make_shared<const std::vector<R>>(std::move(values));
    return MomentSeq(std::move(source), [shared](std::size_t count) {
      if (count > shared->size()) throw std::out_of_range("finite moment sequence exhausted");
      return *shared;
    });
  }

  R at(std::size_t n) const {
    std::lock_guard lock(state_->mutex);
    ensure(n + 1);
    return state_->values[n];
  }
  R operator()(std::size_t n) const { return at(n); }

  std::vector<R> prefix(std::size_t count) const {
    std::lock_guard lock(state_->mutex);
    ensure(count);
    return std::vector<R>(state_->values.begin(), state_->values.begin() + static_cast<std::ptrdiff_t>(count));
  }

  std::size_t cached() const {
    std::lock_guard lock(state_->mutex);
    return state_->values.size();
  }

  const std::string& source() const { return state_->source; }

 private:
  struct State {
    std::mutex mutex;
    std::vector<R> values;
    Generator gen;
    std::string source;
  };

  void ensure(std::size_t count) const {
    if (state_->values.size() >= count) return;
    std::vector<R> fresh = state_->gen(count);
    if (fresh.size() < count) throw std::logic_error("moment generator returned too few values");
    state_->values = std::move(fresh);
  }

  std::shared_ptr<State> state_;
};

/// a(0..n_max) by expanding x^m in the p-basis with
/// x p_k = p_{k+1} + t_{k-1} p_{k-1}; a(n) is the p_0 coefficient of x^2n.
/// Only t_0 .. t_{n_max-1} are read.
template <Ring R>
std::vector<R> sym_moment_values(const SymRecurrence<R>& rec, std::size_t n_max) {
  const std::size_t steps = 2 * n_max;
  const std::vector<R> t = rec.prefix(n_max);
  std::vector<R> out{R(1)};
  std::vector<R> c{R(1)};
  for (std::size_t m = 0; m < steps; ++m) {
    // Components above steps-m-1 can no longer return to p_0.
    const std::size_t limit = std::min(m + 1, steps - m - 1);
    std::vector<R> next(limit + 1, R(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_zero()) continue;
      if (k + 1 <= limit) next[k + 1] = next[k + 1] + c[k];
      if (k >= 1 && k - 1 <= limit) next[k - 1] = next[k - 1] + t[k - 1] * c[k];
    }
    c = std::move(next);
    if ((m + 1) % 2 == 0) out.push_back(c[0]);
  }
  return out;
}

template <Ring R>
MomentSeq<R> sym_moments(const SymRecurrence<R>& rec, std::size_t n_max = 0) {
  MomentSeq<R> seq("moments of " + rec.description(),
                   [rec](std::size_t count) { return sym_moment_values(rec, count == 0 ? 0 : count - 1); });
  (void)seq.prefix(n_max + 1);
  return seq;
}

/// mu(0..n_max) with x P_k = P_{k+1} + S_k P_k + U_{k-1} P_{k-1}.
template <Ring R>
std::vector<R> general_moment_values(const GeneralRecurrence<R>& rec, std::size_t n_max) {
  std::vector<R> out{R(1)};
  std::vector<R> c{R(1)};
  for (std::size_t m = 0; m < n_max; ++m) {
    const std::size_t limit = std::min(m + 1, n_max - m - 1);
    std::vector<R> next(limit + 1, R(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_zero()) continue;
      if (k + 1 <= limit) next[k + 1] = next[k + 1] + c[k];
      if (k <= limit) next[k] = next[k] + rec.S(k) * c[k];
      if (k >= 1 && k - 1 <= limit) next[k - 1] = next[k - 1] + rec.U(k - 1) * c[k];
    }
    c = std::move(next);
    out.push_back(c[0]);
  }
  return out;
}

template <Ring R>
MomentSeq<R> general_moments(const GeneralRecurrence<R>& rec, std::size_t n_max = 0) {
  MomentSeq<R> seq("moments of " + rec.description(),
                   [rec](std::size_t count) { return general_moment_values(rec, count == 0 ? 0 : count - 1); });
  (void)seq.prefix(n_max + 1);
  return seq;
}

/// A(2n) = a(n), A(2n+1) = 0.
template <Ring R>
MomentSeq<R> aerate(const MomentSeq<R>& a) {
  return MomentSeq<R>("aerate(" + a.source() + ")", [a](std::size_t count) {
    const auto base = a.prefix((count + 1) / 2);
    std::vector<R> out;
    out.reserve(2 * base.size());
    for (const R& v : base) {
      out.push_back(v);
      out.push_back(R(0));
    }
    return out;
  });
}

/// Lambda(p) for the functional whose even moments are `a` and whose odd
/// moments vanish.
template <Ring R>
R apply_functional(const XPoly<R>& p, const MomentSeq<R>& a) {
  if (p.is_zero()) return R(0);
  const auto even = a.prefix(static_cast<std::size_t>(p.degree()) / 2 + 1);
  R sum(0);
  for (long k = 0; k <= p.degree(); k += 2) sum = sum + p.coeff(static_cast<std::size_t>(k)) * even[static_cast<std::size_t>(k / 2)];
  return sum;
}

/// Carlitz q-Catalan numbers. From f(z) = 1 + z f(z) f(qz), the coefficient
/// of z^(n+1) gives C_{n+1} = sum_{i+j=n} C_i q^j C_j.
template <Ring R>
MomentSeq<R> carlitz_q_catalan(const R& q, std::size_t n_max = 0) {
  MomentSeq<R> seq("Carlitz q-Catalan", [q](std::size_t count) {
    std::vector<R> c{R(1)};
    std::vector<R> qpow{R(1)};
    while (c.size() < count) {
      const std::size_t n = c.size() - 1;
      qpow.push_back(qpow.back() * q);
      R next(0);
      for (std::size_t i = 0; i <= n; ++i) next = next + c[i] * qpow[n - i] * c[n - i];
      c.push_back(std::move(next));
    }
    return c;
  });
  (void)seq.prefix(n_max + 1);
  return seq;
}

/// Andrews q-Catalan: 1/[n+1] [2n, n] (1+q)/(1+q^(n+1)) / prod_{j=1}^n (1+q^j)^2.
template <Field F>
F andrews_q_catalan(long n, const F& q) {
  F prod(1);
  for (long j = 1; j <= n; ++j) {
    const F f = F(1) + pow(q, static_cast<unsigned long>(j));
    prod = prod * f * f;
  }
  const F den = q_int_at<F>(n + 1, q) * (F(1) + pow(q, static_cast<unsigned long>(n + 1))) * prod;
  if (den.is_zero()) throw DivisionByZero("andrews_q_catalan: vanishing denominator");
  return q_binomial_at<F>(2 * n, n, q) * (F(1) + q) / den;
}

/// [2n, n] / prod_{j=1}^n (1+q^j)^2.
template <Field F>
F q_central_binomial_moment(long n, const F& q) {
  F prod(1);
  for (long j = 1; j <= n; ++j) {
    const F f = F(1) + pow(q, static_cast<unsigned long>(j));
    prod = prod * f * f;
  }
  if (prod.is_zero()) throw DivisionByZero("q_central_binomial_moment: vanishing denominator");
  return q_binomial_at<F>(2 * n, n, q) / prod;
}

/// Motzkin polynomials M_n(u). From f = 1 + u z f + z^2 f^2:
/// M_{n+1} = u M_n + sum_{i+j=n-1} M_i M_j.
template <Ring R>
MomentSeq<R> motzkin_u(const R& u, std::size_t n_max = 0) {
  MomentSeq<R> seq("Motzkin M_n(u)", [u](std::size_t count) {
    std::vector<R> m{R(1)};
    while (m.size() < count) {
      const std::size_t n = m.size() - 1;
      R next = u * m[n];
      for (std::size_t i = 0; n >= 1 && i <= n - 1; ++i) next = next + m[i] * m[n - 1 - i];
      m.push_back(std::move(next));
    }
    return m;
  });
  (void)seq.prefix(n_max + 1);
  return seq;
}

/// t_{2n} = F_{n+2}(u,-1) / F_{n+1}(u,-1), t_{2n+1} = 1 / t_{2n}: the symmetric
/// sequence whose contraction is S = u, U = 1. Undefined where some F_k(u,-1)
/// vanishes, in particular at u = 1.
template <Field F>
SymRecurrence<F> motzkin_t(const F& u) {
  if (u == F(1)) {
    throw DomainError(
        "Motzkin t-sequence undefined at u = 1: F_3(1,-1) = 0, so no t satisfies "
        "S = 1, U = 1 with t_2n = F_{n+2}(u,-1)/F_{n+1}(u,-1)");
  }
  return SymRecurrence<F>(
      [u](std::size_t n) {
        const std::size_t half = n / 2;
        // F_k(u, -1) for k = 0 .. half+2
        F f0(0), f1(1);
        for (std::size_t k = 2; k <= half + 1; ++k) {
          F f2 = u * f1 - f0;
          f0 = std::move(f1);
          f1 = std::move(f2);
        }
        const F fk = f1;             // F_{half+1}
        const F fk1 = u * f1 - f0;   // F_{half+2}
        if (fk.is_zero() || fk1.is_zero()) {
          throw DomainError("Motzkin t_" + std::to_string(n) + " undefined: F_" +
                            std::to_string(fk.is_zero() ? half + 1 : half + 2) +
                            "(u,-1) vanishes at the specialised u");
        }
        return n % 2 == 0 ? fk1 / fk : fk / fk1;
      },
      "t_2n = F_{n+2}(u,-1)/F_{n+1}(u,-1), t_2n+1 = 1/t_2n");
}

/// (2n-1)!! with (-1)!! = 1.
inline Integer double_factorial_moment(long n) {
  Integer r(1);
  for (long i = 1; i <= n; ++i) r *= Integer(2 * i - 1);
  return r;
}

namespace sequences {

/// C_n = binom(2n, n) / (n + 1)
template <Ring R>
MomentSeq<R> catalan_numbers() {
  return MomentSeq<R>("Catalan numbers", [](std::size_t count) {
    std::vector<R> v;
    for (std::size_t n = 0; n < count; ++n) {
      const long m = static_cast<long>(n);
      v.push_back(R(exact_div(binomial(2 * m, m), Integer(m + 1))));
    }
    return v;
  });
}

/// binom(2n, n)
template <Ring R>
MomentSeq<R> central_binomials() {
  return MomentSeq<R>("central binomial coefficients", [](std::size_t count) {
    std::vector<R> v;
    for (std::size_t n = 0; n < count; ++n) v.push_back(R(binomial(2 * static_cast<long>(n), static_cast<long>(n))));
    return v;
  });
}

/// M_n = sum_k binom(n, 2k) C_k
template <Ring R>
MomentSeq<R> motzkin_numbers() {
  return MomentSeq<R>("Motzkin numbers", [](std::size_t count) {
    std::vector<R> v;
    for (std::size_t n = 0; n < count; ++n) {
      const long m = static_cast<long>(n);
      Integer s(0);
      for (long k = 0; 2 * k <= m; ++k) s += binomial(m, 2 * k) * exact_div(binomial(2 * k, k), Integer(k + 1));
      v.push_back(R(s));
    }
    return v;
  });
}

/// Large Schroeder S_n = sum_k binom(n+k, 2k) C_k.
inline Integer large_schroder_number(long n) {
  Integer s(0);
  for (long k = 0; k <= n; ++k) s += binomial(n + k, 2 * k) * exact_div(binomial(2 * k, k), Integer(k + 1));
  return s;
}

template <Ring R>
MomentSeq<R> large_schroder_numbers() {
  return MomentSeq<R>("large Schroeder numbers", [](std::size_t count) {
    std::vector<R> v;
    for (std::size_t n = 0; n < count; ++n) v.push_back(R(large_schroder_number(static_cast<long>(n))));
    return v;
  });
}

/// s_0 = 1, s_n = S_n / 2.
template <Ring R>
MomentSeq<R> little_schroder_numbers() {
  return MomentSeq<R>("little Schroeder numbers", [](std::size_t count) {
    std::vector<R> v;
    for (std::size_t n = 0; n < count; ++n) {
      v.push_back(R(n == 0 ? Integer(1) : exact_div(large_schroder_number(static_cast<long>(n)), Integer(2))));
    }
    return v;
  });
}

template <Ring R>
MomentSeq<R> double_factorials() {
  return MomentSeq<R>("(2n-1)!!", [](std::size_t count) {
    std::vector<R> v;
    for (std::size_t n = 0; n < count; ++n) v.push_back(R(double_factorial_moment(static_cast<long>(n))));
    return v;
  });
}

template <Field F>
MomentSeq<F> andrews_q_catalans(const F& q) {
  return MomentSeq<F>("Andrews q-Catalan", [q](std::size_t count) {
    std::vector<F> v;
    for (std::size_t n = 0; n < count; ++n) v.push_back(andrews_q_catalan(static_cast<long>(n), q));
    return v;
  });
}

template <Field F>
MomentSeq<F> q_central_binomials(const F& q) {
  return MomentSeq<F>("q-central binomial", [q](std::size_t count) {
    std::vector<F> v;
    for (std::size_t n = 0; n < count; ++n) v.push_back(q_central_binomial_moment(static_cast<long>(n), q));
    return v;
  });
}

}  // namespace sequences

}  // namespace hankel_lab
