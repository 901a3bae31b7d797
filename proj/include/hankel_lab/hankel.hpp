#pragma once

// Hankel matrices of moment sequences, the r-polynomial builders and exact
// determinants by fraction-free (Bareiss) elimination.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hankel_lab/moments.hpp"
#include "hankel_lab/opseq.hpp"
#include "hankel_lab/ratfunc.hpp"
#include "hankel_lab/ring.hpp"

namespace hankel_lab {

/// Dense square matrix, row-major.
template <Ring T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t size, const T& fill = T(0)) : size_(size), e_(size * size, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : size_(rows.size()) {
    for (const auto& row : rows) {
      if (row.size() != size_) throw std::invalid_argument("Matrix: rows must form a square");
      e_.insert(e_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t size) {
    Matrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return size_; }
  T& operator()(std::size_t i, std::size_t j) { return e_[i * size_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * size_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < size_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// The matrix with row `row` and column `col` removed.
  Matrix minor(std::size_t row, std::size_t col) const {
    Matrix m(size_ - 1);
    for (std::size_t i = 0, mi = 0; i < size_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0, mj = 0; j < size_; ++j) {
        if (j == col) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.size_ != b.size_) throw std::invalid_argument("Matrix: size mismatch");
    Matrix m(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i)
      for (std::size_t k = 0; k < a.size_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < a.size_; ++j) m(i, j) = m(i, j) + a(i, k) * b(k, j);
      }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < size_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < size_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t size_ = 0;
  std::vector<T> e_;
};

/// (n+1) x (n+1) matrix with entry (i, j) = entry(i + j + offset).
template <Ring T>
Matrix<T> hankel_from(const std::function<T(std::size_t)>& entry, std::size_t n, std::size_t offset = 0) {
  std::vector<T> cache;
  cache.reserve(2 * n + 1);
  for (std::size_t k = 0; k <= 2 * n; ++k) cache.push_back(entry(k + offset));
  Matrix<T> m(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) m(i, j) = cache[i + j];
  return m;
}

/// Entry (i, j) = seq(i + j + offset), offset in {0, 1, 2}.
template <Ring R>
Matrix<R> hankel_matrix(const MomentSeq<R>& seq, std::size_t n, std::size_t offset = 0) {
  if (offset > 2) throw std::invalid_argument("hankel_matrix: offset must be 0, 1 or 2");
  const auto values = seq.prefix(2 * n + 1 + offset);
  return hankel_from<R>([&values](std::size_t k) { return values[k]; }, n, offset);
}

/// Conv: r(n, x) = sum_k a(n-k) x^k.  Lin: r(n, x) = a(n) x - a(n+1).
enum class RKind { Conv, Lin };

template <Ring R>
struct RBuilder {
  RKind kind;
  MomentSeq<R> a;
};

template <Ring R>
XPoly<R> r_poly(const RBuilder<R>& b, std::size_t n) {
  if (b.kind == RKind::Lin) {
    const auto v = b.a.prefix(n + 2);
    return XPoly<R>(std::vector<R>{-v[n + 1], v[n]});
  }
  const auto v = b.a.prefix(n + 1);
  std::vector<R> c;
  c.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c.push_back(v[n - k]);
  return XPoly<R>(std::move(c));
}

/// Laplace expansion along the first row; exponential, used as an oracle.
template <Ring T>
T det_cofactor(const Matrix<T>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T sum(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    const T term = m(0, j) * det_cofactor(m.minor(0, j));
    sum = (j % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

namespace detail {

template <Ring T>
T bareiss(Matrix<T> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return T(0);
      m.swap_rows(k, r);
      negate = !negate;
    }
    const T pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(i, j) * pivot - lead * m(k, j), prev);
      }
      m(i, k) = T(0);
    }
    prev = pivot;
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Rational-function entries: scale each row by the lcm of its denominators
/// and eliminate over the polynomial ring, where no gcds are needed.
template <char P>
RatFunc<P> bareiss_cleared(const Matrix<RatFunc<P>>& m) {
  using QP = Poly<Rational, P>;
  const std::size_t n = m.size();
  Matrix<QP> pm(n);
  QP scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    QP l(1);
    for (std::size_t j = 0; j < n; ++j) {
      const QP& d = m(i, j).den();
      l = exact_div(l * d, gcd(l, d));
    }
    for (std::size_t j = 0; j < n; ++j) pm(i, j) = m(i, j).num() * exact_div(l, m(i, j).den());
    scale = scale * l;
  }
  return RatFunc<P>(bareiss(std::move(pm)), scale);
}

}  // namespace detail

/// Fraction-free one-step elimination. Every interior division is exact in an
/// integral domain; a failing one throws InexactDivision. Zero pivots are
/// replaced by a row swap; a column without one gives 0.
template <Ring T>
T det_bareiss(const Matrix<T>& m) {
  T result = [&m] {
    if constexpr (is_ratfunc_v<T>) {
      return detail::bareiss_cleared(m);
    } else {
      return detail::bareiss(m);
    }
  }();
#ifndef NDEBUG
  if (m.size() <= 4 && !(det_cofactor(m) == result)) {
    throw std::logic_error("det_bareiss disagrees with cofactor expansion");
  }
#endif
  return result;
}

/// d(n, x) = det(r(i + j + offset, x)).
template <Ring R>
XPoly<R> hankel_poly_det(const RBuilder<R>& b, std::size_t n, std::size_t offset = 0) {
  const auto entry = [&b](std::size_t k) { return r_poly(b, k); };
  return det_bareiss(hankel_from<XPoly<R>>(entry, n, offset));
}

/// det(r(i + j + offset, x^2)); the substitution is applied to the result.
template <Ring R>
XPoly<R> hankel_poly_det_sq(const RBuilder<R>& b, std::size_t n, std::size_t offset = 0) {
  return hankel_poly_det(b, n, offset).substitute_square();
}

/// d(n, 0) = U_0^n U_1^(n-1) ... U_{n-1} with U from the contraction of t.
template <Ring R>
R d0_product(const SymRecurrence<R>& rec, std::size_t n) {
  const auto g = sym_to_general(rec);
  R prod(1);
  for (std::size_t k = 0; k < n; ++k) prod = prod * pow(g.U(k), static_cast<unsigned long>(n - k));
  return prod;
}

/// First column of A_n^{-1}:
/// u(j, 0) = (-1)^j v(2n+1, n-j) / (t_1 t_3 ... t_{2n-1}).
template <Field F>
std::vector<F> inverse_first_column(const SymRecurrence<F>& rec, std::size_t n) {
  const auto v = v_table(rec, 2 * n + 1);
  F scale(1);
  for (std::size_t j = 1; j < 2 * n; j += 2) scale = scale * rec.t(j);
  std::vector<F> col;
  col.reserve(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    col.push_back(sign_pow<F>(static_cast<long>(j)) * v.at(2 * n + 1, static_cast<long>(n - j)) / scale);
  }
  return col;
}

}  // namespace hankel_lab
