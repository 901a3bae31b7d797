#pragma once

// q-integers and Gaussian binomial coefficients.

#include "hankel_lab/numbers.hpp"
#include "hankel_lab/poly.hpp"

namespace hankel_lab {

using QPoly = Poly<Integer, 'q'>;

/// [n] = 1 + q + ... + q^(n-1); [0] = 0.
QPoly q_int(long n);

/// Gaussian binomial [n choose k]_q; zero when k < 0 or k > n. Requires n >= 0.
QPoly q_binomial(long n, long k);

/// [n choose k]_q evaluated at q = value in any ring R containing Z.
template <class R>
R q_binomial_at(long n, long k, const R& value) {
  return q_binomial(n, k).template eval<R>(value);
}

template <class R>
R q_int_at(long n, const R& value) {
  return q_int(n).template eval<R>(value);
}

}  // namespace hankel_lab
