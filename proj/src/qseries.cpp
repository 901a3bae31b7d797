#include "hankel_lab/qseries.hpp"

#include <stdexcept>
#include <vector>

namespace hankel_lab {

QPoly q_int(long n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  return QPoly(std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)));
}

QPoly q_binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("q_binomial: negative n");
  if (k < 0 || k > n) return {};
  if (k > n - k) k = n - k;
  // prod_{i<k} (1 - q^(n-i)) / (1 - q^(i+1)); every partial quotient is exact.
  const auto one_minus_q_pow = [](long e) {
    return QPoly(1) - QPoly::monomial(Integer(1), static_cast<std::size_t>(e));
  };
  QPoly result(1);
  for (long i = 0; i < k; ++i) {
    result = exact_div(result * one_minus_q_pow(n - i), one_minus_q_pow(i + 1));
  }
  return result;
}

}  // namespace hankel_lab
