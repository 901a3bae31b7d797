#pragma once

// Common vocabulary for the exact coefficient domains: error types, the
// Ring/Field concepts used by every generic algorithm, and the domain tag.

#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace hankel_lab {

/// A mathematically undefined operation requested by the caller
/// (division by zero, a vanishing recurrence coefficient, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
  explicit DivisionByZero(const std::string& what) : DomainError(what) {}
};

/// A recurrence coefficient t_n (or U_n) that must be nonzero was zero.
class ZeroCoefficient : public DomainError {
 public:
  ZeroCoefficient(std::string name, std::size_t index)
      : DomainError(name + "_" + std::to_string(index) + " is zero"),
        name_(std::move(name)),
        index_(index) {}

  const std::string& name() const { return name_; }
  std::size_t index() const { return index_; }

 private:
  std::string name_;
  std::size_t index_;
};

/// exact_div was asked for a quotient that does not exist in the domain.
/// Inside fraction-free elimination this always indicates a logic bug.
class InexactDivision : public std::logic_error {
 public:
  InexactDivision() : std::logic_error("inexact division") {}
  explicit InexactDivision(const std::string& what) : std::logic_error(what) {}
};

enum class Domain { Integer, Rational, RatFuncQ, RatFuncU, Polynomial };

inline const char* to_string(Domain d) {
  switch (d) {
    case Domain::Integer: return "Integer";
    case Domain::Rational: return "Rational";
    case Domain::RatFuncQ: return "RatFuncQ";
    case Domain::RatFuncU: return "RatFuncU";
    case Domain::Polynomial: return "Polynomial";
  }
  return "?";
}

/// Specialised by every coefficient type.
template <class T>
struct ring_traits;

template <class T>
inline constexpr bool is_field_v = ring_traits<T>::is_field;

template <class T>
inline constexpr Domain domain_of = ring_traits<T>::domain;

template <class T>
concept Ring = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { exact_div(a, b) } -> std::convertible_to<T>;
  { a.to_string() } -> std::convertible_to<std::string>;
  T(0);
  T(1);
  ring_traits<T>::is_field;
};

template <class T>
concept Field = Ring<T> && is_field_v<T> && requires(const T& a, const T& b) {
  { a / b } -> std::convertible_to<T>;
};

template <Ring R>
R pow(R base, unsigned long exponent) {
  R result(1);
  while (exponent != 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

/// Integer power allowing negative exponents in a field.
template <Field F>
F ipow(const F& base, long exponent) {
  if (exponent >= 0) return pow(base, static_cast<unsigned long>(exponent));
  return F(1) / pow(base, static_cast<unsigned long>(-exponent));
}

/// (-1)^k as a ring element.
template <Ring R>
R sign_pow(long k) {
  return (k % 2 == 0) ? R(1) : R(-1);
}

template <class T>
  requires requires(const T& v) {
    { v.to_string() } -> std::convertible_to<std::string>;
  }
std::ostream& operator<<(std::ostream& os, const T& v) {
  return os << v.to_string();
}

}  // namespace hankel_lab
