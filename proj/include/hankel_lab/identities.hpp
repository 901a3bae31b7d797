#pragma once

// Registry of named identity checks. Every check computes both sides of a
// closed-form determinant evaluation exactly and compares them; ratio
// identities are always compared cross-multiplied.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hankel_lab/moments.hpp"
#include "hankel_lab/numbers.hpp"
#include "hankel_lab/opseq.hpp"

namespace hankel_lab {

/// Result of one equality test. lhs/rhs are rendered only on failure.
struct Comparison {
  bool pass = true;
  std::string lhs;
  std::string rhs;
};

/// Collects several equalities; keeps the first failure, tagged by its label.
class Verdict {
 public:
  template <class T>
  Verdict& expect(const std::string& label, const T& lhs, const T& rhs) {
    if (result_.pass && !(lhs == rhs)) result_ = {false, label + ": " + lhs.to_string(), label + ": " + rhs.to_string()};
    return *this;
  }
  Verdict& expect(const Comparison& c, const std::string& label = {}) {
    if (result_.pass && !c.pass) {
      const std::string prefix = label.empty() ? std::string() : label + ": ";
      result_ = {false, prefix + c.lhs, prefix + c.rhs};
    }
    return *this;
  }
  bool pass() const { return result_.pass; }
  const Comparison& result() const { return result_; }
  operator Comparison() const { return result_; }

 private:
  Comparison result_;
};

enum class ParamKind { None, Q, U };

const char* to_string(ParamKind kind);

inline constexpr std::uint64_t kDefaultSeed = 20120517;

struct CheckContext {
  std::size_t n_max = 0;
  /// Value substituted for the check's parameter (q or u); nullopt = symbolic.
  std::optional<Rational> param;
  std::uint64_t seed = kDefaultSeed;
};

struct Outcome {
  std::size_t n = 0;
  bool pass = true;
  std::string lhs;
  std::string rhs;
  std::int64_t millis = 0;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct CheckReport {
  std::string id;
  std::vector<Outcome> outcomes;
  std::int64_t millis = 0;

  bool passed() const;
};

struct Check {
  std::string id;
  std::string equations;
  std::string title;
  std::size_t default_n = 0;
  ParamKind param = ParamKind::None;
  std::function<CheckReport(const CheckContext&)> run;
};

using Registry = std::vector<Check>;

/// Every built-in check, in a stable order.
const Registry& default_registry();

const Check* find_check(const Registry& registry, std::string_view id);

/// Evaluates `at(n)` for n = 0 .. n_max, timing each. A DomainError becomes a
/// failed outcome whose lhs reads "error: ..."; InexactDivision and other
/// logic errors propagate.
CheckReport run_per_n(const std::string& id, std::size_t n_max, const std::function<Comparison(std::size_t)>& at);

/// The fixed-seed random t-sequences (entries in {1, 2, 3}).
std::vector<SymRecurrence<Integer>> random_t_sequences(std::uint64_t seed, std::size_t count = 20,
                                                       std::size_t length = 24);

// Comparators shared by several checks. Each takes the moment sequence
// separately from the recurrence so that a perturbed sequence can be fed in.

/// d(n, x) t_1 t_3 ... t_{2n-1} = d(n, 0) (-1)^n sum_j (-1)^j v(2n+1, j) r(n-j, x).
Comparison v_form_at(const SymRecurrence<Integer>& rec, const MomentSeq<Integer>& a, std::size_t n);

/// d(n, x^2) t_1 ... t_{2n-1} = d(n, 0) (-1)^n p_2n(x, T), with the two
/// intermediate sums expressed through p(x, T).
Comparison shifted_form_at(const SymRecurrence<Integer>& rec, const MomentSeq<Integer>& a, std::size_t n);

/// det(r(i+j, x^2)) = det(a(i+j)) p_{2n+2}(x) and the shifted analogue, with
/// r(n, x) = a(n) x - a(n+1).
Comparison lin_form_at(const SymRecurrence<Integer>& rec, const MomentSeq<Integer>& a, std::size_t n);

/// d(n, x^2) = d(n, 0) sum_j (-1)^j binom(n+j, n-j) x^2j.
Comparison catalan_form_at(const MomentSeq<Integer>& a, std::size_t n);

/// Conv-determinants of Motzkin numbers: d(n, 0) = 1 and d(n, x) equals the
/// period-six Fibonacci form in x - 1.
Comparison motzkin_form_at(const MomentSeq<Integer>& m, std::size_t n);

/// `a` with a(k) replaced by a(k) + 1.
MomentSeq<Integer> perturb(const MomentSeq<Integer>& a, std::size_t k);

}  // namespace hankel_lab
