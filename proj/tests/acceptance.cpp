// Acceptance suite: one PASS/FAIL line per criterion, exact equality only.
// Exits 0 iff every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hankel_lab/cli.hpp"
#include "hankel_lab/hankel.hpp"
#include "hankel_lab/identities.hpp"

using namespace hankel_lab;

namespace {

using ZX = XPoly<Integer>;
using Clock = std::chrono::steady_clock;

ZX zx(std::vector<long> c) { return ZX(std::vector<Integer>(c.begin(), c.end())); }

/// Collects failures for one criterion.
class Gate {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && first_.empty()) first_ = what;
  }
  /// Runs a registered check over 0..n_max with the given parameter.
  void check(std::string_view id, std::size_t n_max, std::optional<Rational> param = std::nullopt) {
    const Check* c = find_check(default_registry(), id);
    if (c == nullptr) {
      require(false, std::string(id) + ": not registered");
      return;
    }
    const auto r = c->run(CheckContext{n_max, std::move(param), kDefaultSeed});
    require(r.outcomes.size() == n_max + 1, std::string(id) + ": wrong n range");
    for (const auto& o : r.outcomes) {
      require(o.pass, std::string(id) + " n=" + std::to_string(o.n) + ": " + o.lhs + " vs " + o.rhs);
    }
  }
  bool pass() const { return first_.empty(); }
  const std::string& failure() const { return first_; }

 private:
  std::string first_;
};

struct Criterion {
  int number;
  std::string title;
  std::function<void(Gate&)> body;
  std::int64_t limit_ms = 0;
};

std::int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

/// d(n,x^2)/d(n,0) for Conv r(n,x), compared with `expected` cross-multiplied.
bool divided_conv_sq_is(const MomentSeq<Integer>& a, std::size_t n, const ZX& expected) {
  const ZX d = hankel_poly_det_sq(RBuilder<Integer>{RKind::Conv, a}, n);
  return d == ZX(d.coeff(0)) * expected;
}

/// det(x a(i+j+offset) - a(i+j+offset+1)) / det(a(i+j+offset)) vs `expected`, cross-multiplied.
bool divided_lin_is(const MomentSeq<Integer>& a, std::size_t n, std::size_t offset, const ZX& expected) {
  return hankel_poly_det(RBuilder<Integer>{RKind::Lin, a}, n, offset) ==
         ZX(det_bareiss(hankel_matrix(a, n, offset))) * expected;
}

ZX catalan_closed(std::size_t n) {
  ZX p;
  for (std::size_t j = 0; j <= n; ++j) {
    Integer c = binomial(static_cast<long>(n + j), static_cast<long>(n - j));
    p += ZX::monomial(j % 2 ? -c : c, 2 * j);
  }
  return p;
}

Integer fibonacci(std::size_t k) {
  Integer a(0), b(1);
  for (std::size_t i = 0; i < k; ++i) {
    Integer next = a + b;
    a = b;
    b = next;
  }
  return a;
}

std::vector<Criterion> criteria() {
  const auto cat = sequences::catalan_numbers<Integer>();
  const auto mot = sequences::motzkin_numbers<Integer>();
  return {
      {1, "Catalan divided determinants equal the binomial closed form, n <= 8, under 5 s",
       [cat](Gate& g) {
         g.check("cor1", 8);
         for (std::size_t n = 0; n <= 8; ++n) {
           g.require(divided_conv_sq_is(cat, n, catalan_closed(n)), "Catalan closed form n=" + std::to_string(n));
         }
       },
       5000},
      {2, "central binomial moments give the same closed form, n <= 8",
       [](Gate& g) {
         g.check("cor2", 8);
         const auto cb = sequences::central_binomials<Integer>();
         for (std::size_t n = 0; n <= 8; ++n) {
           g.require(divided_conv_sq_is(cb, n, catalan_closed(n)), "central binomial n=" + std::to_string(n));
         }
       }},
      {3, "Carlitz q-Catalan, symbolic q, n <= 4; q = 1 reproduces the Catalan case",
       [](Gate& g) {
         g.check("cor3", 4);
         g.check("cor3", 8, Rational(1));
         const auto c1 = carlitz_q_catalan(Integer(1));
         for (std::size_t n = 0; n <= 8; ++n) {
           g.require(divided_conv_sq_is(c1, n, catalan_closed(n)), "Carlitz at q=1 n=" + std::to_string(n));
         }
       }},
      {4, "Andrews q-Catalan and q-central binomial, symbolic q, n <= 3",
       [](Gate& g) {
         g.check("cor4", 3);
         g.check("cor5", 3);
       }},
      {5, "Schroeder specializations n <= 6 and symbolic (q, a, b) n <= 3",
       [](Gate& g) {
         g.check("cor6", 6);
         g.check("eq36", 3);
       }},
      {6, "divided Conv-determinants via v(2n+1,k) and p_2n(x,T) on 20 seeded random t-sequences, n <= 4",
       [](Gate& g) {
         g.check("lemma", 4);
         g.check("thm1", 4);
         g.require(random_t_sequences(kDefaultSeed).size() == 20, "20 random sequences");
       }},
      {7, "aeration for Catalan and central binomial, n <= 3", [](Gate& g) { g.check("aeration", 3); }},
      {8, "Lin-determinants via p_2n+2(x) on the random t-sequences n <= 3; Hermite instance n <= 3",
       [](Gate& g) {
         g.check("thm2", 3);
         g.check("hermite", 3);
       }},
      {9, "Fibonacci determinants of Catalan sums and det(C(i+j+1)) = 1, n <= 8",
       [cat](Gate& g) {
         g.check("eq48", 8);
         g.check("eq49", 8);
         g.check("catalan-shift", 8);
         for (std::size_t n = 0; n <= 8; ++n) {
           // det(C(i+j) + C(i+j+1)) = (-1)^(n+1) d_lin(n, -1).
           const Integer sign = n % 2 ? Integer(1) : Integer(-1);
           const RBuilder<Integer> lin{RKind::Lin, cat};
           g.require(sign * hankel_poly_det(lin, n, 0).eval(Integer(-1)) == fibonacci(2 * n + 3),
                     "F_(2n+3) n=" + std::to_string(n));
           g.require(sign * hankel_poly_det(lin, n, 1).eval(Integer(-1)) == fibonacci(2 * n + 4),
                     "F_(2n+4) n=" + std::to_string(n));
           g.require(det_bareiss(hankel_matrix(cat, n, 1)) == Integer(1), "det(C(i+j+1)) n=" + std::to_string(n));
         }
       }},
      {10, "Motzkin determinants, listed prefix, Motzkin-polynomial identities n <= 4",
       [mot](Gate& g) {
         g.check("motzkin-det", 8);
         g.check("motzkin-prefix", 5);
         for (const char* id : {"eq41", "eq42", "eq43", "eq44", "eq52", "eq53", "eq54", "eq56"}) g.check(id, 4);
         g.check("eq56", 4, Rational(1));
         for (std::size_t n = 0; n <= 8; ++n) {
           g.require(det_bareiss(hankel_matrix(mot, n, 0)) == Integer(1), "det(M(i+j)) n=" + std::to_string(n));
         }
         const ZX listed[] = {zx({1}), zx({1, 0, -1}), zx({1, 0, -1}), zx({1, 0, -1, 0, -2, 0, 1})};
         for (std::size_t n = 0; n < 4; ++n) {
           g.require(divided_conv_sq_is(mot, n, listed[n]), "Motzkin prefix n=" + std::to_string(n));
         }
       }},
      {11, "Schroeder linear forms match the listed polynomials, extended to n <= 5",
       [](Gate& g) {
         g.check("eq57", 5);
         g.check("eq58", 5);
         const auto s = sequences::little_schroder_numbers<Integer>();
         const ZX first[] = {zx({-1, 1}), zx({1, -4, 1}), zx({-1, 11, -7, 1})};
         const ZX shifted[] = {zx({-3, 1}), zx({7, -6, 1}), zx({-15, 23, -9, 1})};
         for (std::size_t n = 0; n < 3; ++n) {
           g.require(divided_lin_is(s, n, 0, first[n]), "unshifted n=" + std::to_string(n));
           g.require(divided_lin_is(s, n, 1, shifted[n]), "shifted n=" + std::to_string(n));
         }
       }},
      {12, "d(n,0) product n <= 6, inverse first column n <= 5, orthogonality n <= 6",
       [](Gate& g) {
         g.check("d0", 6);
         g.check("invcol", 5);
         g.check("orth", 6);
       }},
      {13, "mutation sensitivity for Catalan and Motzkin, k in {1, 2, 3}",
       [cat, mot](Gate& g) {
         g.check("mutation", 3);
         for (std::size_t k = 1; k <= 3; ++k) {
           bool cat_caught = false, mot_caught = false;
           for (std::size_t n = k; n <= k + 3; ++n) {
             cat_caught = cat_caught || !catalan_form_at(perturb(cat, k), n).pass;
             mot_caught = mot_caught || !motzkin_form_at(perturb(mot, k), n).pass;
           }
           g.require(cat_caught, "Catalan a(" + std::to_string(k) + ") + 1 undetected");
           g.require(mot_caught, "Motzkin a(" + std::to_string(k) + ") + 1 undetected");
         }
       }},
      {14, "'run all' with default settings exits 0 in under 60 s",
       [](Gate& g) {
         std::ostringstream out, err;
         const int code = cli::run_cli({"run", "all"}, default_registry(), out, err);
         g.require(code == 0, "exit code " + std::to_string(code) + "; " + err.str());
         g.require(out.str().find("FAIL") == std::string::npos, "a FAIL line was printed");
       },
       60000},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    Gate gate;
    const auto t0 = Clock::now();
    try {
      c.body(gate);
    } catch (const std::exception& e) {
      gate.require(false, std::string("exception: ") + e.what());
    }
    const std::int64_t ms = ms_since(t0);
    if (c.limit_ms > 0) gate.require(ms < c.limit_ms, "took " + std::to_string(ms) + " ms");
    std::cout << (gate.pass() ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " (" << ms
              << " ms)";
    if (!gate.pass()) std::cout << "\n      " << gate.failure();
    std::cout << std::endl;
    failed += gate.pass() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all 14 criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
