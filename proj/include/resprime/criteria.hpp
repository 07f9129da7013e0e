#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resprime/certificate.hpp"
#include "resprime/poly.hpp"

namespace resprime {

// Univariate checkers. Each returns a certificate whose verdict is either a
// success backed by recorded exact comparisons, or inconclusive with the
// first hypothesis that failed. Violated preconditions throw Error.
//
// Throughout, n = deg f and m = deg g. In reciprocal mode the roots of f and
// g are replaced by their inverses, which are the roots of the reciprocal
// polynomials.

enum class RootMode { Direct, Reciprocal };
std::string to_string(RootMode m);
RootMode parse_root_mode(std::string_view s);

// |Res| = p q with p prime, and min |theta - xi| > q^(1/min(m,n)).
// BothIrreducible.
Certificate check_separated_roots(const IntPoly& f, const IntPoly& g, RootMode mode, const BigInt& q, CheckEnv& env);
// Same separation against d_1(|Res|); no primality needed. BothIrreducible.
Certificate check_separated_roots_d1(const IntPoly& f, const IntPoly& g, RootMode mode, CheckEnv& env);
// Separation against d^(1/min(m,n)) for a divisor d: FactorBound(Omega(|Res|/d))
// for each of f and g.
Certificate check_separated_roots_divisor(const IntPoly& f, const IntPoly& g, RootMode mode, const BigInt& d,
                                          CheckEnv& env);
// Separation against d_k^(1/min(m,n)): FactorBound(k) for each of f and g.
Certificate check_separated_roots_dk(const IntPoly& f, const IntPoly& g, RootMode mode, unsigned k, CheckEnv& env);

// |g(theta)|^r > d for every root theta of f (|g(theta)/theta^m| in
// reciprocal mode). r = 2 additionally needs f free of rational roots; larger
// r are rejected since the hypothesis on factor degrees is not checkable.
// FactorBound(Omega(|Res|/d)) for f.
Certificate check_root_value_divisor(const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r, const BigInt& d,
                                     CheckEnv& env);
// Same with d_k in place of d: FactorBound(k) for f.
Certificate check_root_value_dk(const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r, unsigned k,
                                CheckEnv& env);
// |Res| = p q with p prime and |g(theta)|^r > q: f irreducible.
Certificate check_root_value_prime(const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r, const BigInt& q,
                                   CheckEnv& env);

// Roots of f inside |z| < A, roots of g outside |z| > B, (B - A)^min(m,n) >= q
// and |Res| = p q. BothIrreducible.
Certificate check_disk_annulus(const IntPoly& f, const IntPoly& g, const BigRat& A, const BigRat& B, const BigInt& q,
                               CheckEnv& env);
// One large middle coefficient a_j of f, 1 <= j <= n - 1. BothIrreducible.
Certificate check_dominant_coefficient(const IntPoly& f, const IntPoly& g, unsigned j, const BigInt& q, CheckEnv& env);

// g = bX - c. |b^n f(c/b)| = p q with q < |c| and a dominant a_j
// (1 <= j <= n); j = 0 selects the disk condition on a_0, valid for any q.
Certificate check_linear_value(const IntPoly& f, const BigInt& b, const BigInt& c, unsigned j, const BigInt& q,
                               CheckEnv& env);
// Coefficients in {-1, 0, 1}, prime value, |c| >= 2|b| + 1 or |b| >= 2|c| + 1.
Certificate check_linear_value_littlewood(const IntPoly& f, const BigInt& b, const BigInt& c, CheckEnv& env);
// Prime value, |c| >= 2|b| + 1 and a_n large against the other coefficients.
Certificate check_linear_value_lead(const IntPoly& f, const BigInt& b, const BigInt& c, CheckEnv& env);
// |f(c)| prime, |c| >= 2, |a_j| >= sum_{i != j} |a_i| |c|^(8i/5).
Certificate check_linear_value_power(const IntPoly& f, const BigInt& c, unsigned j, CheckEnv& env);

// Quadratic g in {X^2 + 1, X^2 - m, X^2 + X + 1, X^2 - X - 1}.
enum class QuadraticForm { Gaussian, RealQuadratic, Eisenstein, Golden };
enum class DominantEnd { Constant, Leading };
std::string to_string(QuadraticForm f);
QuadraticForm parse_quadratic_form(std::string_view s);
std::string to_string(DominantEnd e);
DominantEnd parse_dominant_end(std::string_view s);
IntPoly quadratic_form_modulus(QuadraticForm form, const BigInt& m);
// The form value computed from coefficient sums, e.g. (a0 - a2 + ...)^2 +
// (a1 - a3 + ...)^2. Cross-checked against resultants by the checker.
BigInt quadratic_form_value(const IntPoly& f, QuadraticForm form, const BigInt& m);
Certificate check_quadratic_form(const IntPoly& f, QuadraticForm form, const BigInt& m, const BigInt& q,
                                 DominantEnd end, CheckEnv& env);

// max |g(theta)|^(n - k r) < |Res| / (d_k lc^m), with lc = |a_n| (|a_0| in
// reciprocal mode). r in {1, 2}; r = 2 needs f free of rational roots.
// FactorBound(k) for f.
Certificate check_close_roots_dk(const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r, unsigned k,
                                 CheckEnv& env);
// |Res| = p q and max |g(theta)|^(n - r) < p / lc^m: f irreducible.
Certificate check_close_roots_prime(const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r, const BigInt& p,
                                    CheckEnv& env);
// Every root of f close to every root of g, against a prime factor p of
// |Res|. BothIrreducible.
Certificate check_close_roots_pair(const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r, const BigInt& p,
                                   CheckEnv& env);
// p | gcd(f(d), g(d)); separation beyond (|f|^m |g|^n / p)^(1/min(m,n)).
// BothIrreducible.
Certificate check_hadamard_pair(const IntPoly& f, const IntPoly& g, RootMode mode, const BigInt& d, CheckEnv& env);

const std::vector<BigRat>& parameter_grid();

// Values q dividing n with n / q prime: 1, d_1(n) and n over its largest
// prime, in this order and without repetition.
std::vector<BigInt> prime_cofactors(const BigInt& n, CheckEnv& env);

struct AutoOptions {
  std::vector<std::string> criteria;  // empty means all
  bool include_inconclusive = true;
  // Fixed parameters replacing the corresponding search grid.
  std::optional<BigRat> A, B;
  std::optional<BigInt> q;
  std::optional<unsigned> j, k;
};

// Parameter searches over the small fixed grids used by certify_auto. Return
// the first success, otherwise the first inconclusive attempt.
Certificate search_disk_annulus(const IntPoly& f, const IntPoly& g, CheckEnv& env, const AutoOptions& opts = {});
Certificate search_dominant_coefficient(const IntPoly& f, const IntPoly& g, CheckEnv& env,
                                        const AutoOptions& opts = {});
Certificate search_linear_value(const IntPoly& f, const BigInt& b, const BigInt& c, CheckEnv& env,
                                const AutoOptions& opts = {});
Certificate search_quadratic_form(const IntPoly& f, QuadraticForm form, const BigInt& m, CheckEnv& env,
                                  const AutoOptions& opts = {});

// Runs every applicable checker over the default parameter grids. One
// certificate per criterion family: the first success, otherwise a
// representative inconclusive one. Successes come first, each group sorted by
// criterion id.
std::vector<Certificate> certify_auto(const IntPoly& f, const IntPoly& g, CheckEnv& env, const AutoOptions& opts = {});

// Every criterion id the univariate layer can emit.
const std::vector<std::string>& univariate_criteria();

}  // namespace resprime
