#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resprime/bivar.hpp"
#include "resprime/certificate.hpp"
#include "resprime/criteria.hpp"

namespace resprime {

// Checkers for f = sum a_i(X) Y^i and g = sum b_i(X) Y^i over Q, driven by
// the X-degrees of the coefficients and the factorization of Res_Y(f, g).
// A zero coefficient has degree Bottom; in recorded comparisons it is
// written as -1, which is below every real degree.

// Largest degree of a divisor of res with degree <= deg res / (k + 1).
// Empty when the factorization exceeds the oracle budget. Throws NotCoprime
// for res = 0.
std::optional<long> delta_k(const RatPoly& res, unsigned k, const OracleBudget& budget = {});

// deg a_0 - max_{i >= 1} deg a_i and max_{i < m} deg b_i - deg b_m.
struct DegreeGaps {
  long A = 0;
  long B = 0;
};
DegreeGaps degree_gaps(const BivarPoly& f, const BivarPoly& g);

enum class BivarSide { Direct, Reciprocal };
std::string to_string(BivarSide s);
BivarSide parse_bivar_side(std::string_view s);

// min{A, A/n} > max{B, B/m} and min{deg a_0, deg b_m} > delta_k; the
// reciprocal side uses the gaps of the Y-reciprocals and min{deg a_n, deg b_0}.
// FactorBound(k) for both f and g.
Certificate check_bivar_factor_bound(const BivarPoly& f, const BivarPoly& g, unsigned k, BivarSide side,
                                     CheckEnv& env);

// Res_Y irreducible with deg a_0 strictly above the other a_i and deg b_m at
// least the other b_i (StrictF), or the strictness moved to g (StrictG).
// BothIrreducible.
enum class DominanceVariant { StrictF, StrictG };
std::string to_string(DominanceVariant v);
DominanceVariant parse_dominance_variant(std::string_view s);
Certificate check_bivar_degree_dominance(const BivarPoly& f, const BivarPoly& g, DominanceVariant v, CheckEnv& env);

// The factor-bound geometry against deg d for a divisor d of Res_Y:
// FactorBound(Omega(Res_Y / d)) for both.
Certificate check_bivar_divisor_bound(const BivarPoly& f, const BivarPoly& g, const RatPoly& d, CheckEnv& env);

// alpha f + beta g irreducible. Lower: deg_Y f < deg_Y g with
// gcd(b_{n+1}, ..., b_m) constant. Equal: equal Y-degrees and a common index
// j in 1..n-1 with a_j, b_j nonzero constants and alpha a_j + beta b_j != 0.
enum class CombinationShape { Lower, Equal };
std::string to_string(CombinationShape s);
CombinationShape parse_combination_shape(std::string_view s);
Certificate check_bivar_combination(const BivarPoly& f, const BivarPoly& g, CombinationShape shape,
                                    const BigRat& alpha, const BigRat& beta, CheckEnv& env);

// Res_Y irreducible, Delta = deg b_0 - max_{i >= 1} deg b_i > 0, and a_j whose
// degree beats every other a_k after the slope corrections. BothIrreducible.
Certificate check_bivar_spike(const BivarPoly& f, const BivarPoly& g, unsigned j, CheckEnv& env);

// Every bivariate family over small parameter ranges, both role orders.
std::vector<Certificate> certify_bivar_auto(const BivarPoly& f, const BivarPoly& g, CheckEnv& env,
                                            const AutoOptions& opts = {});

const std::vector<std::string>& bivariate_criteria();

// The polynomial a combination certificate speaks about.
BivarPoly combine(const BivarPoly& f, const BivarPoly& g, const BigRat& alpha, const BigRat& beta);

}  // namespace resprime
