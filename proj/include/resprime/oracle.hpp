#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "resprime/bivar.hpp"
#include "resprime/poly.hpp"

namespace resprime {

// Reference factorization used to validate certificates. Shares only the
// polynomial and integer layers with the criteria.

struct OracleBudget {
  int max_degree = 96;
  unsigned long max_coeff_bits = 8192;
  std::uint64_t max_candidates = 200'000;
};

struct QFactor {
  IntPoly factor;  // primitive, positive leading coefficient, irreducible
  unsigned multiplicity;
};

struct QFactorization {
  BigRat unit;
  std::vector<QFactor> factors;  // sorted by degree, then coefficients

  // Irreducible factors of positive degree, counted with multiplicity.
  unsigned long count() const;
};

// Throws BudgetExceeded when degree, coefficient size or the number of
// recombination candidates exceeds the budget.
QFactorization factor_over_q(const IntPoly& f, const OracleBudget& budget = {});
QFactorization factor_over_q(const RatPoly& f, const OracleBudget& budget = {});
bool is_irreducible_over_q(const IntPoly& f, const OracleBudget& budget = {});
bool is_irreducible_over_q(const RatPoly& f, const OracleBudget& budget = {});

struct BivarFactor {
  BivarPoly factor;  // integer coefficients, primitive
  unsigned multiplicity;
};

struct BivarFactorization {
  BigRat unit;
  std::vector<BivarFactor> factors;
  unsigned long count() const;
};

// Factors of Q[X, Y]: the X-content is factored in Q[X]; the remaining
// primitive part through the substitution Y -> X^D with D > deg_X.
BivarFactorization factor_bivar(const BivarPoly& f, const OracleBudget& budget = {});
bool is_irreducible_bivar(const BivarPoly& f, const OracleBudget& budget = {});

}  // namespace resprime
