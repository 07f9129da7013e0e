#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "resprime/numeric.hpp"

namespace resprime {

// Deterministic Miller-Rabin below 2^64, Baillie-PSW above.
bool is_prime(const BigInt& n);

struct FactorBudget {
  std::uint64_t max_rho_iterations = 4'000'000;
  std::optional<std::chrono::milliseconds> time_limit;
  std::uint64_t seed = 0;  // 0 means "use RESPRIME_SEED or the built-in default"
};

std::uint64_t default_seed();

struct PrimePower {
  BigInt prime;
  unsigned exponent;
};

// n = sign * prod prime^exponent * cofactor. A cofactor other than 1 is a
// composite the budget could not split.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> primes;  // ascending
  BigInt cofactor = 1;

  bool complete() const { return cofactor == 1; }
  std::optional<BigInt> largest_prime() const;
};

// Trial division below 10^6, then Brent-Pollard rho within the budget.
// Throws PreconditionViolated for n == 0.
Factorization factorize(const BigInt& n, const FactorBudget& budget = {});

// Number of prime factors counted with multiplicity. When factorization was
// incomplete, `value` is a lower bound.
struct OmegaCount {
  unsigned long value = 0;
  bool exact = true;
};
OmegaCount omega(const Factorization& f);
OmegaCount omega(const BigInt& n, const FactorBudget& budget = {});

// Largest divisor d of |n| with d^(k+1) <= |n|. Empty when factorization of n
// did not complete.
std::optional<BigInt> d_k(const BigInt& n, unsigned k, const FactorBudget& budget = {});
std::optional<BigInt> d_k(const Factorization& f, unsigned k);

std::vector<BigInt> divisors(const Factorization& f);

// Closed rational interval [lo, hi] around a real quantity.
struct DirectedBound {
  BigRat lo;
  BigRat hi;

  static DirectedBound exact(const BigRat& x) { return {x, x}; }
  bool is_exact() const { return lo == hi; }
};

DirectedBound operator+(const DirectedBound& a, const DirectedBound& b);
DirectedBound operator+(const DirectedBound& a, const BigRat& b);
DirectedBound operator-(const BigRat& a, const DirectedBound& b);
// Products and powers assume both operands are nonnegative.
DirectedBound operator*(const DirectedBound& a, const DirectedBound& b);
DirectedBound operator*(const DirectedBound& a, const BigRat& s);
DirectedBound pow_nonneg(const DirectedBound& a, unsigned long e);
// 1/x for x > 0.
DirectedBound reciprocal_positive(const DirectedBound& a);

// x^(1/k) for x >= 0 with hi - lo <= 2^-64 * max(1, hi); exact when x is a
// perfect k-th power of a rational. Throws NegativeRadicand.
DirectedBound kth_root_bounds(const BigRat& x, unsigned long k);
DirectedBound kth_root_bounds(const DirectedBound& x, unsigned long k);

}  // namespace resprime
