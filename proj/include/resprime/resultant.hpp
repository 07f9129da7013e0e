#pragma once

#include <vector>

#include "resprime/bivar.hpp"
#include "resprime/poly.hpp"

namespace resprime {

// Res(f, g) = lc(f)^deg g * prod g(theta) over the roots theta of f.
// Subresultant pseudo-remainder sequence; throws ZeroPolynomial.
BigInt resultant(const IntPoly& f, const IntPoly& g);

// Determinant of the Sylvester matrix by fraction-free elimination.
BigInt resultant_sylvester(const IntPoly& f, const IntPoly& g);
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

// Res(f, aX^2 + bX + c) from the expansion of f around -b/2a.
BigInt resultant_quadratic_shift(const IntPoly& f, const BigInt& a, const BigInt& b, const BigInt& c);
// Same value from the power sums x_k = theta1^k + theta2^k of the quadratic.
BigInt resultant_quadratic_binet(const IntPoly& f, const BigInt& a, const BigInt& b, const BigInt& c);

// Power sums x_k of the roots of aX^2 + bX + c:
// x_0 = 2, x_1 = -b/a, x_{k+2} = -(b/a) x_{k+1} - (c/a) x_k.
class LucasSequence {
 public:
  LucasSequence(const BigInt& a, const BigInt& b, const BigInt& c);
  const BigRat& at(std::size_t k);

 private:
  BigRat p_, q_;
  std::vector<BigRat> x_;
};

// Resultant with respect to Y of polynomials in Q[X][Y].
RatPoly resultant_y(const BivarPoly& f, const BivarPoly& g);

// Upper bound for ||f||^deg g * ||g||^deg f (Euclidean norms).
BigRat hadamard_bound(const IntPoly& f, const IntPoly& g);

}  // namespace resprime
