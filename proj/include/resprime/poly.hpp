#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resprime/error.hpp"
#include "resprime/numeric.hpp"

namespace resprime {

template <class C>
class DensePoly;

inline bool is_zero_coeff(const BigInt& c) { return sgn(c) == 0; }
inline bool is_zero_coeff(const BigRat& c) { return sgn(c) == 0; }
template <class D>
bool is_zero_coeff(const DensePoly<D>& p) { return p.is_zero(); }

template <class C>
struct RingOne {
  static C value() { return C(1); }
};
template <class D>
struct RingOne<DensePoly<D>> {
  static DensePoly<D> value() { return DensePoly<D>::constant(D(1)); }
};

// Dense polynomial in one variable, coefficients stored in ascending order.
// The coefficient vector never has a trailing zero; the zero polynomial is
// empty and has degree -1.
template <class C>
class DensePoly {
 public:
  using coeff_type = C;

  DensePoly() = default;
  explicit DensePoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { normalize(); }
  DensePoly(std::initializer_list<C> coeffs) : c_(coeffs) { normalize(); }

  static DensePoly constant(C c) { return DensePoly(std::vector<C>{std::move(c)}); }
  static DensePoly monomial(C c, std::size_t k) {
    std::vector<C> v(k + 1);
    v[k] = std::move(c);
    return DensePoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const C& operator[](std::size_t i) const { return c_[i]; }
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C{}; }
  const C& leading() const { return c_.back(); }
  const std::vector<C>& coeffs() const { return c_; }

  DensePoly operator-() const {
    std::vector<C> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return DensePoly(std::move(v));
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<C> v(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i < a.size()) v[i] = a.c_[i];
      if (i < b.size()) v[i] = v[i] + b.c_[i];
    }
    return DensePoly(std::move(v));
  }

  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    std::vector<C> v(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (is_zero_coeff(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(v));
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

  DensePoly scaled(const C& s) const {
    std::vector<C> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return DensePoly(std::move(v));
  }

  DensePoly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<C> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return DensePoly(std::move(v));
  }

  // Horner evaluation in any ring V that C converts into.
  template <class V>
  V eval(const V& x) const {
    V acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
    return acc;
  }

 private:
  void normalize() {
    while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

using IntPoly = DensePoly<BigInt>;
using RatPoly = DensePoly<BigRat>;

template <class C>
DensePoly<C> derivative(const DensePoly<C>& p) {
  if (p.degree() <= 0) return {};
  std::vector<C> v(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) v[i - 1] = p[i] * C(static_cast<unsigned long>(i));
  return DensePoly<C>(std::move(v));
}

// lc(B)^(deg A - deg B + 1) * A reduced modulo B, using ring operations only.
template <class C>
DensePoly<C> pseudo_remainder(const DensePoly<C>& A, const DensePoly<C>& B) {
  if (B.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "pseudo-remainder by zero");
  if (A.degree() < B.degree()) return A;
  const C& lb = B.leading();
  int e = A.degree() - B.degree() + 1;
  DensePoly<C> R = A;
  while (!R.is_zero() && R.degree() >= B.degree()) {
    DensePoly<C> T = DensePoly<C>::monomial(R.leading(), static_cast<std::size_t>(R.degree() - B.degree()));
    R = R.scaled(lb) - T * B;
    --e;
  }
  if (e <= 0) return R;
  C pw = RingOne<C>::value();
  for (int i = 0; i < e; ++i) pw = pw * lb;
  return R.scaled(pw);
}

IntPoly to_int_checked(const RatPoly& p);  // throws NonIntegerResult
RatPoly to_rat(const IntPoly& p);

// Positive content; throws ZeroPolynomial on the zero polynomial.
BigInt content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);
// Primitive integer multiple with positive leading coefficient.
IntPoly primitive_normalized(const RatPoly& p);
IntPoly primitive_normalized(const IntPoly& p);

// X^deg f * f(1/X).
IntPoly reciprocal(const IntPoly& f);
RatPoly reciprocal(const RatPoly& f);

// b^n f(c/b) computed as sum a_i c^i b^(n-i).
BigInt eval_homogeneous(const IntPoly& f, const BigInt& c, const BigInt& b);

BigRat eval_at(const IntPoly& f, const BigRat& x);

struct RatDivision {
  RatPoly quotient;
  RatPoly remainder;
};
RatDivision divmod(const RatPoly& a, const RatPoly& b);
// Throws NonIntegerResult when b does not divide a.
RatPoly exact_div(const RatPoly& a, const RatPoly& b);
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& d, const IntPoly& a);

RatPoly monic_gcd(const RatPoly& a, const RatPoly& b);
IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b);

struct SquarefreeFactor {
  IntPoly factor;
  unsigned multiplicity;
};
// p = c * prod factor^multiplicity with each factor primitive, squarefree,
// positive-leading and pairwise coprime.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p);

// f(X + s).
RatPoly taylor_shift(const RatPoly& f, const BigRat& s);

// Bracket form "[a0, a1, ..., an]" (ascending) and human form
// "9x^4+3x^3-2x^2+x-1". Both parsers accept either notation.
RatPoly parse_rat_poly(std::string_view text);
IntPoly parse_int_poly(std::string_view text);
std::string to_bracket(const IntPoly& p);
std::string to_bracket(const RatPoly& p);
std::string to_human(const IntPoly& p);
std::string to_human(const RatPoly& p);

}  // namespace resprime
