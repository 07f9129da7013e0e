#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "resprime/poly.hpp"

namespace resprime {

// Polynomial in Y whose coefficients a_i(X) live in Q[X].
using BivarPoly = DensePoly<RatPoly>;

// Degree in X; the zero polynomial has degree Bottom, below every integer.
class Degree {
 public:
  static Degree bottom() { return Degree(); }
  explicit Degree(int d) : value_(d), bottom_(false) {}

  bool is_bottom() const { return bottom_; }
  int value() const;

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.bottom_ == b.bottom_ && (a.bottom_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.bottom_ || b.bottom_) return b.bottom_ <=> a.bottom_;
    return a.value_ <=> b.value_;
  }

 private:
  Degree() = default;
  int value_ = 0;
  bool bottom_ = true;
};

Degree deg_x(const RatPoly& p);
std::string to_string(const Degree& d);

// deg_X of every Y-coefficient, indexed by the power of Y.
std::vector<Degree> degree_profile(const BivarPoly& f);
// Maximum over indices in [from, to); Bottom for an empty range.
Degree max_degree(const std::vector<Degree>& profile, std::size_t from, std::size_t to);

// Monic gcd in Q[X] of all Y-coefficients.
RatPoly x_content(const BivarPoly& f);

RatPoly eval_y(const BivarPoly& f, const BigRat& y);
BivarPoly to_bivar(const RatPoly& p_in_x);  // constant in Y
BivarPoly y_linear(const RatPoly& c0, const RatPoly& c1);

// "[[x^3+2], [x^2-x], [5]]": the Y-coefficients in ascending order, each in
// human or bracket univariate form.
BivarPoly parse_bivar(std::string_view text);
std::string to_string(const BivarPoly& f);

BivarPoly bivar_exact_div(const BivarPoly& a, const BivarPoly& b);  // throws NonIntegerResult
bool bivar_divides(const BivarPoly& d, const BivarPoly& a);

}  // namespace resprime
