#include "resprime/bivar.hpp"

#include <cctype>
#include <optional>

namespace resprime {

int Degree::value() const {
  if (bottom_) throw Error(ErrorCode::PreconditionViolated, "degree of the zero polynomial");
  return value_;
}

Degree deg_x(const RatPoly& p) { return p.is_zero() ? Degree::bottom() : Degree(p.degree()); }

std::string to_string(const Degree& d) { return d.is_bottom() ? "bottom" : std::to_string(d.value()); }

std::vector<Degree> degree_profile(const BivarPoly& f) {
  std::vector<Degree> out;
  out.reserve(f.size());
  for (const auto& c : f.coeffs()) out.push_back(deg_x(c));
  return out;
}

Degree max_degree(const std::vector<Degree>& profile, std::size_t from, std::size_t to) {
  Degree best = Degree::bottom();
  for (std::size_t i = from; i < to && i < profile.size(); ++i) best = std::max(best, profile[i]);
  return best;
}

RatPoly x_content(const BivarPoly& f) {
  RatPoly g;
  for (const auto& c : f.coeffs()) g = monic_gcd(g, c);
  return g;
}

RatPoly eval_y(const BivarPoly& f, const BigRat& y) {
  RatPoly acc;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc.scaled(y) + f[i];
  return acc;
}

BivarPoly to_bivar(const RatPoly& p_in_x) { return BivarPoly::constant(p_in_x); }

BivarPoly y_linear(const RatPoly& c0, const RatPoly& c1) { return BivarPoly({c0, c1}); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, why + " in '" + std::string(text) + "'");
}

}  // namespace

BivarPoly parse_bivar(std::string_view text) {
  std::string_view t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') fail(text, "expected [[...], ...]");
  std::string_view inner = trim(t.substr(1, t.size() - 2));
  std::vector<RatPoly> coeffs;
  std::size_t pos = 0;
  while (pos < inner.size()) {
    if (inner[pos] != '[') fail(text, "expected '['");
    std::size_t close = inner.find(']', pos);
    if (close == std::string_view::npos) fail(text, "unterminated coefficient");
    std::string_view item = trim(inner.substr(pos + 1, close - pos - 1));
    if (item.empty()) fail(text, "empty coefficient");
    if (item.find(',') != std::string_view::npos)
      coeffs.push_back(parse_rat_poly("[" + std::string(item) + "]"));
    else
      coeffs.push_back(parse_rat_poly(item));
    pos = close + 1;
    while (pos < inner.size() && std::isspace(static_cast<unsigned char>(inner[pos]))) ++pos;
    if (pos == inner.size()) break;
    if (inner[pos] != ',') fail(text, "expected ','");
    ++pos;
    while (pos < inner.size() && std::isspace(static_cast<unsigned char>(inner[pos]))) ++pos;
    if (pos == inner.size()) fail(text, "trailing ','");
  }
  return BivarPoly(std::move(coeffs));
}

std::string to_string(const BivarPoly& f) {
  if (f.is_zero()) return "[[0]]";
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ", ";
    s += "[" + to_human(f[i]) + "]";
  }
  return s + "]";
}

namespace {

std::optional<BivarPoly> try_divide(const BivarPoly& a, const BivarPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "bivariate division by zero");
  if (a.is_zero()) return BivarPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<RatPoly> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  BivarPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    RatDivision d = divmod(r.leading(), b.leading());
    if (!d.remainder.is_zero()) return std::nullopt;
    std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
    q[k] = d.quotient;
    BivarPoly before = r;
    r = r - BivarPoly::monomial(d.quotient, k) * b;
    if (!r.is_zero() && r.degree() >= before.degree()) return std::nullopt;
  }
  if (!r.is_zero()) return std::nullopt;
  return BivarPoly(std::move(q));
}

}  // namespace

BivarPoly bivar_exact_div(const BivarPoly& a, const BivarPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw Error(ErrorCode::NonIntegerResult, "bivariate division is not exact");
  return *q;
}

bool bivar_divides(const BivarPoly& d, const BivarPoly& a) { return try_divide(a, d).has_value(); }

}  // namespace resprime
