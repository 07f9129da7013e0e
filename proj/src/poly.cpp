#include "resprime/poly.hpp"

#include <cctype>
#include <map>

namespace resprime {

IntPoly to_int_checked(const RatPoly& p) {
  std::vector<BigInt> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!is_integer(p[i])) throw Error(ErrorCode::NonIntegerResult, "coefficient " + to_string(p[i]));
    v[i] = p[i].get_num();
  }
  return IntPoly(std::move(v));
}

RatPoly to_rat(const IntPoly& p) {
  std::vector<BigRat> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = BigRat(p[i]);
  return RatPoly(std::move(v));
}

BigInt content(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "content of zero");
  BigInt g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  BigInt g = content(p);
  std::vector<BigInt> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(v[i].get_mpz_t(), p[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly primitive_normalized(const IntPoly& p) {
  if (p.is_zero()) return p;
  IntPoly q = primitive_part(p);
  return sgn(q.leading()) < 0 ? -q : q;
}

IntPoly primitive_normalized(const RatPoly& p) {
  if (p.is_zero()) return {};
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    BigRat t = p[i] * l;
    v[i] = t.get_num();
  }
  return primitive_normalized(IntPoly(std::move(v)));
}

IntPoly reciprocal(const IntPoly& f) {
  std::vector<BigInt> v(f.coeffs().rbegin(), f.coeffs().rend());
  return IntPoly(std::move(v));
}

RatPoly reciprocal(const RatPoly& f) {
  std::vector<BigRat> v(f.coeffs().rbegin(), f.coeffs().rend());
  return RatPoly(std::move(v));
}

BigInt eval_homogeneous(const IntPoly& f, const BigInt& c, const BigInt& b) {
  if (f.is_zero()) return 0;
  const int n = f.degree();
  BigInt acc = 0;
  BigInt cpow = 1;
  for (int i = 0; i <= n; ++i) {
    acc += f[i] * cpow * power(b, static_cast<unsigned long>(n - i));
    cpow *= c;
  }
  return acc;
}

BigRat eval_at(const IntPoly& f, const BigRat& x) {
  BigRat acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

RatDivision divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<BigRat> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  std::vector<BigRat> r = a.coeffs();
  const BigRat inv = 1 / b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    BigRat t = r[static_cast<std::size_t>(k + db)] * inv;
    q[static_cast<std::size_t>(k)] = t;
    if (t == 0) continue;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k + i)] -= t * b[static_cast<std::size_t>(i)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  RatDivision d = divmod(a, b);
  if (!d.remainder.is_zero()) throw Error(ErrorCode::NonIntegerResult, "polynomial division is not exact");
  return d.quotient;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) { return to_int_checked(exact_div(to_rat(a), to_rat(b))); }

bool divides(const IntPoly& d, const IntPoly& a) {
  RatDivision q = divmod(to_rat(a), to_rat(d));
  return q.remainder.is_zero();
}

RatPoly monic_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(BigRat(1 / x.leading()));
}

IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b) {
  return primitive_normalized(monic_gcd(to_rat(a), to_rat(b)));
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  RatPoly f = to_rat(p);
  RatPoly fp = derivative(f);
  RatPoly b = monic_gcd(f, fp);
  RatPoly c = exact_div(f, b);
  RatPoly d = exact_div(fp, b) - derivative(c);
  unsigned i = 1;
  while (c.degree() > 0) {
    RatPoly a = monic_gcd(c, d);
    c = exact_div(c, a);
    d = exact_div(d, a) - derivative(c);
    if (a.degree() > 0) out.push_back({primitive_normalized(a), i});
    ++i;
  }
  return out;
}

RatPoly taylor_shift(const RatPoly& f, const BigRat& s) {
  // Horner with (X + s).
  RatPoly acc;
  RatPoly lin{s, BigRat(1)};
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * lin + RatPoly::constant(f[i]);
  return acc;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, why + " in '" + std::string(text) + "'");
}

RatPoly parse_bracket(std::string_view text) {
  std::string_view inner = trim(text.substr(1, text.size() - 2));
  std::vector<BigRat> v;
  if (inner.empty()) return RatPoly();
  std::size_t start = 0;
  while (true) {
    std::size_t comma = inner.find(',', start);
    std::string_view item = trim(inner.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (item.empty()) parse_fail(text, "empty coefficient");
    v.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RatPoly(std::move(v));
}

RatPoly parse_human(std::string_view text) {
  std::map<unsigned long, BigRat> acc;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  auto skip = [&] {
    while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&] {
    std::size_t s = pos;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(s, pos - s);
  };
  skip();
  if (pos == n) parse_fail(text, "empty polynomial");
  bool first = true;
  while (pos < n) {
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
      neg = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      parse_fail(text, "expected '+' or '-'");
    }
    BigRat coef = 1;
    bool has_coef = false;
    std::string_view num = digits();
    if (!num.empty()) {
      has_coef = true;
      coef = BigRat(BigInt(std::string(num), 10));
      if (pos < n && text[pos] == '/') {
        ++pos;
        std::string_view den = digits();
        if (den.empty()) parse_fail(text, "missing denominator");
        BigInt d(std::string(den), 10);
        if (d == 0) throw Error(ErrorCode::ZeroDenominator, std::string(text));
        coef /= BigRat(d);
      }
    }
    skip();
    bool star = false;
    if (pos < n && text[pos] == '*') {
      if (!has_coef) parse_fail(text, "'*' without a coefficient");
      star = true;
      ++pos;
      skip();
    }
    unsigned long exp = 0;
    bool has_var = false;
    if (pos < n && (text[pos] == 'x' || text[pos] == 'X')) {
      has_var = true;
      exp = 1;
      ++pos;
      skip();
      if (pos < n && text[pos] == '^') {
        ++pos;
        skip();
        std::string_view e = digits();
        if (e.empty() || e.size() > 6) parse_fail(text, "bad exponent");
        exp = std::stoul(std::string(e));
      }
    }
    if (star && !has_var) parse_fail(text, "'*' must be followed by x");
    if (!has_coef && !has_var) parse_fail(text, "empty term");
    acc[exp] += neg ? BigRat(-coef) : coef;
    skip();
    first = false;
  }
  std::vector<BigRat> v(acc.empty() ? 0 : acc.rbegin()->first + 1);
  for (auto& [e, c] : acc) v[e] = c;
  return RatPoly(std::move(v));
}

template <class C>
std::string bracket_impl(const DensePoly<C>& p) {
  if (p.is_zero()) return "[0]";
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += to_string(p[i]);
  }
  return s + "]";
}

template <class C>
std::string human_impl(const DensePoly<C>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t k = p.size(); k-- > 0;) {
    BigRat c(p[k]);
    if (c == 0) continue;
    if (c < 0)
      s += '-';
    else if (!s.empty())
      s += '+';
    BigRat mag = abs_of(c);
    if (k == 0) {
      s += to_string(mag);
      continue;
    }
    if (mag != 1) {
      s += to_string(mag);
      if (!is_integer(mag)) s += '*';
    }
    s += 'x';
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace

RatPoly parse_rat_poly(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) parse_fail(text, "empty polynomial");
  if (t.front() == '[') {
    if (t.back() != ']') parse_fail(text, "unterminated bracket");
    return parse_bracket(t);
  }
  return parse_human(t);
}

IntPoly parse_int_poly(std::string_view text) {
  RatPoly p = parse_rat_poly(text);
  for (const auto& c : p.coeffs())
    if (!is_integer(c)) parse_fail(text, "integer coefficients required");
  return to_int_checked(p);
}

std::string to_bracket(const IntPoly& p) { return bracket_impl(p); }
std::string to_bracket(const RatPoly& p) { return bracket_impl(p); }
std::string to_human(const IntPoly& p) { return human_impl(p); }
std::string to_human(const RatPoly& p) { return human_impl(p); }

}  // namespace resprime
