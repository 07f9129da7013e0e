#include "resprime/resultant.hpp"

#include "resprime/arith.hpp"

namespace resprime {

namespace {

BigInt ring_div(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

RatPoly ring_div(const RatPoly& a, const RatPoly& b) { return exact_div(a, b); }

template <class C>
C ring_pow(C x, unsigned e) {
  C r = RingOne<C>::value();
  while (e) {
    if (e & 1U) r = r * x;
    e >>= 1U;
    if (e) x = x * x;
  }
  return r;
}

// Subresultant pseudo-remainder sequence over an integral domain C in which
// exact division is available.
template <class C>
C subresultant(DensePoly<C> A, DensePoly<C> B) {
  if (A.is_zero() || B.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant with a zero polynomial");
  bool negate = false;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) negate = true;
  }
  if (B.degree() == 0) {
    C r = ring_pow(B.leading(), static_cast<unsigned>(A.degree()));
    return negate ? C(-r) : r;
  }
  C g = RingOne<C>::value();
  C h = RingOne<C>::value();
  while (true) {
    const int delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) negate = !negate;
    DensePoly<C> R = pseudo_remainder(A, B);
    A = std::move(B);
    C divisor = g * ring_pow(h, static_cast<unsigned>(delta));
    std::vector<C> v(R.size());
    for (std::size_t i = 0; i < R.size(); ++i) v[i] = ring_div(R[i], divisor);
    B = DensePoly<C>(std::move(v));
    g = A.leading();
    if (delta > 0) h = ring_div(ring_pow(g, static_cast<unsigned>(delta)), ring_pow(h, static_cast<unsigned>(delta - 1)));
    if (B.is_zero()) return C{};
    if (B.degree() == 0) break;
  }
  const unsigned da = static_cast<unsigned>(A.degree());
  C r = ring_div(ring_pow(B.leading(), da), ring_pow(h, da - 1));
  return negate ? C(-r) : r;
}

}  // namespace

BigInt resultant(const IntPoly& f, const IntPoly& g) { return subresultant<BigInt>(f, g); }

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  bool negate = false;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return negate ? BigInt(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

BigInt resultant_sylvester(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant with a zero polynomial");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const std::size_t m = static_cast<std::size_t>(g.degree());
  const std::size_t N = n + m;
  std::vector<std::vector<BigInt>> s(N, std::vector<BigInt>(N));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[i][i + j] = f[n - j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[m + i][i + j] = g[m - j];
  return bareiss_determinant(std::move(s));
}

namespace {

void check_quadratic(const IntPoly& f, const BigInt& a) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant with a zero polynomial");
  if (a == 0) throw Error(ErrorCode::PreconditionViolated, "quadratic with zero leading coefficient");
}

BigInt require_integer(const BigRat& v) {
  if (!is_integer(v)) throw Error(ErrorCode::NonIntegerResult, "closed-form resultant " + to_string(v));
  return v.get_num();
}

}  // namespace

BigInt resultant_quadratic_shift(const IntPoly& f, const BigInt& a, const BigInt& b, const BigInt& c) {
  check_quadratic(f, a);
  const unsigned long n = static_cast<unsigned long>(f.degree());
  const BigRat s = make_rat(-b, 2 * a);
  RatPoly shifted = taylor_shift(to_rat(f), s);
  BigRat D(BigInt(b * b - 4 * a * c), BigInt(4 * a * a));
  D.canonicalize();
  const BigRat an(power(a, n));
  if (D == 0) {
    BigRat v = shifted.coeff(0);
    return require_integer(an * v * v);
  }
  BigRat even = 0, odd = 0, dp = 1;
  for (std::size_t i = 0; 2 * i < shifted.size(); ++i) {
    even += shifted.coeff(2 * i) * dp;
    odd += shifted.coeff(2 * i + 1) * dp;
    dp *= D;
  }
  return require_integer(an * (even * even - D * odd * odd));
}

LucasSequence::LucasSequence(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (a == 0) throw Error(ErrorCode::PreconditionViolated, "quadratic with zero leading coefficient");
  p_ = BigRat(b, a);
  p_.canonicalize();
  q_ = BigRat(c, a);
  q_.canonicalize();
  x_ = {BigRat(2), BigRat(-p_)};
}

const BigRat& LucasSequence::at(std::size_t k) {
  while (x_.size() <= k) {
    std::size_t t = x_.size();
    x_.push_back(BigRat(-p_ * x_[t - 1] - q_ * x_[t - 2]));
  }
  return x_[k];
}

BigInt resultant_quadratic_binet(const IntPoly& f, const BigInt& a, const BigInt& b, const BigInt& c) {
  check_quadratic(f, a);
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (b * b == 4 * a * c) {
    BigRat r(BigInt(-b), BigInt(2 * a));
    r.canonicalize();
    BigRat v = eval_at(f, r);
    return require_integer(BigRat(power(a, n)) * v * v);
  }
  LucasSequence seq(a, b, c);
  std::vector<BigInt> cpow(n + 1), apow(n + 1);
  cpow[0] = 1;
  apow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    cpow[i] = cpow[i - 1] * c;
    apow[i] = apow[i - 1] * a;
  }
  BigRat sum = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (f[i] == 0) continue;
    BigInt w = cpow[i] * apow[n - i];
    sum += BigRat(w * f[i] * f[i]);
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (f[j] == 0) continue;
      sum += BigRat(w * f[i] * f[j]) * seq.at(j - i);
    }
  }
  return require_integer(sum);
}

RatPoly resultant_y(const BivarPoly& f, const BivarPoly& g) { return subresultant<RatPoly>(f, g); }

BigRat hadamard_bound(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "norm of zero");
  BigInt nf = 0, ng = 0;
  for (const auto& c : f.coeffs()) nf += c * c;
  for (const auto& c : g.coeffs()) ng += c * c;
  BigInt t = power(nf, static_cast<unsigned long>(g.degree())) * power(ng, static_cast<unsigned long>(f.degree()));
  return kth_root_bounds(BigRat(t), 2).hi;
}

}  // namespace resprime
