#include "resprime/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "resprime/arith.hpp"
#include "resprime/error.hpp"

namespace resprime {

namespace {

using u64 = std::uint64_t;
using Fp = std::vector<u64>;
using ZP = std::vector<BigInt>;

// ---- polynomials over F_p, p < 2^31 ----

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Fp& a) { return static_cast<int>(a.size()) - 1; }

Fp fp_from(const IntPoly& f, u64 p) {
  Fp v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), p);
    v[i] = r.get_ui();
  }
  trim(v);
  return v;
}

Fp fp_sub(const Field& F, const Fp& a, const Fp& b) {
  Fp v(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(v);
  return v;
}

Fp fp_mul(const Field& F, const Fp& a, const Fp& b) {
  if (a.empty() || b.empty()) return {};
  Fp v(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) v[i + j] = (v[i + j] + a[i] * b[j]) % F.p;
  }
  trim(v);
  return v;
}

std::pair<Fp, Fp> fp_divmod(const Field& F, Fp a, const Fp& b) {
  if (b.empty()) throw Error(ErrorCode::ZeroPolynomial, "division by zero mod p");
  if (deg(a) < deg(b)) return {{}, a};
  Fp q(a.size() - b.size() + 1, 0);
  u64 il = F.inv(b.back());
  for (int k = deg(a) - deg(b); k >= 0; --k) {
    u64 t = F.mul(a[static_cast<std::size_t>(k) + b.size() - 1], il);
    q[static_cast<std::size_t>(k)] = t;
    if (!t) continue;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] = F.sub(a[k + i], F.mul(t, b[i]));
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

Fp fp_mod(const Field& F, const Fp& a, const Fp& b) { return fp_divmod(F, a, b).second; }

Fp fp_monic(const Field& F, Fp a) {
  if (a.empty()) return a;
  u64 il = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, il);
  return a;
}

Fp fp_gcd(const Field& F, Fp a, Fp b) {
  while (!b.empty()) {
    Fp r = fp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(F, a);
}

// s a + t b = gcd (monic).
void fp_xgcd(const Field& F, const Fp& a, const Fp& b, Fp& g, Fp& s, Fp& t) {
  Fp r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(F, r0, r1);
    Fp s2 = fp_sub(F, s0, fp_mul(F, q, s1));
    Fp t2 = fp_sub(F, t0, fp_mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 il = F.inv(r0.back());
  for (auto& c : r0) c = F.mul(c, il);
  for (auto& c : s0) c = F.mul(c, il);
  for (auto& c : t0) c = F.mul(c, il);
  g = r0;
  s = s0;
  t = t0;
}

Fp fp_powmod(const Field& F, Fp base, const BigInt& e, const Fp& m) {
  Fp r{1};
  r = fp_mod(F, r, m);
  base = fp_mod(F, base, m);
  for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    r = fp_mod(F, fp_mul(F, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) r = fp_mod(F, fp_mul(F, r, base), m);
  }
  return r;
}

Fp fp_deriv(const Field& F, const Fp& a) {
  if (a.size() <= 1) return {};
  Fp v(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) v[i - 1] = F.mul(a[i], i % F.p);
  trim(v);
  return v;
}

struct DegreeBlock {
  Fp poly;
  int d;
};

std::vector<DegreeBlock> distinct_degree(const Field& F, Fp f) {
  std::vector<DegreeBlock> out;
  Fp x{0, 1};
  Fp h = x;
  const BigInt p(static_cast<unsigned long>(F.p));
  for (int i = 1; deg(f) >= 2 * i; ++i) {
    h = fp_powmod(F, h, p, f);
    Fp g = fp_gcd(F, f, fp_sub(F, h, x));
    if (deg(g) > 0) {
      out.push_back({g, i});
      f = fp_divmod(F, f, g).first;
      h = fp_mod(F, h, f);
    }
  }
  if (deg(f) > 0) out.push_back({fp_monic(F, f), deg(f)});
  return out;
}

void equal_degree(const Field& F, const Fp& g, int d, std::mt19937_64& rng, std::vector<Fp>& out) {
  if (deg(g) == d) {
    out.push_back(fp_monic(F, g));
    return;
  }
  BigInt e = power(BigInt(static_cast<unsigned long>(F.p)), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  while (true) {
    Fp a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = rng() % F.p;
    trim(a);
    if (deg(a) < 1) continue;
    Fp b = fp_powmod(F, a, e, g);
    b = fp_sub(F, b, Fp{1});
    Fp h = fp_gcd(F, g, b);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, fp_divmod(F, g, h).first, d, rng, out);
      return;
    }
  }
}

// ---- polynomials over Z / m ----

BigInt mod_m(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

void ztrim(ZP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZP zreduce(ZP a, const BigInt& m) {
  for (auto& c : a) c = mod_m(c, m);
  ztrim(a);
  return a;
}

ZP zadd(const ZP& a, const ZP& b, const BigInt& m) {
  ZP v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    BigInt s = 0;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    v[i] = mod_m(s, m);
  }
  ztrim(v);
  return v;
}

ZP zsub(const ZP& a, const ZP& b, const BigInt& m) {
  ZP v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    BigInt s = 0;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s -= b[i];
    v[i] = mod_m(s, m);
  }
  ztrim(v);
  return v;
}

ZP zmul(const ZP& a, const ZP& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  ZP v(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
  }
  return zreduce(std::move(v), m);
}

// Division by a monic h modulo m.
std::pair<ZP, ZP> zdivmod_monic(ZP a, const ZP& h, const BigInt& m) {
  if (a.size() < h.size()) return {{}, a};
  ZP q(a.size() - h.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt t = mod_m(a[k + h.size() - 1], m);
    q[k] = t;
    if (t == 0) continue;
    for (std::size_t i = 0; i < h.size(); ++i) a[k + i] = mod_m(BigInt(a[k + i] - t * h[i]), m);
  }
  a.resize(h.size() - 1);
  ztrim(a);
  ztrim(q);
  return {q, a};
}

ZP from_fp(const Fp& a) {
  ZP v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = BigInt(static_cast<unsigned long>(a[i]));
  return v;
}

// Quadratic Hensel step: f = g h mod m with s g + t h = 1 mod m and h monic,
// lifted to modulus m^2.
void hensel_step(const ZP& f, ZP& g, ZP& h, ZP& s, ZP& t, const BigInt& m) {
  BigInt m2 = m * m;
  ZP e = zsub(zreduce(f, m2), zmul(g, h, m2), m2);
  auto [q, r] = zdivmod_monic(zmul(s, e, m2), h, m2);
  ZP g2 = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
  ZP h2 = zadd(h, r, m2);
  ZP b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), ZP{BigInt(1)}, m2);
  auto [c, d] = zdivmod_monic(zmul(s, b, m2), h2, m2);
  ZP s2 = zsub(s, d, m2);
  ZP t2 = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, g2, m2), m2);
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

// Lifts f = lc(f) * prod us (mod p) to monic factors modulo p^(2^doublings).
void multi_lift(const ZP& f, const std::vector<Fp>& us, const Field& F, int doublings, std::vector<ZP>& out) {
  BigInt M = BigInt(static_cast<unsigned long>(F.p));
  for (int i = 0; i < doublings; ++i) M *= M;
  if (us.size() == 1) {
    BigInt inv;
    BigInt lc = mod_m(f.back(), M);
    if (!mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t()))
      throw Error(ErrorCode::CrossCheckFailed, "leading coefficient not invertible");
    ZP v(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) v[i] = mod_m(BigInt(f[i] * inv), M);
    ztrim(v);
    out.push_back(v);
    return;
  }
  std::size_t k = us.size() / 2;
  std::vector<Fp> left(us.begin(), us.begin() + static_cast<long>(k)), right(us.begin() + static_cast<long>(k), us.end());
  BigInt lcp;
  mpz_fdiv_r_ui(lcp.get_mpz_t(), f.back().get_mpz_t(), F.p);
  Fp g0{lcp.get_ui()};
  for (const auto& u : left) g0 = fp_mul(F, g0, u);
  Fp h0{1};
  for (const auto& u : right) h0 = fp_mul(F, h0, u);
  Fp gg, s0, t0;
  fp_xgcd(F, g0, h0, gg, s0, t0);
  ZP g = from_fp(g0), h = from_fp(h0), s = from_fp(s0), t = from_fp(t0);
  BigInt m = BigInt(static_cast<unsigned long>(F.p));
  for (int i = 0; i < doublings; ++i) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  multi_lift(g, left, F, doublings, out);
  multi_lift(h, right, F, doublings, out);
}

BigInt symmetric(const BigInt& a, const BigInt& M) {
  BigInt r = mod_m(a, M);
  if (2 * r > M) r -= M;
  return r;
}

IntPoly to_int_poly(const ZP& v, const BigInt& M) {
  std::vector<BigInt> c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = symmetric(v[i], M);
  return IntPoly(std::move(c));
}

unsigned long coeff_bits(const IntPoly& f) {
  unsigned long b = 0;
  for (const auto& c : f.coeffs()) b = std::max<unsigned long>(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b;
}

bool is_small_prime(u64 n) { return is_prime(BigInt(static_cast<unsigned long>(n))); }

// Factors a primitive squarefree polynomial of degree >= 2 with positive
// leading coefficient.
std::vector<IntPoly> zassenhaus(const IntPoly& f, const OracleBudget& budget) {
  const int n = f.degree();
  // Pick, among the first few good primes, the one giving the fewest factors.
  std::optional<Field> best_field;
  std::vector<DegreeBlock> best_blocks;
  std::size_t best_count = 0;
  int good = 0;
  for (u64 p = 5; good < 5 && p < (1ULL << 30); p += 2) {
    if (!is_small_prime(p)) continue;
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    Field F{p};
    Fp fb = fp_from(f, p);
    if (deg(fb) != n) continue;
    if (deg(fp_gcd(F, fb, fp_deriv(F, fb))) != 0) continue;
    ++good;
    std::vector<DegreeBlock> blocks = distinct_degree(F, fp_monic(F, fb));
    std::size_t count = 0;
    for (const auto& b : blocks) count += static_cast<std::size_t>(deg(b.poly) / b.d);
    if (count == 1) return {f};
    if (!best_field || count < best_count) {
      best_field = F;
      best_blocks = blocks;
      best_count = count;
    }
  }
  if (!best_field) throw Error(ErrorCode::BudgetExceeded, "no good prime found");
  const Field F = *best_field;
  std::mt19937_64 rng(0x5eedULL);
  std::vector<Fp> us;
  for (const auto& b : best_blocks) equal_degree(F, b.poly, b.d, rng, us);

  // Coefficients of lc(f)/lc(h) * h for any factor h are at most 2^n ||f||_2.
  BigInt norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  BigInt norm = ceil_of(kth_root_bounds(BigRat(norm2), 2).hi);
  BigInt bound = abs_of(f.leading()) * power(BigInt(2), static_cast<unsigned long>(n)) * norm;
  BigInt M = BigInt(static_cast<unsigned long>(F.p));
  int doublings = 0;
  while (M <= 2 * bound + 1) {
    M *= M;
    ++doublings;
  }
  std::vector<ZP> lifted;
  multi_lift(ZP(f.coeffs()), us, F, doublings, lifted);

  std::vector<IntPoly> out;
  IntPoly rest = f;
  std::vector<std::size_t> idx(lifted.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::uint64_t candidates = 0;
  std::size_t s = 1;
  while (2 * s <= idx.size()) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      if (++candidates > budget.max_candidates) throw Error(ErrorCode::BudgetExceeded, "recombination candidates");
      const BigInt lc = rest.leading();
      // Constant-term test before forming the full product.
      BigInt c0 = lc;
      for (std::size_t i : pick) c0 = mod_m(BigInt(c0 * lifted[idx[i]][0]), M);
      c0 = symmetric(c0, M);
      BigInt target = lc * rest[0];
      bool plausible = target == 0 || (c0 != 0 && mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t()));
      if (plausible) {
        ZP prod{lc};
        for (std::size_t i : pick) prod = zmul(prod, lifted[idx[i]], M);
        IntPoly g = primitive_normalized(to_int_poly(prod, M));
        if (g.degree() > 0 && divides(g, rest)) {
          out.push_back(g);
          rest = exact_div(rest, g);
          if (sgn(rest.leading()) < 0) rest = -rest;
          std::vector<std::size_t> keep;
          for (std::size_t i = 0; i < idx.size(); ++i)
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(idx[i]);
          idx = keep;
          found = true;
          break;
        }
      }
      // Next s-subset in lexicographic order.
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == idx.size() - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

unsigned long QFactorization::count() const {
  unsigned long c = 0;
  for (const auto& f : factors) c += f.multiplicity;
  return c;
}

QFactorization factor_over_q(const IntPoly& f, const OracleBudget& budget) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor the zero polynomial");
  if (f.degree() > budget.max_degree) throw Error(ErrorCode::BudgetExceeded, "degree " + std::to_string(f.degree()));
  if (coeff_bits(f) > budget.max_coeff_bits) throw Error(ErrorCode::BudgetExceeded, "coefficient size");
  QFactorization out;
  for (const auto& part : squarefree_decomposition(f)) {
    std::vector<IntPoly> irr;
    if (part.factor.degree() == 1)
      irr.push_back(part.factor);
    else
      irr = zassenhaus(part.factor, budget);
    for (auto& g : irr) out.factors.push_back({g, part.multiplicity});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const QFactor& a, const QFactor& b) { return poly_less(a.factor, b.factor); });
  BigRat lcs = 1;
  for (const auto& q : out.factors) lcs *= BigRat(power(q.factor.leading(), q.multiplicity));
  out.unit = BigRat(f.leading()) / lcs;
  return out;
}

QFactorization factor_over_q(const RatPoly& f, const OracleBudget& budget) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor the zero polynomial");
  QFactorization out = factor_over_q(primitive_normalized(f), budget);
  BigRat lcs = 1;
  for (const auto& q : out.factors) lcs *= BigRat(power(q.factor.leading(), q.multiplicity));
  out.unit = f.leading() / lcs;
  return out;
}

bool is_irreducible_over_q(const IntPoly& f, const OracleBudget& budget) {
  return f.degree() >= 1 && factor_over_q(f, budget).count() == 1;
}

bool is_irreducible_over_q(const RatPoly& f, const OracleBudget& budget) {
  return f.degree() >= 1 && factor_over_q(f, budget).count() == 1;
}

// ---- bivariate ----

namespace {

// Integer-coefficient multiple of f with coprime integer content.
BivarPoly clear_bivar(const BivarPoly& f) {
  BigInt l = 1;
  for (const auto& c : f.coeffs())
    for (const auto& a : c.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
  BigInt g = 0;
  for (const auto& c : f.coeffs())
    for (const auto& a : c.coeffs()) {
      BigInt v = BigRat(a * l).get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  BigRat s(l, g);
  s.canonicalize();
  std::vector<RatPoly> v;
  for (const auto& c : f.coeffs()) v.push_back(c.scaled(s));
  BivarPoly out(std::move(v));
  if (sgn(out.leading().leading()) < 0) out = -out;
  return out;
}

int max_deg_x(const BivarPoly& f) {
  int d = 0;
  for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
  return d;
}

IntPoly kronecker(const BivarPoly& f, int D) {
  std::vector<BigInt> v(f.size() * static_cast<std::size_t>(D));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t r = 0; r < f[i].size(); ++r) v[i * static_cast<std::size_t>(D) + r] = f[i][r].get_num();
  return IntPoly(std::move(v));
}

BivarPoly unkronecker(const IntPoly& g, int D) {
  std::vector<RatPoly> coeffs((g.size() + static_cast<std::size_t>(D) - 1) / static_cast<std::size_t>(D));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::vector<BigRat> c;
    for (std::size_t r = 0; r < static_cast<std::size_t>(D); ++r) c.push_back(BigRat(g.coeff(i * static_cast<std::size_t>(D) + r)));
    coeffs[i] = RatPoly(std::move(c));
  }
  return BivarPoly(std::move(coeffs));
}

// Smallest nontrivial factor of a Y-primitive integer bivariate polynomial,
// or nothing when it is irreducible.
std::optional<BivarPoly> smallest_factor(const BivarPoly& P, const OracleBudget& budget) {
  const int D = max_deg_x(P) + 1;
  IntPoly K = kronecker(P, D);
  QFactorization uni = factor_over_q(K, budget);
  const std::size_t r = uni.factors.size();
  std::vector<unsigned> e(r, 0);
  struct Candidate {
    int degree;
    std::vector<unsigned> exps;
  };
  std::vector<Candidate> cands;
  std::uint64_t total = 1;
  for (const auto& q : uni.factors) {
    total *= q.multiplicity + 1;
    if (total > budget.max_candidates) throw Error(ErrorCode::BudgetExceeded, "bivariate candidates");
  }
  while (true) {
    std::size_t i = 0;
    while (i < r && e[i] == uni.factors[i].multiplicity) e[i++] = 0;
    if (i == r) break;
    ++e[i];
    int d = 0;
    bool full = true;
    for (std::size_t j = 0; j < r; ++j) {
      d += static_cast<int>(e[j]) * uni.factors[j].factor.degree();
      if (e[j] != uni.factors[j].multiplicity) full = false;
    }
    if (!full) cands.push_back({d, e});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.degree < b.degree; });
  for (const auto& c : cands) {
    IntPoly G{BigInt(1)};
    for (std::size_t j = 0; j < r; ++j)
      for (unsigned k = 0; k < c.exps[j]; ++k) G = G * uni.factors[j].factor;
    BivarPoly h = unkronecker(G, D);
    if (h.degree() < 1) continue;
    if (bivar_divides(h, P)) return clear_bivar(h);
  }
  return std::nullopt;
}

bool bivar_less(const BivarPoly& a, const BivarPoly& b) { return to_string(a) < to_string(b); }

}  // namespace

unsigned long BivarFactorization::count() const {
  unsigned long c = 0;
  for (const auto& f : factors) c += f.multiplicity;
  return c;
}

BivarFactorization factor_bivar(const BivarPoly& f, const OracleBudget& budget) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor the zero polynomial");
  BivarFactorization out;
  BivarPoly P = clear_bivar(f);
  std::map<std::string, BivarFactor> acc;
  auto add = [&](const BivarPoly& h) {
    auto key = to_string(h);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, BivarFactor{h, 1});
    else
      ++it->second.multiplicity;
  };
  RatPoly content = x_content(P);
  if (content.degree() > 0) {
    QFactorization cf = factor_over_q(content, budget);
    for (const auto& q : cf.factors)
      for (unsigned k = 0; k < q.multiplicity; ++k) add(to_bivar(to_rat(q.factor)));
    P = clear_bivar(bivar_exact_div(P, to_bivar(content)));
  }
  while (P.degree() >= 1) {
    std::optional<BivarPoly> h = smallest_factor(P, budget);
    if (!h) {
      add(P);
      break;
    }
    add(*h);
    P = clear_bivar(bivar_exact_div(P, *h));
  }
  for (auto& [k, v] : acc) out.factors.push_back(v);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const BivarFactor& a, const BivarFactor& b) { return bivar_less(a.factor, b.factor); });
  BivarPoly prod = BivarPoly::constant(RatPoly::constant(BigRat(1)));
  for (const auto& q : out.factors)
    for (unsigned k = 0; k < q.multiplicity; ++k) prod = prod * q.factor;
  out.unit = f.leading().leading() / prod.leading().leading();
  return out;
}

bool is_irreducible_bivar(const BivarPoly& f, const OracleBudget& budget) {
  if (f.is_zero()) return false;
  bool nonconstant = f.degree() >= 1 || f[0].degree() >= 1;
  return nonconstant && factor_bivar(f, budget).count() == 1;
}

}  // namespace resprime
