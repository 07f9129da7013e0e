#include "resprime/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>

#include "resprime/error.hpp"

namespace resprime {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  static const u64 bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : bases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : bases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool strong_probable_prime_base2(const BigInt& n) {
  BigInt d = n - 1;
  mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  BigInt x;
  BigInt two = 2;
  mpz_powm(x.get_mpz_t(), two.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  BigInt nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == nm1) return true;
  }
  return false;
}

BigInt mod_nonneg(const BigInt& a, const BigInt& n) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt half_mod(BigInt a, const BigInt& n) {
  if (mpz_odd_p(a.get_mpz_t())) a += n;
  mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), 1);
  return a;
}

// Strong Lucas probable prime test with Selfridge parameters.
bool strong_lucas_probable_prime(const BigInt& n) {
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;
  long D = 5;
  while (true) {
    int j = mpz_si_kronecker(D, n.get_mpz_t());
    if (j == -1) break;
    if (j == 0) {
      BigInt ad = D < 0 ? -D : D;
      if (ad != n) return false;
    }
    D = D > 0 ? -(D + 2) : -(D - 2);
  }
  const BigInt P = 1;
  const BigInt Dz = D;
  const BigInt Q = mod_nonneg(BigInt((1 - D) / 4), n);
  BigInt d = n + 1;
  mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  BigInt U = 1, V = P, Qk = Q;
  for (long bit = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
    U = U * V % n;
    V = mod_nonneg(BigInt(V * V - 2 * Qk), n);
    Qk = Qk * Qk % n;
    if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      BigInt U2 = half_mod(mod_nonneg(BigInt(P * U + V), n), n);
      BigInt V2 = half_mod(mod_nonneg(BigInt(Dz * U + P * V), n), n);
      U = U2 % n;
      V = V2 % n;
      Qk = Qk * Q % n;
    }
  }
  if (U == 0 || V == 0) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    V = mod_nonneg(BigInt(V * V - 2 * Qk), n);
    Qk = Qk * Qk % n;
    if (V == 0) return true;
  }
  return false;
}

struct RhoState {
  std::mt19937_64 rng;
  u64 iterations_left;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  bool out_of_budget() const {
    if (iterations_left == 0) return true;
    return deadline && std::chrono::steady_clock::now() > *deadline;
  }
};

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial divisor
// or nothing when the budget runs out.
std::optional<BigInt> pollard_brent(const BigInt& n, RhoState& st) {
  if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
  const u64 m = 128;
  while (!st.out_of_budget()) {
    BigInt y = BigInt(static_cast<unsigned long>(st.rng() >> 1)) % n;
    BigInt c = BigInt(static_cast<unsigned long>(st.rng() >> 1)) % (n - 1) + 1;
    BigInt g = 1, q = 1, x, ys;
    u64 r = 1;
    auto step = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        u64 lim = std::min(m, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y);
          BigInt diff = x - y;
          q = q * abs_of(diff) % n;
        }
        if (st.iterations_left <= lim) {
          st.iterations_left = 0;
          return std::nullopt;
        }
        st.iterations_left -= lim;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        if (st.deadline && std::chrono::steady_clock::now() > *st.deadline) return std::nullopt;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        BigInt diff = x - ys;
        BigInt ad = abs_of(diff);
        mpz_gcd(g.get_mpz_t(), ad.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return std::nullopt;
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return miller_rabin_u64(n.get_ui());
  for (u64 p : small_primes()) {
    if (p > 1000) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  return strong_probable_prime_base2(n) && strong_lucas_probable_prime(n);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RESPRIME_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 0x9e3779b97f4a7c15ULL;
}

std::optional<BigInt> Factorization::largest_prime() const {
  if (primes.empty()) return std::nullopt;
  return primes.back().prime;
}

Factorization factorize(const BigInt& n, const FactorBudget& budget) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "factorize(0)");
  Factorization out;
  out.sign = sgn(n) < 0 ? -1 : 1;
  BigInt m = abs_of(n);
  std::map<BigInt, unsigned> found;

  if (mpz_fits_ulong_p(m.get_mpz_t())) {
    u64 v = m.get_ui();
    for (u64 p : small_primes()) {
      if (p * p > v) break;
      while (v % p == 0) {
        v /= p;
        ++found[BigInt(static_cast<unsigned long>(p))];
      }
    }
    m = BigInt(static_cast<unsigned long>(v));
  } else {
    for (u64 p : small_primes()) {
      if (BigInt(static_cast<unsigned long>(p * p)) > m) break;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++found[BigInt(static_cast<unsigned long>(p))];
      }
    }
  }

  RhoState st{std::mt19937_64(budget.seed ? budget.seed : default_seed()), budget.max_rho_iterations, std::nullopt};
  if (budget.time_limit) st.deadline = std::chrono::steady_clock::now() + *budget.time_limit;

  std::vector<BigInt> pending;
  if (m > 1) pending.push_back(m);
  const BigInt trial_sq = BigInt(static_cast<unsigned long>(kTrialLimit)) * static_cast<unsigned long>(kTrialLimit);
  while (!pending.empty()) {
    BigInt x = pending.back();
    pending.pop_back();
    if (x < trial_sq || is_prime(x)) {
      ++found[x];
      continue;
    }
    bool split = false;
    for (unsigned long k = mpz_sizeinbase(x.get_mpz_t(), 2); k >= 2; --k) {
      BigInt r;
      if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), k)) {
        for (unsigned long i = 0; i < k; ++i) pending.push_back(r);
        split = true;
        break;
      }
    }
    if (split) continue;
    std::optional<BigInt> d = pollard_brent(x, st);
    if (!d) {
      out.cofactor *= x;
      continue;
    }
    pending.push_back(*d);
    pending.push_back(x / *d);
  }
  for (auto& [p, e] : found) out.primes.push_back({p, e});
  return out;
}

OmegaCount omega(const Factorization& f) {
  OmegaCount c;
  for (const auto& pp : f.primes) c.value += pp.exponent;
  if (!f.complete()) {
    c.exact = false;
    c.value += 2;  // a composite cofactor holds at least two primes
  }
  return c;
}

OmegaCount omega(const BigInt& n, const FactorBudget& budget) { return omega(factorize(n, budget)); }

std::optional<BigInt> d_k(const Factorization& f, unsigned k) {
  if (!f.complete()) return std::nullopt;
  BigInt n = 1;
  for (const auto& pp : f.primes) n *= power(pp.prime, pp.exponent);
  BigInt root;
  mpz_root(root.get_mpz_t(), n.get_mpz_t(), k + 1UL);
  BigInt best = 1;
  // Depth-first over exponent vectors, pruned at d > floor(n^(1/(k+1))).
  auto dfs = [&](auto&& self, std::size_t idx, const BigInt& d) -> void {
    if (idx == f.primes.size()) {
      if (d > best) best = d;
      return;
    }
    BigInt cur = d;
    for (unsigned e = 0; e <= f.primes[idx].exponent; ++e) {
      if (cur > root) break;
      self(self, idx + 1, cur);
      cur *= f.primes[idx].prime;
    }
  };
  dfs(dfs, 0, BigInt(1));
  return best;
}

std::optional<BigInt> d_k(const BigInt& n, unsigned k, const FactorBudget& budget) {
  return d_k(factorize(n, budget), k);
}

std::vector<BigInt> divisors(const Factorization& f) {
  std::vector<BigInt> out{BigInt(1)};
  for (const auto& pp : f.primes) {
    std::size_t base = out.size();
    BigInt pw = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      pw *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DirectedBound operator+(const DirectedBound& a, const DirectedBound& b) { return {a.lo + b.lo, a.hi + b.hi}; }
DirectedBound operator+(const DirectedBound& a, const BigRat& b) { return {a.lo + b, a.hi + b}; }
DirectedBound operator-(const BigRat& a, const DirectedBound& b) { return {a - b.hi, a - b.lo}; }
DirectedBound operator*(const DirectedBound& a, const DirectedBound& b) { return {a.lo * b.lo, a.hi * b.hi}; }
DirectedBound operator*(const DirectedBound& a, const BigRat& s) { return {a.lo * s, a.hi * s}; }

DirectedBound pow_nonneg(const DirectedBound& a, unsigned long e) {
  return {power(a.lo, static_cast<long>(e)), power(a.hi, static_cast<long>(e))};
}

DirectedBound reciprocal_positive(const DirectedBound& a) {
  if (sgn(a.lo) <= 0) throw Error(ErrorCode::ZeroDenominator, "reciprocal of a bound touching zero");
  return {1 / a.hi, 1 / a.lo};
}

DirectedBound kth_root_bounds(const BigRat& x, unsigned long k) {
  if (sgn(x) < 0) throw Error(ErrorCode::NegativeRadicand, to_string(x));
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "zeroth root");
  if (k == 1 || x == 0) return DirectedBound::exact(x);
  constexpr unsigned long kGuard = 64;
  const BigInt& p = x.get_num();
  const BigInt& q = x.get_den();
  // x^(1/k) = (p q^(k-1))^(1/k) / q, scaled by 2^kGuard before the integer root.
  BigInt N = p * power(q, k - 1);
  N <<= static_cast<mp_bitcnt_t>(kGuard * k);
  BigInt R;
  int exact = mpz_root(R.get_mpz_t(), N.get_mpz_t(), k);
  BigInt den = q;
  den <<= static_cast<mp_bitcnt_t>(kGuard);
  BigRat lo(R, den);
  lo.canonicalize();
  if (exact) return {lo, lo};
  BigRat hi(BigInt(R + 1), den);
  hi.canonicalize();
  return {lo, hi};
}

DirectedBound kth_root_bounds(const DirectedBound& x, unsigned long k) {
  return {kth_root_bounds(x.lo, k).lo, kth_root_bounds(x.hi, k).hi};
}

}  // namespace resprime
