#include <chrono>

#include "doctest.h"
#include "resprime/arith.hpp"
#include "test_support.hpp"

using namespace resprime;

TEST_CASE("primality") {
  CHECK(is_prime(BigInt("9794181403")));
  CHECK(is_prime(8837));
  CHECK(is_prime(2316511));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(-7));  // primes are positive; callers pass |n|
  CHECK_FALSE(is_prime(BigInt("3215031751")));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(BigInt("18446744073709551557")));
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));
  CHECK_FALSE(is_prime(BigInt("170141183460469231731687303715884105727") * 3));
  for (long n = 0; n < 3000; ++n) {
    bool trial = n >= 2;
    for (long d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    CHECK(is_prime(n) == trial);
  }
}

TEST_CASE("factorization and omega") {
  Factorization f12 = factorize(12);
  REQUIRE(f12.primes.size() == 2);
  CHECK(f12.primes[0].prime == 2);
  CHECK(f12.primes[0].exponent == 2);
  CHECK(f12.primes[1].prime == 3);
  CHECK(f12.complete());
  CHECK(omega(12).value == 3);
  CHECK(omega(1).value == 0);
  CHECK(omega(-1).value == 0);
  CHECK(omega(15).value == 2);
  Factorization p = factorize(BigInt("9794181403"));
  REQUIRE(p.primes.size() == 1);
  CHECK(p.primes[0].exponent == 1);
  CHECK(factorize(-2316511).sign == -1);
  CHECK_THROWS_AS(factorize(0), Error);

  // Product of two 40-bit primes needs rho.
  BigInt semi = BigInt("1099511627791") * BigInt("1099511627891");
  Factorization s = factorize(semi);
  CHECK(s.complete());
  CHECK(omega(s).value == 2);
}

TEST_CASE("factorization multiplies back") {
  testsupport::Rng rng;
  for (int t = 0; t < 300; ++t) {
    BigInt n = BigInt(rng.uniform(1, 1'000'000'000)) * rng.uniform(1, 1'000'000) + 1;
    if (rng.coin()) n = -n;
    Factorization f = factorize(n);
    BigInt back = f.cofactor * f.sign;
    for (const auto& pp : f.primes) {
      CHECK(is_prime(pp.prime));
      back *= power(pp.prime, pp.exponent);
    }
    CHECK(back == n);
  }
}

TEST_CASE("budget exhaustion leaves a cofactor") {
  // Two 125-bit primes: far beyond a tiny rho budget.
  BigInt p = BigInt("42535295865117307932921825928971026459");
  BigInt q = BigInt("42535295865117307932921825928971027697");
  REQUIRE(is_prime(p));
  REQUIRE(is_prime(q));
  FactorBudget tiny;
  tiny.max_rho_iterations = 2000;
  Factorization f = factorize(p * q, tiny);
  CHECK_FALSE(f.complete());
  OmegaCount w = omega(f);
  CHECK_FALSE(w.exact);
  CHECK(w.value >= 2);
  CHECK_FALSE(d_k(p * q, 1, tiny).has_value());
}

TEST_CASE("d_k on small values") {
  CHECK(*d_k(BigInt(15), 1) == 3);
  CHECK(*d_k(BigInt(36), 1) == 6);
  CHECK(*d_k(BigInt(8837), 1) == 1);
  CHECK(*d_k(BigInt(8837), 5) == 1);
  CHECK(*d_k(BigInt(64), 2) == 4);
  CHECK(*d_k(BigInt(-36), 1) == 6);
  for (unsigned long n = 1; n <= 3000; ++n) {
    auto divs = testsupport::divisors_by_trial(n);
    BigInt prev = n;
    for (unsigned k = 1; k <= 6; ++k) {
      std::uint64_t best = 1;
      for (auto d : divs) {
        BigInt pw = power(BigInt(static_cast<unsigned long>(d)), k + 1);
        if (pw <= n) best = d;
      }
      BigInt got = *d_k(BigInt(n), k);
      CHECK(got == static_cast<unsigned long>(best));
      CHECK(got <= prev);
      prev = got;
    }
  }
}

TEST_CASE("d_1 equals q when |n| = p q with p > q prime") {
  testsupport::Rng rng;
  for (int t = 0; t < 300; ++t) {
    BigInt q = rng.uniform(1, 500);
    BigInt p;
    mpz_nextprime(p.get_mpz_t(), BigInt(q + rng.uniform(0, 100000)).get_mpz_t());
    CHECK(*d_k(p * q, 1) == q);
  }
}

TEST_CASE("directed k-th roots") {
  DirectedBound r = kth_root_bounds(BigRat(4), 2);
  CHECK(r.lo == 2);
  CHECK(r.hi == 2);
  DirectedBound s = kth_root_bounds(BigRat(2), 2);
  CHECK(s.lo * s.lo < 2);
  CHECK(s.hi * s.hi > 2);
  CHECK(s.hi - s.lo < BigRat(1, BigInt(1) << 60));
  CHECK(kth_root_bounds(BigRat(8, 27), 3).is_exact());
  CHECK_THROWS_AS(kth_root_bounds(BigRat(-1), 2), Error);

  testsupport::Rng rng;
  for (int t = 0; t < 400; ++t) {
    BigRat x(BigInt(rng.uniform(0, 1'000'000)), BigInt(rng.uniform(1, 100'000)));
    x.canonicalize();
    unsigned long k = static_cast<unsigned long>(rng.uniform(1, 9));
    DirectedBound b = kth_root_bounds(x, k);
    CHECK(power(b.lo, static_cast<long>(k)) <= x);
    CHECK(power(b.hi, static_cast<long>(k)) >= x);
    CHECK(b.hi - b.lo <= BigRat(1, BigInt(1) << 64) * (b.hi > 1 ? b.hi : BigRat(1)));
  }
}

TEST_CASE("interval helpers keep direction") {
  DirectedBound a{BigRat(1), BigRat(2)}, b{BigRat(3), BigRat(5)};
  DirectedBound s = a + b;
  CHECK(s.lo == 4);
  CHECK(s.hi == 7);
  DirectedBound p = a * b;
  CHECK(p.lo == 3);
  CHECK(p.hi == 10);
  DirectedBound d = BigRat(10) - b;
  CHECK(d.lo == 5);
  CHECK(d.hi == 7);
  DirectedBound inv = reciprocal_positive(b);
  CHECK(inv.lo == BigRat(1, 5));
  CHECK(inv.hi == BigRat(1, 3));
  CHECK(pow_nonneg(b, 2).hi == 25);
}

TEST_CASE("numeric helpers") {
  CHECK(floor_of(BigRat(-7, 2)) == -4);
  CHECK(ceil_of(BigRat(-7, 2)) == -3);
  CHECK(parse_rational("-3/6") == BigRat(-1, 2));
  CHECK(to_string(make_rat(6, 4)) == "3/2");
  CHECK(binomial(6, 2) == 15);
  CHECK(power(BigRat(2), -3) == BigRat(1, 8));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_integer("12a"), Error);
  BigRat x(BigInt(1), BigInt(3));
  CHECK(round_up_dyadic(x) >= x);
  CHECK(round_down_dyadic(x) <= x);
}
