#include "doctest.h"
#include "resprime/oracle.hpp"
#include "test_support.hpp"

using namespace resprime;
using testsupport::ip;

namespace {

IntPoly multiply_back(const QFactorization& q) {
  IntPoly p = ip({1});
  for (const auto& f : q.factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) p = p * f.factor;
  return p;
}

}  // namespace

TEST_CASE("factoring small polynomials") {
  QFactorization q = factor_over_q(ip({15, -8, 1}));
  CHECK(q.count() == 2);
  CHECK(q.factors[0].factor == ip({-5, 1}));
  CHECK(q.factors[1].factor == ip({-3, 1}));
  CHECK(factor_over_q(ip({24, -10, 1})).count() == 2);
  CHECK(is_irreducible_over_q(ip({-1, 1, -2, 3, 9})));
  CHECK(is_irreducible_over_q(ip({35, 3, -1, -1, 1})));
  CHECK_FALSE(is_irreducible_over_q(ip({4})));
  CHECK(factor_over_q(ip({6})).count() == 0);
  // X^4 + 1 is irreducible over Q but splits modulo every prime.
  CHECK(is_irreducible_over_q(ip({1, 0, 0, 0, 1})));
  // Swinnerton-Dyer polynomial for sqrt 2, sqrt 3.
  CHECK(is_irreducible_over_q(ip({1, 0, -10, 0, 1})));
  CHECK(factor_over_q(ip({-1, 0, 0, 0, 0, 0, 1})).count() == 4);
  QFactorization sq = factor_over_q(ip({1, 1}) * ip({1, 1}) * ip({2, 0, 1}).scaled(BigInt(3)));
  CHECK(sq.count() == 3);
  CHECK(sq.unit == 3);
}

TEST_CASE("factorizations multiply back to the input") {
  testsupport::Rng rng;
  for (int t = 0; t < 300; ++t) {
    IntPoly f = rng.poly(static_cast<int>(rng.uniform(1, 4)), 9);
    if (t % 3 == 0) f = f * rng.poly(static_cast<int>(rng.uniform(1, 3)), 5);
    QFactorization q = factor_over_q(f);
    CHECK(to_rat(multiply_back(q)).scaled(q.unit) == to_rat(f));
    for (const auto& fac : q.factors) {
      CHECK(fac.factor.leading() > 0);
      CHECK(content(fac.factor) == 1);
      CHECK(fac.factor.degree() >= 1);
    }
  }
}

TEST_CASE("Eisenstein polynomials are irreducible") {
  testsupport::Rng rng;
  const long primes[] = {2, 3, 5, 7};
  for (int t = 0; t < 200; ++t) {
    long p = primes[rng.uniform(0, 3)];
    int n = static_cast<int>(rng.uniform(2, 8));
    std::vector<BigInt> c(n + 1);
    for (int i = 0; i < n; ++i) c[i] = p * rng.uniform(-3, 3);
    long a0 = rng.uniform(1, 4);
    while (a0 % p == 0) ++a0;
    c[0] = p * a0 * (rng.coin() ? 1 : -1);
    long lead = rng.uniform(1, 6);
    while (lead % p == 0) ++lead;
    c[n] = lead;
    CHECK(is_irreducible_over_q(IntPoly(c)));
  }
}

TEST_CASE("agreement with brute-force factor search at degree 4") {
  // A reducible quartic has a rational root or a quadratic factor whose
  // coefficients divide the outer ones; search that space directly.
  testsupport::Rng rng;
  for (int t = 0; t < 150; ++t) {
    IntPoly f = rng.poly(static_cast<int>(rng.uniform(2, 4)), 6, true);
    f = primitive_part(f);
    bool reducible = false;
    int n = f.degree();
    BigInt a0 = abs(f[0]), an = abs(f.leading());
    auto divs = [](const BigInt& v) {
      std::vector<long> d;
      for (long x = 1; x <= v.get_si(); ++x)
        if (v % x == 0) d.push_back(x);
      return d;
    };
    for (long p : divs(a0))
      for (long q : divs(an))
        for (int s : {1, -1})
          if (eval_at(f, BigRat(BigInt(s * p), BigInt(q))) == 0) reducible = true;
    if (!reducible && n == 4) {
      for (long c0 : divs(a0))
        for (int s0 : {1, -1})
          for (long c2 : divs(an))
            for (long c1 = -40; c1 <= 40 && !reducible; ++c1) {
              IntPoly d{BigInt(s0 * c0), BigInt(c1), BigInt(c2)};
              if (divides(d, f)) reducible = true;
            }
    }
    CHECK(is_irreducible_over_q(f) == !reducible);
  }
}

TEST_CASE("oracle budget is enforced") {
  OracleBudget small;
  small.max_degree = 3;
  CHECK_THROWS_AS(factor_over_q(ip({1, 0, 0, 0, 1}), small), Error);
}

TEST_CASE("bivariate factoring") {
  BivarFactorization f = factor_bivar(parse_bivar("[[-x^2], [0], [1]]"));
  CHECK(f.count() == 2);
  CHECK(is_irreducible_bivar(parse_bivar("[[-x^3], [0], [1]]")));
  CHECK(factor_bivar(parse_bivar("[[x^8], [3x^4], [2]]")).count() == 2);
  CHECK(is_irreducible_bivar(parse_bivar("[[1], [x^9]]")));
  // The X-content counts: x (Y + 1) has two factors.
  CHECK(factor_bivar(parse_bivar("[[x], [x]]")).count() == 2);

  testsupport::Rng rng;
  for (int t = 0; t < 60; ++t) {
    BivarPoly a = rng.bivar(static_cast<int>(rng.uniform(1, 2)), 2, 3);
    BivarPoly b = rng.bivar(static_cast<int>(rng.uniform(1, 2)), 2, 3);
    BivarFactorization fa = factor_bivar(a), fb = factor_bivar(b), fab = factor_bivar(a * b);
    CHECK(fab.count() == fa.count() + fb.count());
    BivarPoly back = to_bivar(RatPoly{fab.unit});
    for (const auto& fac : fab.factors)
      for (unsigned i = 0; i < fac.multiplicity; ++i) back = back * fac.factor;
    CHECK(back == a * b);
  }
}
