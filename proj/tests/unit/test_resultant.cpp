#include "doctest.h"
#include "frozen_instances.hpp"
#include "resprime/resultant.hpp"
#include "test_support.hpp"

using namespace resprime;
using testsupport::ip;

namespace {

IntPoly from(const frozen::Coeffs& c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("resultant of the worked examples") {
  CHECK(abs(resultant(from(frozen::ex1_f), from(frozen::ex1_g))) == BigInt(frozen::ex1_res));
  CHECK(abs(resultant(from(frozen::trap_f), from(frozen::trap_g))) == 3);
  CHECK(resultant(ip({1, 0, 1}), ip({-2, 1})) == 5);
}

TEST_CASE("quadratic closed forms") {
  IntPoly f1 = from(frozen::ex4_quintics[0]);
  CHECK(abs(resultant_quadratic_shift(f1, 1, 0, 1)) == 8837);
  CHECK(abs(resultant_quadratic_binet(f1, 1, 0, 1)) == 8837);
  IntPoly f5 = from(frozen::ex5_f);
  CHECK(abs(resultant_quadratic_shift(f5, 1, 0, -2)) == 140617);
  IntPoly f6 = from(frozen::ex6_f);
  CHECK(abs(resultant_quadratic_binet(f6, 1, 0, -13)) == 3620839);
  CHECK(resultant_quadratic_shift(ip({1, 1}), 1, 2, 1) == 0);
  CHECK(resultant_quadratic_binet(ip({1, 1}), 1, 2, 1) == 0);
  CHECK(abs(resultant_quadratic_binet(ip({0, 1}), 1, -1, -1)) == 1);
  CHECK(resultant_quadratic_binet(ip({-7}), 1, 3, 5) == 49);

  LucasSequence lucas(1, -1, -1);
  CHECK(lucas.at(0) == 2);
  CHECK(lucas.at(1) == 1);
  CHECK(lucas.at(2) == 3);
  CHECK(lucas.at(10) == 123);
}

TEST_CASE("four routes and an elimination determinant agree") {
  testsupport::Rng rng;
  for (int t = 0; t < 300; ++t) {
    IntPoly f = rng.poly(static_cast<int>(rng.uniform(0, 8)), 20);
    BigInt a = rng.nonzero(9), b = rng.uniform(-9, 9), c = rng.uniform(-9, 9);
    if (t % 10 == 0) c = 0;
    if (t % 10 == 1) {  // b^2 = 4ac
      BigInt s = rng.nonzero(5);
      a = s * s;
      b = 2 * s * rng.nonzero(4);
      c = (b * b) / (4 * a);
      if (b * b != 4 * a * c) continue;
    }
    IntPoly g{c, b, a};
    BigInt r = resultant(f, g);
    CHECK(resultant_sylvester(f, g) == r);
    CHECK(testsupport::sylvester_by_elimination(f, g) == r);
    CHECK(abs(resultant_quadratic_shift(f, a, b, c)) == abs(r));
    CHECK(abs(resultant_quadratic_binet(f, a, b, c)) == abs(r));
  }
}

TEST_CASE("resultant identities") {
  testsupport::Rng rng;
  for (int t = 0; t < 200; ++t) {
    IntPoly f = rng.poly(static_cast<int>(rng.uniform(1, 5)), 9);
    IntPoly h = rng.poly(static_cast<int>(rng.uniform(1, 4)), 9);
    IntPoly g = rng.poly(static_cast<int>(rng.uniform(1, 5)), 9);
    int n = f.degree(), m = g.degree();
    BigInt sign = (n * m) % 2 ? -1 : 1;
    CHECK(resultant(f, g) == sign * resultant(g, f));
    CHECK(resultant(f * h, g) == resultant(f, g) * resultant(h, g));
    long mm = rng.uniform(-6, 6);
    // Res(X - m, f) = f(m); the swap costs (-1)^n.
    CHECK(resultant(IntPoly{BigInt(-mm), BigInt(1)}, f) == f.eval(BigInt(mm)));
    CHECK(resultant(f, IntPoly{BigInt(-mm), BigInt(1)}) == BigInt(n % 2 ? -1 : 1) * f.eval(BigInt(mm)));
  }
}

TEST_CASE("resultant with respect to Y") {
  BivarPoly a = parse_bivar("[[-x], [1]]"), b = parse_bivar("[[x], [1]]");
  CHECK(resultant_y(a, b) == parse_rat_poly("2x"));
  BivarPoly c = parse_bivar("[[-x], [0], [1]]");
  CHECK(resultant_y(c, c).is_zero());
  for (int n = 3; n <= 6; ++n) {
    RatPoly r = resultant_y(parse_bivar(frozen::ex8_f(n)), parse_bivar(frozen::ex8_g));
    RatPoly want = to_rat(IntPoly::monomial(BigInt(1), n) + ip({5, 5}));
    CHECK((r == want || r == -want));
  }
  // Reversing Y in both inputs changes Res_Y by a sign only.
  testsupport::Rng rng;
  for (int t = 0; t < 50; ++t) {
    BivarPoly f = rng.bivar(static_cast<int>(rng.uniform(1, 3)), 3, 4);
    BivarPoly g = rng.bivar(static_cast<int>(rng.uniform(1, 3)), 3, 4);
    if (f[0].is_zero() || g[0].is_zero()) continue;
    std::vector<RatPoly> fr(f.coeffs().rbegin(), f.coeffs().rend()), gr(g.coeffs().rbegin(), g.coeffs().rend());
    RatPoly r = resultant_y(f, g), rr = resultant_y(BivarPoly(fr), BivarPoly(gr));
    CHECK((r == rr || r == -rr));
  }
}

TEST_CASE("Hadamard bound dominates the resultant") {
  CHECK(hadamard_bound(ip({-1, 1}), ip({1, 1})) >= 2);
  CHECK(hadamard_bound(ip({0, 1}), ip({0, 1})) == 1);
  testsupport::Rng rng;
  for (int t = 0; t < 200; ++t) {
    IntPoly f = rng.poly(static_cast<int>(rng.uniform(1, 5)), 9);
    IntPoly g = rng.poly(static_cast<int>(rng.uniform(1, 5)), 9);
    CHECK(hadamard_bound(f, g) >= BigRat(abs(resultant(f, g))));
  }
}
