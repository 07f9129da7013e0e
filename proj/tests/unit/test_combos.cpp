#include <algorithm>

#include "doctest.h"
#include "frozen_instances.hpp"
#include "resprime/combos.hpp"
#include "resprime/oracle.hpp"
#include "resprime/resultant.hpp"
#include "test_support.hpp"

using namespace resprime;
using testsupport::ip;

namespace {

IntPoly from(const frozen::Coeffs& c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

frozen::Pairs pairs_of(const Certificate& c) {
  frozen::Pairs out;
  for (const auto& p : c.pairs) out.emplace_back(p.M.get_si(), p.N.get_si());
  return out;
}

}  // namespace

TEST_CASE("frozen combination ranges") {
  for (const auto& inst : frozen::combos) {
    CAPTURE(inst.name);
    CheckEnv env;
    IntPoly f = from(inst.f), g = from(inst.g);
    CHECK(abs(resultant(f, g)) == inst.res);
    ComboRange r = combos_for(f, g, parse_rational(inst.A), parse_rational(inst.B), 1, parse_combo_route(inst.route), env);
    REQUIRE(r.cert.verdict.success());
    CHECK(r.cert.verdict.kind == VerdictKind::IrreducibleCombinations);
    CHECK(r.cert.verdict.bound == inst.pairs.size());
    CHECK(pairs_of(r.cert) == inst.pairs);
    for (const auto& p : r.cert.pairs) {
      CHECK(is_irreducible_over_q(f.scaled(p.M) + g.scaled(p.N)));
      for (const auto& w : p.witnesses) CHECK(w.holds());
    }
  }
}

TEST_CASE("equality on the boundary forces the strict side") {
  const auto& inst = frozen::combos[3];
  CheckEnv env;
  ComboRange r = combos_for(from(inst.f), from(inst.g), BigRat(1), BigRat(2), 1, ComboRoute::NFirst, env);
  auto got = pairs_of(r.cert);
  for (const auto& d : frozen::boundary_dropped) CHECK(std::find(got.begin(), got.end(), d) == got.end());
  ComboRange m = combos_for(from(inst.f), from(inst.g), BigRat(1), BigRat(2), 1, ComboRoute::MFirst, env);
  CHECK_FALSE(m.cert.verdict.success());
}

TEST_CASE("route preconditions") {
  CheckEnv env;
  IntPoly f = ip({-1, 1}), g = ip({17, 1, 1});
  CHECK_THROWS_AS(combos_equal_degree(f, g, BigRat(1), BigRat(3), 1, ComboRoute::NFirst, env), Error);
  CHECK_THROWS_AS(combos_higher_degree(f, g, BigRat(1), BigRat(3), 1, ComboRoute::NFirst, env), Error);
  CHECK_THROWS_AS(combos_higher_degree(ip({1, 0, 0, 6}), ip({-3, 1}), BigRat(1), BigRat(3), 1, ComboRoute::Marden, env),
                  Error);
  // A reducible combination cannot appear: the counterexample pair fails the
  // hypotheses.
  ComboRange r = combos_auto(ip({15, -8, 1}), ip({24, -10, 1}), env);
  CHECK_FALSE(r.cert.verdict.success());
}

TEST_CASE("listed pairs are symmetric under negation") {
  testsupport::Rng rng;
  int nonempty = 0;
  for (int t = 0; t < 150; ++t) {
    CheckEnv env;
    IntPoly f = rng.poly(static_cast<int>(rng.uniform(1, 3)), 9, true);
    IntPoly g = rng.poly(static_cast<int>(rng.uniform(1, 3)), 9, true);
    std::vector<BigInt> gc = g.coeffs();
    gc[0] = BigInt(rng.uniform(40, 200)) * (rng.coin() ? 1 : -1);
    g = IntPoly(gc);
    ComboRange r;
    try {
      r = combos_auto(f, g, env);
    } catch (const Error&) {
      continue;
    }
    if (!r.cert.verdict.success()) continue;
    ++nonempty;
    auto got = pairs_of(r.cert);
    for (auto [M, N] : got) CHECK(std::find(got.begin(), got.end(), std::make_pair(-M, -N)) != got.end());
  }
  CHECK(nonempty > 0);
}

TEST_CASE("resultant scaling identities behind the ranges") {
  testsupport::Rng rng;
  for (int t = 0; t < 200; ++t) {
    IntPoly f = rng.poly(static_cast<int>(rng.uniform(1, 3)), 9);
    IntPoly g = rng.poly(static_cast<int>(rng.uniform(f.degree() + 1, 5)), 9);
    BigInt M = rng.uniform(-5, 5), N = rng.nonzero(5);
    IntPoly h = f.scaled(M) + g.scaled(N);
    unsigned long n = static_cast<unsigned long>(f.degree());
    // deg f < deg g: Res(f, M f + N g) = N^deg f Res(f, g).
    CHECK(resultant(f, h) == power(N, n) * resultant(f, g));
  }
}
