// Acceptance checks. Run with criterion numbers as arguments (default: all);
// prints one PASS/FAIL line per criterion and exits nonzero on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frozen_instances.hpp"
#include "resprime/arith.hpp"
#include "resprime/combos.hpp"
#include "resprime/criteria.hpp"
#include "resprime/criteria_bivar.hpp"
#include "resprime/oracle.hpp"
#include "resprime/replay.hpp"
#include "resprime/resultant.hpp"
#include "test_support.hpp"

using namespace resprime;
using testsupport::ip;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (failures.size() < 12) failures.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

IntPoly from(const frozen::Coeffs& c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPoly(std::move(v));
}

const Certificate* success_of(const std::vector<Certificate>& certs, const std::string& id) {
  for (const auto& c : certs)
    if (c.criterion == id && c.verdict.success()) return &c;
  return nullptr;
}

int count_successes(const std::vector<Certificate>& certs) {
  return static_cast<int>(std::count_if(certs.begin(), certs.end(), [](const Certificate& c) { return c.verdict.success(); }));
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

// Every success certificate emitted anywhere below is collected here so the
// replay criterion covers exactly what the other runs produced.
std::vector<Certificate>& emitted() {
  static std::vector<Certificate> all;
  return all;
}
void keep(const std::vector<Certificate>& certs) {
  for (const auto& c : certs)
    if (c.verdict.success()) emitted().push_back(c);
}

// Empty when the verdict agrees with the reference factorization.
std::string disagreement(const Certificate& c) {
  const Verdict& v = c.verdict;
  if (!v.success()) return {};
  auto allowed = [&](unsigned long count) {
    if (v.kind == VerdictKind::FactorBound) return count >= 1 && count <= v.bound;
    return count == 1;
  };
  std::ostringstream why;
  if (c.subject == "combinations") {
    IntPoly f = parse_int_poly(c.input("f")), g = parse_int_poly(c.input("g"));
    for (const auto& p : c.pairs) {
      IntPoly h = f.scaled(p.M) + g.scaled(p.N);
      if (factor_over_q(h).count() != 1) why << "M=" << p.M << ", N=" << p.N << " gives a reducible combination; ";
    }
    return why.str();
  }
  bool bivar = c.criterion.rfind("bivar_", 0) == 0;
  if (c.subject == "combination") {
    BivarPoly h = combine(parse_bivar(c.input("f")), parse_bivar(c.input("g")), parse_rational(c.input("alpha")),
                          parse_rational(c.input("beta")));
    unsigned long n = factor_bivar(h).count();
    if (!allowed(n)) why << "combination has " << n << " factors";
    return why.str();
  }
  std::vector<std::string> subjects{"f"};
  if (c.subject == "f,g") subjects.push_back("g");
  for (const auto& key : subjects) {
    unsigned long n =
        bivar ? factor_bivar(parse_bivar(c.input(key))).count() : factor_over_q(parse_int_poly(c.input(key))).count();
    if (!allowed(n)) why << key << " = " << c.input(key) << " has " << n << " factors; ";
  }
  return why.str();
}

// ---------------------------------------------------------------- 1
Outcome examples() {
  Outcome o;
  auto t0 = Clock::now();
  CheckEnv env;

  IntPoly f1 = from(frozen::ex1_f), g1 = from(frozen::ex1_g);
  BigInt r1 = abs(resultant(f1, g1));
  o.expect(r1 == BigInt(frozen::ex1_res), "ex1 resultant " + to_string(r1));
  o.expect(is_prime(r1), "ex1 resultant prime");
  auto c1 = certify_auto(f1, g1, env);
  keep(c1);
  o.expect(success_of(c1, "disk_annulus") != nullptr, "ex1 disk/annulus certificate");

  IntPoly f2 = from(frozen::ex2_f);
  BigInt v2 = abs(eval_homogeneous(f2, frozen::ex2_c, frozen::ex2_b));
  o.expect(v2 == BigInt(frozen::ex2_value) && is_prime(v2), "ex2 value " + to_string(v2));
  auto c2 = certify_auto(f2, IntPoly{BigInt(-frozen::ex2_c), BigInt(frozen::ex2_b)}, env);
  keep(c2);
  const Certificate* lv = success_of(c2, "linear_value");
  o.expect(lv && lv->find_value("value") == std::string(frozen::ex2_value), "ex2 linear value certificate");

  IntPoly f3 = from(frozen::ex3_f);
  BigInt v3 = abs(eval_homogeneous(f3, frozen::ex3_c, frozen::ex3_b));
  o.expect(v3 == BigInt(frozen::ex3_value) && is_prime(v3), "ex3 value " + to_string(v3));
  auto c3 = certify_auto(f3, IntPoly{BigInt(-frozen::ex3_c), BigInt(frozen::ex3_b)}, env);
  keep(c3);
  o.expect(success_of(c3, "linear_value_littlewood") != nullptr, "ex3 Littlewood certificate");

  int idx = 0;
  for (const auto& q : frozen::ex4_quintics) {
    ++idx;
    IntPoly f = from(q), g = ip({1, 0, 1});
    BigInt a = abs(resultant(f, g)), b = abs(resultant_quadratic_shift(f, 1, 0, 1)),
           c = abs(resultant_quadratic_binet(f, 1, 0, 1)), d = quadratic_form_value(f, QuadraticForm::Gaussian, 0);
    o.expect(a == BigInt(frozen::ex4_value) && b == a && c == a && d == a && is_prime(a),
             "ex4 quintic " + std::to_string(idx) + " value");
    auto cs = certify_auto(f, g, env);
    keep(cs);
    o.expect(success_of(cs, "gaussian_form") != nullptr, "ex4 quintic " + std::to_string(idx) + " certificate");
  }

  IntPoly f5 = from(frozen::ex5_f);
  BigInt v5 = abs(quadratic_form_value(f5, QuadraticForm::RealQuadratic, frozen::ex5_m));
  o.expect(v5 == BigInt(frozen::ex5_value) && is_prime(v5), "ex5 value " + to_string(v5));
  auto c5 = certify_auto(f5, ip({-frozen::ex5_m, 0, 1}), env);
  keep(c5);
  o.expect(success_of(c5, "real_quadratic_form") != nullptr, "ex5 certificate");

  IntPoly f6 = from(frozen::ex6_f);
  BigInt v6 = abs(resultant_quadratic_binet(f6, 1, 0, -frozen::ex6_m));
  o.expect(v6 == BigInt(frozen::ex6_value) && is_prime(v6), "ex6 value " + to_string(v6));
  auto c6 = certify_auto(f6, ip({-frozen::ex6_m, 0, 1}), env);
  keep(c6);
  o.expect(success_of(c6, "real_quadratic_form") != nullptr, "ex6 certificate");

  IntPoly f7 = ip({frozen::ex7_a, 1, 1, 1, 1});
  BigInt v7 = abs(quadratic_form_value(f7, QuadraticForm::Eisenstein, 0));
  o.expect(v7 == BigInt(frozen::ex7_value) && is_prime(v7), "ex7 value " + to_string(v7));
  auto c7 = certify_auto(f7, ip({1, 1, 1}), env);
  keep(c7);
  o.expect(success_of(c7, "eisenstein_form") != nullptr, "ex7 certificate");

  for (int n = 3; n <= 6; ++n) {
    BivarPoly f = parse_bivar(frozen::ex8_f(n)), g = parse_bivar(frozen::ex8_g);
    auto cs = certify_bivar_auto(f, g, env);
    keep(cs);
    o.expect(success_of(cs, "bivar_degree_dominance") != nullptr, "ex8 n=" + std::to_string(n) + " certificate");
  }

  double t = since(t0);
  o.expect(t < 2.0, "runtime " + fmt_seconds(t) + " exceeds 2 s");
  o.note(fmt_seconds(t));
  return o;
}

// ---------------------------------------------------------------- 2
Outcome counterexample() {
  Outcome o;
  auto t0 = Clock::now();
  IntPoly f = from(frozen::trap_f), g = from(frozen::trap_g);
  for (bool recip : {false, true}) {
    IntPoly a = recip ? reciprocal(f) : f, b = recip ? reciprocal(g) : g;
    std::string tag = recip ? "reciprocal pair" : "pair";
    CheckEnv env;
    BigInt r = abs(resultant(a, b));
    o.expect(r == 3 && is_prime(r), tag + ": |Res| = " + to_string(r));
    auto certs = certify_auto(a, b, env);
    o.expect(count_successes(certs) == 0, tag + ": emitted a certificate");
    o.expect(factor_over_q(a).count() == 2 && factor_over_q(b).count() == 2, tag + ": oracle did not split both");
  }
  double t = since(t0);
  o.expect(t < 0.1, "runtime " + fmt_seconds(t) + " exceeds 0.1 s");
  o.note(fmt_seconds(t));
  return o;
}

// ---------------------------------------------------------------- 3
Outcome soundness_fuzz() {
  Outcome o;
  auto t0 = Clock::now();
  testsupport::Rng rng(testsupport::seed() + 3);
  long certified = 0, families_run = 0, errors = 0;
  std::map<std::string, long> by_criterion;
  for (int t = 0; t < 10000; ++t) {
    int n = static_cast<int>(rng.uniform(0, 99) < 3 ? 0 : rng.uniform(1, 4));
    int m = static_cast<int>(rng.uniform(0, 99) < 3 ? 0 : rng.uniform(1, 4));
    IntPoly f = rng.poly(n, 9), g = rng.poly(m, 9);
    CheckEnv env;
    std::vector<Certificate> certs;
    try {
      certs = certify_auto(f, g, env);
    } catch (const Error& e) {
      ++errors;
      o.expect(e.code() != ErrorCode::CrossCheckFailed, std::string("cross-check failure: ") + e.what());
      continue;
    }
    families_run += static_cast<long>(certs.size());
    if (t < 400) keep(certs);
    for (const auto& c : certs) {
      if (!c.verdict.success()) continue;
      ++certified;
      ++by_criterion[c.criterion];
      std::string bad = disagreement(c);
      o.expect(bad.empty(), c.criterion + " on f=" + to_bracket(f) + " g=" + to_bracket(g) + ": " + bad);
    }
  }
  o.note("univariate: 10000 pairs, " + std::to_string(certified) + " certificates checked, " +
         std::to_string(errors) + " inputs rejected");

  long bcertified = 0, berrors = 0;
  for (int t = 0; t < 1000; ++t) {
    BivarPoly f, g;
    int n = static_cast<int>(rng.uniform(1, 3)), m = static_cast<int>(rng.uniform(1, 3));
    if (t % 2 == 0) {
      f = rng.bivar(n, 4, 3);
      g = rng.bivar(m, 4, 3);
    } else {
      // Degree-dominant shapes so the geometric families have a chance.
      std::vector<RatPoly> a(n + 1), b(m + 1);
      for (auto& x : a) x = rng.rat_poly(static_cast<int>(rng.uniform(0, 2)), 3);
      for (auto& x : b) x = rng.rat_poly(static_cast<int>(rng.uniform(0, 2)), 3);
      int big = static_cast<int>(rng.uniform(3, 4));
      a[0] = a[0] + RatPoly::monomial(BigRat(rng.nonzero(3)), big);
      if (rng.coin()) b[m] = b[m] + RatPoly::monomial(BigRat(rng.nonzero(3)), static_cast<int>(rng.uniform(2, 4)));
      else b[0] = b[0] + RatPoly::monomial(BigRat(rng.nonzero(3)), big);
      if (a[n].is_zero()) a[n] = RatPoly{BigRat(1)};
      if (b[m].is_zero()) b[m] = RatPoly{BigRat(1)};
      f = BivarPoly(a);
      g = BivarPoly(b);
    }
    CheckEnv env;
    std::vector<Certificate> certs;
    try {
      certs = certify_bivar_auto(f, g, env);
    } catch (const Error& e) {
      ++berrors;
      o.expect(e.code() != ErrorCode::CrossCheckFailed, std::string("cross-check failure: ") + e.what());
      continue;
    }
    if (t < 200) keep(certs);
    for (const auto& c : certs) {
      if (!c.verdict.success()) continue;
      ++bcertified;
      ++by_criterion[c.criterion];
      std::string bad = disagreement(c);
      o.expect(bad.empty(), c.criterion + " on f=" + to_string(f) + " g=" + to_string(g) + ": " + bad);
    }
  }
  o.note("bivariate: 1000 pairs, " + std::to_string(bcertified) + " certificates checked, " +
         std::to_string(berrors) + " inputs rejected");
  std::string mix;
  for (const auto& [k, v] : by_criterion) mix += (mix.empty() ? "" : ", ") + k + " " + std::to_string(v);
  o.note("by criterion: " + mix);
  o.expect(certified > 0 && bcertified > 0, "fuzz produced no certificates to check");
  o.note(fmt_seconds(since(t0)));
  return o;
}

// ---------------------------------------------------------------- 4
Outcome resultant_agreement() {
  Outcome o;
  auto t0 = Clock::now();
  testsupport::Rng rng(testsupport::seed() + 4);
  int zero_disc = 0, zero_res = 0;
  for (int t = 0; t < 1000; ++t) {
    IntPoly f = rng.poly(static_cast<int>(rng.uniform(0, 8)), 20);
    BigInt a = rng.nonzero(9), b = rng.uniform(-9, 9), c = rng.uniform(-9, 9);
    if (t % 8 == 1) {  // b^2 = 4ac: a (sX + u)^2 shape
      BigInt s = rng.nonzero(3), u = rng.uniform(-4, 4), k = rng.nonzero(3);
      a = k * s * s;
      b = 2 * k * s * u;
      c = k * u * u;
    }
    if (t % 8 == 2) {  // common root: f gets a linear factor of g
      BigInt p = rng.nonzero(3), q = rng.uniform(-4, 4), r = rng.nonzero(3), s = rng.uniform(-4, 4);
      a = p * r;
      b = p * s + q * r;
      c = q * s;
      f = f * IntPoly{q, p};
    }
    if (b * b == 4 * a * c) ++zero_disc;
    IntPoly g{c, b, a};
    BigInt prs = resultant(f, g), syl = resultant_sylvester(f, g), elim = testsupport::sylvester_by_elimination(f, g);
    BigInt shift = resultant_quadratic_shift(f, a, b, c), binet = resultant_quadratic_binet(f, a, b, c);
    if (prs == 0) ++zero_res;
    bool agree = prs == syl && syl == elim && abs(shift) == abs(prs) && abs(binet) == abs(prs);
    o.expect(agree, "f=" + to_bracket(f) + " g=" + to_bracket(g) + ": " + to_string(prs) + " " + to_string(syl) +
                        " " + to_string(elim) + " " + to_string(shift) + " " + to_string(binet));
  }
  o.note("1000 instances, " + std::to_string(zero_disc) + " with b^2 = 4ac, " + std::to_string(zero_res) +
         " with Res = 0");
  o.expect(zero_disc > 0 && zero_res > 0, "degenerate branches not exercised");
  o.note(fmt_seconds(since(t0)));
  return o;
}

// ---------------------------------------------------------------- 5
// f with all roots small (dominant leading coefficient), g with all roots
// large (dominant constant term), so separation and large values happen.
IntPoly small_roots(testsupport::Rng& rng, int n) {
  std::vector<BigInt> c(n + 1);
  BigInt sum = 0;
  for (int i = 0; i < n; ++i) {
    c[i] = rng.uniform(-6, 6);
    sum += abs(c[i]);
  }
  if (c[0] == 0) c[0] = rng.nonzero(6);
  c[n] = (sum + abs(c[0]) + rng.uniform(1, 30)) * (rng.coin() ? 1 : -1);
  return IntPoly(c);
}
IntPoly large_roots(testsupport::Rng& rng, int m) {
  std::vector<BigInt> c(m + 1);
  for (int i = 1; i <= m; ++i) c[i] = rng.uniform(-6, 6);
  if (c[m] == 0) c[m] = rng.nonzero(6);
  c[0] = BigInt(rng.uniform(40, 4000)) * (rng.coin() ? 1 : -1);
  return IntPoly(c);
}

Outcome equivalences() {
  Outcome o;
  auto t0 = Clock::now();
  testsupport::Rng rng(testsupport::seed() + 5);
  int sep_pass = 0, val1_pass = 0, val2_pass = 0, val2_cases = 0;
  for (int t = 0; t < 200; ++t) {
    bool high = t % 4 == 3;  // deg f >= 6 for the squared variant
    int n = high ? static_cast<int>(rng.uniform(6, 7)) : static_cast<int>(rng.uniform(1, 4));
    int m = static_cast<int>(rng.uniform(1, 4));
    if (std::max(n, m) < 3) n = 3;
    IntPoly f = small_roots(rng, n), g = large_roots(rng, m);
    CheckEnv env;
    BigInt res = abs(resultant(f, g));
    if (res == 0) continue;
    const Factorization& fac = env.factor(res);
    if (!fac.complete()) {
      o.note("skipped an incomplete factorization");
      continue;
    }
    BigInt d1 = *d_k(fac, 1);
    std::string tag = "f=" + to_bracket(f) + " g=" + to_bracket(g);
    // Every q with |Res|/q prime.
    std::vector<BigInt> qs;
    for (const auto& pp : fac.primes) qs.push_back(res / pp.prime);

    auto compare = [&](const std::string& what, const std::function<Certificate(const BigInt&)>& with_q,
                       const std::function<Certificate()>& with_d1, int& passes) {
      std::vector<BigInt> passing;
      for (const auto& q : qs)
        if (with_q(q).verdict.success()) passing.push_back(q);
      bool d1_ok = with_d1().verdict.success();
      o.expect(passing.empty() != d1_ok, what + " disagrees on " + tag);
      for (const auto& q : passing) o.expect(q == d1, what + " passed with q = " + to_string(q) + " != d_1 on " + tag);
      if (d1_ok) ++passes;
    };
    compare(
        "separation", [&](const BigInt& q) { return check_separated_roots(f, g, RootMode::Direct, q, env); },
        [&] { return check_separated_roots_d1(f, g, RootMode::Direct, env); }, sep_pass);
    if (n >= 3)
      compare(
          "root values, r = 1",
          [&](const BigInt& q) { return check_root_value_prime(f, g, RootMode::Direct, 1, q, env); },
          [&] { return check_root_value_dk(f, g, RootMode::Direct, 1, 1, env); }, val1_pass);
    if (n >= 6) {
      ++val2_cases;
      compare(
          "root values, r = 2",
          [&](const BigInt& q) { return check_root_value_prime(f, g, RootMode::Direct, 2, q, env); },
          [&] { return check_root_value_dk(f, g, RootMode::Direct, 2, 1, env); }, val2_pass);
    }
  }
  o.note("200 instances; passing: separation " + std::to_string(sep_pass) + ", root values r=1 " +
         std::to_string(val1_pass) + ", r=2 " + std::to_string(val2_pass) + " of " + std::to_string(val2_cases));
  o.expect(sep_pass > 0 && val1_pass > 0 && val2_pass > 0, "an equivalence was never exercised on a passing case");
  o.note(fmt_seconds(since(t0)));
  return o;
}

// ---------------------------------------------------------------- 6
Outcome combinations() {
  Outcome o;
  auto t0 = Clock::now();
  long checked = 0;
  for (const auto& inst : frozen::combos) {
    CheckEnv env;
    IntPoly f = from(inst.f), g = from(inst.g);
    ComboRange r = combos_for(f, g, parse_rational(inst.A), parse_rational(inst.B), 1, parse_combo_route(inst.route), env);
    frozen::Pairs got;
    for (const auto& p : r.cert.pairs) got.emplace_back(p.M.get_si(), p.N.get_si());
    o.expect(got == inst.pairs, std::string(inst.name) + ": pair list differs from the frozen one");
    keep({r.cert});
    std::string bad = disagreement(r.cert);
    o.expect(bad.empty(), std::string(inst.name) + ": " + bad);
    checked += static_cast<long>(r.cert.pairs.size());
  }
  testsupport::Rng rng(testsupport::seed() + 6);
  int productive = 0;
  for (int t = 0; t < 1000; ++t) {
    int n = static_cast<int>(rng.uniform(1, 4)), m = static_cast<int>(rng.uniform(1, 4));
    IntPoly f = small_roots(rng, n), g = large_roots(rng, m);
    if (t % 3 == 0) g = rng.poly(m, 9, true);
    CheckEnv env;
    ComboRange r;
    try {
      r = combos_auto(f, g, env);
    } catch (const Error& e) {
      o.expect(e.code() != ErrorCode::CrossCheckFailed, std::string("cross-check failure: ") + e.what());
      continue;
    }
    if (!r.cert.verdict.success()) continue;
    ++productive;
    if (productive <= 20) keep({r.cert});
    checked += static_cast<long>(r.cert.pairs.size());
    std::string bad = disagreement(r.cert);
    o.expect(bad.empty(), "f=" + to_bracket(f) + " g=" + to_bracket(g) + ": " + bad);
  }
  o.note("frozen instances plus 1000 random trials (" + std::to_string(productive) + " with pairs); " +
         std::to_string(checked) + " combinations oracle-checked");
  o.expect(productive > 0, "no random trial produced pairs");
  o.note(fmt_seconds(since(t0)));
  return o;
}

// ---------------------------------------------------------------- 7
// Factor degrees of a - b for a, b in Z[X] of degree <= 2, found without the
// library: a quadratic splits iff its discriminant is a perfect square.
std::vector<int> difference_factor_degrees(const IntPoly& d) {
  if (d.degree() <= 1) return d.degree() == 1 ? std::vector<int>{1} : std::vector<int>{};
  BigInt disc = d[1] * d[1] - 4 * d[2] * d[0];
  if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) return {1, 1};
  return {2};
}

Outcome divisor_bounds() {
  Outcome o;
  auto t0 = Clock::now();
  long compared = 0;
  for (unsigned long n = 1; n <= 100000; ++n) {
    auto divs = testsupport::divisors_by_trial(n);
    Factorization fac = factorize(BigInt(n));
    for (unsigned k = 1; k <= 20; ++k) {
      std::uint64_t best = 1;
      for (auto d : divs) {
        // d^(k+1) <= n, stopping before overflow.
        unsigned __int128 p = 1;
        bool fits = true;
        for (unsigned e = 0; e <= k && fits; ++e) {
          p *= d;
          fits = p <= n;
        }
        if (fits) best = d;
        else break;
      }
      auto got = d_k(fac, k);
      ++compared;
      o.expect(got && *got == static_cast<unsigned long>(best),
               "d_" + std::to_string(k) + "(" + std::to_string(n) + ")");
    }
  }
  o.note(std::to_string(compared) + " d_k values match trial division");

  testsupport::Rng rng(testsupport::seed() + 7);
  int instances = 0;
  while (instances < 100) {
    // f and g split over Z[X] in Y, so Res_Y = +-prod (u_i - v_j).
    int a = static_cast<int>(rng.uniform(1, 3)), b = static_cast<int>(rng.uniform(1, 3));
    std::vector<IntPoly> us, vs;
    for (int i = 0; i < a; ++i) us.push_back(rng.poly(static_cast<int>(rng.uniform(0, 2)), 4));
    for (int j = 0; j < b; ++j) vs.push_back(rng.poly(static_cast<int>(rng.uniform(0, 2)), 4));
    BivarPoly f = to_bivar(RatPoly{BigRat(1)}), g = f;
    for (const auto& u : us) f = f * y_linear(-to_rat(u), RatPoly{BigRat(1)});
    for (const auto& v : vs) g = g * y_linear(-to_rat(v), RatPoly{BigRat(1)});
    std::vector<int> degs;
    bool zero = false;
    for (const auto& u : us)
      for (const auto& v : vs) {
        IntPoly d = u - v;
        if (d.is_zero()) zero = true;
        for (int x : difference_factor_degrees(d)) degs.push_back(x);
      }
    if (zero) continue;
    ++instances;
    RatPoly res = resultant_y(f, g);
    int total = res.degree();
    int sum = 0;
    for (int x : degs) sum += x;
    o.expect(sum == total, "constructed factor degrees do not add up");
    // All subset sums of the factor degrees.
    std::set<int> sums{0};
    for (int x : degs) {
      std::set<int> next = sums;
      for (int s : sums) next.insert(s + x);
      sums = next;
    }
    for (unsigned k = 1; k <= 5; ++k) {
      int want = 0;
      for (int s : sums)
        if (s * static_cast<int>(k + 1) <= total) want = std::max(want, s);
      auto got = delta_k(res, k);
      o.expect(got && *got == want, "delta_" + std::to_string(k) + " of " + to_human(res));
    }
  }
  o.note("delta_k matches subset search on 100 split resultants");
  o.note(fmt_seconds(since(t0)));
  return o;
}

// ---------------------------------------------------------------- 8
// Character positions of the numeric fields of a certificate text: values
// after " = " on bound, input, value, enclosure and pair lines, and the lhs
// and rhs of comparisons. Labels, names and the digest are left alone.
std::vector<std::size_t> numeric_positions(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    std::size_t eq = line.find(" = ");
    if (eq != std::string::npos) {
      std::string key = line.substr(0, eq);
      std::size_t start = eq + 3;
      std::vector<std::pair<std::size_t, std::size_t>> spans;  // [from, to) within line
      bool plain = key == "bound" || key.rfind("input.", 0) == 0 || key.rfind("value.", 0) == 0 ||
                   key.rfind("enclosure.", 0) == 0 || key == "pair";
      if (plain) {
        spans.emplace_back(start, line.size());
      } else if (key == "witness" || key == "pair.witness") {
        // label | lhs | rel | rhs
        std::vector<std::size_t> bars;
        for (std::size_t i = start; i < line.size(); ++i)
          if (line[i] == '|') bars.push_back(i);
        if (bars.size() >= 3) {
          std::size_t n = bars.size();
          spans.emplace_back(bars[n - 3] + 1, bars[n - 2]);
          spans.emplace_back(bars[n - 1] + 1, line.size());
        }
      }
      for (auto [from, to] : spans)
        for (std::size_t i = from; i < to; ++i)
          if (std::isdigit(static_cast<unsigned char>(line[i]))) out.push_back(pos + i);
    }
    pos = eol + 1;
  }
  return out;
}

Outcome replay() {
  Outcome o;
  auto t0 = Clock::now();
  if (emitted().empty()) {
    examples();
    combinations();
  }
  std::vector<std::string> texts;
  for (const auto& c : emitted()) texts.push_back(serialize(c));
  long verified = 0;
  for (const auto& text : texts) {
    VerifyResult r = verify_certificate(parse_certificate(text));
    o.expect(r.ok, "replay failed: " + r.message + "\n" + text);
    ++verified;
  }
  o.note(std::to_string(verified) + " emitted certificates re-verify");

  // Mutations: every numeric character of the first certificate of each
  // criterion, and an even spread of up to 48 positions for the rest. Each
  // mutant is tried as-is (digest now stale) and with a fresh digest (the
  // replay itself has to notice).
  std::set<std::string> exhaustive_done;
  long mutants = 0, caught_digest = 0, caught_replay = 0;
  for (std::size_t idx = 0; idx < texts.size(); ++idx) {
    const std::string& text = texts[idx];
    const std::string& criterion = emitted()[idx].criterion;
    auto positions = numeric_positions(text);
    if (!exhaustive_done.insert(criterion).second && positions.size() > 48) {
      std::vector<std::size_t> spread;
      for (std::size_t k = 0; k < 48; ++k) spread.push_back(positions[k * positions.size() / 48]);
      positions = spread;
    }
    for (std::size_t p : positions) {
      std::string m = text;
      m[p] = static_cast<char>('0' + (m[p] - '0' + 1) % 10);
      ++mutants;
      bool stale_caught = true, fresh_caught = true;
      try {
        stale_caught = !verify_certificate(parse_certificate(m)).ok;
      } catch (const Error&) {
      }
      try {
        Certificate c = parse_certificate(m);
        std::string again = c.raw_body + "digest = " + digest_of(c.raw_body) + "\nend\n";
        fresh_caught = !verify_certificate(parse_certificate(again)).ok;
      } catch (const Error&) {
      }
      caught_digest += stale_caught;
      caught_replay += fresh_caught;
      std::size_t ls = text.rfind('\n', p) + 1, le = text.find('\n', p);
      o.expect(stale_caught && fresh_caught, criterion + ": undetected mutation of '" + text.substr(ls, le - ls) +
                                                 "' at column " + std::to_string(p - ls) +
                                                 (stale_caught ? " (after re-digest)" : ""));
    }
  }
  o.note(std::to_string(mutants) + " single-digit mutants over " + std::to_string(exhaustive_done.size()) +
         " criteria; caught by digest " + std::to_string(caught_digest) + ", by replay " +
         std::to_string(caught_replay));
  o.note(fmt_seconds(since(t0)));
  return o;
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "worked examples reproduce exactly", examples},
    {2, "prime resultant with reducible inputs is not certified", counterexample},
    {3, "no certificate contradicts the reference factorization", soundness_fuzz},
    {4, "resultant routes agree", resultant_agreement},
    {5, "prime-cofactor and d_1 variants are equivalent", equivalences},
    {6, "listed combinations are irreducible", combinations},
    {7, "d_k and delta_k match brute force", divisor_bounds},
    {8, "certificates replay and mutations are caught", replay},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  // Replay covers what the other criteria emitted, so it runs last.
  bool all_ok = true;
  for (const auto& c : kCriteria) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    all_ok = all_ok && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << " " << c.name;
    for (const auto& n : o.notes) std::cout << "; " << n;
    std::cout << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
  }
  return all_ok ? 0 : 1;
}
