#include "resprime/criteria.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "resprime/error.hpp"
#include "resprime/resultant.hpp"
#include "resprime/root_bounds.hpp"
#include "builder.hpp"

namespace resprime {

namespace {

using detail::Builder;

BigRat rat(const BigInt& x) { return BigRat(x); }
BigRat abs_rat(const BigInt& x) { return BigRat(abs_of(x)); }

void require_nonconstant(const IntPoly& p, const char* name) {
  if (p.degree() < 1) throw Error(ErrorCode::PreconditionViolated, std::string(name) + " must be nonconstant");
}

void require_constant_term(const IntPoly& p, const char* name) {
  if (p[0] == 0) throw Error(ErrorCode::ZeroConstantTerm, std::string(name) + "(0) must be nonzero");
}

void require_corners(const IntPoly& p, const char* name) {
  require_nonconstant(p, name);
  if (p[0] == 0) throw Error(ErrorCode::ZeroCoefficient, std::string(name) + " needs a nonzero constant term");
}

unsigned deg(const IntPoly& p) { return static_cast<unsigned>(p.degree()); }

// Roots of f and g, or of their reciprocals, with the keys under which their
// enclosures are stored.
struct RootRoles {
  IntPoly F, G;
  std::string key_f, key_g;
};

RootRoles roles_for(const IntPoly& f, const IntPoly& g, RootMode mode) {
  if (mode == RootMode::Direct) return {f, g, "f", "g"};
  return {reciprocal(f), reciprocal(g), "f_rev", "g_rev"};
}

// Lower bound on the distance between the root sets, or empty when the
// enclosures are not isolating.
std::optional<BigRat> separation_lower(Builder& b, const IntPoly& f, const IntPoly& g, RootMode mode, CheckEnv& env) {
  RootRoles r = roles_for(f, g, mode);
  const RootEnclosures& ef = env.roots(r.key_f, r.F);
  const RootEnclosures& eg = env.roots(r.key_g, r.G);
  b.enclosure(r.key_f, ef);
  b.enclosure(r.key_g, eg);
  auto d = min_pairwise_distance_lower(ef, eg);
  if (d) b.value("min_root_distance_lower", *d);
  return d;
}

std::optional<BigRat> separation_upper(Builder& b, const IntPoly& f, const IntPoly& g, RootMode mode, CheckEnv& env) {
  RootRoles r = roles_for(f, g, mode);
  const RootEnclosures& ef = env.roots(r.key_f, r.F);
  const RootEnclosures& eg = env.roots(r.key_g, r.G);
  b.enclosure(r.key_f, ef);
  b.enclosure(r.key_g, eg);
  auto d = max_pairwise_distance_upper(ef, eg);
  if (d) b.value("max_root_distance_upper", *d);
  return d;
}

// Bounds on |g(theta)| over the roots theta of f; in reciprocal mode on
// |g(theta) / theta^m|, which is the reciprocal of g at 1/theta.
std::optional<BigRat> root_value_lower(Builder& b, const IntPoly& f, const IntPoly& g, RootMode mode, CheckEnv& env) {
  RootRoles r = roles_for(f, g, mode);
  const RootEnclosures& ef = env.roots(r.key_f, r.F);
  b.enclosure(r.key_f, ef);
  auto v = min_abs_value_lower(r.G, ef);
  if (v) b.value("min_root_value_lower", *v);
  return v;
}

std::optional<BigRat> root_value_upper(Builder& b, const IntPoly& f, const IntPoly& g, RootMode mode, CheckEnv& env) {
  RootRoles r = roles_for(f, g, mode);
  const RootEnclosures& ef = env.roots(r.key_f, r.F);
  b.enclosure(r.key_f, ef);
  auto v = max_abs_value_upper(r.G, ef);
  if (v) b.value("max_root_value_upper", *v);
  return v;
}

// Records the resultant; empty string on success, otherwise the reason.
std::string nonzero_resultant(Builder& b, const IntPoly& f, const IntPoly& g, CheckEnv& env, BigInt& N) {
  BigInt res = env.resultant(f, g);
  b.value("resultant", res);
  if (res == 0) return "resultant is zero";
  N = abs_of(res);
  return {};
}

// |Res| = p q with p prime.
std::string prime_split(Builder& b, const BigInt& N, const BigInt& q, CheckEnv& env) {
  if (q <= 0) throw Error(ErrorCode::PreconditionViolated, "q must be positive");
  if (N % q != 0) return "q does not divide the resultant";
  BigInt p = N / q;
  b.value("p", p);
  if (!env.prime(p)) return "cofactor p is not prime";
  return {};
}

std::string no_rational_roots(Builder& b, const IntPoly& f, const char* name, CheckEnv& env) {
  auto rr = has_rational_root(f, env.factor_budget);
  if (!rr) return std::string("could not decide rational roots of ") + name;
  b.value(std::string("rational_root_") + name, *rr ? "yes" : "no");
  if (*rr) return std::string(name) + " has a rational root";
  return {};
}

void require_r(unsigned r) {
  if (r != 1 && r != 2)
    throw Error(ErrorCode::PreconditionViolated, "r must be 1 or 2 (degree lower bounds beyond 2 are not checkable)");
}

unsigned long lcm_ul(unsigned long a, unsigned long b) { return a / std::gcd(a, b) * b; }

std::optional<BigInt> dk_of(const BigInt& N, unsigned k, CheckEnv& env) {
  const Factorization& fac = env.factor(N);
  if (!fac.complete()) return std::nullopt;
  return d_k(fac, k);
}

std::optional<unsigned long> omega_of(const BigInt& N, CheckEnv& env) {
  OmegaCount om = omega(env.factor(N));
  if (!om.exact) return std::nullopt;
  return om.value;
}

BigRat abs_sum_weighted(const IntPoly& f, const std::function<BigRat(unsigned)>& weight, int skip) {
  BigRat s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (static_cast<int>(i) == skip || f[i] == 0) continue;
    s += abs_rat(f[i]) * weight(static_cast<unsigned>(i));
  }
  return s;
}

BigRat pow_rat(const BigRat& x, long e) { return power(x, e); }

}  // namespace

std::string to_string(RootMode m) { return m == RootMode::Direct ? "direct" : "reciprocal"; }

RootMode parse_root_mode(std::string_view s) {
  if (s == "direct") return RootMode::Direct;
  if (s == "reciprocal") return RootMode::Reciprocal;
  throw Error(ErrorCode::ParseError, "unknown root mode '" + std::string(s) + "'");
}

// ---------------------------------------------------------------- separation

namespace {

void separation_inputs(Builder& b, const IntPoly& f, const IntPoly& g, RootMode mode) {
  require_nonconstant(f, "f");
  require_nonconstant(g, "g");
  require_constant_term(f, "f");
  require_constant_term(g, "g");
  b.input("f", f);
  b.input("g", g);
  b.input("mode", to_string(mode));
}

// lower^k > threshold, with the lower bound required positive first.
bool separation_exceeds(Builder& b, const BigRat& lower, unsigned k, const BigRat& threshold) {
  if (!b.check("lower bound on min root distance", lower, Rel::Gt, 0)) return false;
  return b.check("lower bound on min root distance ^ min(m,n)", pow_rat(lower, k), Rel::Gt, threshold);
}

}  // namespace

Certificate check_separated_roots(const IntPoly& f, const IntPoly& g, RootMode mode, const BigInt& q, CheckEnv& env) {
  Builder b("separated_roots", "f,g");
  separation_inputs(b, f, g, mode);
  b.input("q", q);
  BigInt N;
  if (auto why = nonzero_resultant(b, f, g, env, N); !why.empty()) return b.fail(why);
  if (auto why = prime_split(b, N, q, env); !why.empty()) return b.fail(why);
  auto d = separation_lower(b, f, g, mode, env);
  if (!d) return b.fail("root enclosures are not isolating");
  if (!separation_exceeds(b, *d, std::min(deg(f), deg(g)), rat(q))) return b.fail("roots not separated enough");
  return b.done(Verdict::both_irreducible());
}

Certificate check_separated_roots_d1(const IntPoly& f, const IntPoly& g, RootMode mode, CheckEnv& env) {
  Builder b("separated_roots_d1", "f,g");
  separation_inputs(b, f, g, mode);
  BigInt N;
  if (auto why = nonzero_resultant(b, f, g, env, N); !why.empty()) return b.fail(why);
  auto d1 = dk_of(N, 1, env);
  if (!d1) return b.fail("factorization of the resultant incomplete");
  b.value("d_1", *d1);
  auto d = separation_lower(b, f, g, mode, env);
  if (!d) return b.fail("root enclosures are not isolating");
  if (!separation_exceeds(b, *d, std::min(deg(f), deg(g)), rat(*d1))) return b.fail("roots not separated enough");
  return b.done(Verdict::both_irreducible());
}

Certificate check_separated_roots_divisor(const IntPoly& f, const IntPoly& g, RootMode mode, const BigInt& d,
                                          CheckEnv& env) {
  Builder b("separated_roots_divisor", "f,g");
  separation_inputs(b, f, g, mode);
  b.input("d", d);
  if (d <= 0) throw Error(ErrorCode::PreconditionViolated, "d must be positive");
  BigInt N;
  if (auto why = nonzero_resultant(b, f, g, env, N); !why.empty()) return b.fail(why);
  if (N % d != 0) throw Error(ErrorCode::NotADivisor, "d does not divide the resultant");
  auto om = omega_of(N / d, env);
  if (!om) return b.fail("factorization of |Res|/d incomplete");
  b.value("omega", BigInt(*om));
  auto dist = separation_lower(b, f, g, mode, env);
  if (!dist) return b.fail("root enclosures are not isolating");
  if (!separation_exceeds(b, *dist, std::min(deg(f), deg(g)), rat(d))) return b.fail("roots not separated enough");
  return b.done(Verdict::factor_bound(*om));
}

Certificate check_separated_roots_dk(const IntPoly& f, const IntPoly& g, RootMode mode, unsigned k, CheckEnv& env) {
  Builder b("separated_roots_dk", "f,g");
  separation_inputs(b, f, g, mode);
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "k must be positive");
  b.input("k", k);
  BigInt N;
  if (auto why = nonzero_resultant(b, f, g, env, N); !why.empty()) return b.fail(why);
  auto dk = dk_of(N, k, env);
  if (!dk) return b.fail("factorization of the resultant incomplete");
  b.value("d_k", *dk);
  auto dist = separation_lower(b, f, g, mode, env);
  if (!dist) return b.fail("root enclosures are not isolating");
  if (!separation_exceeds(b, *dist, std::min(deg(f), deg(g)), rat(*dk))) return b.fail("roots not separated enough");
  return b.done(Verdict::factor_bound(k));
}

// ---------------------------------------------------------------- root values

namespace {

void root_value_inputs(Builder& b, const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r) {
  require_nonconstant(f, "f");
  require_nonconstant(g, "g");
  require_constant_term(f, "f");
  require_r(r);
  if (r >= deg(f)) throw Error(ErrorCode::PreconditionViolated, "r must be below deg f");
  b.input("f", f);
  b.input("g", g);
  b.input("mode", to_string(mode));
  b.input("r", r);
}

// |g(theta)|^r > threshold for every root theta of f.
std::string root_values_exceed(Builder& b, const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r,
                               const BigRat& threshold, CheckEnv& env) {
  if (r == 2)
    if (auto why = no_rational_roots(b, f, "f", env); !why.empty()) return why;
  auto v = root_value_lower(b, f, g, mode, env);
  if (!v) return "root enclosures are not isolating";
  if (!b.check("lower bound on min value at roots", *v, Rel::Gt, 0)) return "values at roots too small";
  if (!b.check("lower bound on min value at roots ^ r", pow_rat(*v, r), Rel::Gt, threshold))
    return "values at roots too small";
  return {};
}

}  // namespace

Certificate check_root_value_divisor(const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r, const BigInt& d,
                                     CheckEnv& env) {
  Builder b("root_value_divisor", "f");
  root_value_inputs(b, f, g, mode, r);
  b.input("d", d);
  if (d <= 0) throw Error(ErrorCode::PreconditionViolated, "d must be positive");
  BigInt N;
  if (auto why = nonzero_resultant(b, f, g, env, N); !why.empty()) return b.fail(why);
  if (N % d != 0) throw Error(ErrorCode::NotADivisor, "d does not divide the resultant");
  auto om = omega_of(N / d, env);
  if (!om) return b.fail("factorization of |Res|/d incomplete");
  b.value("omega", BigInt(*om));
  if (auto why = root_values_exceed(b, f, g, mode, r, rat(d), env); !why.empty()) return b.fail(why);
  return b.done(Verdict::factor_bound(*om));
}

Certificate check_root_value_dk(const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r, unsigned k,
                                CheckEnv& env) {
  Builder b("root_value_dk", "f");
  root_value_inputs(b, f, g, mode, r);
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "k must be positive");
  b.input("k", k);
  BigInt N;
  if (auto why = nonzero_resultant(b, f, g, env, N); !why.empty()) return b.fail(why);
  auto dk = dk_of(N, k, env);
  if (!dk) return b.fail("factorization of the resultant incomplete");
  b.value("d_k", *dk);
  if (auto why = root_values_exceed(b, f, g, mode, r, rat(*dk), env); !why.empty()) return b.fail(why);
  return b.done(Verdict::factor_bound(k));
}

Certificate check_root_value_prime(const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r, const BigInt& q,
                                   CheckEnv& env) {
  Builder b("root_value_prime", "f");
  root_value_inputs(b, f, g, mode, r);
  b.input("q", q);
  BigInt N;
  if (auto why = nonzero_resultant(b, f, g, env, N); !why.empty()) return b.fail(why);
  if (auto why = prime_split(b, N, q, env); !why.empty()) return b.fail(why);
  if (auto why = root_values_exceed(b, f, g, mode, r, rat(q), env); !why.empty()) return b.fail(why);
  return b.done(Verdict::irreducible());
}

// ---------------------------------------------------------------- magnitudes

Certificate check_disk_annulus(const IntPoly& f, const IntPoly& g, const BigRat& A, const BigRat& B, const BigInt& q,
                               CheckEnv& env) {
  require_corners(f, "f");
  require_corners(g, "g");
  if (A <= 0 || B <= 0) throw Error(ErrorCode::PreconditionViolated, "A and B must be positive");
  Builder b("disk_annulus", "f,g");
  b.input("f", f);
  b.input("g", g);
  b.input("A", A);
  b.input("B", B);
  b.input("q", q);
  const unsigned n = deg(f), m = deg(g), k = std::min(n, m);
  BigInt N;
  if (auto why = nonzero_resultant(b, f, g, env, N); !why.empty()) return b.fail(why);
  if (auto why = prime_split(b, N, q, env); !why.empty()) return b.fail(why);
  // B >= A + q^(1/k) decided as (B - A)^k >= q.
  if (!b.check("B - A", B - A, Rel::Gt, 0)) return b.fail("B not above A");
  if (!b.check("(B - A) ^ min(m,n)", pow_rat(B - A, k), Rel::Ge, rat(q))) return b.fail("gap between A and B too small");
  BigRat inner = abs_sum_weighted(f, [&](unsigned i) { return pow_rat(A, static_cast<long>(i) - n); }, static_cast<int>(n));
  if (!b.check("abs a_n vs sum abs a_i A^(i-n)", abs_rat(f.leading()), Rel::Gt, inner))
    return b.fail("roots of f not inside the A-disk");
  BigRat outer = abs_sum_weighted(g, [&](unsigned i) { return pow_rat(B, i); }, 0);
  if (!b.check("abs b_0 vs sum abs b_i B^i", abs_rat(g[0]), Rel::Gt, outer))
    return b.fail("roots of g not outside the B-disk");
  return b.done(Verdict::both_irreducible());
}

Certificate check_dominant_coefficient(const IntPoly& f, const IntPoly& g, unsigned j, const BigInt& q, CheckEnv& env) {
  require_corners(f, "f");
  require_corners(g, "g");
  const unsigned n = deg(f), m = deg(g), k = std::min(n, m);
  if (j < 1 || j + 1 > n) throw Error(ErrorCode::PreconditionViolated, "j must lie in 1..deg f - 1");
  if (q <= 0) throw Error(ErrorCode::PreconditionViolated, "q must be positive");
  Builder b("dominant_coefficient", "f,g");
  b.input("f", f);
  b.input("g", g);
  b.input("j", j);
  b.input("q", q);
  BigInt N;
  if (auto why = nonzero_resultant(b, f, g, env, N); !why.empty()) return b.fail(why);
  if (auto why = prime_split(b, N, q, env); !why.empty()) return b.fail(why);
  // Radicals rounded up: both right-hand sides increase with them.
  const BigRat qroot = kth_root_bounds(rat(q), k).hi;
  BigRat gsum = 0;
  for (unsigned i = 0; i < m; ++i) gsum += abs_rat(g[i]) / abs_rat(g.leading());
  const BigRat others = abs_sum_weighted(f, [](unsigned) { return BigRat(1); }, static_cast<int>(j));
  const BigRat rhs1 = pow_rat(qroot + gsum, static_cast<long>(n - j)) * others;
  if (!b.check("abs a_j vs upper bound of first bound", abs_rat(f[j]), Rel::Gt, rhs1))
    return b.fail("middle coefficient not dominant");
  const BigRat ratio_root = kth_root_bounds(others / abs_rat(f[j]), j).hi;
  const BigRat gtail = abs_sum_weighted(g, [](unsigned) { return BigRat(1); }, 0);
  const BigRat rhs2 = pow_rat(qroot + ratio_root, m) * gtail;
  if (!b.check("abs b_0 vs upper bound of second bound", abs_rat(g[0]), Rel::Gt, rhs2))
    return b.fail("constant term of g not dominant");
  return b.done(Verdict::both_irreducible());
}

// ---------------------------------------------------------------- linear g

namespace {

void linear_inputs(Builder& b, const IntPoly& f, const BigInt& bb, const BigInt& c) {
  require_corners(f, "f");
  if (bb == 0 || c == 0) throw Error(ErrorCode::PreconditionViolated, "b and c must be nonzero");
  b.input("f", f);
  b.input("b", bb);
  b.input("c", c);
}

// |b^n f(c/b)|, cross-checked against the resultant with bX - c.
BigInt linear_value(Builder& b, const IntPoly& f, const BigInt& bb, const BigInt& c, CheckEnv& env) {
  BigInt v = abs_of(eval_homogeneous(f, c, bb));
  BigInt r = abs_of(env.resultant(f, IntPoly{BigInt(-c), bb}));
  if (v != r) throw Error(ErrorCode::CrossCheckFailed, "homogeneous value disagrees with the resultant");
  b.value("value", v);
  return v;
}

bool is_littlewood(const IntPoly& f) {
  for (const auto& a : f.coeffs())
    if (a < -1 || a > 1) return false;
  return true;
}

}  // namespace

Certificate check_linear_value(const IntPoly& f, const BigInt& bb, const BigInt& c, unsigned j, const BigInt& q,
                               CheckEnv& env) {
  Builder b("linear_value", "f");
  linear_inputs(b, f, bb, c);
  const unsigned n = deg(f);
  if (j > n) throw Error(ErrorCode::PreconditionViolated, "j must lie in 0..deg f");
  b.input("j", j);
  b.input("q", q);
  BigInt N = linear_value(b, f, bb, c, env);
  if (N == 0) return b.fail("value is zero");
  if (auto why = prime_split(b, N, q, env); !why.empty()) return b.fail(why);
  const BigRat B = abs_rat(bb), C = abs_rat(c), Q = rat(q);
  if (j == 0) {
    BigRat rhs = abs_sum_weighted(f, [&](unsigned i) { return pow_rat((C + Q) / B, i); }, 0);
    if (!b.check("abs a_0 vs sum abs a_i ((abs c + q)/abs b)^i", abs_rat(f[0]), Rel::Gt, rhs))
      return b.fail("constant term not dominant");
    return b.done(Verdict::irreducible());
  }
  if (!b.check("q vs abs c", Q, Rel::Lt, C)) return b.fail("q not below abs c");
  // Each n-th root rounded up.
  BigRat rhs = abs_sum_weighted(
      f,
      [&](unsigned i) -> BigRat {
        BigRat radicand = pow_rat(C + Q, static_cast<long>(i) * (n - j)) / pow_rat(C - Q, static_cast<long>(j) * (n - i));
        return pow_rat(B, static_cast<long>(j) - i) * kth_root_bounds(radicand, n).hi;
      },
      static_cast<int>(j));
  if (!b.check("abs a_j vs upper bound of weighted sum", abs_rat(f[j]), Rel::Gt, rhs))
    return b.fail("coefficient a_j not dominant");
  return b.done(Verdict::irreducible());
}

Certificate check_linear_value_littlewood(const IntPoly& f, const BigInt& bb, const BigInt& c, CheckEnv& env) {
  Builder b("linear_value_littlewood", "f");
  linear_inputs(b, f, bb, c);
  if (!is_littlewood(f)) throw Error(ErrorCode::CoefficientConstraintViolated, "coefficients must lie in {-1, 0, 1}");
  BigInt N = linear_value(b, f, bb, c, env);
  if (!env.prime(N)) return b.fail("value is not prime");
  const BigRat B = abs_rat(bb), C = abs_rat(c);
  if (C >= 2 * B + 1) {
    b.check("abs c vs 2 abs b + 1", C, Rel::Ge, 2 * B + 1);
  } else if (!b.check("abs b vs 2 abs c + 1", B, Rel::Ge, 2 * C + 1)) {
    return b.fail("b and c too close in size");
  }
  return b.done(Verdict::irreducible());
}

Certificate check_linear_value_lead(const IntPoly& f, const BigInt& bb, const BigInt& c, CheckEnv& env) {
  Builder b("linear_value_lead", "f");
  linear_inputs(b, f, bb, c);
  BigInt N = linear_value(b, f, bb, c, env);
  if (!env.prime(N)) return b.fail("value is not prime");
  const BigRat B = abs_rat(bb), C = abs_rat(c);
  if (!b.check("abs c vs 2 abs b + 1", C, Rel::Ge, 2 * B + 1)) return b.fail("abs c below 2 abs b + 1");
  const unsigned n = deg(f);
  BigInt mx = 0;
  for (unsigned i = 0; i < n; ++i) mx = std::max(mx, BigInt(abs_of(f[i])));
  const BigRat an = abs_rat(f.leading());
  if (an >= rat(mx)) {
    b.check("abs a_n vs max abs a_i", an, Rel::Ge, rat(mx));
    return b.done(Verdict::irreducible());
  }
  BigRat s = abs_sum_weighted(f, [&](unsigned i) { return pow_rat(BigRat(1, 2), static_cast<long>(n - i)); },
                              static_cast<int>(n));
  if (!b.check("abs a_n vs sum abs a_i / 2^(n-i)", an, Rel::Gt, s)) return b.fail("leading coefficient too small");
  return b.done(Verdict::irreducible());
}

Certificate check_linear_value_power(const IntPoly& f, const BigInt& c, unsigned j, CheckEnv& env) {
  Builder b("linear_value_power", "f");
  linear_inputs(b, f, BigInt(1), c);
  const unsigned n = deg(f);
  if (j < 1 || j + 1 > n) throw Error(ErrorCode::PreconditionViolated, "j must lie in 1..deg f - 1");
  if (abs_of(c) < 2) throw Error(ErrorCode::PreconditionViolated, "abs c must be at least 2");
  b.input("j", j);
  BigInt N = linear_value(b, f, BigInt(1), c, env);
  if (!env.prime(N)) return b.fail("value is not prime");
  // abs c ^ (8i/5), fifth roots rounded up.
  const BigInt C = abs_of(c);
  BigRat rhs = abs_sum_weighted(
      f, [&](unsigned i) { return kth_root_bounds(BigRat(power(C, 8UL * i)), 5).hi; }, static_cast<int>(j));
  if (!b.check("abs a_j vs upper bound of sum abs a_i abs c^(8i/5)", abs_rat(f[j]), Rel::Ge, rhs))
    return b.fail("coefficient a_j not dominant");
  return b.done(Verdict::irreducible());
}

// ---------------------------------------------------------------- quadratic g

std::string to_string(QuadraticForm f) {
  switch (f) {
    case QuadraticForm::Gaussian: return "gaussian";
    case QuadraticForm::RealQuadratic: return "real_quadratic";
    case QuadraticForm::Eisenstein: return "eisenstein";
    case QuadraticForm::Golden: return "golden";
  }
  return "?";
}

QuadraticForm parse_quadratic_form(std::string_view s) {
  if (s == "gaussian") return QuadraticForm::Gaussian;
  if (s == "real_quadratic") return QuadraticForm::RealQuadratic;
  if (s == "eisenstein") return QuadraticForm::Eisenstein;
  if (s == "golden") return QuadraticForm::Golden;
  throw Error(ErrorCode::ParseError, "unknown quadratic form '" + std::string(s) + "'");
}

std::string to_string(DominantEnd e) { return e == DominantEnd::Constant ? "constant" : "leading"; }

DominantEnd parse_dominant_end(std::string_view s) {
  if (s == "constant") return DominantEnd::Constant;
  if (s == "leading") return DominantEnd::Leading;
  throw Error(ErrorCode::ParseError, "unknown dominant end '" + std::string(s) + "'");
}

IntPoly quadratic_form_modulus(QuadraticForm form, const BigInt& m) {
  switch (form) {
    case QuadraticForm::Gaussian: return IntPoly{1, 0, 1};
    case QuadraticForm::RealQuadratic: return IntPoly{BigInt(-m), 0, 1};
    case QuadraticForm::Eisenstein: return IntPoly{1, 1, 1};
    case QuadraticForm::Golden: return IntPoly{-1, -1, 1};
  }
  return {};
}

BigInt quadratic_form_value(const IntPoly& f, QuadraticForm form, const BigInt& m) {
  const std::size_t n1 = f.size();
  switch (form) {
    case QuadraticForm::Gaussian: {
      BigInt e = 0, o = 0;
      for (std::size_t i = 0; i < n1; ++i) {
        BigInt t = (i / 2) % 2 == 0 ? f[i] : BigInt(-f[i]);
        (i % 2 == 0 ? e : o) += t;
      }
      return e * e + o * o;
    }
    case QuadraticForm::RealQuadratic: {
      BigInt e = 0, o = 0;
      for (std::size_t i = 0; i < n1; ++i) (i % 2 == 0 ? e : o) += f[i] * power(m, i / 2);
      return e * e - m * o * o;
    }
    case QuadraticForm::Eisenstein: {
      BigInt s[3] = {0, 0, 0};
      for (std::size_t i = 0; i < n1; ++i) s[i % 3] += f[i];
      return s[0] * s[0] + s[1] * s[1] + s[2] * s[2] - s[0] * s[1] - s[0] * s[2] - s[1] * s[2];
    }
    case QuadraticForm::Golden: {
      LucasSequence lucas(1, -1, -1);  // X^2 - X - 1: x_0 = 2, x_1 = 1
      BigInt v = 0;
      for (std::size_t i = 0; i < n1; ++i) {
        BigInt sign = i % 2 == 0 ? 1 : -1;
        v += sign * f[i] * f[i];
        for (std::size_t j = i + 1; j < n1; ++j) v += sign * BigInt(lucas.at(j - i).get_num()) * f[i] * f[j];
      }
      return v;
    }
  }
  return 0;
}

Certificate check_quadratic_form(const IntPoly& f, QuadraticForm form, const BigInt& m, const BigInt& q,
                                 DominantEnd end, CheckEnv& env) {
  require_nonconstant(f, "f");
  if (form != QuadraticForm::Golden && f[0] == 0)
    throw Error(ErrorCode::ZeroCoefficient, "f needs a nonzero constant term");
  if (form == QuadraticForm::RealQuadratic) {
    if (m <= 0) throw Error(ErrorCode::PreconditionViolated, "m must be positive");
    if (mpz_perfect_square_p(m.get_mpz_t())) throw Error(ErrorCode::SquareM, "m must not be a perfect square");
  }
  if (end == DominantEnd::Leading && form != QuadraticForm::RealQuadratic)
    throw Error(ErrorCode::PreconditionViolated, "the leading-coefficient branch exists only for X^2 - m");
  if (q <= 0) throw Error(ErrorCode::PreconditionViolated, "q must be positive");
  Builder b(to_string(form) + "_form", "f");
  b.input("f", f);
  if (form == QuadraticForm::RealQuadratic) b.input("m", m);
  b.input("q", q);
  b.input("end", to_string(end));

  const IntPoly G = quadratic_form_modulus(form, m);
  const BigInt v = quadratic_form_value(f, form, m);
  const BigInt r_prs = env.resultant(f, G);
  const BigInt r_shift = resultant_quadratic_shift(f, G[2], G[1], G[0]);
  const BigInt r_binet = resultant_quadratic_binet(f, G[2], G[1], G[0]);
  if (abs_of(v) != abs_of(r_prs) || abs_of(r_shift) != abs_of(r_prs) || abs_of(r_binet) != abs_of(r_prs))
    throw Error(ErrorCode::CrossCheckFailed, "form value and resultants disagree");
  b.value("form_value", v);
  const BigInt N = abs_of(v);
  if (N == 0) return b.fail("form value is zero");
  if (auto why = prime_split(b, N, q, env); !why.empty()) return b.fail(why);

  const unsigned n = deg(f);
  const BigRat Q = rat(q);
  if (end == DominantEnd::Leading) {
    if (!b.check("q vs m", Q, Rel::Lt, rat(m))) return b.fail("q not below m");
    // sqrt(m - q)^(i - n) rounded up through a lower bound on sqrt((m - q)^(n - i)).
    BigRat rhs = abs_sum_weighted(
        f,
        [&](unsigned i) -> BigRat { return 1 / kth_root_bounds(pow_rat(rat(m) - Q, static_cast<long>(n - i)), 2).lo; },
        static_cast<int>(n));
    if (!b.check("abs a_n vs upper bound of sum abs a_i sqrt(m-q)^(i-n)", abs_rat(f.leading()), Rel::Gt, rhs))
      return b.fail("leading coefficient not dominant");
    return b.done(Verdict::irreducible());
  }
  std::function<BigRat(unsigned)> weight;
  std::string label;
  switch (form) {
    case QuadraticForm::Gaussian:
      weight = [&](unsigned i) { return kth_root_bounds(pow_rat(1 + Q, i), 2).hi; };
      label = "abs a_0 vs upper bound of sum abs a_i sqrt(1+q)^i";
      break;
    case QuadraticForm::RealQuadratic:
      weight = [&](unsigned i) { return kth_root_bounds(pow_rat(rat(m) + Q, i), 2).hi; };
      label = "abs a_0 vs upper bound of sum abs a_i sqrt(m+q)^i";
      break;
    default: {
      DirectedBound s = kth_root_bounds(4 * Q + 5, 2);
      BigRat base = (1 + s.hi) / 2;
      weight = [base](unsigned i) { return pow_rat(base, i); };
      label = "abs a_0 vs upper bound of sum abs a_i ((1+sqrt(4q+5))/2)^i";
    }
  }
  BigRat rhs = abs_sum_weighted(f, weight, 0);
  if (!b.check(label, abs_rat(f[0]), Rel::Gt, rhs)) return b.fail("constant term not dominant");
  return b.done(Verdict::irreducible());
}

// ---------------------------------------------------------------- close roots

namespace {

void close_inputs(Builder& b, const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r) {
  require_nonconstant(f, "f");
  require_nonconstant(g, "g");
  require_constant_term(f, "f");
  require_r(r);
  b.input("f", f);
  b.input("g", g);
  b.input("mode", to_string(mode));
  b.input("r", r);
}

BigInt nonzero_resultant_or_throw(Builder& b, const IntPoly& f, const IntPoly& g, CheckEnv& env) {
  BigInt N;
  if (!nonzero_resultant(b, f, g, env, N).empty()) throw Error(ErrorCode::NotCoprime, "f and g share a root");
  return N;
}

// Leading coefficient of the polynomial whose roots are used: a_n, or a_0 in
// reciprocal mode.
BigRat root_lc(const IntPoly& f, RootMode mode) { return abs_rat(mode == RootMode::Direct ? f.leading() : f[0]); }

}  // namespace

Certificate check_close_roots_dk(const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r, unsigned k,
                                 CheckEnv& env) {
  Builder b("close_roots_dk", "f");
  close_inputs(b, f, g, mode, r);
  const unsigned n = deg(f), m = deg(g);
  if (k == 0 || k * r >= n) throw Error(ErrorCode::PreconditionViolated, "k must satisfy 0 < k r < deg f");
  // For k >= 2 the bound is unsound: f = 2(X-3)(X-1)(X+1), g = 4X+2 passes
  // with k = 2 (14 < 336 / 12) and f has three factors. The argument only
  // controls the degree of a single cofactor, which is the k = 1 case.
  if (k != 1) throw Error(ErrorCode::PreconditionViolated, "close-roots d_k bound holds only for k = 1");
  b.input("k", k);
  const BigInt N = nonzero_resultant_or_throw(b, f, g, env);
  auto dk = dk_of(N, k, env);
  if (!dk) return b.fail("factorization of the resultant incomplete");
  b.value("d_k", *dk);
  if (r == 2)
    if (auto why = no_rational_roots(b, f, "f", env); !why.empty()) return b.fail(why);
  auto up = root_value_upper(b, f, g, mode, env);
  if (!up) return b.fail("root enclosures are not isolating");
  const BigRat threshold = rat(N) / (rat(*dk) * pow_rat(root_lc(f, mode), m));
  if (!b.check("upper bound on max value at roots ^ (n - k r)", pow_rat(*up, n - k * r), Rel::Lt, threshold))
    return b.fail("values at roots too large");
  return b.done(Verdict::factor_bound(k));
}

Certificate check_close_roots_prime(const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r, const BigInt& p,
                                    CheckEnv& env) {
  Builder b("close_roots_prime", "f");
  close_inputs(b, f, g, mode, r);
  const unsigned n = deg(f), m = deg(g);
  if (r >= n) throw Error(ErrorCode::PreconditionViolated, "r must be below deg f");
  b.input("p", p);
  const BigInt N = nonzero_resultant_or_throw(b, f, g, env);
  if (p <= 1 || N % p != 0) return b.fail("p does not divide the resultant");
  if (!env.prime(p)) return b.fail("p is not prime");
  if (r == 2)
    if (auto why = no_rational_roots(b, f, "f", env); !why.empty()) return b.fail(why);
  auto up = root_value_upper(b, f, g, mode, env);
  if (!up) return b.fail("root enclosures are not isolating");
  const BigRat threshold = rat(p) / pow_rat(root_lc(f, mode), m);
  if (!b.check("upper bound on max value at roots ^ (n - r)", pow_rat(*up, n - r), Rel::Lt, threshold))
    return b.fail("values at roots too large");
  return b.done(Verdict::irreducible());
}

Certificate check_close_roots_pair(const IntPoly& f, const IntPoly& g, RootMode mode, unsigned r, const BigInt& p,
                                   CheckEnv& env) {
  Builder b("close_roots_pair", "f,g");
  close_inputs(b, f, g, mode, r);
  require_constant_term(g, "g");
  const unsigned n = deg(f), m = deg(g);
  if (n < r + 1 || m < r + 1) throw Error(ErrorCode::PreconditionViolated, "both degrees must exceed r");
  b.input("p", p);
  const BigInt N = nonzero_resultant_or_throw(b, f, g, env);
  if (p <= 1 || N % p != 0) return b.fail("p does not divide the resultant");
  if (!env.prime(p)) return b.fail("p is not prime");
  if (r == 2) {
    if (auto why = no_rational_roots(b, f, "f", env); !why.empty()) return b.fail(why);
    if (auto why = no_rational_roots(b, g, "g", env); !why.empty()) return b.fail(why);
  }
  auto up = separation_upper(b, f, g, mode, env);
  if (!up) return b.fail("root enclosures are not isolating");
  // delta < p^(1/e) / (lf^(1/(n-r)) lg^(1/(m-r))), raised to L = lcm of the
  // three root indices so that every side is rational.
  const unsigned long e = static_cast<unsigned long>(m) * n - static_cast<unsigned long>(r) * std::min(m, n);
  const unsigned long L = lcm_ul(lcm_ul(e, n - r), m - r);
  const BigRat lf = root_lc(f, mode), lg = root_lc(g, mode);
  const BigRat rhs = pow_rat(rat(p), static_cast<long>(L / e)) /
                     (pow_rat(lf, static_cast<long>(L / (n - r))) * pow_rat(lg, static_cast<long>(L / (m - r))));
  b.value("exponent", BigInt(L));
  if (!b.check("upper bound on max root distance ^ L", pow_rat(*up, static_cast<long>(L)), Rel::Lt, rhs))
    return b.fail("roots not close enough");
  return b.done(Verdict::both_irreducible());
}

Certificate check_hadamard_pair(const IntPoly& f, const IntPoly& g, RootMode mode, const BigInt& d, CheckEnv& env) {
  require_corners(f, "f");
  require_corners(g, "g");
  Builder b("hadamard_pair", "f,g");
  b.input("f", f);
  b.input("g", g);
  b.input("mode", to_string(mode));
  b.input("d", d);
  if (env.resultant(f, g) == 0) throw Error(ErrorCode::NotCoprime, "f and g share a root");
  const BigInt fd = f.eval(d), gd = g.eval(d);
  BigInt common;
  mpz_gcd(common.get_mpz_t(), fd.get_mpz_t(), gd.get_mpz_t());
  if (common == 1) throw Error(ErrorCode::NoCommonPrime, "f(d) and g(d) are coprime");
  b.value("common_divisor", common);
  auto p = env.factor(common).largest_prime();
  if (!p) return b.fail("no prime factor of gcd(f(d), g(d)) found");
  b.value("p", *p);
  BigInt nf = 0, ng = 0;
  for (const auto& a : f.coeffs()) nf += a * a;
  for (const auto& a : g.coeffs()) ng += a * a;
  const unsigned n = deg(f), m = deg(g), k = std::min(n, m);
  // dist > (|f|^m |g|^n / p)^(1/k) squared out: dist^(2k) > nf^m ng^n / p^2.
  const BigRat rhs = BigRat(power(nf, m) * power(ng, n)) / BigRat(*p * *p);
  auto dist = separation_lower(b, f, g, mode, env);
  if (!dist) return b.fail("root enclosures are not isolating");
  if (!b.check("lower bound on min root distance", *dist, Rel::Gt, 0)) return b.fail("roots not separated enough");
  if (!b.check("lower bound on min root distance ^ (2 min(m,n))", pow_rat(*dist, 2L * k), Rel::Gt, rhs))
    return b.fail("roots not separated enough");
  return b.done(Verdict::both_irreducible());
}

// ---------------------------------------------------------------- searches

const std::vector<BigRat>& parameter_grid() {
  static const std::vector<BigRat> grid = {BigRat(1, 2), BigRat(1), BigRat(3, 2), BigRat(2), BigRat(3)};
  return grid;
}

std::vector<BigInt> prime_cofactors(const BigInt& N, CheckEnv& env) {
  std::vector<BigInt> out;
  auto add = [&](const BigInt& q) {
    if (q <= 0 || N % q != 0) return;
    if (std::find(out.begin(), out.end(), q) != out.end()) return;
    if (!env.prime(N / q)) return;
    out.push_back(q);
  };
  if (N == 0) return out;
  add(BigInt(1));
  const Factorization& fac = env.factor(N);
  if (fac.complete()) add(*d_k(fac, 1));
  if (auto p = fac.largest_prime()) add(N / *p);
  return out;
}

namespace {

// First success; otherwise the first inconclusive attempt.
struct FirstSuccess {
  std::optional<Certificate> first;
  std::optional<Certificate> success;
  bool offer(Certificate c) {
    if (success) return true;
    if (c.verdict.success()) {
      success = std::move(c);
      return true;
    }
    if (!first) first = std::move(c);
    return false;
  }
  Certificate result(const std::string& id) const {
    if (success) return *success;
    if (first) return *first;
    Certificate c;
    c.criterion = id;
    c.verdict = Verdict::inconclusive("no applicable parameters");
    return c;
  }
};

std::vector<BigInt> q_candidates(const IntPoly& f, const IntPoly& g, CheckEnv& env, const AutoOptions& opts) {
  if (opts.q) return {*opts.q};
  std::vector<BigInt> qs = prime_cofactors(abs_of(env.resultant(f, g)), env);
  if (qs.empty()) qs.push_back(1);
  return qs;
}

}  // namespace

Certificate search_disk_annulus(const IntPoly& f, const IntPoly& g, CheckEnv& env, const AutoOptions& opts) {
  FirstSuccess best;
  const std::vector<BigInt> qs = q_candidates(f, g, env, opts);
  const std::vector<BigRat> As = opts.A ? std::vector<BigRat>{*opts.A} : parameter_grid();
  const std::vector<BigRat> Bs = opts.B ? std::vector<BigRat>{*opts.B} : parameter_grid();
  for (const auto& q : qs)
    for (const auto& A : As)
      for (const auto& B : Bs) {
        if (B <= A) continue;
        if (best.offer(check_disk_annulus(f, g, A, B, q, env))) return best.result("disk_annulus");
      }
  return best.result("disk_annulus");
}

Certificate search_dominant_coefficient(const IntPoly& f, const IntPoly& g, CheckEnv& env,
                                        const AutoOptions& opts) {
  FirstSuccess best;
  const std::vector<BigInt> qs = q_candidates(f, g, env, opts);
  for (const auto& q : qs)
    for (unsigned j = 1; j + 1 <= deg(f); ++j)
      if (!opts.j || *opts.j == j)
      if (best.offer(check_dominant_coefficient(f, g, j, q, env))) return best.result("dominant_coefficient");
  return best.result("dominant_coefficient");
}

Certificate search_linear_value(const IntPoly& f, const BigInt& bb, const BigInt& c, CheckEnv& env,
                                const AutoOptions& opts) {
  FirstSuccess best;
  const BigInt N = abs_of(eval_homogeneous(f, c, bb));
  // q = 1, then d_1, then every divisor below |c| in increasing order.
  std::vector<BigInt> qs = opts.q ? std::vector<BigInt>{*opts.q} : prime_cofactors(N, env);
  if (N != 0 && !opts.q) {
    const Factorization& fac = env.factor(N);
    if (fac.complete()) {
      std::vector<BigInt> divs = divisors(fac);
      std::sort(divs.begin(), divs.end());
      for (const auto& q : divs) {
        if (q >= abs_of(c)) break;
        if (std::find(qs.begin(), qs.end(), q) == qs.end() && env.prime(N / q)) qs.push_back(q);
      }
    }
  }
  if (qs.empty()) qs.push_back(1);
  for (const auto& q : qs)
    for (unsigned j = 0; j <= deg(f); ++j)
      if (!opts.j || *opts.j == j)
        if (best.offer(check_linear_value(f, bb, c, j, q, env))) return best.result("linear_value");
  return best.result("linear_value");
}

Certificate search_quadratic_form(const IntPoly& f, QuadraticForm form, const BigInt& m, CheckEnv& env,
                                  const AutoOptions& opts) {
  FirstSuccess best;
  const BigInt N = abs_of(quadratic_form_value(f, form, m));
  std::vector<BigInt> qs = opts.q ? std::vector<BigInt>{*opts.q} : prime_cofactors(N, env);
  if (qs.empty()) qs.push_back(1);
  std::vector<DominantEnd> ends = {DominantEnd::Constant};
  if (form == QuadraticForm::RealQuadratic) ends.push_back(DominantEnd::Leading);
  for (const auto& q : qs)
    for (auto end : ends)
      if (best.offer(check_quadratic_form(f, form, m, q, end, env))) return best.result(to_string(form) + "_form");
  return best.result(to_string(form) + "_form");
}

// ---------------------------------------------------------------- auto

const std::vector<std::string>& univariate_criteria() {
  static const std::vector<std::string> ids = {
      "close_roots_dk",       "close_roots_pair",      "close_roots_prime",       "disk_annulus",
      "dominant_coefficient", "eisenstein_form",       "gaussian_form",           "golden_form",
      "hadamard_pair",        "linear_value",          "linear_value_lead",       "linear_value_littlewood",
      "linear_value_power",   "real_quadratic_form",   "root_value_divisor",      "root_value_dk",
      "root_value_prime",     "separated_roots",       "separated_roots_d1",      "separated_roots_divisor",
      "separated_roots_dk"};
  return ids;
}

namespace {

using Attempt = std::function<Certificate()>;

// Runs attempts until one succeeds. Precondition failures become
// inconclusive certificates; a failed internal cross-check propagates.
Certificate run_family(const std::string& id, const IntPoly& f, const IntPoly& g, const std::vector<Attempt>& attempts) {
  FirstSuccess best;
  std::string first_error;
  for (const auto& a : attempts) {
    try {
      if (best.offer(a())) break;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CrossCheckFailed) throw;
      if (first_error.empty()) first_error = e.what();
    }
  }
  if (best.success || best.first) return best.result(id);
  Certificate c;
  c.criterion = id;
  c.subject = "f";
  c.inputs = {{"f", to_bracket(f)}, {"g", to_bracket(g)}};
  c.verdict = Verdict::inconclusive(first_error.empty() ? "not applicable" : "precondition: " + first_error);
  return c;
}

// g = +-(X^2 + 1), +-(X^2 - m), +-(X^2 + X + 1), +-(X^2 - X - 1).
std::optional<std::pair<QuadraticForm, BigInt>> match_quadratic(const IntPoly& g) {
  if (g.degree() != 2) return std::nullopt;
  IntPoly h = g.leading() < 0 ? -g : g;
  if (h[2] != 1) return std::nullopt;
  if (h[1] == 0 && h[0] == 1) return std::make_pair(QuadraticForm::Gaussian, BigInt(0));
  if (h[1] == 0 && h[0] < 0 && !mpz_perfect_square_p(BigInt(-h[0]).get_mpz_t()))
    return std::make_pair(QuadraticForm::RealQuadratic, BigInt(-h[0]));
  if (h[1] == 1 && h[0] == 1) return std::make_pair(QuadraticForm::Eisenstein, BigInt(0));
  if (h[1] == -1 && h[0] == -1) return std::make_pair(QuadraticForm::Golden, BigInt(0));
  return std::nullopt;
}

bool wanted(const AutoOptions& opts, const std::string& id) {
  return opts.criteria.empty() || std::find(opts.criteria.begin(), opts.criteria.end(), id) != opts.criteria.end();
}

}  // namespace

std::vector<Certificate> certify_auto(const IntPoly& f, const IntPoly& g, CheckEnv& env, const AutoOptions& opts) {
  std::vector<Certificate> out;
  auto family = [&](const std::string& id, std::vector<Attempt> attempts) {
    if (!wanted(opts, id)) return;
    out.push_back(run_family(id, f, g, attempts));
  };
  const RootMode modes[] = {RootMode::Direct, RootMode::Reciprocal};
  const std::pair<const IntPoly*, const IntPoly*> orders[] = {{&f, &g}, {&g, &f}};

  BigInt N = 0;
  std::vector<BigInt> qs{1};
  if (f.degree() >= 1 && g.degree() >= 1) {
    N = abs_of(env.resultant(f, g));
    std::vector<BigInt> cands = prime_cofactors(N, env);
    if (!cands.empty()) qs = cands;
  }
  if (opts.q) qs = {*opts.q};
  std::vector<unsigned> ks = {1, 2};
  if (opts.k) ks = {*opts.k};
  std::optional<BigInt> largest_p;
  if (N != 0) largest_p = env.factor(N).largest_prime();

  {
    std::vector<Attempt> a;
    for (auto mode : modes)
      for (const auto& q : qs) a.push_back([&, mode, q] { return check_separated_roots(f, g, mode, q, env); });
    family("separated_roots", a);
  }
  {
    std::vector<Attempt> a;
    for (auto mode : modes) a.push_back([&, mode] { return check_separated_roots_d1(f, g, mode, env); });
    family("separated_roots_d1", a);
  }
  {
    std::vector<Attempt> a;
    for (unsigned k : ks)
      for (auto mode : modes) a.push_back([&, mode, k] { return check_separated_roots_dk(f, g, mode, k, env); });
    family("separated_roots_dk", a);
  }
  {
    std::vector<Attempt> a;
    for (auto mode : modes) a.push_back([&, mode] { return check_separated_roots_divisor(f, g, mode, BigInt(1), env); });
    family("separated_roots_divisor", a);
  }
  {
    std::vector<Attempt> a;
    for (auto [x, y] : orders)
      for (auto mode : modes)
        for (unsigned r = 1; r <= 2; ++r)
          for (const auto& q : qs)
            a.push_back([&, x = x, y = y, mode, r, q] { return check_root_value_prime(*x, *y, mode, r, q, env); });
    family("root_value_prime", a);
  }
  {
    std::vector<Attempt> a;
    for (auto [x, y] : orders)
      for (auto mode : modes)
        for (unsigned r = 1; r <= 2; ++r)
          for (unsigned k : ks)
            a.push_back([&, x = x, y = y, mode, r, k] { return check_root_value_dk(*x, *y, mode, r, k, env); });
    family("root_value_dk", a);
  }
  {
    std::vector<Attempt> a;
    for (auto [x, y] : orders)
      for (auto mode : modes)
        a.push_back([&, x = x, y = y, mode] { return check_root_value_divisor(*x, *y, mode, 1, BigInt(1), env); });
    family("root_value_divisor", a);
  }
  {
    std::vector<Attempt> a;
    for (auto [x, y] : orders) a.push_back([&, x = x, y = y] { return search_disk_annulus(*x, *y, env, opts); });
    family("disk_annulus", a);
  }
  {
    std::vector<Attempt> a;
    for (auto [x, y] : orders) a.push_back([&, x = x, y = y] { return search_dominant_coefficient(*x, *y, env, opts); });
    family("dominant_coefficient", a);
  }
  {
    std::vector<Attempt> a;
    for (auto [x, y] : orders)
      for (auto mode : modes)
        for (unsigned r = 1; r <= 2; ++r)
          a.push_back([&, x = x, y = y, mode, r] { return check_close_roots_dk(*x, *y, mode, r, 1, env); });
    family("close_roots_dk", a);
  }
  {
    std::vector<Attempt> a;
    if (largest_p)
      for (auto [x, y] : orders)
        for (auto mode : modes)
          for (unsigned r = 1; r <= 2; ++r)
            a.push_back(
                [&, x = x, y = y, mode, r] { return check_close_roots_prime(*x, *y, mode, r, *largest_p, env); });
    family("close_roots_prime", a);
  }
  {
    std::vector<Attempt> a;
    if (largest_p)
      for (auto mode : modes)
        for (unsigned r = 1; r <= 2; ++r)
          a.push_back([&, mode, r] { return check_close_roots_pair(f, g, mode, r, *largest_p, env); });
    family("close_roots_pair", a);
  }
  {
    std::vector<Attempt> a;
    for (long d = -8; d <= 8; ++d)
      for (auto mode : modes) a.push_back([&, mode, d] { return check_hadamard_pair(f, g, mode, BigInt(d), env); });
    family("hadamard_pair", a);
  }

  // g linear: g = bX - c (or f linear, with roles exchanged).
  for (auto [x, y] : orders) {
    if (y->degree() != 1 || x->degree() < 1) continue;
    const IntPoly& F = *x;
    const BigInt bb = (*y)[1], c = -(*y)[0];
    family("linear_value", {[&, bb, c] { return search_linear_value(F, bb, c, env, opts); }});
    family("linear_value_littlewood", {[&, bb, c] { return check_linear_value_littlewood(F, bb, c, env); }});
    family("linear_value_lead", {[&, bb, c] { return check_linear_value_lead(F, bb, c, env); }});
    if (abs_of(bb) == 1) {
      std::vector<Attempt> a;
      const BigInt cc = bb * c;  // bX - c = +-(X - cc)
      for (unsigned j = 1; j + 1 <= deg(F); ++j)
        if (!opts.j || *opts.j == j)
          a.push_back([&, cc, j] { return check_linear_value_power(F, cc, j, env); });
      family("linear_value_power", a);
    }
    break;
  }
  for (auto [x, y] : orders) {
    auto form = match_quadratic(*y);
    if (!form || x->degree() < 1) continue;
    const IntPoly& F = *x;
    family(to_string(form->first) + "_form",
           {[&, form] { return search_quadratic_form(F, form->first, form->second, env, opts); }});
    break;
  }

  std::stable_sort(out.begin(), out.end(), [](const Certificate& a, const Certificate& b) {
    if (a.verdict.success() != b.verdict.success()) return a.verdict.success();
    return a.criterion < b.criterion;
  });
  if (!opts.include_inconclusive)
    out.erase(std::remove_if(out.begin(), out.end(), [](const Certificate& c) { return !c.verdict.success(); }),
              out.end());
  return out;
}

}  // namespace resprime
