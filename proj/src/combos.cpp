#include "resprime/combos.hpp"

#include <algorithm>
#include <functional>

#include "builder.hpp"
#include "resprime/criteria.hpp"
#include "resprime/error.hpp"

namespace resprime {

namespace {

using detail::Builder;

BigRat rat(const BigInt& x) { return BigRat(x); }
BigRat abs_rat(const BigInt& x) { return BigRat(abs_of(x)); }

enum class Dominance { Strict, Equal, Fails };

// lhs > rhs, or lhs = rhs when the boundary is allowed.
Dominance dominance(Builder& b, const std::string& label, const BigRat& lhs, const BigRat& rhs, bool allow_equal) {
  if (lhs > rhs) {
    b.check(label, lhs, Rel::Gt, rhs);
    return Dominance::Strict;
  }
  if (allow_equal && lhs == rhs) {
    b.check(label, lhs, Rel::Ge, rhs);
    return Dominance::Equal;
  }
  b.check(label, lhs, Rel::Gt, rhs);
  return Dominance::Fails;
}

// sum_{i in [from, to]} |c_i| x^(i - shift)
BigRat weighted(const IntPoly& p, std::size_t from, std::size_t to, const BigRat& x, long shift) {
  BigRat s = 0;
  for (std::size_t i = from; i <= to && i < p.size(); ++i)
    if (p[i] != 0) s += abs_rat(p[i]) * power(x, static_cast<long>(i) - shift);
  return s;
}

// The (M, N) box of one route. `outer(k)` decides whether |first| = k is
// admissible; `inner(k)` is a rational lower bound on the bound for the other
// multiplier; `side(M, N, pair)` records and checks the side conditions.
struct Enumeration {
  bool m_first = false;
  bool strict_inner = false;
  std::function<bool(const BigInt&, ComboPair&)> outer;
  std::function<BigRat(const BigInt&)> inner;
  std::function<bool(const BigInt&, const BigInt&, ComboPair&)> side;
};

BigInt floor_strict(const BigRat& x, bool strict) {
  BigInt f = floor_of(x);
  if (strict && BigRat(f) == x) f -= 1;
  return f;
}

// Empty string when the box was enumerated, otherwise the reason.
std::string enumerate(const Enumeration& e, std::vector<ComboPair>& out) {
  std::size_t examined = 0;
  for (BigInt k = e.m_first ? 0 : 1;; ++k) {
    ComboPair probe;
    if (!e.outer(k, probe)) break;
    const BigRat bound = e.inner(k);
    if (bound < 0) continue;
    const BigInt other_max = floor_strict(bound, e.strict_inner);
    if (other_max < 0) continue;
    const Rel rel = e.strict_inner ? Rel::Lt : Rel::Le;
    if (other_max > BigInt(kMaxComboBox)) return "pair box exceeds the enumeration cap";
    examined += 2 * (2 * other_max.get_ui() + 1);
    if (examined > kMaxComboBox) return "pair box exceeds the enumeration cap";
    for (int sign : {-1, 1}) {
      if (k == 0 && sign < 0) continue;
      const BigInt first = sign * k;
      for (BigInt o = -other_max; o <= other_max; ++o) {
        const BigInt M = e.m_first ? first : o;
        const BigInt N = e.m_first ? o : first;
        if (M == 0 && N == 0) continue;
        ComboPair pair;
        pair.M = M;
        pair.N = N;
        e.outer(k, pair);
        pair.witnesses.push_back({e.m_first ? "abs N vs lower bound of its range" : "abs M vs lower bound of its range",
                                  BigRat(abs_of(o)), rel, bound});
        if (!e.side(M, N, pair)) continue;
        out.push_back(std::move(pair));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ComboPair& a, const ComboPair& b) {
    return a.N != b.N ? a.N < b.N : a.M < b.M;
  });
  return {};
}

struct Base {
  Dominance an = Dominance::Fails;
  Dominance b0 = Dominance::Fails;
};

// Everything shared by the routes up to the two dominance inequalities.
// Returns the failure reason, or empty.
std::string check_base(Builder& b, const IntPoly& f, const IntPoly& g, const BigRat& A, const BigRat& B,
                       const BigInt& q, unsigned gap_exponent, const BigRat& gap, const BigInt& gap_scale, bool allow_an_eq,
                       bool allow_b0_eq, CheckEnv& env, Base& base) {
  BigInt res = env.resultant(f, g);
  b.value("resultant", res);
  if (res == 0) return "resultant is zero";
  const BigInt N = abs_of(res);
  if (N % q != 0) return "q does not divide the resultant";
  b.value("p", BigInt(N / q));
  if (!env.prime(N / q)) return "cofactor p is not prime";
  if (!b.check("gap", gap, Rel::Gt, 0)) return "B too close to A";
  if (!b.check("gap ^ e", power(gap, static_cast<long>(gap_exponent)), Rel::Ge,
               rat(gap_scale) * rat(q)))
    return "B too close to A";
  const unsigned n = static_cast<unsigned>(f.degree()), m = static_cast<unsigned>(g.degree());
  base.an = dominance(b, "abs a_n vs sum abs a_i A^(i-n)", abs_rat(f.leading()), weighted(f, 0, n - 1, A, n),
                      allow_an_eq);
  if (base.an == Dominance::Fails) return "roots of f not inside the A-disk";
  base.b0 = dominance(b, "abs b_0 vs sum abs b_i B^i", abs_rat(g[0]), weighted(g, 1, m, B, 0), allow_b0_eq);
  if (base.b0 == Dominance::Fails) return "roots of g not outside the B-disk";
  return {};
}

void require_shape(const IntPoly& f, const IntPoly& g, const BigRat& A, const BigRat& B, const BigInt& q) {
  if (f.degree() < 1 || g.degree() < 1) throw Error(ErrorCode::PreconditionViolated, "f and g must be nonconstant");
  if (f[0] == 0 || g[0] == 0) throw Error(ErrorCode::ZeroCoefficient, "a_0 and b_0 must be nonzero");
  if (A <= 0 || B <= 0) throw Error(ErrorCode::PreconditionViolated, "A and B must be positive");
  if (q <= 0) throw Error(ErrorCode::PreconditionViolated, "q must be positive");
}

Builder start(const std::string& id, const IntPoly& f, const IntPoly& g, const BigRat& A, const BigRat& B,
              const BigInt& q, ComboRoute route) {
  Builder b(id, "combinations");
  b.input("f", f);
  b.input("g", g);
  b.input("A", A);
  b.input("B", B);
  b.input("q", q);
  b.input("route", to_string(route));
  return b;
}

ComboRange finish(ComboCase c, ComboRoute r, const BigRat& A, const BigRat& B, const BigInt& q, Certificate cert) {
  ComboRange out;
  out.kase = c;
  out.route = r;
  out.A = A;
  out.B = B;
  out.q = q;
  out.cert = std::move(cert);
  return out;
}

// Shared enumeration of the gap-bounded multiplier: q c |k|^e <= gap^e.
std::function<bool(const BigInt&, ComboPair&)> gap_test(const std::string& label, const BigRat& gap, unsigned e,
                                                         const BigRat& scale) {
  return [=](const BigInt& k, ComboPair& pair) {
    Comparison c{label, scale * power(BigRat(k), static_cast<long>(e)), Rel::Le,
                 power(gap, static_cast<long>(e))};
    const bool ok = c.holds();
    pair.witnesses.push_back(std::move(c));
    return ok;
  };
}

// s_hi = min(B, A + root_hi): upper bound on A + (exact radical), valid
// because the gap test already guarantees the exact value is at most B.
BigRat clamp_hi(const BigRat& v, const BigRat& B) { return std::min(v, B); }
BigRat clamp_lo(const BigRat& v, const BigRat& A) { return std::max(v, A); }

// |M| <= |N| (|b_0| - sum_{i>=1} |b_i| s^i) / sum |a_i| s^i at an upper bound on s.
BigRat n_first_bound(const IntPoly& f, const IntPoly& g, const BigInt& absN, const BigRat& s_hi) {
  const unsigned n = static_cast<unsigned>(f.degree()), m = static_cast<unsigned>(g.degree());
  BigRat num = abs_rat(g[0]) - weighted(g, 1, m, s_hi, 0);
  BigRat den = weighted(f, 0, n, s_hi, 0);
  return rat(absN) * num / den;
}

// |N| <= |M| (|a_n| - sum_{i<n} |a_i| t^(i-n)) / sum |b_i| t^(i-n) at a lower bound on t.
BigRat m_first_bound(const IntPoly& f, const IntPoly& g, const BigInt& absM, const BigRat& t_lo) {
  const unsigned n = static_cast<unsigned>(f.degree()), m = static_cast<unsigned>(g.degree());
  BigRat num = abs_rat(f.leading()) - weighted(f, 0, n - 1, t_lo, n);
  BigRat den = weighted(g, 0, m, t_lo, n);
  return rat(absM) * num / den;
}

Comparison nonzero(const std::string& label, const BigInt& v) { return {label, BigRat(v), Rel::Ne, BigRat(0)}; }

}  // namespace

std::string to_string(ComboCase c) {
  switch (c) {
    case ComboCase::LowerDegree: return "f_lt_g";
    case ComboCase::EqualDegree: return "equal";
    case ComboCase::HigherDegree: return "f_gt_g";
  }
  return "?";
}

std::string to_string(ComboRoute r) {
  switch (r) {
    case ComboRoute::MFirst: return "m_first";
    case ComboRoute::NFirst: return "n_first";
    case ComboRoute::Marden: return "marden";
  }
  return "?";
}

ComboRoute parse_combo_route(std::string_view s) {
  if (s == "m_first") return ComboRoute::MFirst;
  if (s == "n_first") return ComboRoute::NFirst;
  if (s == "marden") return ComboRoute::Marden;
  throw Error(ErrorCode::ParseError, "unknown combination route '" + std::string(s) + "'");
}

ComboRange combos_lower_degree(const IntPoly& f, const IntPoly& g, const BigRat& A, const BigRat& B, const BigInt& q,
                               CheckEnv& env) {
  require_shape(f, g, A, B, q);
  if (f.degree() >= g.degree()) throw Error(ErrorCode::DegreeOrder, "needs deg f < deg g");
  const ComboRoute route = ComboRoute::NFirst;
  Builder b = start("combo_lower_degree", f, g, A, B, q, route);
  const unsigned n = static_cast<unsigned>(f.degree());
  Base base;
  // Either a_n strict with b_0 allowed to touch, or the reverse with a
  // strict per-pair bound.
  if (auto why = check_base(b, f, g, A, B, q, n, B - A, 1, true, true, env, base); !why.empty())
    return finish(ComboCase::LowerDegree, route, A, B, q, b.fail(why));
  if (base.an == Dominance::Equal && base.b0 == Dominance::Equal)
    return finish(ComboCase::LowerDegree, route, A, B, q, b.fail("both dominance inequalities are equalities"));
  const bool strict = base.an == Dominance::Equal;
  const BigRat qroot = kth_root_bounds(rat(q), n).hi;

  Enumeration e;
  e.m_first = false;
  e.strict_inner = strict;
  e.outer = gap_test("q abs N^n vs (B - A)^n", B - A, n, rat(q));
  e.inner = [&](const BigInt& absN) { return n_first_bound(f, g, absN, clamp_hi(A + qroot * rat(absN), B)); };
  e.side = [](const BigInt&, const BigInt& N, ComboPair&) { return N != 0; };
  std::vector<ComboPair> pairs;
  if (auto why = enumerate(e, pairs); !why.empty()) return finish(ComboCase::LowerDegree, route, A, B, q, b.fail(why));
  b.raw().pairs = std::move(pairs);
  const std::size_t count = b.raw().pairs.size();
  Certificate c = count ? b.done(Verdict::combinations(count)) : b.fail("no admissible pairs");
  return finish(ComboCase::LowerDegree, route, A, B, q, std::move(c));
}

ComboRange combos_equal_degree(const IntPoly& f, const IntPoly& g, const BigRat& A, const BigRat& B, const BigInt& q,
                               ComboRoute route, CheckEnv& env) {
  require_shape(f, g, A, B, q);
  if (f.degree() != g.degree()) throw Error(ErrorCode::DegreeOrder, "needs deg f = deg g");
  const unsigned n = static_cast<unsigned>(f.degree());
  const BigInt an = f.leading(), bn = g.leading(), a0 = f[0], b0 = g[0];

  if (route == ComboRoute::Marden) {
    Builder b = start("combo_marden", f, g, A, B, q, route);
    Base base;
    const BigRat gap = B - 3 * A;
    if (auto why = check_base(b, f, g, A, B, q, n, gap, power(BigInt(2), n), false, false, env, base); !why.empty())
      return finish(ComboCase::EqualDegree, route, A, B, q, b.fail(why));
    // |N| <= (B - 3A) / (2 q^(1/n)), i.e. q (2|N|)^n <= (B - 3A)^n; then
    // every M with |M| |a_n| < |N| |b_n|.
    Enumeration e;
    e.m_first = false;
    e.strict_inner = true;
    e.outer = gap_test("q (2 abs N)^n vs (B - 3A)^n", gap, n, rat(q) * rat(power(BigInt(2), n)));
    e.inner = [&](const BigInt& absN) -> BigRat { return rat(absN) * abs_rat(bn) / abs_rat(an); };
    e.side = [](const BigInt&, const BigInt& N, ComboPair&) { return N != 0; };
    std::vector<ComboPair> pairs;
    if (auto why = enumerate(e, pairs); !why.empty())
      return finish(ComboCase::EqualDegree, route, A, B, q, b.fail(why));
    b.raw().pairs = std::move(pairs);
    const std::size_t count = b.raw().pairs.size();
    Certificate c = count ? b.done(Verdict::combinations(count)) : b.fail("no admissible pairs");
    return finish(ComboCase::EqualDegree, route, A, B, q, std::move(c));
  }

  Builder b = start("combo_equal_degree", f, g, A, B, q, route);
  Base base;
  // Equality is tolerated on one side only, and then only for the route whose
  // per-pair bound is made strict.
  const bool allow_an_eq = route == ComboRoute::NFirst, allow_b0_eq = route == ComboRoute::MFirst;
  if (auto why = check_base(b, f, g, A, B, q, n, B - A, 1, allow_an_eq, allow_b0_eq, env, base); !why.empty())
    return finish(ComboCase::EqualDegree, route, A, B, q, b.fail(why));
  const bool strict = base.an == Dominance::Equal || base.b0 == Dominance::Equal;
  const BigRat qroot_hi = kth_root_bounds(rat(q), n).hi;

  Enumeration e;
  e.m_first = route == ComboRoute::MFirst;
  e.strict_inner = strict;
  if (e.m_first) {
    e.outer = gap_test("q abs M^n vs (B - A)^n", B - A, n, rat(q));
    e.inner = [&](const BigInt& absM) { return m_first_bound(f, g, absM, clamp_lo(B - qroot_hi * rat(absM), A)); };
  } else {
    e.outer = gap_test("q abs N^n vs (B - A)^n", B - A, n, rat(q));
    e.inner = [&](const BigInt& absN) { return n_first_bound(f, g, absN, clamp_hi(A + qroot_hi * rat(absN), B)); };
  }
  e.side = [&](const BigInt& M, const BigInt& N, ComboPair& pair) {
    const BigInt lead = M * an + N * bn, constant = M * a0 + N * b0;
    pair.witnesses.push_back(nonzero("M a_n + N b_n", lead));
    pair.witnesses.push_back(nonzero("M a_0 + N b_0", constant));
    return lead != 0 && constant != 0;
  };
  std::vector<ComboPair> pairs;
  if (auto why = enumerate(e, pairs); !why.empty()) return finish(ComboCase::EqualDegree, route, A, B, q, b.fail(why));
  b.raw().pairs = std::move(pairs);
  const std::size_t count = b.raw().pairs.size();
  Certificate c = count ? b.done(Verdict::combinations(count)) : b.fail("no admissible pairs");
  return finish(ComboCase::EqualDegree, route, A, B, q, std::move(c));
}

ComboRange combos_higher_degree(const IntPoly& f, const IntPoly& g, const BigRat& A, const BigRat& B, const BigInt& q,
                                ComboRoute route, CheckEnv& env) {
  require_shape(f, g, A, B, q);
  if (f.degree() <= g.degree()) throw Error(ErrorCode::DegreeOrder, "needs deg f > deg g");
  if (route == ComboRoute::Marden) throw Error(ErrorCode::PreconditionViolated, "the Marden route needs equal degrees");
  const unsigned n = static_cast<unsigned>(f.degree()), m = static_cast<unsigned>(g.degree());
  const BigInt an = f.leading(), a0 = f[0], b0 = g[0];
  Builder b = start("combo_higher_degree", f, g, A, B, q, route);
  Base base;
  const bool allow_an_eq = route == ComboRoute::NFirst, allow_b0_eq = route == ComboRoute::MFirst;
  if (auto why = check_base(b, f, g, A, B, q, m, B - A, 1, allow_an_eq, allow_b0_eq, env, base); !why.empty())
    return finish(ComboCase::HigherDegree, route, A, B, q, b.fail(why));
  const bool strict = base.an == Dominance::Equal || base.b0 == Dominance::Equal;

  Enumeration e;
  e.m_first = route == ComboRoute::MFirst;
  e.strict_inner = strict;
  if (e.m_first) {
    const BigRat qroot_hi = kth_root_bounds(rat(q), m).hi;
    e.outer = gap_test("q abs M^m vs (B - A)^m", B - A, m, rat(q));
    e.inner = [&, qroot_hi](const BigInt& absM) {
      return m_first_bound(f, g, absM, clamp_lo(B - qroot_hi * rat(absM), A));
    };
  } else {
    // |N|^(n/m) <= (B - A) / (q^(1/m) |a_n|^((n-m)/m)) raised to the m-th power.
    const BigRat scale = rat(q) * rat(power(abs_of(an), n - m));
    e.outer = [=](const BigInt& k, ComboPair& pair) {
      Comparison c{"q abs a_n^(n-m) abs N^n vs (B - A)^m", scale * power(BigRat(k), static_cast<long>(n)), Rel::Le,
                   power(B - A, static_cast<long>(m))};
      const bool ok = c.holds();
      pair.witnesses.push_back(std::move(c));
      return ok;
    };
    e.inner = [&, scale](const BigInt& absN) {
      const BigRat radicand = scale * power(BigRat(absN), static_cast<long>(n));
      return n_first_bound(f, g, absN, clamp_hi(A + kth_root_bounds(radicand, m).hi, B));
    };
  }
  e.side = [&](const BigInt& M, const BigInt& N, ComboPair& pair) {
    const BigInt constant = M * a0 + N * b0;
    pair.witnesses.push_back(nonzero("M a_0 + N b_0", constant));
    return constant != 0;
  };
  std::vector<ComboPair> pairs;
  if (auto why = enumerate(e, pairs); !why.empty()) return finish(ComboCase::HigherDegree, route, A, B, q, b.fail(why));
  b.raw().pairs = std::move(pairs);
  const std::size_t count = b.raw().pairs.size();
  Certificate c = count ? b.done(Verdict::combinations(count)) : b.fail("no admissible pairs");
  return finish(ComboCase::HigherDegree, route, A, B, q, std::move(c));
}

ComboRange combos_for(const IntPoly& f, const IntPoly& g, const BigRat& A, const BigRat& B, const BigInt& q,
                      ComboRoute route, CheckEnv& env) {
  if (f.degree() < g.degree()) return combos_lower_degree(f, g, A, B, q, env);
  if (f.degree() == g.degree()) return combos_equal_degree(f, g, A, B, q, route, env);
  return combos_higher_degree(f, g, A, B, q, route, env);
}

ComboRange combos_auto(const IntPoly& f, const IntPoly& g, CheckEnv& env, const ComboSearch& fixed) {
  std::vector<ComboRoute> routes;
  if (fixed.route) {
    routes = {*fixed.route};
  } else if (f.degree() < g.degree()) {
    routes = {ComboRoute::NFirst};
  } else if (f.degree() == g.degree()) {
    routes = {ComboRoute::MFirst, ComboRoute::NFirst, ComboRoute::Marden};
  } else {
    routes = {ComboRoute::MFirst, ComboRoute::NFirst};
  }
  std::vector<BigInt> qs;
  if (fixed.q) {
    qs = {*fixed.q};
  } else if (f.degree() >= 1 && g.degree() >= 1) {
    qs = prime_cofactors(abs_of(env.resultant(f, g)), env);
  }
  if (qs.empty()) qs = {BigInt(1)};
  std::vector<BigRat> As = fixed.A ? std::vector<BigRat>{*fixed.A} : parameter_grid();
  std::vector<BigRat> offsets;
  for (int k = 1; k <= 8; ++k) offsets.emplace_back(k);

  std::optional<ComboRange> best, first;
  for (const auto& route : routes)
    for (const auto& q : qs)
      for (const auto& A : As) {
        std::vector<BigRat> Bs;
        if (fixed.B) {
          Bs = {*fixed.B};
        } else {
          for (const auto& o : offsets) Bs.push_back(route == ComboRoute::Marden ? BigRat(3 * A + 2 * o) : BigRat(A + o));
        }
        for (const auto& B : Bs) {
          ComboRange r = combos_for(f, g, A, B, q, route, env);
          if (!first) first = r;
          if (r.cert.verdict.success() && (!best || r.cert.pairs.size() > best->cert.pairs.size())) best = r;
        }
      }
  if (best) return *best;
  return *first;
}

}  // namespace resprime
