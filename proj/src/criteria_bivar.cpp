#include "resprime/criteria_bivar.hpp"

#include <algorithm>
#include <functional>

#include "builder.hpp"
#include "resprime/error.hpp"
#include "resprime/oracle.hpp"
#include "resprime/resultant.hpp"

namespace resprime {

namespace {

using detail::Builder;

// Bottom is written as -1 in comparisons.
long deg_or_minus1(const RatPoly& p) { return p.is_zero() ? -1 : p.degree(); }

BigRat degr(long d) { return BigRat(d); }

// Max X-degree over Y-indices in [from, to); -1 when all are zero or empty.
long max_deg(const BivarPoly& f, std::size_t from, std::size_t to) {
  long best = -1;
  for (std::size_t i = from; i < to && i < f.size(); ++i) best = std::max(best, deg_or_minus1(f[i]));
  return best;
}

BivarPoly reverse_y(const BivarPoly& f) {
  std::vector<RatPoly> c(f.coeffs().rbegin(), f.coeffs().rend());
  return BivarPoly(std::move(c));
}

void require_bivar_shape(const BivarPoly& f, const BivarPoly& g) {
  if (f.degree() < 1 || g.degree() < 1) throw Error(ErrorCode::PreconditionViolated, "f and g must have positive Y-degree");
  if (f[0].is_zero() || g[0].is_zero()) throw Error(ErrorCode::ZeroCoefficient, "a_0 and b_0 must be nonzero");
}

void inputs(Builder& b, const BivarPoly& f, const BivarPoly& g) {
  b.input("f", to_string(f));
  b.input("g", to_string(g));
}

// Empty when f has no nonconstant factor in Q[X].
std::string content_failure(Builder& b, const BivarPoly& p, const char* name) {
  RatPoly c = x_content(p);
  b.value(std::string("x_content_") + name, to_bracket(c));
  if (c.degree() > 0) return std::string(name) + " has a nonconstant factor in Q[X]";
  return {};
}

struct ResultantY {
  RatPoly res;
  std::optional<QFactorization> fac;  // empty when over budget
};

ResultantY resultant_and_factors(Builder& b, const BivarPoly& f, const BivarPoly& g, CheckEnv& env) {
  ResultantY r;
  r.res = resultant_y(f, g);
  b.value("resultant_y", to_bracket(r.res));
  if (r.res.is_zero()) throw Error(ErrorCode::NotCoprime, "f and g share a factor in Y");
  try {
    r.fac = factor_over_q(r.res, env.oracle_budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
  }
  return r;
}

// Irreducible over Q: one factor of positive degree, multiplicity one.
std::string irreducible_failure(Builder& b, const ResultantY& r) {
  if (!r.fac) return "factoring Res_Y exceeded the oracle budget";
  const bool irr = r.fac->factors.size() == 1 && r.fac->factors[0].multiplicity == 1;
  b.value("resultant_y_irreducible", irr ? "yes" : "no");
  if (!irr) return "Res_Y is not irreducible";
  return {};
}

std::optional<long> delta_from(const QFactorization& fac, long D, unsigned k) {
  std::vector<char> reach(static_cast<std::size_t>(D) + 1, 0);
  reach[0] = 1;
  for (const auto& q : fac.factors)
    for (unsigned e = 0; e < q.multiplicity; ++e) {
      const long d = q.factor.degree();
      for (long s = D; s >= d; --s)
        if (reach[s - d]) reach[s] = 1;
    }
  const long cap = D / static_cast<long>(k + 1);
  for (long s = cap; s >= 0; --s)
    if (reach[s]) return s;
  return 0;
}

// min{A, A/n} > max{B, B/m} over the rationals.
bool geometry(Builder& b, long A, long B, unsigned n, unsigned m) {
  b.value("A", BigInt(A));
  b.value("B", BigInt(B));
  const BigRat lhs = std::min(degr(A), make_rat(A, static_cast<long>(n)));
  const BigRat rhs = std::max(degr(B), make_rat(B, static_cast<long>(m)));
  return b.check("min(A, A/n) vs max(B, B/m)", lhs, Rel::Gt, rhs);
}

}  // namespace

std::optional<long> delta_k(const RatPoly& res, unsigned k, const OracleBudget& budget) {
  if (res.is_zero()) throw Error(ErrorCode::NotCoprime, "resultant in Y is zero");
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "k must be positive");
  if (res.degree() == 0) return 0;
  try {
    return delta_from(factor_over_q(res, budget), res.degree(), k);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded) return std::nullopt;
    throw;
  }
}

DegreeGaps degree_gaps(const BivarPoly& f, const BivarPoly& g) {
  const std::size_t n = f.size() - 1, m = g.size() - 1;
  return {deg_or_minus1(f[0]) - max_deg(f, 1, n + 1), max_deg(g, 0, m) - deg_or_minus1(g[m])};
}

std::string to_string(BivarSide s) { return s == BivarSide::Direct ? "direct" : "reciprocal"; }
BivarSide parse_bivar_side(std::string_view s) {
  if (s == "direct") return BivarSide::Direct;
  if (s == "reciprocal") return BivarSide::Reciprocal;
  throw Error(ErrorCode::ParseError, "unknown side '" + std::string(s) + "'");
}

std::string to_string(DominanceVariant v) { return v == DominanceVariant::StrictF ? "strict_f" : "strict_g"; }
DominanceVariant parse_dominance_variant(std::string_view s) {
  if (s == "strict_f") return DominanceVariant::StrictF;
  if (s == "strict_g") return DominanceVariant::StrictG;
  throw Error(ErrorCode::ParseError, "unknown dominance variant '" + std::string(s) + "'");
}

std::string to_string(CombinationShape s) { return s == CombinationShape::Lower ? "lower" : "equal"; }
CombinationShape parse_combination_shape(std::string_view s) {
  if (s == "lower") return CombinationShape::Lower;
  if (s == "equal") return CombinationShape::Equal;
  throw Error(ErrorCode::ParseError, "unknown combination shape '" + std::string(s) + "'");
}

BivarPoly combine(const BivarPoly& f, const BivarPoly& g, const BigRat& alpha, const BigRat& beta) {
  return f.scaled(RatPoly::constant(alpha)) + g.scaled(RatPoly::constant(beta));
}

Certificate check_bivar_factor_bound(const BivarPoly& f, const BivarPoly& g, unsigned k, BivarSide side,
                                     CheckEnv& env) {
  require_bivar_shape(f, g);
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "k must be positive");
  Builder b("bivar_factor_bound", "f,g");
  inputs(b, f, g);
  b.input("k", k);
  b.input("side", to_string(side));
  if (auto why = content_failure(b, f, "f"); !why.empty()) return b.fail(why);
  if (auto why = content_failure(b, g, "g"); !why.empty()) return b.fail(why);
  // The reciprocal side is the direct test on the Y-reciprocals, whose
  // resultant differs only in sign.
  const BivarPoly F = side == BivarSide::Direct ? f : reverse_y(f);
  const BivarPoly G = side == BivarSide::Direct ? g : reverse_y(g);
  const unsigned n = static_cast<unsigned>(f.degree()), m = static_cast<unsigned>(g.degree());
  const DegreeGaps gaps = degree_gaps(F, G);
  if (!geometry(b, gaps.A, gaps.B, n, m)) return b.fail("degree gaps do not separate the roots");
  ResultantY r = resultant_and_factors(b, f, g, env);
  if (!r.fac && r.res.degree() > 0) return b.fail("factoring Res_Y exceeded the oracle budget");
  const long delta = r.res.degree() == 0 ? 0 : *delta_from(*r.fac, r.res.degree(), k);
  b.value("delta_k", BigInt(delta));
  const long low = std::min(deg_or_minus1(F[0]), deg_or_minus1(G[m]));
  if (!b.check("min(deg of outer coefficients) vs delta_k", degr(low), Rel::Gt, degr(delta)))
    return b.fail("outer coefficient degrees do not exceed delta_k");
  return b.done(Verdict::factor_bound(k));
}

Certificate check_bivar_degree_dominance(const BivarPoly& f, const BivarPoly& g, DominanceVariant v, CheckEnv& env) {
  require_bivar_shape(f, g);
  Builder b("bivar_degree_dominance", "f,g");
  inputs(b, f, g);
  b.input("variant", to_string(v));
  if (auto why = content_failure(b, f, "f"); !why.empty()) return b.fail(why);
  if (auto why = content_failure(b, g, "g"); !why.empty()) return b.fail(why);
  const std::size_t n = f.size() - 1, m = g.size() - 1;
  const Rel on_f = v == DominanceVariant::StrictF ? Rel::Gt : Rel::Ge;
  const Rel on_g = v == DominanceVariant::StrictF ? Rel::Ge : Rel::Gt;
  if (!b.check("deg a_0 vs max deg a_i (i >= 1)", degr(deg_or_minus1(f[0])), on_f, degr(max_deg(f, 1, n + 1))))
    return b.fail("deg a_0 not dominant");
  if (!b.check("deg b_m vs max deg b_i (i < m)", degr(deg_or_minus1(g[m])), on_g, degr(max_deg(g, 0, m))))
    return b.fail("deg b_m not dominant");
  ResultantY r = resultant_and_factors(b, f, g, env);
  if (auto why = irreducible_failure(b, r); !why.empty()) return b.fail(why);
  return b.done(Verdict::both_irreducible());
}

Certificate check_bivar_divisor_bound(const BivarPoly& f, const BivarPoly& g, const RatPoly& d, CheckEnv& env) {
  require_bivar_shape(f, g);
  if (d.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "d must be nonzero");
  Builder b("bivar_divisor_bound", "f,g");
  inputs(b, f, g);
  b.input("d", to_bracket(d));
  if (auto why = content_failure(b, f, "f"); !why.empty()) return b.fail(why);
  if (auto why = content_failure(b, g, "g"); !why.empty()) return b.fail(why);
  const unsigned n = static_cast<unsigned>(f.degree()), m = static_cast<unsigned>(g.degree());
  const DegreeGaps gaps = degree_gaps(f, g);
  if (!geometry(b, gaps.A, gaps.B, n, m)) return b.fail("degree gaps do not separate the roots");
  ResultantY r = resultant_and_factors(b, f, g, env);
  RatDivision qr = divmod(r.res, d);
  if (!qr.remainder.is_zero()) throw Error(ErrorCode::NotADivisor, "d does not divide Res_Y");
  unsigned long omega_q = 0;
  if (qr.quotient.degree() > 0) {
    try {
      omega_q = factor_over_q(qr.quotient, env.oracle_budget).count();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      return b.fail("factoring Res_Y / d exceeded the oracle budget");
    }
  }
  b.value("omega", BigInt(omega_q));
  const long low = std::min(deg_or_minus1(f[0]), deg_or_minus1(g[m]));
  if (!b.check("min(deg a_0, deg b_m) vs deg d", degr(low), Rel::Gt, degr(d.degree())))
    return b.fail("outer coefficient degrees do not exceed deg d");
  return b.done(Verdict::factor_bound(omega_q));
}

Certificate check_bivar_combination(const BivarPoly& f, const BivarPoly& g, CombinationShape shape,
                                    const BigRat& alpha, const BigRat& beta, CheckEnv& env) {
  require_bivar_shape(f, g);
  if (alpha == 0 && beta == 0) throw Error(ErrorCode::PreconditionViolated, "alpha and beta both zero");
  const std::size_t n = f.size() - 1, m = g.size() - 1;
  if (shape == CombinationShape::Lower && n >= m) throw Error(ErrorCode::ShapeViolation, "needs deg_Y f < deg_Y g");
  if (shape == CombinationShape::Equal && n != m) throw Error(ErrorCode::ShapeViolation, "needs deg_Y f = deg_Y g");
  Builder b(shape == CombinationShape::Lower ? "bivar_combo_lower" : "bivar_combo_equal", "combination");
  inputs(b, f, g);
  b.input("alpha", alpha);
  b.input("beta", beta);

  if (shape == CombinationShape::Lower) {
    if (auto why = content_failure(b, f, "f"); !why.empty()) return b.fail(why);
    RatPoly tail;
    for (std::size_t i = n + 1; i <= m; ++i) tail = monic_gcd(tail, g[i]);
    b.value("upper_gcd", to_bracket(tail));
    if (tail.degree() > 0) return b.fail("upper coefficients of g share a factor");
  } else {
    // A shared index j with constant nonzero a_j, b_j that keeps the
    // combination's j-th coefficient nonzero.
    std::optional<std::size_t> pick;
    for (std::size_t j = 1; j + 1 <= n && !pick; ++j)
      if (f[j].degree() == 0 && g[j].degree() == 0 && alpha * f[j][0] + beta * g[j][0] != 0) pick = j;
    if (!pick) return b.fail("no index with constant coefficients surviving the combination");
    b.value("j", BigInt(static_cast<unsigned long>(*pick)));
    b.check("alpha a_j + beta b_j", BigRat(alpha * f[*pick][0] + beta * g[*pick][0]), Rel::Ne, 0);
  }
  if (!b.check("deg a_0 vs max deg a_i (i >= 1)", degr(deg_or_minus1(f[0])), Rel::Gt, degr(max_deg(f, 1, n + 1))))
    return b.fail("deg a_0 not dominant");
  if (!b.check("deg b_m vs max deg b_i (i < m)", degr(deg_or_minus1(g[m])), Rel::Ge, degr(max_deg(g, 0, m))))
    return b.fail("deg b_m not dominant");
  const std::size_t upto = shape == CombinationShape::Lower ? n : n - 1;
  for (std::size_t i = 0; i <= upto; ++i)
    if (!b.check("deg a_" + std::to_string(i) + " vs deg b_" + std::to_string(i), degr(deg_or_minus1(f[i])), Rel::Le,
                 degr(deg_or_minus1(g[i]))))
      return b.fail("a coefficient of f outgrows g");
  ResultantY r = resultant_and_factors(b, f, g, env);
  if (auto why = irreducible_failure(b, r); !why.empty()) return b.fail(why);
  return b.done(Verdict::irreducible());
}

Certificate check_bivar_spike(const BivarPoly& f, const BivarPoly& g, unsigned j, CheckEnv& env) {
  require_bivar_shape(f, g);
  const std::size_t n = f.size() - 1, m = g.size() - 1;
  if (j < 1 || j > n) throw Error(ErrorCode::PreconditionViolated, "j must lie in 1..deg_Y f");
  Builder b("bivar_spike", "f,g");
  inputs(b, f, g);
  b.input("j", j);
  if (auto why = content_failure(b, f, "f"); !why.empty()) return b.fail(why);
  if (auto why = content_failure(b, g, "g"); !why.empty()) return b.fail(why);
  const long delta = deg_or_minus1(g[0]) - max_deg(g, 1, m + 1);
  if (!b.check("Delta", degr(delta), Rel::Gt, 0)) return b.fail("deg b_0 not dominant");
  const long dj = deg_or_minus1(f[j]);
  if (f[j].is_zero()) return b.fail("a_j is zero");
  const long slope_hi = deg_or_minus1(g[0]) - deg_or_minus1(g[m]);
  std::optional<BigRat> below, above;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == j || f[k].is_zero()) continue;
    const long dk = f[k].degree();
    const long diff = static_cast<long>(k) - static_cast<long>(j);
    if (k < j) {
      BigRat v = degr(dk) + make_rat(diff * delta, static_cast<long>(m));
      if (!below || v > *below) below = v;
    } else {
      BigRat v = degr(dk + diff * slope_hi);
      if (!above || v > *above) above = v;
    }
  }
  if (below && !b.check("deg a_j vs max over k < j", degr(dj), Rel::Gt, *below))
    return b.fail("a_j not dominant over lower coefficients");
  if (above && !b.check("deg a_j vs max over k > j", degr(dj), Rel::Gt, *above))
    return b.fail("a_j not dominant over higher coefficients");
  ResultantY r = resultant_and_factors(b, f, g, env);
  if (auto why = irreducible_failure(b, r); !why.empty()) return b.fail(why);
  return b.done(Verdict::both_irreducible());
}

const std::vector<std::string>& bivariate_criteria() {
  static const std::vector<std::string> ids = {"bivar_combo_equal",      "bivar_combo_lower", "bivar_degree_dominance",
                                               "bivar_divisor_bound",    "bivar_factor_bound", "bivar_spike"};
  return ids;
}

std::vector<Certificate> certify_bivar_auto(const BivarPoly& f, const BivarPoly& g, CheckEnv& env,
                                            const AutoOptions& opts) {
  using Attempt = std::function<Certificate()>;
  std::vector<Certificate> out;
  auto family = [&](const std::string& id, const std::vector<Attempt>& attempts) {
    if (!opts.criteria.empty() && std::find(opts.criteria.begin(), opts.criteria.end(), id) == opts.criteria.end())
      return;
    std::optional<Certificate> first;
    std::string first_error;
    for (const auto& a : attempts) {
      try {
        Certificate c = a();
        if (c.verdict.success()) {
          out.push_back(std::move(c));
          return;
        }
        if (!first) first = std::move(c);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::CrossCheckFailed) throw;
        if (first_error.empty()) first_error = e.what();
      }
    }
    if (first) {
      out.push_back(std::move(*first));
      return;
    }
    Certificate c;
    c.criterion = id;
    c.subject = "f,g";
    c.inputs = {{"f", to_string(f)}, {"g", to_string(g)}};
    c.verdict = Verdict::inconclusive(first_error.empty() ? "not applicable" : "precondition: " + first_error);
    out.push_back(std::move(c));
  };
  const std::pair<const BivarPoly*, const BivarPoly*> orders[] = {{&f, &g}, {&g, &f}};

  std::vector<Attempt> a;
  for (auto [x, y] : orders)
    for (auto v : {DominanceVariant::StrictF, DominanceVariant::StrictG})
      a.push_back([&, x = x, y = y, v] { return check_bivar_degree_dominance(*x, *y, v, env); });
  family("bivar_degree_dominance", a);

  a.clear();
  for (unsigned k = 1; k <= 2; ++k)
    for (auto [x, y] : orders)
      for (auto side : {BivarSide::Direct, BivarSide::Reciprocal})
        a.push_back([&, x = x, y = y, side, k] { return check_bivar_factor_bound(*x, *y, k, side, env); });
  family("bivar_factor_bound", a);

  a.clear();
  for (auto [x, y] : orders)
    a.push_back([&, x = x, y = y] { return check_bivar_divisor_bound(*x, *y, RatPoly::constant(BigRat(1)), env); });
  family("bivar_divisor_bound", a);

  a.clear();
  for (auto [x, y] : orders)
    for (unsigned j = 1; j <= static_cast<unsigned>(std::max(0, x->degree())); ++j)
      a.push_back([&, x = x, y = y, j] { return check_bivar_spike(*x, *y, j, env); });
  family("bivar_spike", a);

  a.clear();
  for (auto [x, y] : orders)
    if (x->degree() < y->degree())
      a.push_back([&, x = x, y = y] {
        return check_bivar_combination(*x, *y, CombinationShape::Lower, BigRat(1), BigRat(1), env);
      });
  family("bivar_combo_lower", a);

  a.clear();
  if (f.degree() == g.degree())
    for (auto [x, y] : orders)
      a.push_back([&, x = x, y = y] {
        return check_bivar_combination(*x, *y, CombinationShape::Equal, BigRat(1), BigRat(1), env);
      });
  family("bivar_combo_equal", a);

  std::stable_sort(out.begin(), out.end(), [](const Certificate& x, const Certificate& y) {
    if (x.verdict.success() != y.verdict.success()) return x.verdict.success();
    return x.criterion < y.criterion;
  });
  if (!opts.include_inconclusive)
    out.erase(std::remove_if(out.begin(), out.end(), [](const Certificate& c) { return !c.verdict.success(); }),
              out.end());
  return out;
}

}  // namespace resprime
