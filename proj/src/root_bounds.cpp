#include "resprime/root_bounds.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "resprime/error.hpp"

namespace resprime {

namespace {

void require_nonzero(const IntPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root bound of the zero polynomial");
}

BigRat weighted_sum(const IntPoly& f, const BigRat& t, std::size_t from, std::size_t to, long shift) {
  BigRat s = 0;
  for (std::size_t i = from; i < to && i < f.size(); ++i) {
    if (f[i] == 0) continue;
    s += BigRat(abs_of(f[i])) * power(t, static_cast<long>(i) + shift);
  }
  return s;
}

}  // namespace

bool no_roots_in_disk(const IntPoly& f, const BigRat& delta, bool strict) {
  require_nonzero(f);
  if (sgn(delta) <= 0) throw Error(ErrorCode::PreconditionViolated, "radius must be positive");
  BigRat lhs(abs_of(f[0]));
  BigRat rhs = weighted_sum(f, delta, 1, f.size(), 0);
  return strict ? lhs > rhs : lhs >= rhs;
}

bool all_roots_in_disk(const IntPoly& f, const BigRat& delta, bool strict) {
  require_nonzero(f);
  if (sgn(delta) <= 0) throw Error(ErrorCode::PreconditionViolated, "radius must be positive");
  const long n = f.degree();
  BigRat lhs(abs_of(f.leading()));
  BigRat rhs = weighted_sum(f, delta, 0, static_cast<std::size_t>(n), -n);
  return strict ? lhs > rhs : lhs >= rhs;
}

std::optional<AnnulusExclusion> annulus_exclusion(const IntPoly& f, unsigned j, const BigRat& delta) {
  require_nonzero(f);
  if (sgn(delta) <= 0) throw Error(ErrorCode::PreconditionViolated, "radius must be positive");
  const unsigned n = static_cast<unsigned>(f.degree());
  if (j > n) throw Error(ErrorCode::PreconditionViolated, "index above the degree");
  int terms = 0;
  for (const auto& c : f.coeffs()) terms += c != 0;
  if (terms <= 2) throw Error(ErrorCode::BinomialInput, to_bracket(f));
  BigRat aj = abs_of(BigRat(f[j]));
  BigRat lead = aj * power(delta, static_cast<long>(j));
  BigRat rest = weighted_sum(f, delta, 0, j, 0) + weighted_sum(f, delta, j + 1, f.size(), 0);
  if (!(lead > rest)) return std::nullopt;
  AnnulusExclusion out;
  // delta (rest / (|a_j| delta^j))^(1/j) simplifies to (rest / |a_j|)^(1/j).
  out.inner = j == 0 ? DirectedBound::exact(0) : kth_root_bounds(BigRat(rest / aj), j);
  if (j < n) out.outer = kth_root_bounds(BigRat(aj * power(delta, static_cast<long>(n)) / rest), n - j);
  return out;
}

BigRat fujiwara_bound(const IntPoly& f) {
  require_nonzero(f);
  const long n = f.degree();
  BigRat best = 0;
  BigRat lead(abs_of(f.leading()));
  for (long i = 0; i < n; ++i) {
    if (f[static_cast<std::size_t>(i)] == 0) continue;
    BigRat mu(power(BigInt(2), static_cast<unsigned long>(i == 0 ? n - 1 : n - i)));
    BigRat x = mu * BigRat(abs_of(f[static_cast<std::size_t>(i)])) / lead;
    BigRat r = kth_root_bounds(x, static_cast<unsigned long>(n - i)).hi;
    if (r > best) best = r;
  }
  return best;
}

std::vector<std::complex<double>> aberth_approximations(const IntPoly& f, int max_iterations) {
  require_nonzero(f);
  using cd = std::complex<double>;
  const int n = f.degree();
  if (n <= 0) return {};
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = make_rat(f[static_cast<std::size_t>(i)], f.leading()).get_d();
  if (n == 1) return {cd(-c[0], 0.0)};
  double R = 0.8 * fujiwara_bound(f).get_d();
  if (!(R > 0) || !std::isfinite(R)) R = 1.0;
  constexpr double kGoldenAngle = 2.399963229728653;
  std::vector<cd> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = std::polar(R, 0.4 + kGoldenAngle * k);

  // p, p' and a bound on the rounding error of p (Horner on |c_i|).
  auto eval = [&](cd x, cd& p, cd& dp, double& err) {
    p = c[static_cast<std::size_t>(n)];
    dp = 0;
    err = std::abs(c[static_cast<std::size_t>(n)]);
    const double ax = std::abs(x);
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * x + p;
      p = p * x + c[static_cast<std::size_t>(i)];
      err = err * ax + std::abs(c[static_cast<std::size_t>(i)]);
    }
    err *= 4.0 * n * std::numeric_limits<double>::epsilon();
  };

  // A root is frozen once its value drowns in rounding noise or its step
  // stalls; later sweeps leave it alone.
  std::vector<char> done(z.size(), 0);
  auto sweep = [&]() {
    bool converged = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      cd p, dp;
      double err;
      eval(z[i], p, dp, err);
      if (std::abs(p) <= err) {
        done[i] = 1;
        continue;
      }
      if (dp == cd(0, 0)) {
        z[i] *= cd(1.0 + 1e-7, 1e-7);
        converged = false;
        continue;
      }
      cd ratio = p / dp;
      cd s = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      cd w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw Error(ErrorCode::IterationDiverged, to_bracket(f));
      z[i] -= w;
      if (std::abs(w) > 1e-14 * std::max(std::abs(z[i]), 1e-300)) converged = false;
      else done[i] = 1;
    }
    return converged;
  };

  bool converged = false;
  for (int it = 0; it < max_iterations && !converged; ++it) converged = sweep();
  if (!converged) throw Error(ErrorCode::IterationDiverged, "no convergence for " + to_bracket(f));
  return z;
}

namespace {

ComplexRat eval_complex(const IntPoly& f, const ComplexRat& z) {
  ComplexRat acc{0, 0};
  for (std::size_t i = f.size(); i-- > 0;) {
    BigRat re = acc.re * z.re - acc.im * z.im + f[i];
    BigRat im = acc.re * z.im + acc.im * z.re;
    acc.re = std::move(re);
    acc.im = std::move(im);
  }
  return acc;
}

BigRat norm2(const ComplexRat& z) { return z.re * z.re + z.im * z.im; }

BigRat dist2(const ComplexRat& a, const ComplexRat& b) {
  BigRat dr = a.re - b.re, di = a.im - b.im;
  return dr * dr + di * di;
}

bool is_root(const IntPoly& f, const ComplexRat& z) {
  ComplexRat v = eval_complex(f, z);
  return v.re == 0 && v.im == 0;
}

// Replace an approximation by the exact root when a rational or Gaussian
// rational with denominator dividing the leading coefficient fits.
ComplexRat snap(const IntPoly& f, std::complex<double> z) {
  const BigInt& lc = f.leading();
  const double scale = std::abs(lc.get_d());
  auto nearest = [&](double v) {
    double t = std::nearbyint(v * scale);
    BigRat q(BigInt(t), abs_of(lc));
    q.canonicalize();
    return q;
  };
  if (std::isfinite(z.real() * scale) && std::isfinite(z.imag() * scale) && std::abs(z.real() * scale) < 1e15 &&
      std::abs(z.imag() * scale) < 1e15) {
    double tol = 1e-8 * std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) <= tol) {
      ComplexRat cand{nearest(z.real()), 0};
      if (is_root(f, cand)) return cand;
    }
    ComplexRat cand{nearest(z.real()), nearest(z.imag())};
    if (is_root(f, cand)) return cand;
  }
  return {BigRat(z.real()), BigRat(z.imag())};
}

std::vector<BigRat> weierstrass_radii(const IntPoly& s, const std::vector<ComplexRat>& centers) {
  const std::size_t n = centers.size();
  std::vector<BigRat> out(n);
  const BigRat lc2 = BigRat(s.leading() * s.leading());
  const BigRat n2(static_cast<unsigned long>(n * n));
  for (std::size_t i = 0; i < n; ++i) {
    BigRat num = norm2(eval_complex(s, centers[i]));
    if (num == 0) {
      out[i] = 0;
      continue;
    }
    BigRat den = lc2;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) den *= dist2(centers[i], centers[j]);
    if (den == 0) throw Error(ErrorCode::IterationDiverged, "coincident root approximations");
    BigRat r2 = n2 * num / den;
    out[i] = round_up_dyadic(kth_root_bounds(r2, 2).hi, 64);
  }
  return out;
}

bool disks_overlap(const RootDisk& a, const RootDisk& b) {
  BigRat rr = a.radius + b.radius;
  return dist2(a.center, b.center) <= rr * rr;
}

void mark_overlaps(RootEnclosures& e) {
  e.overlapping = false;
  for (std::size_t i = 0; i < e.disks.size(); ++i)
    for (std::size_t j = i + 1; j < e.disks.size(); ++j)
      if (disks_overlap(e.disks[i], e.disks[j])) {
        e.overlapping = true;
        return;
      }
}

BigRat modulus_hi(const ComplexRat& z) { return kth_root_bounds(norm2(z), 2).hi; }
BigRat modulus_lo(const ComplexRat& z) { return kth_root_bounds(norm2(z), 2).lo; }

// max |g'| on the disk, bounded by sum k |b_k| (|c| + r)^(k-1).
BigRat derivative_bound(const IntPoly& g, const RootDisk& d) {
  if (d.radius == 0) return 0;
  BigRat t = modulus_hi(d.center) + d.radius;
  BigRat s = 0;
  for (std::size_t k = 1; k < g.size(); ++k) {
    if (g[k] == 0) continue;
    s += BigRat(abs_of(g[k]) * static_cast<unsigned long>(k)) * power(t, static_cast<long>(k - 1));
  }
  return s;
}

}  // namespace

RootEnclosures enclose_roots(const IntPoly& f) {
  require_nonzero(f);
  RootEnclosures out;
  for (const auto& part : squarefree_decomposition(f)) {
    std::vector<ComplexRat> centers;
    for (const auto& z : aberth_approximations(part.factor)) centers.push_back(snap(part.factor, z));
    std::vector<BigRat> radii = weierstrass_radii(part.factor, centers);
    for (std::size_t i = 0; i < centers.size(); ++i) out.disks.push_back({centers[i], radii[i], part.multiplicity});
  }
  mark_overlaps(out);
  return out;
}

namespace {

// Approximate centers come from doubles; anything else in a stored disk of
// positive radius was not produced by the root finder.
bool double_representable(const BigRat& x) {
  if (x == 0) return true;
  const BigInt& den = x.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) return false;
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) <= 53 && BigRat(x.get_d()) == x;
}

}  // namespace

RootEnclosures enclosures_from_centers(const IntPoly& f, const std::vector<RootDisk>& stored) {
  require_nonzero(f);
  for (const auto& d : stored)
    if (d.radius != 0 && !(double_representable(d.center.re) && double_representable(d.center.im)))
      throw Error(ErrorCode::ShapeViolation, "stored center is not a double approximation");
  RootEnclosures out;
  std::size_t pos = 0;
  for (const auto& part : squarefree_decomposition(f)) {
    std::vector<ComplexRat> centers;
    for (int i = 0; i < part.factor.degree(); ++i, ++pos) {
      if (pos >= stored.size() || stored[pos].multiplicity != part.multiplicity)
        throw Error(ErrorCode::ShapeViolation, "stored enclosure does not match the squarefree structure");
      centers.push_back(stored[pos].center);
    }
    std::vector<BigRat> radii = weierstrass_radii(part.factor, centers);
    for (std::size_t i = 0; i < centers.size(); ++i) out.disks.push_back({centers[i], radii[i], part.multiplicity});
  }
  if (pos != stored.size()) throw Error(ErrorCode::ShapeViolation, "extra stored enclosure disks");
  mark_overlaps(out);
  return out;
}

std::optional<BigRat> min_pairwise_distance_lower(const RootEnclosures& a, const RootEnclosures& b) {
  if (a.overlapping || b.overlapping || a.disks.empty() || b.disks.empty()) return std::nullopt;
  std::optional<BigRat> best;
  for (const auto& x : a.disks)
    for (const auto& y : b.disks) {
      BigRat d = kth_root_bounds(dist2(x.center, y.center), 2).lo - x.radius - y.radius;
      if (!best || d < *best) best = d;
    }
  return round_down_dyadic(*best, 64);
}

std::optional<BigRat> max_pairwise_distance_upper(const RootEnclosures& a, const RootEnclosures& b) {
  if (a.overlapping || b.overlapping || a.disks.empty() || b.disks.empty()) return std::nullopt;
  std::optional<BigRat> best;
  for (const auto& x : a.disks)
    for (const auto& y : b.disks) {
      BigRat d = kth_root_bounds(dist2(x.center, y.center), 2).hi + x.radius + y.radius;
      if (!best || d > *best) best = d;
    }
  return round_up_dyadic(*best, 64);
}

std::optional<BigRat> min_abs_value_lower(const IntPoly& g, const RootEnclosures& e) {
  if (e.overlapping || e.disks.empty()) return std::nullopt;
  std::optional<BigRat> best;
  for (const auto& d : e.disks) {
    BigRat v = modulus_lo(eval_complex(g, d.center)) - derivative_bound(g, d) * d.radius;
    if (!best || v < *best) best = v;
  }
  return round_down_dyadic(*best, 64);
}

std::optional<BigRat> max_abs_value_upper(const IntPoly& g, const RootEnclosures& e) {
  if (e.overlapping || e.disks.empty()) return std::nullopt;
  std::optional<BigRat> best;
  for (const auto& d : e.disks) {
    BigRat v = modulus_hi(eval_complex(g, d.center)) + derivative_bound(g, d) * d.radius;
    if (!best || v > *best) best = v;
  }
  return round_up_dyadic(*best, 64);
}

std::optional<bool> has_rational_root(const IntPoly& f, const FactorBudget& budget) {
  require_nonzero(f);
  if (f.degree() <= 0) return false;
  if (f[0] == 0) return true;
  Factorization f0 = factorize(f[0], budget);
  Factorization fn = factorize(f.leading(), budget);
  if (!f0.complete() || !fn.complete()) return std::nullopt;
  std::vector<BigInt> ps = divisors(f0), qs = divisors(fn);
  for (const auto& q : qs)
    for (const auto& p : ps) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      if (eval_homogeneous(f, p, q) == 0 || eval_homogeneous(f, BigInt(-p), q) == 0) return true;
    }
  return false;
}

NonArchBounds nonarch_root_degree_bounds(const BivarPoly& f) {
  if (f.degree() < 1) throw Error(ErrorCode::PreconditionViolated, "degree in Y must be positive");
  if (f[0].is_zero() || f.leading().is_zero()) throw Error(ErrorCode::ZeroCoefficient, "a_0 or a_n is zero");
  const long n = f.degree();
  std::vector<Degree> prof = degree_profile(f);
  BigRat M(max_degree(prof, 0, static_cast<std::size_t>(n)).value());
  BigRat up = M - prof.back().value();
  BigRat L = BigRat(prof[0].value()) - max_degree(prof, 1, prof.size()).value();
  NonArchBounds out;
  out.upper = std::max(up, BigRat(up / n));
  out.lower = std::min(L, BigRat(L / n));
  return out;
}

}  // namespace resprime
