#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "resprime/arith.hpp"
#include "resprime/bivar.hpp"
#include "resprime/poly.hpp"

namespace resprime {

// |a_0| > sum_{i>=1} |a_i| delta^i: no roots with |z| <= delta. With
// strict == false the test is >= and only excludes |z| < delta.
bool no_roots_in_disk(const IntPoly& f, const BigRat& delta, bool strict = true);
// |a_n| > sum_{i<n} |a_i| delta^(i-n): every root has |z| < delta. With
// strict == false the test is >= and gives |z| <= delta.
bool all_roots_in_disk(const IntPoly& f, const BigRat& delta, bool strict = true);

// No root lies in the open annulus inner < |z| < outer. inner is exactly 0
// when j == 0; outer is empty (infinity) when j == deg f.
struct AnnulusExclusion {
  DirectedBound inner;
  std::optional<DirectedBound> outer;
};
// Requires |a_j| delta^j > sum_{i != j} |a_i| delta^i; empty when that fails.
// Throws BinomialInput for polynomials with at most two nonzero terms.
std::optional<AnnulusExclusion> annulus_exclusion(const IntPoly& f, unsigned j, const BigRat& delta);

// Upper bound on the modulus of every root, 2 * max |a_i/a_n|^(1/(n-i)) with
// the constant term halved.
BigRat fujiwara_bound(const IntPoly& f);

struct ComplexRat {
  BigRat re;
  BigRat im;
};

struct RootDisk {
  ComplexRat center;
  BigRat radius;
  unsigned multiplicity = 1;
};

// Disks whose union contains every complex root of f. Each group of equal
// multiplicity covers the roots of one squarefree factor, with radii
// n |s(z_i)| / (|lc s| prod |z_i - z_j|) computed exactly from the centers.
struct RootEnclosures {
  std::vector<RootDisk> disks;
  bool overlapping = false;
};

// Aberth-Ehrlich approximations (double precision) for a squarefree f.
std::vector<std::complex<double>> aberth_approximations(const IntPoly& f, int max_iterations = 200);

RootEnclosures enclose_roots(const IntPoly& f);
// Rebuilds enclosures from stored centers and multiplicities, recomputing
// every radius. Throws ShapeViolation when the centers do not fit f.
RootEnclosures enclosures_from_centers(const IntPoly& f, const std::vector<RootDisk>& stored);

// Lower bound on min |theta - xi| over roots theta of the first set and xi of
// the second; empty when either set has overlapping disks.
std::optional<BigRat> min_pairwise_distance_lower(const RootEnclosures& a, const RootEnclosures& b);
std::optional<BigRat> max_pairwise_distance_upper(const RootEnclosures& a, const RootEnclosures& b);

// Bounds on |g| over the union of the disks.
std::optional<BigRat> min_abs_value_lower(const IntPoly& g, const RootEnclosures& e);
std::optional<BigRat> max_abs_value_upper(const IntPoly& g, const RootEnclosures& e);

// Empty when the divisors of a_0 and a_n could not be enumerated.
std::optional<bool> has_rational_root(const IntPoly& f, const FactorBudget& budget = {});

// With |h| = rho^(deg_X h), every root theta of f(X, Y) in Y satisfies
// lower <= log_rho |theta| <= upper. Requires a_0 and a_n nonzero.
struct NonArchBounds {
  BigRat upper;
  BigRat lower;
};
NonArchBounds nonarch_root_degree_bounds(const BivarPoly& f);

}  // namespace resprime
