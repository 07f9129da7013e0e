#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "resprime/certificate.hpp"
#include "resprime/poly.hpp"

namespace resprime {

// Irreducible combinations M f + N g. Every checker first verifies
// |Res(f, g)| = p q with p prime, the gap between A and B, and the two
// dominance inequalities that put the roots of f in |z| <= A and those of g
// in |z| >= B. It then lists every integer pair of the admissible box.
//
// Both sides of the per-pair bounds are evaluated with the radical rounded in
// the safe direction, so listed pairs are certified; pairs on the boundary
// may be dropped.

enum class ComboCase { LowerDegree, EqualDegree, HigherDegree };
std::string to_string(ComboCase c);

// Which multiplier the gap bounds directly:
//   MFirst: |M| <= (B - A) / q^(1/e), then |N| <= |M| * (...)
//   NFirst: |N| bounded by the gap, then |M| <= |N| * (...)
//   Marden: |M| |a_n| / |b_n| < |N| <= (B - 3A) / (2 q^(1/n))
enum class ComboRoute { MFirst, NFirst, Marden };
std::string to_string(ComboRoute r);
ComboRoute parse_combo_route(std::string_view s);

inline constexpr std::size_t kMaxComboBox = 20000;

struct ComboRange {
  ComboCase kase = ComboCase::LowerDegree;
  ComboRoute route = ComboRoute::NFirst;
  BigRat A, B;
  BigInt q;
  Certificate cert;  // admissible pairs in cert.pairs, sorted by (N, M)
};

// deg f < deg g; the NFirst route.
ComboRange combos_lower_degree(const IntPoly& f, const IntPoly& g, const BigRat& A, const BigRat& B, const BigInt& q,
                               CheckEnv& env);
// deg f = deg g; MFirst, NFirst or Marden.
ComboRange combos_equal_degree(const IntPoly& f, const IntPoly& g, const BigRat& A, const BigRat& B, const BigInt& q,
                               ComboRoute route, CheckEnv& env);
// deg f > deg g; MFirst or NFirst.
ComboRange combos_higher_degree(const IntPoly& f, const IntPoly& g, const BigRat& A, const BigRat& B, const BigInt& q,
                                ComboRoute route, CheckEnv& env);

// Dispatches on the degree case and route.
ComboRange combos_for(const IntPoly& f, const IntPoly& g, const BigRat& A, const BigRat& B, const BigInt& q,
                      ComboRoute route, CheckEnv& env);

struct ComboSearch {
  std::optional<BigRat> A, B;
  std::optional<BigInt> q;
  std::optional<ComboRoute> route;
};

// Tries every route of the degree case over a small (A, B, q) grid, honoring
// fixed parameters, and keeps the range with most pairs.
ComboRange combos_auto(const IntPoly& f, const IntPoly& g, CheckEnv& env, const ComboSearch& fixed = {});

}  // namespace resprime
