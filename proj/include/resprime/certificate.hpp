#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resprime/arith.hpp"
#include "resprime/oracle.hpp"
#include "resprime/root_bounds.hpp"

namespace resprime {

enum class Rel { Gt, Ge, Lt, Le, Eq, Ne };

const char* rel_symbol(Rel r);

// One exact rational comparison the verdict depends on.
struct Comparison {
  std::string label;
  BigRat lhs;
  Rel rel = Rel::Gt;
  BigRat rhs;

  bool holds() const;
};

enum class VerdictKind { Irreducible, FactorBound, BothIrreducible, IrreducibleCombinations, Inconclusive };

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  unsigned long bound = 0;  // factor bound, or number of certified combinations
  std::string reason;       // why a check was inconclusive

  bool success() const { return kind != VerdictKind::Inconclusive; }
  static Verdict irreducible() { return {VerdictKind::Irreducible, 1, {}}; }
  static Verdict both_irreducible() { return {VerdictKind::BothIrreducible, 1, {}}; }
  static Verdict factor_bound(unsigned long k) { return {VerdictKind::FactorBound, k, {}}; }
  static Verdict combinations(unsigned long n) { return {VerdictKind::IrreducibleCombinations, n, {}}; }
  static Verdict inconclusive(std::string why) { return {VerdictKind::Inconclusive, 0, std::move(why)}; }
};

std::string to_string(const Verdict& v);

struct ComboPair {
  BigInt M;
  BigInt N;
  std::vector<Comparison> witnesses;
};

struct Certificate {
  std::string criterion;
  std::string subject;  // the polynomial(s) the verdict speaks about
  Verdict verdict;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<Comparison> witnesses;
  std::vector<std::pair<std::string, RootEnclosures>> enclosures;
  std::vector<ComboPair> pairs;

  // Filled by parse_certificate only.
  std::string raw_body;
  std::string digest;

  std::optional<std::string> find_input(std::string_view key) const;
  const std::string& input(std::string_view key) const;  // throws ShapeViolation
  std::optional<std::string> find_value(std::string_view key) const;
  const RootEnclosures* find_enclosure(std::string_view key) const;
};

inline constexpr int kCertificateVersion = 1;

// Canonical key-value text; every number is a decimal integer or n/d.
std::string serialize_body(const Certificate& c);
std::string serialize(const Certificate& c);  // body, digest line, "end"
std::string digest_of(std::string_view body);

Certificate parse_certificate(std::string_view text);
std::vector<Certificate> parse_certificates(std::string_view text);

// One-line human summary.
std::string summary_line(const Certificate& c);

// Shared state for a run of checkers: budgets, caches, and (in replay mode)
// the certificate whose stored root enclosures replace root finding.
class CheckEnv {
 public:
  FactorBudget factor_budget;
  OracleBudget oracle_budget;

  CheckEnv() = default;
  explicit CheckEnv(const Certificate* replay_source) : replay_(replay_source) {}

  bool replaying() const { return replay_ != nullptr; }

  BigInt resultant(const IntPoly& f, const IntPoly& g);
  const Factorization& factor(const BigInt& n);
  bool prime(const BigInt& n);

  // Enclosures of the roots of p, stored under `key` in certificates.
  const RootEnclosures& roots(const std::string& key, const IntPoly& p);

 private:
  const Certificate* replay_ = nullptr;
  std::map<std::pair<std::string, std::string>, BigInt> res_cache_;
  std::map<BigInt, Factorization> fac_cache_;
  std::map<BigInt, bool> prime_cache_;
  std::map<std::string, RootEnclosures> root_cache_;
};

}  // namespace resprime
