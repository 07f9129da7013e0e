#include "resprime/certificate.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

#include "resprime/error.hpp"
#include "resprime/resultant.hpp"

namespace resprime {

namespace {

constexpr const char* kHeader = "resprime-certificate";

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_pipes(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '|') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

void check_field(const std::string& s, const char* what) {
  if (s.find('\n') != std::string::npos || s.find('|') != std::string::npos)
    throw Error(ErrorCode::ShapeViolation, std::string("certificate ") + what + " contains '|' or a newline");
}

const char* verdict_key(VerdictKind k) {
  switch (k) {
    case VerdictKind::Irreducible: return "irreducible";
    case VerdictKind::FactorBound: return "factor_bound";
    case VerdictKind::BothIrreducible: return "both_irreducible";
    case VerdictKind::IrreducibleCombinations: return "irreducible_combinations";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

VerdictKind parse_verdict_key(const std::string& s) {
  if (s == "irreducible") return VerdictKind::Irreducible;
  if (s == "factor_bound") return VerdictKind::FactorBound;
  if (s == "both_irreducible") return VerdictKind::BothIrreducible;
  if (s == "irreducible_combinations") return VerdictKind::IrreducibleCombinations;
  if (s == "inconclusive") return VerdictKind::Inconclusive;
  throw Error(ErrorCode::ParseError, "unknown verdict '" + s + "'");
}

Rel parse_rel(const std::string& s) {
  if (s == ">") return Rel::Gt;
  if (s == ">=") return Rel::Ge;
  if (s == "<") return Rel::Lt;
  if (s == "<=") return Rel::Le;
  if (s == "=") return Rel::Eq;
  if (s == "!=") return Rel::Ne;
  throw Error(ErrorCode::ParseError, "unknown relation '" + s + "'");
}

std::string witness_text(const Comparison& c) {
  check_field(c.label, "label");
  return c.label + " | " + to_string(c.lhs) + " | " + rel_symbol(c.rel) + " | " + to_string(c.rhs);
}

Comparison parse_witness(const std::string& v) {
  auto parts = split_pipes(v);
  if (parts.size() != 4) throw Error(ErrorCode::ParseError, "witness needs 4 fields: " + v);
  return {parts[0], parse_rational(parts[1]), parse_rel(parts[2]), parse_rational(parts[3])};
}

unsigned long parse_count(const std::string& s) {
  BigInt v = parse_integer(s);
  if (v < 0 || !v.fits_ulong_p()) throw Error(ErrorCode::ParseError, "bad count '" + s + "'");
  return v.get_ui();
}

}  // namespace

const char* rel_symbol(Rel r) {
  switch (r) {
    case Rel::Gt: return ">";
    case Rel::Ge: return ">=";
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Eq: return "=";
    case Rel::Ne: return "!=";
  }
  return "?";
}

bool Comparison::holds() const {
  switch (rel) {
    case Rel::Gt: return lhs > rhs;
    case Rel::Ge: return lhs >= rhs;
    case Rel::Lt: return lhs < rhs;
    case Rel::Le: return lhs <= rhs;
    case Rel::Eq: return lhs == rhs;
    case Rel::Ne: return lhs != rhs;
  }
  return false;
}

std::string to_string(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::Irreducible: return "irreducible";
    case VerdictKind::BothIrreducible: return "both irreducible";
    case VerdictKind::FactorBound:
      return "at most " + std::to_string(v.bound) + (v.bound == 1 ? " irreducible factor" : " irreducible factors");
    case VerdictKind::IrreducibleCombinations: return std::to_string(v.bound) + " irreducible combinations";
    case VerdictKind::Inconclusive: return "inconclusive (" + v.reason + ")";
  }
  return "?";
}

std::optional<std::string> Certificate::find_input(std::string_view key) const {
  for (const auto& [k, v] : inputs)
    if (k == key) return v;
  return std::nullopt;
}

const std::string& Certificate::input(std::string_view key) const {
  for (const auto& [k, v] : inputs)
    if (k == key) return v;
  throw Error(ErrorCode::ShapeViolation, "certificate lacks input '" + std::string(key) + "'");
}

std::optional<std::string> Certificate::find_value(std::string_view key) const {
  for (const auto& [k, v] : values)
    if (k == key) return v;
  return std::nullopt;
}

const RootEnclosures* Certificate::find_enclosure(std::string_view key) const {
  for (const auto& [k, e] : enclosures)
    if (k == key) return &e;
  return nullptr;
}

std::string serialize_body(const Certificate& c) {
  std::ostringstream os;
  os << kHeader << ' ' << kCertificateVersion << '\n';
  os << "criterion = " << c.criterion << '\n';
  os << "subject = " << c.subject << '\n';
  os << "verdict = " << verdict_key(c.verdict.kind) << '\n';
  if (c.verdict.success()) {
    os << "bound = " << c.verdict.bound << '\n';
  } else {
    check_field(c.verdict.reason, "reason");
    os << "reason = " << c.verdict.reason << '\n';
  }
  for (const auto& [k, v] : c.inputs) {
    check_field(v, "input");
    os << "input." << k << " = " << v << '\n';
  }
  for (const auto& [k, v] : c.values) {
    check_field(v, "value");
    os << "value." << k << " = " << v << '\n';
  }
  for (const auto& w : c.witnesses) os << "witness = " << witness_text(w) << '\n';
  for (const auto& [k, e] : c.enclosures) {
    if (e.disks.empty()) os << "enclosure." << k << " = none\n";
    for (const auto& d : e.disks)
      os << "enclosure." << k << " = " << d.multiplicity << " | " << to_string(d.center.re) << " | "
         << to_string(d.center.im) << " | " << to_string(d.radius) << '\n';
  }
  for (const auto& p : c.pairs) {
    os << "pair = " << to_string(p.M) << " | " << to_string(p.N) << '\n';
    for (const auto& w : p.witnesses) os << "pair.witness = " << witness_text(w) << '\n';
  }
  return os.str();
}

std::string digest_of(std::string_view body) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : body) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string serialize(const Certificate& c) {
  std::string body = serialize_body(c);
  return body + "digest = " + digest_of(body) + "\nend\n";
}

std::vector<Certificate> parse_certificates(std::string_view text) {
  std::vector<Certificate> out;
  std::optional<Certificate> cur;
  bool have_digest = false;
  std::size_t pos = 0;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::ParseError, "certificate line " + std::to_string(line_no) + ": " + msg);
  };
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    std::string line = trim(raw);
    if (!cur) {
      if (line.empty() || line[0] == '#') continue;
      std::string expect = std::string(kHeader) + ' ' + std::to_string(kCertificateVersion);
      if (line != expect) fail("expected '" + expect + "'");
      cur.emplace();
      have_digest = false;
      cur->raw_body = std::string(raw) + "\n";
      continue;
    }
    if (line == "end") {
      if (!have_digest) fail("missing digest");
      out.push_back(std::move(*cur));
      cur.reset();
      continue;
    }
    if (have_digest) fail("content after digest");
    std::size_t eq = line.find(" = ");
    if (eq == std::string::npos) fail("expected 'key = value'");
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 3);
    if (key == "digest") {
      cur->digest = val;
      have_digest = true;
      continue;
    }
    cur->raw_body += std::string(raw) + "\n";
    Certificate& c = *cur;
    if (key == "criterion") {
      c.criterion = val;
    } else if (key == "subject") {
      c.subject = val;
    } else if (key == "verdict") {
      c.verdict.kind = parse_verdict_key(val);
    } else if (key == "bound") {
      c.verdict.bound = parse_count(val);
    } else if (key == "reason") {
      c.verdict.reason = val;
    } else if (key.rfind("input.", 0) == 0) {
      c.inputs.emplace_back(key.substr(6), val);
    } else if (key.rfind("value.", 0) == 0) {
      c.values.emplace_back(key.substr(6), val);
    } else if (key == "witness") {
      c.witnesses.push_back(parse_witness(val));
    } else if (key.rfind("enclosure.", 0) == 0) {
      std::string name = key.substr(10);
      if (c.enclosures.empty() || c.enclosures.back().first != name) c.enclosures.emplace_back(name, RootEnclosures{});
      if (val == "none") continue;
      auto parts = split_pipes(val);
      if (parts.size() != 4) fail("enclosure needs 4 fields");
      RootDisk d;
      d.multiplicity = static_cast<unsigned>(parse_count(parts[0]));
      d.center.re = parse_rational(parts[1]);
      d.center.im = parse_rational(parts[2]);
      d.radius = parse_rational(parts[3]);
      c.enclosures.back().second.disks.push_back(std::move(d));
    } else if (key == "pair") {
      auto parts = split_pipes(val);
      if (parts.size() != 2) fail("pair needs 2 fields");
      c.pairs.push_back({parse_integer(parts[0]), parse_integer(parts[1]), {}});
    } else if (key == "pair.witness") {
      if (c.pairs.empty()) fail("pair.witness before any pair");
      c.pairs.back().witnesses.push_back(parse_witness(val));
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (cur) throw Error(ErrorCode::ParseError, "certificate not terminated by 'end'");
  return out;
}

Certificate parse_certificate(std::string_view text) {
  auto all = parse_certificates(text);
  if (all.size() != 1) throw Error(ErrorCode::ParseError, "expected exactly one certificate, found " + std::to_string(all.size()));
  return std::move(all.front());
}

std::string summary_line(const Certificate& c) {
  std::string s = c.criterion + ": " + to_string(c.verdict);
  if (c.verdict.success()) s += " [" + c.subject + "]";
  return s;
}

BigInt CheckEnv::resultant(const IntPoly& f, const IntPoly& g) {
  auto key = std::make_pair(to_bracket(f), to_bracket(g));
  auto it = res_cache_.find(key);
  if (it != res_cache_.end()) return it->second;
  BigInt r = resprime::resultant(f, g);
  res_cache_.emplace(std::move(key), r);
  return r;
}

const Factorization& CheckEnv::factor(const BigInt& n) {
  BigInt a = abs_of(n);
  auto it = fac_cache_.find(a);
  if (it != fac_cache_.end()) return it->second;
  return fac_cache_.emplace(a, factorize(a, factor_budget)).first->second;
}

bool CheckEnv::prime(const BigInt& n) {
  BigInt a = abs_of(n);
  auto it = prime_cache_.find(a);
  if (it != prime_cache_.end()) return it->second;
  bool p = is_prime(a);
  prime_cache_.emplace(a, p);
  return p;
}

const RootEnclosures& CheckEnv::roots(const std::string& key, const IntPoly& p) {
  if (replay_) {
    std::string cache_key = "replay:" + key + ":" + to_bracket(p);
    auto it = root_cache_.find(cache_key);
    if (it != root_cache_.end()) return it->second;
    const RootEnclosures* stored = replay_->find_enclosure(key);
    if (!stored) throw Error(ErrorCode::ShapeViolation, "certificate lacks enclosure '" + key + "'");
    return root_cache_.emplace(cache_key, enclosures_from_centers(p, stored->disks)).first->second;
  }
  std::string cache_key = to_bracket(p);
  auto it = root_cache_.find(cache_key);
  if (it != root_cache_.end()) return it->second;
  return root_cache_.emplace(cache_key, enclose_roots(p)).first->second;
}

}  // namespace resprime
