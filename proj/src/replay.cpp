#include "resprime/replay.hpp"

#include <functional>
#include <map>

#include "resprime/combos.hpp"
#include "resprime/criteria.hpp"
#include "resprime/criteria_bivar.hpp"
#include "resprime/error.hpp"

namespace resprime {

namespace {

struct Inputs {
  const Certificate& c;

  IntPoly poly(const char* key) const { return parse_int_poly(c.input(key)); }
  BivarPoly bivar(const char* key) const { return parse_bivar(c.input(key)); }
  BigInt integer(const char* key) const { return parse_integer(c.input(key)); }
  BigRat rational(const char* key) const { return parse_rational(c.input(key)); }
  unsigned small(const char* key) const {
    BigInt v = integer(key);
    if (v < 0 || v > 1'000'000) throw Error(ErrorCode::ShapeViolation, std::string("input ") + key + " out of range");
    return static_cast<unsigned>(v.get_ui());
  }
  RootMode mode() const { return parse_root_mode(c.input("mode")); }
};

using Runner = std::function<Certificate(const Inputs&, CheckEnv&)>;

Certificate form_runner(QuadraticForm form, const Inputs& in, CheckEnv& env) {
  BigInt m = form == QuadraticForm::RealQuadratic ? in.integer("m") : BigInt(0);
  return check_quadratic_form(in.poly("f"), form, m, in.integer("q"), parse_dominant_end(in.c.input("end")), env);
}

Certificate combo_runner(const Inputs& in, CheckEnv& env) {
  return combos_for(in.poly("f"), in.poly("g"), in.rational("A"), in.rational("B"), in.integer("q"),
                    parse_combo_route(in.c.input("route")), env)
      .cert;
}

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"separated_roots",
       [](const Inputs& in, CheckEnv& env) {
         return check_separated_roots(in.poly("f"), in.poly("g"), in.mode(), in.integer("q"), env);
       }},
      {"separated_roots_d1",
       [](const Inputs& in, CheckEnv& env) { return check_separated_roots_d1(in.poly("f"), in.poly("g"), in.mode(), env); }},
      {"separated_roots_divisor",
       [](const Inputs& in, CheckEnv& env) {
         return check_separated_roots_divisor(in.poly("f"), in.poly("g"), in.mode(), in.integer("d"), env);
       }},
      {"separated_roots_dk",
       [](const Inputs& in, CheckEnv& env) {
         return check_separated_roots_dk(in.poly("f"), in.poly("g"), in.mode(), in.small("k"), env);
       }},
      {"root_value_divisor",
       [](const Inputs& in, CheckEnv& env) {
         return check_root_value_divisor(in.poly("f"), in.poly("g"), in.mode(), in.small("r"), in.integer("d"), env);
       }},
      {"root_value_dk",
       [](const Inputs& in, CheckEnv& env) {
         return check_root_value_dk(in.poly("f"), in.poly("g"), in.mode(), in.small("r"), in.small("k"), env);
       }},
      {"root_value_prime",
       [](const Inputs& in, CheckEnv& env) {
         return check_root_value_prime(in.poly("f"), in.poly("g"), in.mode(), in.small("r"), in.integer("q"), env);
       }},
      {"disk_annulus",
       [](const Inputs& in, CheckEnv& env) {
         return check_disk_annulus(in.poly("f"), in.poly("g"), in.rational("A"), in.rational("B"), in.integer("q"), env);
       }},
      {"dominant_coefficient",
       [](const Inputs& in, CheckEnv& env) {
         return check_dominant_coefficient(in.poly("f"), in.poly("g"), in.small("j"), in.integer("q"), env);
       }},
      {"linear_value",
       [](const Inputs& in, CheckEnv& env) {
         return check_linear_value(in.poly("f"), in.integer("b"), in.integer("c"), in.small("j"), in.integer("q"), env);
       }},
      {"linear_value_littlewood",
       [](const Inputs& in, CheckEnv& env) {
         return check_linear_value_littlewood(in.poly("f"), in.integer("b"), in.integer("c"), env);
       }},
      {"linear_value_lead",
       [](const Inputs& in, CheckEnv& env) {
         return check_linear_value_lead(in.poly("f"), in.integer("b"), in.integer("c"), env);
       }},
      {"linear_value_power",
       [](const Inputs& in, CheckEnv& env) {
         if (in.integer("b") != 1) throw Error(ErrorCode::ShapeViolation, "b must be 1");
         return check_linear_value_power(in.poly("f"), in.integer("c"), in.small("j"), env);
       }},
      {"gaussian_form", [](const Inputs& in, CheckEnv& env) { return form_runner(QuadraticForm::Gaussian, in, env); }},
      {"real_quadratic_form",
       [](const Inputs& in, CheckEnv& env) { return form_runner(QuadraticForm::RealQuadratic, in, env); }},
      {"eisenstein_form",
       [](const Inputs& in, CheckEnv& env) { return form_runner(QuadraticForm::Eisenstein, in, env); }},
      {"golden_form", [](const Inputs& in, CheckEnv& env) { return form_runner(QuadraticForm::Golden, in, env); }},
      {"close_roots_dk",
       [](const Inputs& in, CheckEnv& env) {
         return check_close_roots_dk(in.poly("f"), in.poly("g"), in.mode(), in.small("r"), in.small("k"), env);
       }},
      {"close_roots_prime",
       [](const Inputs& in, CheckEnv& env) {
         return check_close_roots_prime(in.poly("f"), in.poly("g"), in.mode(), in.small("r"), in.integer("p"), env);
       }},
      {"close_roots_pair",
       [](const Inputs& in, CheckEnv& env) {
         return check_close_roots_pair(in.poly("f"), in.poly("g"), in.mode(), in.small("r"), in.integer("p"), env);
       }},
      {"hadamard_pair",
       [](const Inputs& in, CheckEnv& env) {
         return check_hadamard_pair(in.poly("f"), in.poly("g"), in.mode(), in.integer("d"), env);
       }},
      {"combo_lower_degree", combo_runner},
      {"combo_equal_degree", combo_runner},
      {"combo_marden", combo_runner},
      {"combo_higher_degree", combo_runner},
      {"bivar_factor_bound",
       [](const Inputs& in, CheckEnv& env) {
         return check_bivar_factor_bound(in.bivar("f"), in.bivar("g"), in.small("k"),
                                         parse_bivar_side(in.c.input("side")), env);
       }},
      {"bivar_degree_dominance",
       [](const Inputs& in, CheckEnv& env) {
         return check_bivar_degree_dominance(in.bivar("f"), in.bivar("g"),
                                             parse_dominance_variant(in.c.input("variant")), env);
       }},
      {"bivar_divisor_bound",
       [](const Inputs& in, CheckEnv& env) {
         return check_bivar_divisor_bound(in.bivar("f"), in.bivar("g"), parse_rat_poly(in.c.input("d")), env);
       }},
      {"bivar_combo_lower",
       [](const Inputs& in, CheckEnv& env) {
         return check_bivar_combination(in.bivar("f"), in.bivar("g"), CombinationShape::Lower, in.rational("alpha"),
                                        in.rational("beta"), env);
       }},
      {"bivar_combo_equal",
       [](const Inputs& in, CheckEnv& env) {
         return check_bivar_combination(in.bivar("f"), in.bivar("g"), CombinationShape::Equal, in.rational("alpha"),
                                        in.rational("beta"), env);
       }},
      {"bivar_spike",
       [](const Inputs& in, CheckEnv& env) {
         return check_bivar_spike(in.bivar("f"), in.bivar("g"), in.small("j"), env);
       }},
  };
  return table;
}

}  // namespace

Certificate rerun(const Certificate& cert, CheckEnv& env) {
  auto it = runners().find(cert.criterion);
  if (it == runners().end()) throw Error(ErrorCode::ShapeViolation, "unknown criterion '" + cert.criterion + "'");
  return it->second(Inputs{cert}, env);
}

VerifyResult verify_certificate(const Certificate& cert) {
  if (cert.raw_body.empty()) return {false, "certificate has no body"};
  if (digest_of(cert.raw_body) != cert.digest) return {false, "digest mismatch"};
  Certificate again;
  try {
    CheckEnv env(&cert);
    again = rerun(cert, env);
  } catch (const Error& e) {
    return {false, std::string("replay failed: ") + e.what()};
  }
  if (serialize_body(again) != cert.raw_body) return {false, "replay does not reproduce the certificate"};
  if (again.verdict.success()) {
    for (const auto& w : again.witnesses)
      if (!w.holds()) return {false, "comparison '" + w.label + "' does not hold"};
    for (const auto& p : again.pairs)
      for (const auto& w : p.witnesses)
        if (!w.holds()) return {false, "pair comparison '" + w.label + "' does not hold"};
  }
  return {true, "ok: " + summary_line(again)};
}

}  // namespace resprime
