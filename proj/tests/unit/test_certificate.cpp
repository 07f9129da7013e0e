#include "doctest.h"
#include "frozen_instances.hpp"
#include "resprime/combos.hpp"
#include "resprime/criteria.hpp"
#include "resprime/criteria_bivar.hpp"
#include "resprime/replay.hpp"
#include "test_support.hpp"

using namespace resprime;
using testsupport::ip;

TEST_CASE("serialization round trip") {
  CheckEnv env;
  Certificate c = check_separated_roots(ip({-1, 1, -2, 3, 9}), ip({35, 3, -1, -1, 1}), RootMode::Direct, 1, env);
  std::string text = serialize(c);
  CHECK(text.rfind("resprime-certificate 1\n", 0) == 0);
  Certificate back = parse_certificate(text);
  CHECK(back.criterion == c.criterion);
  CHECK(back.verdict.kind == c.verdict.kind);
  CHECK(serialize_body(back) == serialize_body(c));
  CHECK(back.digest == digest_of(serialize_body(c)));
  CHECK(back.find_enclosure("f") != nullptr);
  CHECK(verify_certificate(back).ok);
}

TEST_CASE("several certificates in one stream") {
  CheckEnv env;
  auto certs = certify_auto(ip({-1, 1, -2, 3, 9}), ip({35, 3, -1, -1, 1}), env);
  std::string text = "# header comment\n\n";
  int successes = 0;
  for (const auto& c : certs)
    if (c.verdict.success()) {
      text += serialize(c) + "\n# between\n";
      ++successes;
    }
  auto parsed = parse_certificates(text);
  CHECK(static_cast<int>(parsed.size()) == successes);
  for (const auto& p : parsed) CHECK(verify_certificate(p).ok);
}

TEST_CASE("tampering is detected") {
  CheckEnv env;
  Certificate c = check_disk_annulus(ip({-1, 1, -2, 3, 9}), ip({35, 3, -1, -1, 1}), BigRat(1), BigRat(2), 1, env);
  std::string text = serialize(c);

  std::string changed = text;
  changed.replace(changed.find("input.A = 1"), 11, "input.A = 2");
  CHECK_FALSE(verify_certificate(parse_certificate(changed)).ok);

  // Re-digesting does not help: the replay no longer reproduces the body.
  Certificate forged = parse_certificate(changed);
  std::string body = forged.raw_body;
  std::string redigested = body + "digest = " + digest_of(body) + "\nend\n";
  VerifyResult r = verify_certificate(parse_certificate(redigested));
  CHECK_FALSE(r.ok);

  std::string unknown = text;
  unknown.replace(unknown.find("criterion = disk_annulus"), 24, "criterion = disk_annulux");
  Certificate u = parse_certificate(unknown);
  std::string ubody = u.raw_body;
  VerifyResult ur = verify_certificate(parse_certificate(ubody + "digest = " + digest_of(ubody) + "\nend\n"));
  CHECK_FALSE(ur.ok);
  CHECK(ur.message.find("unknown criterion") != std::string::npos);

  CHECK_THROWS_AS(parse_certificate("resprime-certificate 9\nend\n"), Error);
  CHECK_THROWS_AS(parse_certificate("not a certificate"), Error);
}

TEST_CASE("every family replays") {
  CheckEnv env;
  std::vector<Certificate> certs;
  certs.push_back(check_linear_value(ip({15, -3, -2, -1, 1, 1}), 11, 2, 0, 1, env));
  certs.push_back(check_quadratic_form(ip({92, 1, -3, 3, -1, 1}), QuadraticForm::Gaussian, 0, 1,
                                       DominantEnd::Constant, env));
  certs.push_back(check_close_roots_prime(ip({9, 3, -3, 1}), ip({-1, 1}), RootMode::Direct, 1, 5, env));
  certs.push_back(check_hadamard_pair(ip({-1, 1}), ip({1, 1}), RootMode::Direct, 3, env));
  certs.push_back(combos_for(ip({-1, 1}), ip({17, 1, 1}), BigRat(1), BigRat(3), 1, ComboRoute::NFirst, env).cert);
  certs.push_back(check_bivar_degree_dominance(parse_bivar(frozen::ex8_f(4)), parse_bivar(frozen::ex8_g),
                                               DominanceVariant::StrictF, env));
  certs.push_back(check_bivar_combination(parse_bivar(frozen::comb_f), parse_bivar(frozen::comb_g),
                                          CombinationShape::Lower, BigRat(1), BigRat(1), env));
  for (const auto& c : certs) {
    CAPTURE(c.criterion);
    REQUIRE(c.verdict.success());
    VerifyResult r = verify_certificate(parse_certificate(serialize(c)));
    CHECK(r.ok);
    CHECK(r.message.rfind("ok: ", 0) == 0);
  }
}

TEST_CASE("identical inputs give identical text") {
  CheckEnv a, b;
  auto x = certify_auto(ip({-1, 1, -2, 3, 9}), ip({35, 3, -1, -1, 1}), a);
  auto y = certify_auto(ip({-1, 1, -2, 3, 9}), ip({35, 3, -1, -1, 1}), b);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(serialize(x[i]) == serialize(y[i]));
}
