#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "resprime/combos.hpp"
#include "resprime/criteria.hpp"
#include "resprime/criteria_bivar.hpp"
#include "resprime/error.hpp"
#include "resprime/oracle.hpp"
#include "resprime/replay.hpp"
#include "resprime/resultant.hpp"

using namespace resprime;
using nlohmann::json;

namespace {

enum Exit { kFound = 0, kNone = 1, kUsage = 2, kCrossCheck = 3 };

struct Common {
  std::string format = "text";
  long budget_ms = 0;
  std::optional<std::string> A, B, q;
  std::optional<unsigned> j, k;
  std::string criteria;

  void apply(CheckEnv& env) const {
    if (budget_ms > 0) env.factor_budget.time_limit = std::chrono::milliseconds(budget_ms);
  }
  AutoOptions auto_options() const {
    AutoOptions o;
    std::stringstream ss(criteria);
    for (std::string id; std::getline(ss, id, ',');)
      if (!id.empty()) o.criteria.push_back(id);
    if (A) o.A = parse_rational(*A);
    if (B) o.B = parse_rational(*B);
    if (q) o.q = parse_integer(*q);
    o.j = j;
    o.k = k;
    return o;
  }
};

void add_common(CLI::App* app, Common& c, bool params) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--budget-ms", c.budget_ms, "Time limit for integer factorization");
  if (params) {
    app->add_option("--A", c.A, "Radius of the disk holding the roots of f");
    app->add_option("--B", c.B, "Radius outside which the roots of g lie");
    app->add_option("--q", c.q, "Cofactor q in |value| = p q");
    app->add_option("--j", c.j, "Coefficient index");
    app->add_option("--k", c.k, "Factor bound");
    app->add_option("--criteria", c.criteria, "Comma-separated criterion ids");
  }
}

json comparison_json(const Comparison& w) {
  return {{"label", w.label},
          {"lhs", to_string(w.lhs)},
          {"rel", rel_symbol(w.rel)},
          {"rhs", to_string(w.rhs)},
          {"holds", w.holds()}};
}

json certificate_json(const Certificate& c) {
  json j;
  j["criterion"] = c.criterion;
  j["subject"] = c.subject;
  j["success"] = c.verdict.success();
  j["verdict"] = to_string(c.verdict);
  if (c.verdict.success()) j["bound"] = c.verdict.bound;
  else j["reason"] = c.verdict.reason;
  j["inputs"] = json::object();
  for (const auto& [k, v] : c.inputs) j["inputs"][k] = v;
  j["values"] = json::object();
  for (const auto& [k, v] : c.values) j["values"][k] = v;
  j["witnesses"] = json::array();
  for (const auto& w : c.witnesses) j["witnesses"].push_back(comparison_json(w));
  if (!c.pairs.empty()) {
    j["pairs"] = json::array();
    for (const auto& p : c.pairs) j["pairs"].push_back({to_string(p.M), to_string(p.N)});
  }
  j["certificate"] = serialize(c);
  return j;
}

// Successes as certificate blocks, everything as '#' summary lines.
void emit(const std::vector<Certificate>& certs, const std::string& format, bool all) {
  if (format == "json") {
    json out = {{"schema", "resprime-certificates"}, {"version", kCertificateVersion}, {"certificates", json::array()}};
    for (const auto& c : certs)
      if (all || c.verdict.success()) out["certificates"].push_back(certificate_json(c));
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (const auto& c : certs) std::cout << "# " << summary_line(c) << "\n";
  for (const auto& c : certs)
    if (c.verdict.success()) std::cout << serialize(c);
}

int found(const std::vector<Certificate>& certs) {
  for (const auto& c : certs)
    if (c.verdict.success()) return kFound;
  return kNone;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "F G" with bracketed F, or "F ; G".
std::pair<std::string, std::string> split_pair(const std::string& line) {
  std::size_t semi = line.find(';');
  if (semi != std::string::npos) return {line.substr(0, semi), line.substr(semi + 1)};
  if (!line.empty() && line[0] == '[') {
    int depth = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '[') ++depth;
      if (line[i] == ']' && --depth == 0) return {line.substr(0, i + 1), line.substr(i + 1)};
    }
  }
  std::istringstream ss(line);
  std::string a, b;
  ss >> a >> b;
  return {a, b};
}

int cmd_resultant(const std::string& fs, const std::string& gs, const std::string& method, const Common& c) {
  IntPoly f = parse_int_poly(fs), g = parse_int_poly(gs);
  const bool quadratic = g.degree() == 2;
  if ((method == "quad_shift" || method == "quad_binet") && !quadratic)
    throw Error(ErrorCode::PreconditionViolated, method + " needs a quadratic g");
  BigInt value;
  std::vector<std::pair<std::string, BigInt>> all;
  if (method == "prs" || method == "auto") all.emplace_back("prs", resultant(f, g));
  if (method == "sylvester" || method == "auto") all.emplace_back("sylvester", resultant_sylvester(f, g));
  if (method == "quad_shift" || (method == "auto" && quadratic))
    all.emplace_back("quad_shift", resultant_quadratic_shift(f, g[2], g[1], g[0]));
  if (method == "quad_binet" || (method == "auto" && quadratic))
    all.emplace_back("quad_binet", resultant_quadratic_binet(f, g[2], g[1], g[0]));
  value = all.front().second;
  for (const auto& [name, v] : all)
    if (abs_of(v) != abs_of(value))
      throw Error(ErrorCode::CrossCheckFailed, "resultant methods disagree: " + name + " gives " + to_string(v));
  if (c.format == "json") {
    json j = {{"resultant", to_string(value)}, {"abs", to_string(abs_of(value))}, {"methods", json::object()}};
    for (const auto& [name, v] : all) j["methods"][name] = to_string(v);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(value) << "\n";
  }
  return kFound;
}

int cmd_certify(const std::string& fs, std::optional<std::string> gs, const std::vector<std::string>& g_linear,
                const std::string& batch, bool all, const Common& c) {
  const AutoOptions opts = c.auto_options();
  if (!batch.empty()) {
    std::istringstream lines(read_input(batch));
    std::vector<Certificate> everything;
    for (std::string line; std::getline(lines, line);) {
      if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
      auto [a, b] = split_pair(line);
      CheckEnv env;
      c.apply(env);
      auto certs = certify_auto(parse_int_poly(a), parse_int_poly(b), env, opts);
      everything.insert(everything.end(), certs.begin(), certs.end());
    }
    emit(everything, c.format, all);
    return found(everything);
  }
  IntPoly f = parse_int_poly(fs);
  IntPoly g;
  if (!g_linear.empty()) {
    if (g_linear.size() != 2 || gs) throw Error(ErrorCode::ParseError, "--g-linear takes b and c and replaces G");
    g = IntPoly{BigInt(-parse_integer(g_linear[1])), parse_integer(g_linear[0])};
  } else if (gs) {
    g = parse_int_poly(*gs);
  } else {
    throw Error(ErrorCode::ParseError, "certify needs G or --g-linear b c");
  }
  CheckEnv env;
  c.apply(env);
  auto certs = certify_auto(f, g, env, opts);
  emit(certs, c.format, all);
  return found(certs);
}

int cmd_combos(const std::string& fs, const std::string& gs, const std::optional<std::string>& route,
               const Common& c) {
  IntPoly f = parse_int_poly(fs), g = parse_int_poly(gs);
  CheckEnv env;
  c.apply(env);
  ComboSearch fixed;
  if (c.A) fixed.A = parse_rational(*c.A);
  if (c.B) fixed.B = parse_rational(*c.B);
  if (c.q) fixed.q = parse_integer(*c.q);
  if (route) fixed.route = parse_combo_route(*route);
  ComboRange r = combos_auto(f, g, env, fixed);
  if (c.format == "json") {
    json j = certificate_json(r.cert);
    j["case"] = to_string(r.kase);
    j["route"] = to_string(r.route);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "# " << summary_line(r.cert) << "\n";
    std::cout << "# case " << to_string(r.kase) << ", route " << to_string(r.route) << ", A = " << to_string(r.A)
              << ", B = " << to_string(r.B) << ", q = " << to_string(r.q) << "\n";
    if (!r.cert.pairs.empty()) {
      std::cout << "#" << std::string(7, ' ') << "M" << std::string(7, ' ') << "N\n";
      for (const auto& p : r.cert.pairs) {
        std::string m = to_string(p.M), n = to_string(p.N);
        std::cout << "#" << std::string(8 - std::min<std::size_t>(8, m.size()), ' ') << m
                  << std::string(8 - std::min<std::size_t>(8, n.size()), ' ') << n << "\n";
      }
      std::cout << serialize(r.cert);
    }
  }
  return r.cert.verdict.success() ? kFound : kNone;
}

int cmd_bivar(const std::string& fs, const std::string& gs, const std::optional<std::string>& checker,
              const std::optional<std::string>& alpha, const std::optional<std::string>& beta, bool all,
              const Common& c) {
  BivarPoly f = parse_bivar(fs), g = parse_bivar(gs);
  CheckEnv env;
  c.apply(env);
  std::vector<Certificate> certs;
  if (alpha || beta) {
    BigRat a = alpha ? parse_rational(*alpha) : BigRat(1), b = beta ? parse_rational(*beta) : BigRat(1);
    CombinationShape shape = f.degree() < g.degree() ? CombinationShape::Lower : CombinationShape::Equal;
    certs.push_back(check_bivar_combination(f, g, shape, a, b, env));
  } else {
    AutoOptions opts = c.auto_options();
    if (checker) opts.criteria = {*checker};
    certs = certify_bivar_auto(f, g, env, opts);
    if (c.k) {
      // An explicit k replaces the default k range of the factor-bound family.
      for (auto& cert : certs)
        if (cert.criterion == "bivar_factor_bound")
          for (auto side : {BivarSide::Direct, BivarSide::Reciprocal}) {
            Certificate alt = check_bivar_factor_bound(f, g, *c.k, side, env);
            cert = alt;
            if (alt.verdict.success()) break;
          }
    }
  }
  emit(certs, c.format, all);
  return found(certs);
}

int cmd_verify(const std::vector<std::string>& paths, const Common& c) {
  bool ok = true;
  json report = json::array();
  for (const auto& path : paths) {
    std::string text = read_input(path);
    std::vector<Certificate> certs;
    if (!text.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos &&
        text[text.find_first_not_of(" \t\r\n")] == '{') {
      json j = json::parse(text);
      for (const auto& e : j.at("certificates")) {
        auto one = parse_certificates(e.at("certificate").get<std::string>());
        certs.insert(certs.end(), one.begin(), one.end());
      }
    } else {
      certs = parse_certificates(text);
    }
    if (certs.empty()) throw Error(ErrorCode::ParseError, "no certificate in '" + path + "'");
    for (const auto& cert : certs) {
      VerifyResult r = verify_certificate(cert);
      ok = ok && r.ok;
      if (c.format == "json") {
        report.push_back({{"criterion", cert.criterion}, {"ok", r.ok}, {"message", r.message}});
      } else {
        if (r.ok) std::cout << r.message << "\n";
        else std::cout << "fail: " << cert.criterion << ": " << r.message << "\n";
      }
    }
  }
  if (c.format == "json") std::cout << report.dump(2) << "\n";
  return ok ? kFound : kNone;
}

int cmd_oracle(const std::string& fs, bool bivar, const Common& c) {
  json j;
  std::ostringstream text;
  if (bivar) {
    BivarFactorization fac = factor_bivar(parse_bivar(fs));
    j["unit"] = to_string(fac.unit);
    j["factors"] = json::array();
    text << "unit " << to_string(fac.unit) << "\n";
    for (const auto& q : fac.factors) {
      j["factors"].push_back({{"factor", to_string(q.factor)}, {"multiplicity", q.multiplicity}});
      text << to_string(q.factor) << " ^ " << q.multiplicity << "\n";
    }
    j["count"] = fac.count();
  } else {
    QFactorization fac = factor_over_q(parse_int_poly(fs));
    j["unit"] = to_string(fac.unit);
    j["factors"] = json::array();
    text << "unit " << to_string(fac.unit) << "\n";
    for (const auto& q : fac.factors) {
      j["factors"].push_back({{"factor", to_bracket(q.factor)}, {"multiplicity", q.multiplicity}});
      text << to_human(q.factor) << " ^ " << q.multiplicity << "\n";
    }
    j["count"] = fac.count();
  }
  if (c.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text.str();
  return j["count"].get<unsigned long>() <= 1 ? kFound : kNone;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducibility certificates from resultants and root geometry"};
  app.require_subcommand(1);
  Common common;

  std::string f, g, method = "auto", batch;
  std::optional<std::string> g_opt, route, checker, alpha, beta;
  std::vector<std::string> g_linear, paths;
  bool all = false, bivar_oracle = false;

  auto* res = app.add_subcommand("resultant", "Exact resultant of two integer polynomials");
  res->add_option("F", f)->required();
  res->add_option("G", g)->required();
  res->add_option("--method", method)->check(CLI::IsMember({"auto", "prs", "sylvester", "quad_shift", "quad_binet"}));
  add_common(res, common, false);

  auto* cert = app.add_subcommand("certify", "Search every univariate criterion for certificates");
  cert->add_option("F", f);
  cert->add_option("G", g_opt);
  cert->add_option("--g-linear", g_linear, "g = bX - c given as b c")->expected(2);
  cert->add_option("--batch", batch, "File with one pair per line");
  cert->add_flag("--all", all, "Also emit inconclusive results in structured output");
  add_common(cert, common, true);

  auto* combos = app.add_subcommand("combos", "Irreducible combinations M f + N g");
  combos->add_option("F", f)->required();
  combos->add_option("G", g)->required();
  combos->add_option("--route", route)->check(CLI::IsMember({"m_first", "n_first", "marden"}));
  add_common(combos, common, true);

  auto* bivar = app.add_subcommand("bivar", "Bivariate criteria over Q[X, Y]");
  bivar->add_option("F", f)->required();
  bivar->add_option("G", g)->required();
  bivar->add_option("--checker", checker);
  bivar->add_option("--alpha", alpha);
  bivar->add_option("--beta", beta);
  bivar->add_flag("--all", all);
  add_common(bivar, common, true);

  auto* verify = app.add_subcommand("verify", "Replay certificates");
  verify->add_option("files", paths)->required();
  add_common(verify, common, false);

  auto* oracle = app.add_subcommand("oracle", "Reference factorization over Q");
  oracle->add_option("F", f)->required();
  oracle->add_flag("--bivar", bivar_oracle);
  add_common(oracle, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*res) return cmd_resultant(f, g, method, common);
    if (*cert) {
      if (f.empty() && batch.empty()) throw Error(ErrorCode::ParseError, "certify needs F or --batch");
      return cmd_certify(f, g_opt, g_linear, batch, all, common);
    }
    if (*combos) return cmd_combos(f, g, route, common);
    if (*bivar) return cmd_bivar(f, g, checker, alpha, beta, all, common);
    if (*verify) return cmd_verify(paths, common);
    if (*oracle) return cmd_oracle(f, bivar_oracle, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::CrossCheckFailed) return kCrossCheck;
    if (e.code() == ErrorCode::BudgetExceeded) return kNone;
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
