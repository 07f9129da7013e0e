#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "resprime/arith.hpp"
#include "resprime/combos.hpp"
#include "resprime/criteria.hpp"
#include "resprime/criteria_bivar.hpp"
#include "resprime/oracle.hpp"
#include "resprime/replay.hpp"
#include "resprime/resultant.hpp"

namespace py = pybind11;
using namespace resprime;

namespace {

// Python ints cross the boundary as decimal strings; GMP has no direct hook.
py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

// A polynomial is either text ("x^2-2", "[-2, 0, 1]") or a list of ascending
// integer coefficients.
IntPoly poly_arg(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_int_poly(o.cast<std::string>());
  std::vector<BigInt> c;
  for (const auto& item : o) c.push_back(from_py(item));
  return IntPoly(std::move(c));
}

py::list coeffs_py(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

struct PyCertificate {
  Certificate cert;

  std::string text() const { return serialize(cert); }
};

std::vector<PyCertificate> wrap(const std::vector<Certificate>& certs, bool all) {
  std::vector<PyCertificate> out;
  for (const auto& c : certs)
    if (all || c.verdict.success()) out.push_back({c});
  return out;
}

}  // namespace

PYBIND11_MODULE(_resprime, m) {
  m.doc() = "Exact resultants and resultant-based irreducibility certificates";

  static py::exception<Error> error(m, "ResprimeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  m.def(
      "resultant",
      [](const py::object& f, const py::object& g, const std::string& method) {
        IntPoly a = poly_arg(f), b = poly_arg(g);
        if (method == "prs") return to_py(resultant(a, b));
        if (method == "sylvester") return to_py(resultant_sylvester(a, b));
        if (method == "quad_shift" || method == "quad_binet") {
          if (b.degree() != 2) throw Error(ErrorCode::PreconditionViolated, method + " needs a quadratic g");
          return to_py(method == "quad_shift" ? resultant_quadratic_shift(a, b[2], b[1], b[0])
                                              : resultant_quadratic_binet(a, b[2], b[1], b[0]));
        }
        throw Error(ErrorCode::PreconditionViolated, "unknown method '" + method + "'");
      },
      py::arg("f"), py::arg("g"), py::arg("method") = "prs", "Res(f, g) as an exact integer.");

  m.def(
      "is_prime", [](const py::object& n) { return is_prime(from_py(n)); }, py::arg("n"));
  m.def(
      "factorize",
      [](const py::object& n) {
        Factorization f = factorize(from_py(n));
        py::list primes;
        for (const auto& pp : f.primes) primes.append(py::make_tuple(to_py(pp.prime), pp.exponent));
        return py::make_tuple(f.sign, primes, to_py(f.cofactor));
      },
      py::arg("n"), "(sign, [(prime, exponent)], unsplit cofactor).");
  m.def(
      "d_k",
      [](const py::object& n, unsigned k) -> py::object {
        auto d = d_k(from_py(n), k);
        if (!d) return py::none();
        return to_py(*d);
      },
      py::arg("n"), py::arg("k"), "Largest divisor d of |n| with d^(k+1) <= |n|.");

  m.def(
      "factor",
      [](const py::object& f) {
        QFactorization q = factor_over_q(poly_arg(f));
        py::list out;
        for (const auto& fac : q.factors) out.append(py::make_tuple(coeffs_py(fac.factor), fac.multiplicity));
        return py::make_tuple(py::str(to_string(q.unit)), out);
      },
      py::arg("f"), "Reference factorization over Q: (unit, [(coefficients, multiplicity)]).");

  py::class_<PyCertificate>(m, "Certificate")
      .def_property_readonly("criterion", [](const PyCertificate& c) { return c.cert.criterion; })
      .def_property_readonly("subject", [](const PyCertificate& c) { return c.cert.subject; })
      .def_property_readonly("success", [](const PyCertificate& c) { return c.cert.verdict.success(); })
      .def_property_readonly("verdict", [](const PyCertificate& c) { return to_string(c.cert.verdict); })
      .def_property_readonly("bound", [](const PyCertificate& c) { return c.cert.verdict.bound; })
      .def_property_readonly("pairs",
                             [](const PyCertificate& c) {
                               py::list out;
                               for (const auto& p : c.cert.pairs) out.append(py::make_tuple(to_py(p.M), to_py(p.N)));
                               return out;
                             })
      .def_property_readonly("text", &PyCertificate::text)
      .def("summary", [](const PyCertificate& c) { return summary_line(c.cert); })
      .def("__repr__", [](const PyCertificate& c) { return "<Certificate " + summary_line(c.cert) + ">"; });

  m.def(
      "certify",
      [](const py::object& f, const py::object& g, bool all) {
        CheckEnv env;
        return wrap(certify_auto(poly_arg(f), poly_arg(g), env), all);
      },
      py::arg("f"), py::arg("g"), py::arg("all") = false, "Every univariate criterion on (f, g).");
  m.def(
      "certify_bivar",
      [](const std::string& f, const std::string& g, bool all) {
        CheckEnv env;
        return wrap(certify_bivar_auto(parse_bivar(f), parse_bivar(g), env), all);
      },
      py::arg("f"), py::arg("g"), py::arg("all") = false, "Every bivariate criterion; f and g as \"[[a_0], [a_1], ...]\".");
  m.def(
      "combos",
      [](const py::object& f, const py::object& g) {
        CheckEnv env;
        return PyCertificate{combos_auto(poly_arg(f), poly_arg(g), env).cert};
      },
      py::arg("f"), py::arg("g"), "Certified irreducible combinations M f + N g.");

  m.def(
      "verify",
      [](const std::string& text) {
        py::list out;
        for (const auto& c : parse_certificates(text)) {
          VerifyResult r = verify_certificate(c);
          out.append(py::make_tuple(r.ok, r.message));
        }
        return out;
      },
      py::arg("text"), "Replay every certificate in the text: [(ok, message)].");
}
