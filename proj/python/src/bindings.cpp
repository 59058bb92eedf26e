#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dnil/diffop.hpp"
#include "dnil/embedding.hpp"
#include "dnil/errors.hpp"
#include "dnil/ideal.hpp"
#include "dnil/verify.hpp"

namespace py = pybind11;
using namespace dnil;

namespace {

using CertificateRow = std::tuple<std::string, unsigned, std::string>;

std::vector<std::string> monomial_strings(const std::vector<DiffMonomial>& monomials) {
  std::vector<std::string> out;
  out.reserve(monomials.size());
  for (const auto& mono : monomials) out.push_back(to_string(mono));
  return out;
}

// Accepts a Polynomial or its text form.
DiffPolynomial as_poly(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_polynomial(h.cast<std::string>());
  return h.cast<DiffPolynomial>();
}

py::object suite_to_python(const SuiteResult& r) {
  return py::module_::import("json").attr("loads")(r.to_json().dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Differential nilalgebras D_m = k_+{x}/[x^m]";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceExhausted>(m, "ResourceExhausted", PyExc_RuntimeError);

  py::class_<DiffPolynomial>(m, "Polynomial")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return parse_polynomial(text); }), py::arg("text"))
      .def_static("variable", &DiffPolynomial::variable, py::arg("order"), py::arg("exponent") = 1)
      .def("is_zero", &DiffPolynomial::is_zero)
      .def("max_weight", &DiffPolynomial::max_weight)
      .def("derive", [](const DiffPolynomial& f, unsigned k) { return derive(f, k); }, py::arg("k") = 1)
      .def("__len__", &DiffPolynomial::size)
      .def("__add__", [](const DiffPolynomial& a, const py::object& b) { return a + as_poly(b); })
      .def("__sub__", [](const DiffPolynomial& a, const py::object& b) { return a - as_poly(b); })
      .def("__mul__", [](const DiffPolynomial& a, const py::object& b) { return a * as_poly(b); })
      .def("__eq__", [](const DiffPolynomial& a, const py::object& b) { return a == as_poly(b); })
      .def("__str__", [](const DiffPolynomial& f) { return to_string(f); })
      .def("__repr__", [](const DiffPolynomial& f) { return "Polynomial('" + to_string(f) + "')"; });

  m.def("normal_form", [](const py::object& f, unsigned mm) { return normal_form(as_poly(f), mm).poly(); },
        py::arg("f"), py::arg("m") = 2, "alpha_m-combination congruent to f modulo [x^m]");
  m.def("normal_form_via_embedding",
        [](const py::object& f, unsigned mm) { return normal_form_via_embedding(as_poly(f), mm).poly(); },
        py::arg("f"), py::arg("m") = 2);
  m.def(
      "membership",
      [](const py::object& f, unsigned mm) {
        auto r = membership(as_poly(f), mm);
        std::optional<std::vector<CertificateRow>> cert;
        if (r.certificate) {
          cert.emplace();
          for (const auto& t : r.certificate->terms) {
            cert->emplace_back(to_string(t.cofactor), t.k, to_fraction_string(t.coefficient));
          }
        }
        return std::make_pair(r.member, cert);
      },
      py::arg("f"), py::arg("m") = 2,
      "(member, certificate); certificate rows are (cofactor, k, coefficient) with "
      "f = sum coefficient * cofactor * (x^m)^(k)");
  m.def("embed", [](const py::object& f, unsigned mm) { return to_string(phi(mm, as_poly(f))); }, py::arg("f"),
        py::arg("m") = 2, "Image in the Grassmann algebra, as text");
  m.def("embed_size", [](const py::object& f, unsigned mm) { return phi(mm, as_poly(f)).size(); }, py::arg("f"),
        py::arg("m") = 2);
  m.def("nil_index", [](const py::object& f, unsigned mm, unsigned cap) { return nil_index_element(as_poly(f), mm, cap); }, py::arg("f"), py::arg("m"), py::arg("cap"),
        "Least N <= cap with f^N = 0 in D_m, or None");
  m.def(
      "grassmann_nil_index",
      [](const py::object& f, unsigned mm, unsigned cap) { return nil_index(phi(mm, as_poly(f)), cap); }, py::arg("f"),
      py::arg("m"), py::arg("cap"));
  m.def("alpha_basis", [](unsigned mm, unsigned d, unsigned w) { return monomial_strings(enumerate_alpha(mm, d, w)); },
        py::arg("m"), py::arg("d"), py::arg("w"));
  m.def("monomials", [](unsigned d, unsigned w) { return monomial_strings(enumerate_monomials(d, w)); },
        py::arg("d"), py::arg("w"));
  m.def("component_dimension", &component_dimension, py::arg("m"), py::arg("d"), py::arg("w"));
  m.def(
      "injectivity_rank",
      [](unsigned mm, unsigned d, unsigned w) {
        auto r = injectivity_rank(mm, d, w);
        return std::make_pair(r.rank, r.basis_count);
      },
      py::arg("m"), py::arg("d"), py::arg("w"), "(rank, basis count)");
  m.def("derivation_kernel_dimension", &derivation_kernel_dimension, py::arg("m"), py::arg("d"), py::arg("w"));

  m.def(
      "operator_nil_index",
      [](const std::string& text) {
        DiffOperator a = parse_operator(text);
        return std::make_pair(nil_index_operator(a), nil_bound(a));
      },
      py::arg("operator"), "(index, bound) for an operator of D_2[D] such as 'x0*D'");
  m.def(
      "witness_element",
      [](const py::object& a, const py::object& b, unsigned cap) -> std::optional<std::pair<unsigned, DiffPolynomial>> {
        auto w = witness_corollary(as_poly(a), as_poly(b), cap);
        if (!w) return std::nullopt;
        return std::make_pair(w->k, w->product);
      },
      py::arg("a"), py::arg("b"), py::arg("cap") = 10, "(k, b^(k) * a) with a nonzero product, or None");
  m.def(
      "witness_operator",
      [](const std::string& a_text, const std::string& b_text, unsigned k_cap,
         unsigned c_cap) -> std::optional<std::tuple<unsigned, unsigned, std::string>> {
        auto r = witness_theorem2(parse_operator(a_text), parse_operator(b_text), k_cap, c_cap);
        if (auto* w = std::get_if<Theorem2Witness>(&r)) return std::make_tuple(w->j, w->k, to_string(w->product));
        return std::nullopt;
      },
      py::arg("a"), py::arg("b"), py::arg("k_cap") = 10, py::arg("c_cap") = 12,
      "(j, k, product) with [(x_j D)^k, a] b nonzero, or None");

  m.def("verify_ritt", [](unsigned mm, unsigned max_i) { return suite_to_python(verify_ritt(mm, max_i)); },
        py::arg("m"), py::arg("max_i"));
  m.def("verify_injectivity",
        [](unsigned mm, unsigned d, unsigned w) { return suite_to_python(verify_injectivity(mm, d, w)); },
        py::arg("m"), py::arg("max_degree"), py::arg("max_weight"));
  m.def("verify_nilpotent",
        [](unsigned samples, std::uint64_t seed) { return suite_to_python(verify_nilpotent(samples, seed)); },
        py::arg("samples"), py::arg("seed"));
}
