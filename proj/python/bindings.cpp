#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rbnc/cli.hpp"
#include "rbnc/digraph.hpp"
#include "rbnc/errors.hpp"
#include "rbnc/ncsym.hpp"
#include "rbnc/redeiberge.hpp"
#include "rbnc/serialize.hpp"
#include "rbnc/setpart.hpp"
#include "rbnc/verify.hpp"

namespace py = pybind11;
using namespace rbnc;

namespace {

py::object to_python_int(const Integer& z) { return py::module_::import("builtins").attr("int")(z.str()); }

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_python_int(boost::multiprecision::numerator(q)),
                  to_python_int(boost::multiprecision::denominator(q)));
}

Digraph make_digraph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [u, v] : edges) list.push_back({u, v});
  return Digraph(n, list);
}

std::vector<std::pair<int, int>> edge_pairs(const Digraph& x) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : x.edges()) out.emplace_back(e.from, e.to);
  return out;
}

py::dict nc_terms(const NCSymElement& x) {
  py::dict out;
  for (const auto& [pi, c] : x.terms()) out[py::str(pi.to_string())] = to_fraction(c);
  return out;
}

py::dict c_terms(const CSymElement& x) {
  py::dict out;
  for (const auto& [lambda, c] : x.terms()) {
    py::tuple key(lambda.size());
    for (int i = 0; i < lambda.size(); ++i) key[static_cast<std::size_t>(i)] = lambda.parts()[static_cast<std::size_t>(i)];
    out[key] = to_fraction(c);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_rbnc, m) {
  m.doc() = "Redei-Berge functions of digraphs in noncommuting variables";

  const auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", error);
  py::register_exception<DegreeMismatchError>(m, "DegreeMismatchError", error);
  py::register_exception<OrderViolationError>(m, "OrderViolationError", error);
  py::register_exception<MissingEdgeError>(m, "MissingEdgeError", error);
  py::register_exception<PreconditionError>(m, "PreconditionError", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", error);

  py::class_<SetPartition>(m, "SetPartition")
      .def(py::init([](const std::string& text) { return SetPartition::parse(text); }), py::arg("text"))
      .def_property_readonly("size", &SetPartition::size)
      .def_property_readonly("blocks",
                             [](const SetPartition& pi) {
                               std::vector<std::vector<int>> out;
                               for (int b = 0; b < pi.block_count(); ++b) out.push_back(pi.block_elements(b));
                               return out;
                             })
      .def("__str__", &SetPartition::to_string)
      .def("__repr__", [](const SetPartition& pi) { return "SetPartition('" + pi.to_string() + "')"; })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const SetPartition& pi) { return std::hash<SetPartition>{}(pi); });

  m.def("enumerate_partitions", &enumerate_partitions, py::arg("n"));
  m.def("refines", &refines, py::arg("sigma"), py::arg("pi"));
  m.def("mobius", [](const SetPartition& s, const SetPartition& p) { return to_python_int(mobius(s, p)); },
        py::arg("sigma"), py::arg("pi"));
  m.def("lambda_of", [](const SetPartition& pi) {
    const auto lambda = lambda_of(pi);
    return std::vector<int>(lambda.parts().begin(), lambda.parts().end());
  });

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_digraph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{},
           "Vertices 0..n-1; edges as (u, v) pairs.")
      .def_property_readonly("vertex_count", &Digraph::vertex_count)
      .def("edges", &edge_pairs)
      .def("has_edge", py::overload_cast<int, int>(&Digraph::has_edge, py::const_))
      .def("__str__", &describe)
      .def("__repr__", [](const Digraph& x) { return "Digraph(" + describe(x) + ")"; })
      .def(py::self == py::self);

  m.def("complete_digraph", &complete_digraph);
  m.def("discrete_digraph", &discrete_digraph);
  m.def("path_digraph", &path_digraph);
  m.def("cycle_digraph", &cycle_digraph);
  m.def("random_digraph", &random_digraph, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("random_tournament", &random_tournament, py::arg("n"), py::arg("seed"));
  m.def("complement", &complement);
  m.def("opposite", &opposite);
  m.def("product", &product);
  m.def("contract_last_edge", &contract_last_edge);
  m.def("relabel", [](const std::vector<int>& delta, const Digraph& x) { return relabel(Permutation(delta), x); });
  m.def("is_tournament", &is_tournament);
  m.def("hamiltonian_path_count", &hamiltonian_path_count);
  m.def("parse_digraph", [](const std::string& text) { return parse_digraph(std::string_view(text)); });
  m.def("format_digraph", &format_digraph);

  py::class_<NCSymElement>(m, "NCSymElement")
      .def_property_readonly("degree", &NCSymElement::degree)
      .def_property_readonly("basis", [](const NCSymElement& x) { return std::string(1, basis_letter(x.basis())); })
      .def("terms", &nc_terms, "Set-partition text -> Fraction")
      .def("to_basis", [](const NCSymElement& x, const std::string& b) { return to_basis(x, parse_basis(b)); })
      .def("to_json", [](const NCSymElement& x) { return to_json(x).dump(); })
      .def_static("from_json", [](const std::string& s) { return ncsym_from_json(Json::parse(s)); })
      .def_static("basis_element",
                  [](const std::string& b, const SetPartition& pi) { return NCSymElement::basis_element(parse_basis(b), pi); })
      .def("__str__", &NCSymElement::to_string)
      .def("__repr__", &NCSymElement::to_string)
      .def("__add__", [](const NCSymElement& a, const NCSymElement& b) { return a + b; })
      .def("__sub__", [](const NCSymElement& a, const NCSymElement& b) { return a - b; })
      .def("__mul__", [](const NCSymElement& a, const NCSymElement& b) { return multiply(a, b); })
      .def(py::self == py::self);

  py::class_<CSymElement>(m, "CSymElement")
      .def_property_readonly("degree", &CSymElement::degree)
      .def_property_readonly("basis", [](const CSymElement& x) { return std::string(1, basis_letter(x.basis())); })
      .def("terms", &c_terms, "Parts tuple -> Fraction")
      .def("__str__", &CSymElement::to_string)
      .def("__repr__", &CSymElement::to_string)
      .def(py::self == py::self);

  m.def("w_by_definition", &w_by_definition);
  m.def("w_by_permutations", &w_by_permutations);
  m.def("w_by_deletion_contraction", [](const Digraph& x) { return w_by_deletion_contraction(x); });
  m.def("w_tournament", &w_tournament);
  m.def("u_by_descents", &u_by_descents);
  m.def("commutative_image", &commutative_image);
  m.def("induct", &induct);
  m.def("act", [](const std::vector<int>& delta, const NCSymElement& x) { return act(Permutation(delta), x); });

  m.def("check_names", &check_names);
  m.def(
      "check_identities",
      [](const Digraph& x, const std::vector<std::string>& checks) {
        py::list out;
        for (const auto& r : check_identities(x, checks)) {
          py::dict d;
          d["check"] = r.check;
          d["status"] = std::string(to_string(r.status));
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("x"), py::arg("checks") = std::vector<std::string>{"all"});

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"rbnc"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
