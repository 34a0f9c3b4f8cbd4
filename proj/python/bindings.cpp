#include "uqc/central.hpp"
#include "uqc/error.hpp"
#include "uqc/json_io.hpp"
#include "uqc/pairing.hpp"
#include "uqc/parse.hpp"
#include "uqc/rep.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace uqc;

namespace {

Weight to_weight(const std::pair<int, int>& w) { return {w.first, w.second}; }

std::vector<std::vector<std::string>> matrix_text(const QMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i].push_back(m(i, j).to_string());
  return out;
}

std::vector<std::vector<std::string>> matrix_text(const std::vector<std::vector<mpq_class>>& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m) {
    out.emplace_back();
    for (const auto& v : row)
      out.back().push_back(v.get_str());
  }
  return out;
}

mpq_class to_mpq(const std::string& s) { return parse_rational(s); }

} // namespace

PYBIND11_MODULE(_uqcentral, m) {
  m.doc() = "Exact computations for a central element of U_q(so5)";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<MathError>(m, "MathError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());

  py::class_<QRat>(m, "QRat")
      .def(py::init<>())
      .def(py::init<long>())
      .def_static("parse", [](const std::string& s) { return QRat::parse(s); })
      .def_static("q", &QRat::q, py::arg("exp") = 1)
      .def("__add__", [](const QRat& a, const QRat& b) { return a + b; })
      .def("__sub__", [](const QRat& a, const QRat& b) { return a - b; })
      .def("__mul__", [](const QRat& a, const QRat& b) { return a * b; })
      .def("__truediv__", [](const QRat& a, const QRat& b) { return a / b; })
      .def("__neg__", [](const QRat& a) { return -a; })
      .def("__pow__", &QRat::pow)
      .def("__eq__", [](const QRat& a, const QRat& b) { return a == b; })
      .def("__hash__", [](const QRat& a) { return py::hash(py::str(a.to_string())); })
      .def("is_zero", &QRat::is_zero)
      .def("eval", [](const QRat& a, const std::string& q0) { return a.eval(to_mpq(q0)).get_str(); },
           "Exact value at a rational q0 given as text; returns `a/b` text")
      .def("__str__", &QRat::to_string)
      .def("__repr__", [](const QRat& a) { return "QRat('" + a.to_string() + "')"; });

  py::class_<BorelElem>(m, "BorelElem")
      .def_static("parse", [](const std::string& s, const std::string& side) {
        return parse_element(s, parse_side(side));
      }, py::arg("text"), py::arg("default_side") = "plus")
      .def_property_readonly("side", [](const BorelElem& x) { return std::string(side_name(x.side())); })
      .def("__add__", [](const BorelElem& a, const BorelElem& b) { return a + b; })
      .def("__sub__", [](const BorelElem& a, const BorelElem& b) { return a - b; })
      .def("__mul__", &borel_mul)
      .def("scale", [](const BorelElem& a, const QRat& c) { return a * c; })
      .def("__eq__", [](const BorelElem& a, const BorelElem& b) { return a == b; })
      .def("to_json", [](const BorelElem& x) { return to_json(x).dump(); })
      .def_static("from_json", [](const std::string& s) { return borel_from_json(json::parse(s)); })
      .def("__str__", &BorelElem::to_string)
      .def("__repr__", [](const BorelElem& x) { return "BorelElem('" + x.to_string() + "')"; });

  m.def("pair", [](const BorelElem& y, const BorelElem& x) { return pair(y, x); });
  m.def("omega", &omega);
  m.def("tau", &tau);
  m.def("serre_elements", &serre_elements);
  m.def("radical_check", [](const BorelElem& x) { return default_pairing().in_radical(x); });
  m.def("words_of_weight", [](std::pair<int, int> nu) { return words_of_weight(to_weight(nu)); });
  m.def("weight_dim", [](std::pair<int, int> nu) { return weight_dim(to_weight(nu)); });
  m.def("gram_json", [](std::pair<int, int> nu) { return to_json(gram(to_weight(nu))).dump(); });
  m.def("dual_basis", [](std::pair<int, int> nu, const std::vector<Word>& basis) {
    return dual_basis(to_weight(nu), basis);
  });

  m.def("central_element_json", [](bool parallel) {
    CentralOptions o;
    o.parallel = parallel;
    return to_json(central_element(o)).dump();
  }, py::arg("parallel") = false);
  m.def("theorem_element_json", [] { return to_json(theorem_element()).dump(); });
  m.def("compare_with_theorem", [] { return compare_with_theorem(central_element()).verdict(); });
  m.def("solve_ab", [] {
    auto s = solve_ab();
    return std::make_pair(s.a, s.b);
  });
  m.def("scalar_value", [](const std::string& rep) -> py::object {
    auto s = evaluate(theorem_element(), representation(rep)).scalar_value();
    return s ? py::cast(*s) : py::none();
  }, "Scalar by which the closed-form element acts on dim4/dim5/dim16, or None");
  m.def("relation_suite", [](const std::string& rep) {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& c : relation_suite(representation(rep)))
      out.emplace_back(c.name, c.holds);
    return out;
  });
  m.def("hamiltonian", [](py::object q0) {
    QMatrix h = hamiltonian();
    if (q0.is_none())
      return matrix_text(h);
    mpq_class v = to_mpq(py::str(q0));
    if (v == 0 || v == 1 || v == -1)
      throw Error("q must avoid 0 and +-1 (normalization pole)");
    return matrix_text(h.eval(v));
  }, py::arg("q0") = py::none(),
     "16x16 Hamiltonian as canonical text, or exact rationals at q0");
}
