#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "valsemi/obstruction.hpp"
#include "valsemi/rational.hpp"
#include "valsemi/report_io.hpp"
#include "valsemi/semigroup.hpp"
#include "valsemi/valuation.hpp"

namespace py = pybind11;
using namespace valsemi;

namespace {

py::int_ to_py_int(const BigNat& n) {
  return py::cast<py::int_>(py::module_::import("builtins").attr("int")(n.str()));
}

py::object to_py_dict(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

Rational to_rational(const py::object& obj) {
  if (py::isinstance<Rational>(obj)) return obj.cast<Rational>();
  if (py::isinstance<py::int_>(obj)) return Rational{BigInt(py::str(obj).cast<std::string>())};
  return Rational::parse(py::str(obj).cast<std::string>());
}

std::vector<Rational> to_rationals(const py::iterable& items) {
  std::vector<Rational> out;
  for (py::handle h : items) out.push_back(to_rational(py::reinterpret_borrow<py::object>(h)));
  return out;
}

GeneratorSpec explicit_spec(const py::iterable& generators) {
  return GeneratorSpec::explicit_list(to_rationals(generators));
}

}  // namespace

PYBIND11_MODULE(valsemi, m) {
  m.doc() = "exact value-semigroup obstruction toolkit";

  py::register_exception<ParseError>(m, "RationalParseError", PyExc_ValueError);
  py::register_exception<EmptyGeneratorsError>(m, "EmptyGeneratorsError", PyExc_ValueError);
  py::register_exception<ProfileHorizonError>(m, "ProfileHorizonError", PyExc_ValueError);
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError", PyExc_RuntimeError);
  py::register_exception<BoundTooSmallError>(m, "BoundTooSmallError", PyExc_ValueError);
  py::register_exception<DimensionMismatchError>(m, "DimensionMismatchError", PyExc_ValueError);

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const py::object& obj) { return to_rational(obj); }))
      .def_property_readonly("numerator", [](const Rational& q) { return to_py_int(q.num()); })
      .def_property_readonly("denominator", [](const Rational& q) { return to_py_int(q.den()); })
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& q) { return "Rational('" + q.str() + "')"; })
      .def("__hash__", [](const Rational& q) { return std::hash<Rational>{}(q); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self);

  m.def("binomial", [](unsigned n, unsigned k) { return to_py_int(binomial(n, k)); },
        py::arg("n"), py::arg("k"));

  m.def(
      "enumerate_up_to",
      [](const py::iterable& generators, const py::object& bound, std::size_t budget) {
        EnumerateOptions options;
        options.budget = budget;
        BoundedSemigroup s = enumerate_up_to(explicit_spec(generators), to_rational(bound), options);
        std::vector<std::string> out;
        for (const auto& q : s.elements) out.push_back(q.str());
        return out;
      },
      py::arg("generators"), py::arg("bound"), py::arg("budget") = 10'000'000,
      "sorted elements of the generated semigroup in (0, bound]");

  m.def(
      "count_below",
      [](const py::iterable& generators, const py::object& at, std::size_t budget) {
        Rational x = to_rational(at);
        EnumerateOptions options;
        options.budget = budget;
        BoundedSemigroup s = enumerate_up_to(explicit_spec(generators), x, options);
        return to_py_int(count_below(s, x));
      },
      py::arg("generators"), py::arg("at"), py::arg("budget") = 10'000'000,
      "|S ∩ [0, at)| for the semigroup generated by `generators`");

  m.def(
      "sumset_r",
      [](const py::iterable& values, unsigned r, const py::object& bound) {
        std::vector<std::string> out;
        for (const auto& q : sumset_r(to_rationals(values), r, to_rational(bound)))
          out.push_back(q.str());
        return out;
      },
      py::arg("values"), py::arg("r"), py::arg("bound"));

  m.def(
      "check",
      [](const py::iterable& generators, unsigned n, unsigned d_max, std::size_t budget,
         bool early_exit) {
        CheckOptions options{budget, early_exit};
        return to_py_dict(to_json(check(explicit_spec(generators), n, d_max, options)));
      },
      py::arg("generators"), py::arg("n"), py::arg("d_max"), py::arg("budget") = 10'000'000,
      py::arg("early_exit") = false, "obstruction report for d = 1..d_max as a dict");

  m.def(
      "check_example1",
      [](unsigned n, unsigned d_max, std::size_t budget, bool early_exit) {
        CheckOptions options{budget, early_exit};
        return to_py_dict(to_json(check(example1_generators(d_max), n, d_max, options)));
      },
      py::arg("n"), py::arg("d_max"), py::arg("budget") = 10'000'000,
      py::arg("early_exit") = false);

  m.def(
      "min_consistent_n",
      [](const py::iterable& generators, unsigned d_max, unsigned n_max) -> py::object {
        auto n = min_consistent_n(explicit_spec(generators), d_max, n_max);
        return n ? py::cast(*n) : py::none();
      },
      py::arg("generators"), py::arg("d_max"), py::arg("n_max"));

  m.def(
      "example1_certificate",
      [](unsigned n, std::size_t budget) { return to_py_dict(to_json(example1_certificate(n, budget))); },
      py::arg("n"), py::arg("budget") = 10'000'000);

  m.def(
      "verify_lemma1",
      [](const py::iterable& weights, unsigned d) {
        auto w = to_rationals(weights);
        return to_py_dict(to_json(verify_lemma1(MonomialValuation(w.size(), w), d)));
      },
      py::arg("weights"), py::arg("d"));

  m.def(
      "verify_lemma2",
      [](const py::iterable& weights, unsigned d) {
        auto w = to_rationals(weights);
        return to_py_dict(to_json(verify_lemma2(MonomialValuation(w.size(), w), d)));
      },
      py::arg("weights"), py::arg("d"));

  m.def(
      "enumerate_Sd",
      [](const py::iterable& weights, unsigned d) {
        auto w = to_rationals(weights);
        std::vector<std::string> out;
        for (const auto& q : enumerate_Sd(MonomialValuation(w.size(), w), d))
          out.push_back(q.str());
        return out;
      },
      py::arg("weights"), py::arg("d"));

  m.def(
      "value_of",
      [](const py::iterable& weights, const std::string& poly) -> py::object {
        auto w = to_rationals(weights);
        auto v = value_of(MonomialValuation(w.size(), w), SparsePolynomial::parse(poly));
        return v ? py::cast(v->str()) : py::none();
      },
      py::arg("weights"), py::arg("poly"),
      "minimum weighted degree of the polynomial, None for the zero polynomial");
}
