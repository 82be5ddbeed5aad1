#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "satsemi/satsemi.hpp"

namespace py = pybind11;
using namespace satsemi;

namespace {

  std::string repr(NumericalSemigroup const& s) {
    return "Semigroup(" + canonical_text(s) + ")";
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Saturated numerical semigroups with a fixed Frobenius number";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<NumericalSemigroup>(m, "Semigroup")
      .def(py::init([](Element frobenius, std::vector<Element> const& small) {
             return NumericalSemigroup::from_small_elements(frobenius, small);
           }),
           py::arg("frobenius"), py::arg("small_elements") = std::vector<Element>{})
      .def_static("from_generators",
                  [](std::vector<Element> const& gens) {
                    return NumericalSemigroup::from_generators(GeneratorSet(gens));
                  })
      .def_static("ordinary", &NumericalSemigroup::ordinary, py::arg("frobenius"))
      .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
      .def_property_readonly("genus", &NumericalSemigroup::genus)
      .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
      .def_property_readonly("small_elements", &NumericalSemigroup::small_elements)
      .def_property_readonly("gaps", &NumericalSemigroup::gaps)
      .def_property_readonly("minimal_generators",
                             [](NumericalSemigroup const& s) {
                               return minimal_generators(s).to_vector();
                             })
      .def("is_saturated", [](NumericalSemigroup const& s) { return is_saturated(s); })
      .def("__contains__", &NumericalSemigroup::contains)
      .def("to_json", [](NumericalSemigroup const& s) { return to_json(make_record(s)); })
      .def("__repr__", &repr)
      .def("__hash__", &NumericalSemigroup::hash)
      .def(py::self == py::self)
      .def(py::self < py::self);

  m.def("apery", [](NumericalSemigroup const& s, Element n) { return apery(s, n).entries; });
  m.def("pseudo_frobenius", &pseudo_frobenius);
  m.def("special_gaps", &special_gaps);

  m.def("enumerate_sat", &enumerate_sat, py::arg("frobenius"), py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("enumerate_sat_genus", &enumerate_sat_genus, py::arg("frobenius"), py::arg("genus"),
        py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("tooth", &tooth);
  m.def("maximal_elements", &maximal_elements);
  m.def("min_genus", &min_genus);

  m.def("is_sat_set", [](Element f, std::vector<Element> const& xs) { return is_sat_set(f, xs); });
  m.def("closure", [](Element f, std::vector<Element> const& xs) { return closure(f, xs); });
  m.def("minimal_system",
        [](NumericalSemigroup const& s) { return minimal_system(s).elements; });
  m.def("rank", &rank);

  m.def("feasible_rank", &feasible_rank);
  m.def("enumerate_rank", &enumerate_rank, py::arg("frobenius"), py::arg("rank"),
        py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());

  m.def(
      "verify",
      [](Element max_frobenius, unsigned jobs) {
        std::vector<oracle::Report> reports;
        for (Element f = 1; f <= max_frobenius; ++f) {
          reports.push_back(oracle::check_all(f, jobs));
        }
        return oracle::to_json(reports);
      },
      py::arg("max_frobenius"), py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());
}
