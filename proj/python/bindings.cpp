#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rangeforms/bench.hpp"
#include "rangeforms/corpus.hpp"
#include "rangeforms/forms.hpp"
#include "rangeforms/oracle.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace rangeforms;

namespace {

FormSpec to_form(const py::object& form) {
  if (py::isinstance<py::str>(form)) return parse_form(form.cast<std::string>());
  return form.cast<FormSpec>();
}

}  // namespace

PYBIND11_MODULE(rangeforms, m) {
  m.doc() = "Range enclosures of bivariate polynomials over boxes";

  py::class_<Interval>(m, "Interval")
      .def(py::init<double, double>(), "lo"_a, "hi"_a)
      .def(py::init<double>(), "point"_a)
      .def_property_readonly("lo", &Interval::lo)
      .def_property_readonly("hi", &Interval::hi)
      .def_property_readonly("width", &Interval::width)
      .def("contains", &Interval::contains, "x"_a)
      .def("__eq__", [](const Interval& a, const Interval& b) { return a == b; })
      .def("__iter__", [](const Interval& i) { return py::iter(py::make_tuple(i.lo(), i.hi())); })
      .def("__repr__", [](const Interval& i) {
        std::ostringstream os;
        os.precision(17);
        os << "Interval(" << i.lo() << ", " << i.hi() << ")";
        return os.str();
      });
  m.def("hausdorff", &hausdorff, "a"_a, "b"_a);

  py::class_<Box2>(m, "Box")
      .def(py::init([](double x0, double x1, double y0, double y1) { return Box2(Interval(x0, x1), Interval(y0, y1)); }),
           "x0"_a, "x1"_a, "y0"_a, "y1"_a)
      .def_static("square", &Box2::square, "mx"_a, "my"_a, "r"_a)
      .def_property_readonly("x", &Box2::x)
      .def_property_readonly("y", &Box2::y)
      .def_property_readonly("mid", [](const Box2& b) { return py::make_tuple(b.mid_x(), b.mid_y()); })
      .def("__repr__", [](const Box2& b) {
        std::ostringstream os;
        os.precision(17);
        os << "Box(" << b.x().lo() << ", " << b.x().hi() << ", " << b.y().lo() << ", " << b.y().hi() << ")";
        return os.str();
      });

  py::class_<Poly2>(m, "Poly")
      .def(py::init([](const std::vector<std::tuple<unsigned, unsigned, double>>& terms) {
             std::vector<Monomial> mono;
             for (const auto& [i, j, c] : terms) mono.push_back({i, j, c});
             return Poly2::from_monomials(mono);
           }),
           "terms"_a, "Terms as (i, j, c) for c x^i y^j")
      .def_property_readonly("degree", &Poly2::degree)
      .def("coeff", &Poly2::coeff, "i"_a, "j"_a)
      .def("terms", [](const Poly2& p) {
        std::vector<std::tuple<unsigned, unsigned, double>> out;
        for (const auto& t : p.monomials()) out.emplace_back(t.i, t.j, t.coeff);
        return out;
      })
      .def("__call__", [](const Poly2& p, double x, double y) { return eval(p, x, y); }, "x"_a, "y"_a)
      .def("__eq__", [](const Poly2& a, const Poly2& b) { return a == b; });

  m.def("corpus", &corpus, "name"_a);
  m.def("corpus_names", &corpus_names);
  m.def("corpus_domain", &corpus_domain, "name"_a);
  m.def("natural_extension", &natural_extension, "f"_a, "box"_a);

  py::class_<FormSpec>(m, "Form")
      .def(py::init(&parse_form), "label"_a)
      .def_property_readonly("label", &FormSpec::label)
      .def_readonly("sharing", &FormSpec::sharing)
      .def("__eq__", [](const FormSpec& a, const FormSpec& b) { return a == b; })
      .def("__repr__", [](const FormSpec& f) { return "Form('" + f.label() + "')"; });

  m.def(
      "evaluate", [](const py::object& form, const Poly2& f, const Box2& box) { return evaluate(to_form(form), f, box); },
      "form"_a, "f"_a, "box"_a, "Range enclosure of f over a square box; form is a label such as 'T3' or a Form");
  m.def(
      "taylor_form", [](const Poly2& f, const Box2& box, unsigned m, unsigned n) { return taylor_form(f, box, m, n); },
      "f"_a, "box"_a, "m"_a, "n"_a);
  m.def("delannoy", &delannoy, "n"_a, "k"_a);
  m.def("delannoy_row", &delannoy_row, "n"_a);

  py::class_<OracleRange>(m, "OracleRange")
      .def_readonly("range", &OracleRange::range)
      .def_readonly("resolution", &OracleRange::resolution)
      .def_readonly("converged", &OracleRange::converged)
      .def_readonly("evaluations", &OracleRange::evaluations);
  m.def(
      "oracle_range",
      [](const Poly2& f, const Box2& box, double resolution, std::size_t budget) {
        return oracle_range(f, box, resolution, budget);
      },
      "f"_a, "box"_a, "resolution"_a, "budget"_a = 2'000'000);

  m.def(
      "grid_widths",
      [](const py::object& form, const Poly2& f, const Box2& domain, unsigned n) {
        return grid_widths(to_form(form), Derivatives(f), Subdivision(domain, n));
      },
      "form"_a, "f"_a, "domain"_a, "n"_a, "Widths over the n x n subdivision, row-major");

  m.def(
      "verify",
      [](const std::string& figure, std::optional<double> tolerance) {
        const VerifyReport r = run_verify({figure, tolerance});
        py::list lines;
        for (const auto& l : r.lines) {
          lines.append(py::dict("figure"_a = l.figure, "cell"_a = l.cell, "expected"_a = l.expected,
                                "actual"_a = l.actual, "slack"_a = l.slack, "pass"_a = l.pass));
        }
        return py::dict("cells"_a = r.cells, "failed"_a = r.failed_cells, "lines"_a = lines);
      },
      "figure"_a = "", "tolerance"_a = py::none());
}
