// Python bindings. Scalars cross the boundary as fractions.Fraction (ints
// and "p/q" strings are accepted on input); vectors as lists of them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "asymnorm/compactness.hpp"
#include "asymnorm/generators.hpp"
#include "asymnorm/instance_io.hpp"
#include "asymnorm/render.hpp"
#include "asymnorm/report.hpp"
#include "asymnorm/suite.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<asymnorm::Rational> {
  PYBIND11_TYPE_CASTER(asymnorm::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyBool_Check(src.ptr())) return false;
    std::string text;
    if (PyLong_Check(src.ptr())) {
      text = py::str(src);
    } else if (PyUnicode_Check(src.ptr())) {
      text = src.cast<std::string>();
    } else if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator") &&
               !PyFloat_Check(src.ptr())) {
      text = std::string(py::str(src.attr("numerator"))) + "/" +
             std::string(py::str(src.attr("denominator")));
    } else {
      return false;
    }
    value = asymnorm::parse_rational(text);
    return true;
  }

  static handle cast(const asymnorm::Rational& r, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(asymnorm::to_string(r)).release();
  }
};

template <>
struct type_caster<asymnorm::Vector> {
  PYBIND11_TYPE_CASTER(asymnorm::Vector, const_name("list[fractions.Fraction]"));

  bool load(handle src, bool convert) {
    list_caster<std::vector<asymnorm::Rational>, asymnorm::Rational> inner;
    if (PyUnicode_Check(src.ptr()) || !inner.load(src, convert)) return false;
    value = asymnorm::Vector(std::move(static_cast<std::vector<asymnorm::Rational>&>(inner)));
    return true;
  }

  static handle cast(const asymnorm::Vector& v, return_value_policy policy, handle parent) {
    return list_caster<std::vector<asymnorm::Rational>, asymnorm::Rational>::cast(v.coords(),
                                                                                 policy, parent);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace asymnorm;

HRep to_hrep(const std::vector<std::tuple<Vector, Rational, bool>>& rows) {
  HRep out;
  for (const auto& [normal, rhs, strict] : rows) out.push_back({normal, rhs, strict});
  return out;
}

py::dict certificate_dict(const CompactnessCertificate& c) {
  py::dict d;
  d["verdict"] = to_string(c.verdict);
  d["center"] = c.center ? py::cast(c.center->vertices()) : py::none();
  if (const auto* w = std::get_if<BadRecessionDirection>(&c.witness)) {
    d["witness"] = py::make_tuple("bad_recession_direction", w->direction);
  } else if (const auto* w = std::get_if<EscapedExtremePoint>(&c.witness)) {
    d["witness"] = py::make_tuple("escaped_extreme_point", w->point);
  } else {
    d["witness"] = py::none();
  }
  return d;
}

LatticeFlavor parse_flavor(const std::string& name) {
  if (name == "sup") return LatticeFlavor::kSup;
  if (name == "one") return LatticeFlavor::kOne;
  throw InputError("flavor must be 'sup' or 'one'");
}

}  // namespace

PYBIND11_MODULE(_asymnorm, m) {
  m.doc() = "Exact q-compactness engine for polyhedral asymmetric norms";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  py::register_exception<AxiomThreeViolation>(m, "AxiomThreeViolation", input_error.ptr());
  py::register_exception<ParseError>(m, "ParseError", input_error.ptr());
  py::register_exception<EmptySetError>(m, "EmptySetError", input_error.ptr());
  py::register_exception<UnsupportedDimension>(m, "UnsupportedDimension", input_error.ptr());

  py::class_<AsymNorm>(m, "Norm")
      .def(py::init(&make_norm), py::arg("dim"), py::arg("functionals"))
      .def_property_readonly("dim", &AsymNorm::dim)
      .def_property_readonly("functionals", &AsymNorm::functionals)
      .def("__call__", &gauge_eval, py::arg("x"))
      .def("symmetric", &qs_eval, py::arg("x"))
      .def("theta", [](const AsymNorm& q) { return theta_cone(q).generators; })
      .def(
          "ball",
          [](const AsymNorm& q, const Point& center, const Rational& radius, bool closed) {
            return ball(q, center, radius, closed ? Closedness::kClosed : Closedness::kOpen)
                .as_set;
          },
          py::arg("center"), py::arg("radius"), py::arg("closed") = false)
      .def("__repr__", [](const AsymNorm& q) {
        return "Norm(dim=" + std::to_string(q.dim()) + ", " +
               std::to_string(q.functionals().size()) + " functionals)";
      });

  py::class_<PartialPolyhedron>(m, "Set")
      .def(py::init([](std::size_t dim, const std::vector<std::tuple<Vector, Rational, bool>>& rows) {
             return PartialPolyhedron(dim, to_hrep(rows));
           }),
           py::arg("dim"), py::arg("rows") = std::vector<std::tuple<Vector, Rational, bool>>{},
           "rows: (normal, rhs, strict) meaning <normal, x> < rhs when strict, <= otherwise")
      .def_property_readonly("dim", &PartialPolyhedron::dim)
      .def_property_readonly("rows",
                             [](const PartialPolyhedron& k) {
                               py::list out;
                               for (const auto& h : k.constraints()) {
                                 out.append(py::make_tuple(h.normal, h.rhs, h.strict));
                               }
                               return out;
                             })
      .def("__contains__", [](const PartialPolyhedron& k, const Point& x) { return member(k, x); })
      .def("is_empty", &is_empty)
      .def("is_closed", &is_closed)
      .def("closure_vertices",
           [](const PartialPolyhedron& k) {
             const auto c = closure(k);
             return c ? c->vertices() : std::vector<Point>{};
           })
      .def("__repr__", [](const PartialPolyhedron& k) {
        return "Set(dim=" + std::to_string(k.dim()) + ", " +
               std::to_string(k.constraints().size()) + " rows)";
      });

  m.def("parse_instance",
        [](const std::string& text) {
          Problem p = parse_instance(text);
          return py::make_tuple(p.q, p.k);
        },
        py::arg("text"));
  m.def("write_instance",
        [](const AsymNorm& q, const PartialPolyhedron& k) {
          return write_instance(make_instance_file(q, k));
        },
        py::arg("q"), py::arg("k"));

  m.def("decide",
        [](const AsymNorm& q, const PartialPolyhedron& k) {
          return certificate_dict(decide_q_compact(q, k));
        },
        py::arg("q"), py::arg("k"));
  m.def("extreme_points",
        [](const AsymNorm& q, const PartialPolyhedron& k) {
          return extreme_points_of_k(CompactInstance(q, k));
        },
        py::arg("q"), py::arg("k"));
  m.def("e_of_k",
        [](const AsymNorm& q, const PartialPolyhedron& k) { return e_of_k(CompactInstance(q, k)); },
        py::arg("q"), py::arg("k"));
  m.def("center",
        [](const AsymNorm& q, const PartialPolyhedron& k) {
          return s_of_k(CompactInstance(q, k)).vertices();
        },
        py::arg("q"), py::arg("k"));
  m.def("sandwich_certify",
        [](const std::vector<Point>& s, const PartialPolyhedron& k, const AsymNorm& q) {
          if (s.empty()) throw InputError("sandwich_certify: empty point list");
          return sandwich_certify(Polyhedron(q.dim(), s, {}), k, q);
        },
        py::arg("s"), py::arg("k"), py::arg("q"));
  m.def("verify_theorems",
        [](const AsymNorm& q, const PartialPolyhedron& k) {
          py::list out;
          for (const auto& c : verify_theorems(CompactInstance(q, k)).checks) {
            out.append(py::make_tuple(c.id, to_string(c.status), c.witness));
          }
          return out;
        },
        py::arg("q"), py::arg("k"));
  m.def("check",
        [](const AsymNorm& q, const PartialPolyhedron& k, const std::string& name) {
          return to_text(run_instance(name, {q, k}));
        },
        py::arg("q"), py::arg("k"), py::arg("name") = "instance",
        "Full text report: verdict, center, witness, ext, E(K), T1-T6");
  m.def("run_suite",
        []() {
          py::list out;
          for (const auto& r : run_reference_suite()) {
            py::dict d;
            d["name"] = r.report.name;
            d["verdict"] = to_string(r.report.verdict);
            d["center"] = r.report.center;
            d["matched"] = r.matched();
            d["mismatches"] = r.mismatches;
            out.append(d);
          }
          return out;
        });
  m.def("render_svg",
        [](const AsymNorm& q, const PartialPolyhedron& k) {
          return render_svg({q, k}, decide_q_compact(q, k));
        },
        py::arg("q"), py::arg("k"));

  m.def("lattice_norm",
        [](std::size_t dim, const std::string& flavor) {
          return gen_lattice_norm(dim, parse_flavor(flavor));
        },
        py::arg("dim"), py::arg("flavor") = "sup");
  m.def("arc_example",
        [](std::size_t n_arc) {
          Problem p = gen_arc_example(n_arc);
          return py::make_tuple(p.q, p.k);
        },
        py::arg("n_arc"));
  m.def("random_instance",
        [](std::size_t dim, std::uint64_t seed) {
          Problem p = gen_random_instance(dim, seed);
          return py::make_tuple(p.q, p.k);
        },
        py::arg("dim"), py::arg("seed"));
}
