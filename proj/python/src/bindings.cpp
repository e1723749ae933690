#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "permgrowth/antichain.hpp"
#include "permgrowth/permutation.hpp"
#include "permgrowth/realizer.hpp"
#include "permgrowth/registry.hpp"
#include "permgrowth/series.hpp"
#include "permgrowth/verify.hpp"

namespace py = pybind11;
namespace pg = permgrowth;

namespace {

py::object to_fraction(const pg::Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(pg::to_fraction_string(value));
}

pg::Rational to_rational(const py::object& value) {
  return pg::parse_rational(py::str(value).cast<std::string>());
}

py::int_ to_py_int(const pg::Int& value) {
  return py::cast<py::int_>(py::int_(py::str(value.str())));
}

pg::Rational tol_or_default(const py::object& tol) {
  return tol.is_none() ? pg::default_tol() : to_rational(tol);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "certified growth rates of sum closed permutation classes";

  py::class_<pg::Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("one_line"))
      .def_static("parse", &pg::Permutation::parse, py::arg("text"))
      .def_property_readonly("entries",
                             [](const pg::Permutation& p) { return p.entries(); })
      .def("__len__", &pg::Permutation::size)
      .def("__str__", &pg::Permutation::str)
      .def("__repr__", [](const pg::Permutation& p) { return "Permutation('" + p.str() + "')"; })
      .def("__eq__", [](const pg::Permutation& a, const pg::Permutation& b) { return a == b; })
      .def("__lt__", [](const pg::Permutation& a, const pg::Permutation& b) { return a < b; })
      .def("__hash__", [](const pg::Permutation& p) { return py::hash(py::str(p.str())); });

  m.def("standardize",
        [](const std::vector<int>& values) {
          return pg::Permutation::standardize(std::span<const int>(values));
        },
        py::arg("values"));
  m.def("contains", &pg::contains, py::arg("pattern"), py::arg("host"));
  m.def("direct_sum", &pg::direct_sum, py::arg("pi"), py::arg("sigma"));
  m.def("sum_decompose", &pg::sum_decompose, py::arg("pi"));
  m.def("is_sum_indecomposable", &pg::is_sum_indecomposable, py::arg("pi"));
  m.def("inflate", &pg::inflate, py::arg("sigma"), py::arg("parts"));
  m.def("is_simple", &pg::is_simple, py::arg("pi"));
  m.def("enumerate_indecomposables", &pg::enumerate_indecomposables, py::arg("n"),
        py::arg("bound") = pg::kDefaultEnumerationBound);

  py::class_<pg::SeqSpec>(m, "SeqSpec")
      .def(py::init<std::vector<int>, std::vector<int>>(), py::arg("prefix"), py::arg("tail"))
      .def_static("parse", &pg::SeqSpec::parse, py::arg("text"))
      .def_static("constant", &pg::SeqSpec::constant, py::arg("c"))
      .def("at", &pg::SeqSpec::at, py::arg("n"))
      .def_property_readonly("bound", &pg::SeqSpec::bound)
      .def_property_readonly("prefix", &pg::SeqSpec::prefix)
      .def_property_readonly("tail", &pg::SeqSpec::tail)
      .def("__str__", &pg::SeqSpec::str)
      .def("__repr__", [](const pg::SeqSpec& s) { return "SeqSpec('" + s.str() + "')"; })
      .def("__eq__", [](const pg::SeqSpec& a, const pg::SeqSpec& b) { return a == b; });

  py::class_<pg::GrowthRate>(m, "GrowthRate")
      .def_property_readonly("lo", [](const pg::GrowthRate& g) { return to_fraction(g.lo); })
      .def_property_readonly("hi", [](const pg::GrowthRate& g) { return to_fraction(g.hi); })
      .def_property_readonly("poly", [](const pg::GrowthRate& g) { return g.poly; })
      .def_property_readonly("width", [](const pg::GrowthRate& g) { return to_fraction(g.width()); })
      .def_property_readonly("midpoint",
                             [](const pg::GrowthRate& g) { return to_fraction(g.midpoint()); })
      .def("decimal",
           [](const pg::GrowthRate& g, int digits) {
             return pg::to_decimal_string(g.midpoint(), digits);
           },
           py::arg("digits") = 6)
      .def("__repr__", [](const pg::GrowthRate& g) {
        return "GrowthRate(" + pg::to_decimal_string(g.midpoint(), 6) + ")";
      });

  m.def("f_eval",
        [](const pg::SeqSpec& seq, const py::object& x) {
          return to_fraction(pg::f_eval(seq, to_rational(x)));
        },
        py::arg("seq"), py::arg("x"));
  m.def("growth_rate",
        [](const pg::SeqSpec& seq, const py::object& tol) {
          return pg::growth_rate(seq, tol_or_default(tol));
        },
        py::arg("seq"), py::arg("tol") = py::none());
  m.def("seq_to_polynomial", &pg::seq_to_polynomial, py::arg("seq"));
  m.def("class_counts",
        [](const pg::SeqSpec& seq, int n_max) {
          pg::CountSequence counts = pg::class_counts(seq, n_max);
          py::list out;
          for (const auto& value : counts.a) out.append(to_py_int(value));
          return out;
        },
        py::arg("seq"), py::arg("n_max"));
  m.def("proximity_bound",
        [](const py::object& eps, int c) { return pg::proximity_bound(to_rational(eps), c); },
        py::arg("eps"), py::arg("c"));

  py::class_<pg::AntichainSet>(m, "AntichainSet")
      .def_property_readonly("label", [](const pg::AntichainSet& s) { return s.label; })
      .def("__repr__",
           [](const pg::AntichainSet& s) { return "AntichainSet('" + s.label + "')"; });

  m.def("oscillation_sigma", &pg::oscillation_sigma, py::arg("k"));
  m.def("u_member",
        [](const pg::Permutation& alpha, const pg::Permutation& beta, int k) {
          return pg::u_member(pg::UFamilySpec(alpha, beta), k);
        },
        py::arg("alpha"), py::arg("beta"), py::arg("k"));
  m.def("antichain_set", &pg::parse_antichain_set, py::arg("name_or_spec"));
  m.def("members_up_to", &pg::members_up_to, py::arg("set"), py::arg("max_len"));
  m.def("verify_antichain", &pg::verify_antichain, py::arg("members"));
  m.def("closure_counts", &pg::closure_counts, py::arg("set"), py::arg("n_max"), py::arg("proper"),
        py::arg("parallel") = false, py::arg("bound") = pg::kDefaultClosureBound);

  py::class_<pg::RealizationCertificate>(m, "RealizationCertificate")
      .def_property_readonly("chosen",
                             [](const pg::RealizationCertificate& c) { return c.chosen; })
      .def_property_readonly("lower", [](const pg::RealizationCertificate& c) { return c.lower; })
      .def_property_readonly("upper", [](const pg::RealizationCertificate& c) { return c.upper; })
      .def_property_readonly("depth", [](const pg::RealizationCertificate& c) { return c.depth; })
      .def_property_readonly("gamma",
                             [](const pg::RealizationCertificate& c) { return to_fraction(c.gamma); });

  m.def("realize",
        [](const pg::SeqSpec& r, const pg::SeqSpec& t, int k, int b, const py::object& gamma,
           int depth, const py::object& tol) {
          pg::RealizationProblem problem{r, t, k, b, to_rational(gamma)};
          return pg::realize(problem, depth, tol_or_default(tol));
        },
        py::arg("r"), py::arg("t"), py::arg("k"), py::arg("b"), py::arg("gamma"),
        py::arg("depth") = 40, py::arg("tol") = py::none());
  m.def("interval_endpoints",
        [](const pg::SeqSpec& r, const pg::SeqSpec& t, int k, int b, const py::object& tol) {
          pg::IntervalEndpoints ends = pg::interval_endpoints(r, t, k, b, tol_or_default(tol));
          return py::make_tuple(ends.lower, ends.upper, ends.capped);
        },
        py::arg("r"), py::arg("t"), py::arg("k"), py::arg("b"), py::arg("tol") = py::none());
  m.def("choice_rate",
        [](const pg::SeqSpec& r, const pg::SeqSpec& t, const std::string& bits,
           const py::object& tol) { return pg::choice_rate(r, t, bits, tol_or_default(tol)); },
        py::arg("r"), py::arg("t"), py::arg("bits"), py::arg("tol") = py::none());
  m.def("juxtapose_rate", &pg::juxtapose_rate, py::arg("g1"), py::arg("g2"));

  m.def("builtin_problem", [](const std::string& name) {
    const pg::BuiltinProblem& p = pg::builtin_problem(name);
    py::dict out;
    out["name"] = p.name;
    out["r"] = p.r;
    out["t"] = p.t;
    out["k"] = p.k;
    out["b"] = p.b;
    out["printed_lo"] = to_fraction(p.printed_lo);
    out["printed_hi"] = to_fraction(p.printed_hi);
    return out;
  });

  m.def("run_paper_checks", [](bool tight) {
    pg::CheckOptions options;
    options.tight = tight;
    py::list out;
    for (const auto& result : pg::run_paper_checks(options)) {
      py::dict item;
      item["id"] = result.id;
      item["description"] = result.description;
      item["pass"] = result.pass;
      item["detail"] = result.detail;
      item["ms"] = result.ms;
      out.append(std::move(item));
    }
    return out;
  }, py::arg("tight") = false);
}
