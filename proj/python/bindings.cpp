#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "recsym/checker.hpp"
#include "recsym/cli.hpp"
#include "recsym/expr.hpp"

namespace py = pybind11;
using namespace recsym;

namespace {

SampleConfig make_config(std::uint64_t seed, std::size_t count, const std::string& backend,
                         const std::string& magnitude_bound, bool complex_components) {
  SampleConfig cfg;
  cfg.seed = seed;
  cfg.count = count;
  cfg.backend = parse_backend(backend);
  cfg.magnitude_bound = parse_rational(magnitude_bound);
  cfg.complex_components = complex_components;
  return cfg;
}

Vec3 to_vec3(const std::vector<CScalar>& v) {
  if (v.size() != 3) throw Error(Errc::InvalidArgument, "expected 3 components");
  return {v[0], v[1], v[2]};
}

std::vector<CScalar> from_vec3(const Vec3& v) { return {v.begin(), v.end()}; }

}  // namespace

PYBIND11_MODULE(_recsym, m) {
  m.doc() = "Complex 4-vector composition rules, Pauli representation and identity checker";

  py::register_exception<Error>(m, "RecsymError", PyExc_ValueError);

  py::enum_<Backend>(m, "Backend").value("EXACT", Backend::Exact).value("FLOAT", Backend::Float);

  py::class_<CScalar>(m, "CScalar")
      .def_static(
          "exact", [](const std::string& re, const std::string& im) { return CScalar::exact(parse_rational(re), parse_rational(im)); },
          py::arg("re"), py::arg("im") = "0")
      .def_static(
          "floating", [](double re, double im) { return CScalar::floating(re, im); }, py::arg("re"),
          py::arg("im") = 0.0)
      .def_property_readonly("backend", &CScalar::backend)
      .def("is_zero", &CScalar::is_zero)
      .def("to_complex", &CScalar::to_complex)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", [](const CScalar& s) { return to_string(s); })
      .def("__repr__", [](const CScalar& s) { return "CScalar(" + to_string(s) + ")"; });

  py::class_<Quat4>(m, "Quat4")
      .def(py::init([](const CScalar& s, const std::vector<CScalar>& v) { return Quat4(s, to_vec3(v)); }))
      .def_property_readonly("scalar", &Quat4::scalar)
      .def_property_readonly("vec", [](const Quat4& q) { return from_vec3(q.vec()); })
      .def_property_readonly("backend", &Quat4::backend)
      .def(py::self == py::self)
      .def("to_json", [](const Quat4& q) { return to_json(q).dump(); })
      .def_static("from_json", [](const std::string& text) { return quat_from_json(Json::parse(text)); })
      .def("__str__", [](const Quat4& q) { return to_string(q); })
      .def("__repr__", [](const Quat4& q) { return "Quat4" + to_string(q); });

  m.def("parse_quat", [](const std::string& text, const std::string& backend) {
    Value v = evaluate(text, {}, parse_backend(backend));
    if (type_of(v) != ValueType::Quat) throw Error(Errc::TypeError, "not a 4-vector: " + text);
    return std::get<Quat4>(v);
  });

  m.def("conj", &conj);
  m.def("euclid_norm_sq", &euclid_norm_sq);
  m.def("qform", &qform);
  m.def("le_compose", &le_compose);
  m.def("rs_compose", &rs_compose);
  m.def("qform_via_conj", [](const Quat4& a, const std::string& rule) { return qform_via_conj(a, parse_rule(rule)); });
  m.def("add", &add);
  m.def("sub", &sub);
  m.def("scale", py::overload_cast<const CScalar&, const Quat4&>(&scale));
  m.def("sqrt_scalar", &sqrt_scalar);

  py::class_<Velocity3>(m, "Velocity3")
      .def(py::init<double, double, double>())
      .def_static("exact", [](const std::string& x, const std::string& y, const std::string& z) {
        return Velocity3::exact(parse_rational(x), parse_rational(y), parse_rational(z));
      })
      .def_property_readonly("components", [](const Velocity3& v) { return from_vec3(v.components()); })
      .def(py::self == py::self);

  m.def("boost_from_velocity", &boost_from_velocity);
  m.def("velocity_from_boost", &velocity_from_boost);
  m.def("einstein_add", &einstein_add);

  py::class_<Mat2>(m, "Mat2")
      .def("entries", [](const Mat2& mat) { return std::vector<CScalar>(mat.entries().begin(), mat.entries().end()); })
      .def(py::self == py::self)
      .def("to_json", [](const Mat2& mat) { return to_json(mat).dump(); })
      .def("__str__", [](const Mat2& mat) { return to_string(mat); })
      .def("__repr__", [](const Mat2& mat) { return "Mat2" + to_string(mat); });

  m.def(
      "sigma", [](int k, const std::string& backend) { return sigma(k, parse_backend(backend)); }, py::arg("k"),
      py::arg("backend") = "exact");
  m.def("embed", &embed);
  m.def("extract", &extract);
  m.def("mat_mul", &mat_mul);
  m.def("det", &det);
  m.def("trace", &trace);
  m.def("cross_term", [](const std::vector<CScalar>& b, const std::vector<CScalar>& c) {
    const CrossTerm ct = cross_term(to_vec3(b), to_vec3(c));
    return py::make_tuple(ct.scalar, from_vec3(ct.vector));
  });
  m.def("massless_dirac",
        [](const CScalar& e, const std::vector<CScalar>& p) { return massless_dirac(e, to_vec3(p)); });
  m.def("null_spinor", [](double px, double py_, double pz) {
    const Spinor2 s = null_spinor({px, py_, pz});
    return std::vector<CScalar>{s[0], s[1]};
  });

  m.def("identity_ids", &identity_ids);
  m.def("property_ids", &property_ids);
  m.def(
      "check_identity",
      [](const std::string& id, std::uint64_t seed, std::size_t count, const std::string& backend,
         const std::string& bound, bool complex) {
        return to_json(check_identity(id, make_config(seed, count, backend, bound, complex))).dump();
      },
      py::arg("identity_id"), py::arg("seed") = SampleConfig{}.seed, py::arg("count") = SampleConfig{}.count,
      py::arg("backend") = "exact", py::arg("magnitude_bound") = "2", py::arg("complex_components") = true);
  m.def(
      "search_counterexample",
      [](const std::string& id, std::uint64_t seed, std::size_t count, const std::string& backend,
         const std::string& bound, bool complex) -> py::object {
        auto c = search_counterexample(id, make_config(seed, count, backend, bound, complex));
        if (!c) return py::none();
        return py::str(to_json(*c).dump());
      },
      py::arg("property_id"), py::arg("seed") = SampleConfig{}.seed, py::arg("count") = SampleConfig{}.count,
      py::arg("backend") = "exact", py::arg("magnitude_bound") = "2", py::arg("complex_components") = true);
  m.def(
      "run_suite",
      [](std::uint64_t seed, std::size_t count, const std::string& backend, const std::string& bound, bool complex) {
        return suite_to_json(run_suite(make_config(seed, count, backend, bound, complex))).dump();
      },
      py::arg("seed") = SampleConfig{}.seed, py::arg("count") = SampleConfig{}.count, py::arg("backend") = "exact",
      py::arg("magnitude_bound") = "2", py::arg("complex_components") = true);

  m.def(
      "evaluate",
      [](const std::string& source, const std::map<std::string, Quat4>& bindings, const std::string& backend) {
        std::vector<Binding> b;
        for (const auto& [name, q] : bindings) b.push_back({name, q});
        return format_value(evaluate(source, b, parse_backend(backend)));
      },
      py::arg("source"), py::arg("bindings") = std::map<std::string, Quat4>{}, py::arg("backend") = "exact");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
