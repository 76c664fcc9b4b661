#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hnambu/cli.hpp"
#include "hnambu/models/cross4.hpp"
#include "hnambu/models/jacobian3.hpp"
#include "hnambu/models/virasoro_witt.hpp"
#include "hnambu/series.hpp"

namespace py = pybind11;
using namespace hnambu;

namespace {

cli::RunConfig make_config(const std::string& model, const py::kwargs& kwargs) {
  cli::RunConfig c;
  c.model = model;
  c.format = cli::Format::json;
  for (const auto& [key, value] : kwargs) {
    std::string k = py::str(key);
    if (k == "z") c.z = py::str(value);
    else if (k == "theta") c.theta = py::str(value);
    else if (k == "gamma") c.gamma = py::str(value);
    else if (k == "q") c.q = py::str(value);
    else if (k == "range") c.range = py::str(value);
    else if (k == "degree") c.degree = value.cast<int>();
    else if (k == "order") c.order = value.cast<int>();
    else if (k == "k4") c.k4 = py::str(value);
    else if (k == "save") c.save = py::str(value);
    else if (k == "plain_nambu") c.plain_nambu = value.cast<bool>();
    else if (k == "allow_any_z") c.allow_any_z = value.cast<bool>();
    else throw py::value_error("unknown option '" + k + "'");
  }
  return c;
}

py::tuple to_py(const cli::CommandResult& r) { return py::make_tuple(r.exit_code, r.out, r.err); }

Vec4 to_vec4(const std::vector<std::string>& v) {
  if (v.size() != 4) throw py::value_error("expected 4 coordinates");
  return {Scalar::parse(v[0]), Scalar::parse(v[1]), Scalar::parse(v[2]), Scalar::parse(v[3])};
}

std::vector<std::string> from_vec4(const Vec4& v) {
  return {v[0].str(), v[1].str(), v[2].str(), v[3].str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact verification of ternary hom-Nambu-Lie algebras";

  py::register_exception<Error>(m, "Error");

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](long v) { return Scalar(v); }))
      .def_static("parse", &Scalar::parse)
      .def("is_zero", &Scalar::is_zero)
      .def("inverse", &Scalar::inverse)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &Scalar::str)
      .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.str() + "')"; });

  py::class_<MultiPoly>(m, "MultiPoly")
      .def_static("parse", [](const std::string& text, const std::vector<std::string>& names) {
        return MultiPoly::parse(text, names);
      })
      .def_property_readonly("arity", &MultiPoly::arity)
      .def("partial", &MultiPoly::partial)
      .def("substitute", [](const MultiPoly& p, const std::vector<MultiPoly>& images) { return p.substitute(images); })
      .def("is_zero", &MultiPoly::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &MultiPoly::str)
      .def("__repr__", [](const MultiPoly& p) { return "MultiPoly('" + p.str() + "')"; });

  m.def("jacobian3_bracket", &jacobian3_bracket, "det(dq_i/dx_j) over x1, x2, x3");
  m.def("series_cos", [](std::size_t param, std::size_t arity, int order) {
    return series_cos(param, arity, order).str();
  });
  m.def("series_sin", [](std::size_t param, std::size_t arity, int order) {
    return series_sin(param, arity, order).str();
  });
  m.def("cross4_bracket", [](const std::vector<std::string>& x, const std::vector<std::string>& y,
                             const std::vector<std::string>& z) {
    return from_vec4(cross4_determinant(to_vec4(x), to_vec4(y), to_vec4(z)));
  });
  m.def("vw_bracket", [](const std::string& a, const std::string& b, const std::string& c, const std::string& z) {
    return vw_rule(parse_key<Generator>(a), parse_key<Generator>(b), parse_key<Generator>(c), Scalar::parse(z)).str();
  });

  m.def("_verify", [](const std::string& model, py::kwargs kw) { return to_py(cli::cmd_verify(make_config(model, kw))); });
  m.def("_counterexample", [](const std::string& name, py::kwargs kw) {
    return to_py(cli::cmd_counterexample(name, make_config("", kw)));
  });
  m.def("_deform", [](const std::string& model, py::kwargs kw) { return to_py(cli::cmd_deform(make_config(model, kw))); });
  m.def("_list_models", []() { return to_py(cli::cmd_list_models(cli::Format::json)); });
}
