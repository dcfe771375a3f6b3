#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lahid/cli.hpp"
#include "lahid/comb.hpp"
#include "lahid/exact.hpp"
#include "lahid/report.hpp"
#include "lahid/verify.hpp"

namespace py = pybind11;

// Big integers cross the boundary as decimal text; rationals as fractions.Fraction.
namespace pybind11::detail {

template <>
struct type_caster<lahid::Integer> {
  PYBIND11_TYPE_CASTER(lahid::Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = lahid::Integer(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const lahid::Integer& v, return_value_policy, handle) {
    return py::int_(py::str(v.str())).release();
  }
};

template <>
struct type_caster<lahid::Rational> {
  PYBIND11_TYPE_CASTER(lahid::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    if (PyLong_Check(src.ptr())) {
      value = lahid::Rational(lahid::Integer(py::str(src).cast<std::string>()));
      return true;
    }
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    py::object num = src.attr("numerator"), den = src.attr("denominator");
    if (!PyLong_Check(num.ptr()) || !PyLong_Check(den.ptr())) return false;
    value = lahid::make_rational(lahid::Integer(py::str(num).cast<std::string>()),
                                 lahid::Integer(py::str(den).cast<std::string>()));
    return true;
  }

  static handle cast(const lahid::Rational& v, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(numerator(v).str())), py::int_(py::str(denominator(v).str()))).release();
  }
};

}  // namespace pybind11::detail

namespace {

using lahid::Index;

std::vector<std::vector<lahid::Integer>> rows_of(const lahid::Triangle& t) {
  std::vector<std::vector<lahid::Integer>> out;
  for (Index n = 0; n <= t.max_n(); ++n) out.push_back(t.row(n));
  return out;
}

lahid::Route route_or_throw(const std::string& name) {
  auto r = lahid::standard_route(name);
  if (!r) throw py::value_error("unknown route '" + name + "'");
  return *r;
}

std::vector<std::string> route_names_for(const py::object& routes, Index k_max, Index n_max) {
  lahid::cli::RunConfig cfg;
  cfg.k_max = k_max;
  cfg.n_max = n_max;
  if (routes.is_none()) return lahid::cli::expand_routes("all", cfg);
  if (py::isinstance<py::str>(routes)) return lahid::cli::expand_routes(routes.cast<std::string>(), cfg);
  std::string joined;
  for (auto item : routes) joined += (joined.empty() ? "" : ",") + item.cast<std::string>();
  return lahid::cli::expand_routes(joined, cfg);
}

std::vector<lahid::VerificationReport> run_grid(Index k_min, Index k_max, Index n_min, Index n_max,
                                                const std::vector<std::string>& names, unsigned jobs) {
  std::vector<lahid::Route> routes;
  for (const auto& name : names) routes.push_back(route_or_throw(name));
  py::gil_scoped_release release;
  return lahid::verify_grid({k_min, k_max}, {n_min, n_max}, routes, jobs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Lah/Stirling arithmetic and multi-route verification of a Lah number identity";

  m.def("factorial", &lahid::factorial, py::arg("m"));
  m.def("binomial", py::overload_cast<const lahid::Integer&, Index>(&lahid::binomial_general), py::arg("r"),
        py::arg("j"), "Generalized binomial C(r, j); zero for j < 0.");
  m.def("rising", &lahid::rising, py::arg("x"), py::arg("n"));
  m.def("falling", &lahid::falling, py::arg("x"), py::arg("n"));

  m.def("lah", &lahid::lah, py::arg("n"), py::arg("k"));
  m.def("lah_bruteforce", &lahid::lah_bruteforce, py::arg("n"), py::arg("k"));
  m.def("lah_triangle", [](Index max_n) { return rows_of(lahid::lah_triangle(max_n)); }, py::arg("max_n"));
  m.def("stirling1", &lahid::stirling1, py::arg("n"), py::arg("k"));
  m.def("stirling1_triangle", [](Index max_n) { return rows_of(lahid::stirling1_triangle(max_n)); },
        py::arg("max_n"));
  m.def("stirling1_from_rising_poly", &lahid::stirling1_from_rising_poly, py::arg("n"));
  m.def("stirling1_from_log_series", &lahid::stirling1_from_log_series, py::arg("max_n"), py::arg("k"));

  m.def("rhs_reference", [](Index k, Index n) { return lahid::rhs_reference({k, n}); }, py::arg("k"), py::arg("n"));
  m.def("lhs_direct", [](Index k, Index n) { return lahid::lhs_direct({k, n}); }, py::arg("k"), py::arg("n"));
  m.def("route", [](const std::string& name, Index k, Index n) { return route_or_throw(name).fn({k, n}); },
        py::arg("name"), py::arg("k"), py::arg("n"), "Evaluate one named route (r1..r6) at (k, n).");
  m.def("route_names", &lahid::standard_route_names);

  m.def("gkp_identity", &lahid::gkp_identity, py::arg("l"), py::arg("m"), py::arg("s"), py::arg("n"));
  m.def("chu_vandermonde_identity", &lahid::chu_vandermonde_identity, py::arg("r"), py::arg("m"), py::arg("s"),
        py::arg("n"));
  m.def("binomial_inversion", &lahid::binomial_inversion, py::arg("h"));
  m.def("hypergeom_2f1_terminating", &lahid::hypergeom_2f1_terminating, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("chu_vandermonde_closed", &lahid::chu_vandermonde_closed, py::arg("a"), py::arg("b"), py::arg("c"));

  m.def(
      "verify_grid",
      [](Index k_min, Index k_max, Index n_min, Index n_max, const py::object& routes, unsigned jobs) {
        const auto names = route_names_for(routes, k_max, n_max);
        py::list out;
        for (const auto& r : run_grid(k_min, k_max, n_min, n_max, names, jobs)) {
          py::dict values;
          for (const auto& [name, v] : r.route_values) values[py::str(name)] = py::cast(v);
          py::dict errors;
          for (const auto& [name, msg] : r.route_errors) errors[py::str(name)] = msg;
          py::dict d;
          d["k"] = r.instance.k();
          d["n"] = r.instance.n();
          d["reference"] = py::cast(r.reference);
          d["lhs"] = py::cast(r.lhs);
          d["routes"] = values;
          d["errors"] = errors;
          d["all_match"] = r.all_match;
          out.append(d);
        }
        return out;
      },
      py::arg("k_min"), py::arg("k_max"), py::arg("n_min"), py::arg("n_max"), py::arg("routes") = py::none(),
      py::arg("jobs") = 1u);

  m.def(
      "verify_report",
      [](Index k_min, Index k_max, Index n_min, Index n_max, const py::object& routes, const std::string& format,
         unsigned jobs) {
        auto fmt = lahid::parse_report_format(format);
        if (!fmt) throw py::value_error("unknown format '" + format + "'");
        const auto names = route_names_for(routes, k_max, n_max);
        return lahid::emit_report(run_grid(k_min, k_max, n_min, n_max, names, jobs), *fmt, names);
      },
      py::arg("k_min"), py::arg("k_max"), py::arg("n_min"), py::arg("n_max"), py::arg("routes") = py::none(),
      py::arg("format") = "json", py::arg("jobs") = 1u);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = lahid::cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line front end in-process; returns (exit_code, stdout, stderr).");
}
