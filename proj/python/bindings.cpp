#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ybe/errors.hpp"
#include "ybe/report.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

// Results cross the boundary as plain dicts and lists.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

ybe::Solution from_rows(const std::vector<std::vector<int>>& sigma) {
  std::vector<ybe::Permutation> perms;
  perms.reserve(sigma.size());
  for (const auto& row : sigma) perms.push_back(ybe::Permutation::from_one_line(row));
  return ybe::Solution::from_sigma(std::move(perms));
}

ybe::GermOptions guard(std::uint64_t max_germ) { return ybe::GermOptions{max_germ}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Structure-group invariants of finite involutive Yang-Baxter solutions";

  auto error = py::register_exception<ybe::Error>(m, "Error");
  py::register_exception<ybe::ParseError>(m, "ParseError", error);
  py::register_exception<ybe::ValidationError>(m, "ValidationError", error);
  py::register_exception<ybe::GuardExceeded>(m, "GuardExceeded", error);
  py::register_exception<ybe::InvariantViolation>(m, "InvariantViolation", error);

  py::class_<ybe::Solution>(m, "Solution")
      .def(py::init(&from_rows), py::arg("sigma"),
           "Build from sigma one-line rows (1-based); gamma is derived.")
      .def_static("from_json", &ybe::load_solution, py::arg("text"))
      .def_static("load", &ybe::load_solution_file, py::arg("path"))
      .def_property_readonly("n", &ybe::Solution::size)
      .def("sigma", [](const ybe::Solution& s, int x) { return s.sigma(x - 1).one_line(); })
      .def("gamma", [](const ybe::Solution& s, int y) { return s.gamma(y - 1).one_line(); })
      .def("apply",
           [](const ybe::Solution& s, int x, int y) {
             const auto [u, v] = s.apply(x - 1, y - 1);
             return std::pair{u + 1, v + 1};
           })
      .def("to_json", &ybe::solution_to_json)
      .def("__eq__", [](const ybe::Solution& a, const ybe::Solution& b) { return a == b; })
      .def("__repr__", [](const ybe::Solution& s) {
        return "<Solution n=" + std::to_string(s.size()) + ">";
      });

  m.def("profile", [](const ybe::Solution& s) { return to_py(ybe::to_json(ybe::profile(s))); },
        "Class, diagonal map, frozen words, retraction data.");

  m.def("germ",
        [](const ybe::Solution& s, std::uint64_t max_germ) {
          return to_py(ybe::germ_to_json(ybe::Germ::build(s, guard(max_germ))));
        },
        py::arg("solution"), py::arg("max_germ") = ybe::GermOptions{}.max_size);

  m.def("brace_check",
        [](const ybe::Solution& s, std::uint64_t seed, std::uint64_t max_germ) {
          ybe::TripleSampling sampling;
          sampling.seed = seed;
          return to_py(ybe::to_json(ybe::check_brace_laws(ybe::Germ::build(s, guard(max_germ)), sampling)));
        },
        py::arg("solution"), py::arg("seed") = ybe::TripleSampling{}.seed,
        py::arg("max_germ") = ybe::GermOptions{}.max_size);

  m.def("dimension",
        [](const ybe::Solution& s, std::uint64_t max_germ) {
          return to_py(ybe::to_json(ybe::dimension_report(s, guard(max_germ))));
        },
        py::arg("solution"), py::arg("max_germ") = ybe::GermOptions{}.max_size);

  m.def("spanning_matrices",
        [](const ybe::Solution& s, std::uint64_t max_germ) {
          return to_py(ybe::rep_to_json(ybe::dimension_analysis(s, guard(max_germ))));
        },
        py::arg("solution"), py::arg("max_germ") = ybe::GermOptions{}.max_size);

  m.def("element",
        [](const ybe::Solution& s, const std::vector<int>& word) {
          const ybe::Germ g = ybe::Germ::build(s);
          ybe::GroupElement e = g.identity();
          for (const int x : word) {
            if (x == 0 || static_cast<std::size_t>(std::abs(x)) > g.rank()) {
              throw ybe::IndexOutOfRange("letter " + std::to_string(x) + " out of range");
            }
            const ybe::GroupElement gen = g.generator(std::abs(x) - 1);
            e = g.multiply(e, x > 0 ? gen : g.inverse(gen));
          }
          const ybe::Decomposition d = ybe::decompose(g, e);
          const auto& mat = ybe::psi(g, e).matrix();
          return to_py(json{{"vector", e.vec},
                            {"phi", g.phi(e).one_line()},
                            {"psi", mat.data()},
                            {"simple", d.simple.vec},
                            {"alpha", d.alpha}});
        },
        py::arg("solution"), py::arg("word"),
        "pi-vector, phi, row-major psi and decomposition of a word; -x means x^-1.");

  m.def("check_pi_injectivity",
        [](const ybe::Solution& s, int radius) {
          return to_py(ybe::to_json(ybe::oracle::check_pi_injectivity(s, radius)));
        },
        py::arg("solution"), py::arg("radius"));
  m.def("check_counts",
        [](const ybe::Solution& s) { return to_py(ybe::to_json(ybe::oracle::check_counts(s))); });
  m.def("check_span_stabilization",
        [](const ybe::Solution& s, int radius) {
          return to_py(ybe::to_json(ybe::oracle::check_span_stabilization(s, radius)));
        },
        py::arg("solution"), py::arg("radius"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = ybe::run_cli(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in-process; returns (code, stdout, stderr).");
}
