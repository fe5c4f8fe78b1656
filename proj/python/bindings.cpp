#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "flashcodes/bounds.hpp"
#include "flashcodes/commands.hpp"
#include "flashcodes/error.hpp"
#include "flashcodes/harness.hpp"

namespace py = pybind11;
using namespace flashcodes;

namespace {

ExperimentConfig config_from(const std::string& subcommand, const py::kwargs& kw) {
  ExperimentConfig c;
  c.subcommand = subcommand;
  for (auto item : kw) {
    const auto key = py::cast<std::string>(item.first);
    const auto value = item.second;
    if (key == "code") c.code = py::cast<std::string>(value);
    else if (key == "graph") c.graph = py::cast<std::string>(value);
    else if (key == "seq") c.seq = py::cast<std::string>(value);
    else if (key == "n") c.n = py::cast<std::size_t>(value);
    else if (key == "q") c.q = py::cast<unsigned>(value);
    else if (key == "L") c.L = py::cast<std::uint64_t>(value);
    else if (key == "delta") c.delta = py::cast<std::uint64_t>(value);
    else if (key == "epsilon") c.epsilon = py::cast<double>(value);
    else if (key == "robust_c") c.robust_c = py::cast<double>(value);
    else if (key == "t_target") c.t_target = py::cast<std::uint64_t>(value);
    else if (key == "trials") c.trials = py::cast<std::size_t>(value);
    else if (key == "seed") c.seed = py::cast<std::uint64_t>(value);
    else if (key == "cap") c.cap = py::cast<std::size_t>(value);
    else if (key == "max_maps") c.max_maps = py::cast<std::uint64_t>(value);
    else if (key == "out") c.format = py::cast<std::string>(value);
    else if (key == "quiet") c.quiet = py::cast<bool>(value);
    else throw py::type_error("unknown option '" + key + "'");
  }
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rewriting codes for flash-like storage";
  m.attr("__version__") = FLASHCODES_VERSION;

  py::register_exception<Error>(m, "FlashcodesError", PyExc_ValueError);

  m.def(
      "run",
      [](const std::string& subcommand, const py::kwargs& kw) {
        const auto config = config_from(subcommand, kw);
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_command(config, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("subcommand"), "Run a subcommand; returns (exit_code, stdout, stderr).");

  m.def("max_r", &max_r, py::arg("n"), py::arg("L"));
  m.def("ub_trivial", &ub_trivial, py::arg("n"), py::arg("q"));
  m.def(
      "ub_complete", [](std::uint64_t n, std::uint64_t q, std::uint64_t L) { return ub_complete(n, q, L).value; },
      py::arg("n"), py::arg("q"), py::arg("L"));
  m.def("optimal_game_value", &optimal_game_value, py::arg("n"), py::arg("q"), py::arg("L"),
        py::arg("max_maps") = std::uint64_t{1} << 22);
}
