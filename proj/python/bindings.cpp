// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <utility>

#include "elab/analysis.hpp"
#include "elab/cli.hpp"
#include "elab/euler.hpp"
#include "elab/limit.hpp"

namespace py = pybind11;
using namespace elab;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-decimal evaluation of the compound limit (1+1/n)^n and its error laws";

  py::class_<Decimal>(m, "Decimal")
      .def(py::init<>())
      .def(py::init<int64_t>())
      .def(py::init([](const std::string& text) { return Decimal::parse(text); }))
      .def_static("from_double", &Decimal::from_double)
      .def_property_readonly("exponent", &Decimal::exponent)
      .def_property_readonly("sig_digits", &Decimal::sig_digits)
      .def("is_zero", &Decimal::is_zero)
      .def("signum", &Decimal::signum)
      .def("round_to", &Decimal::round_to)
      .def("abs", &Decimal::abs)
      .def("negated", &Decimal::negated)
      .def("__float__", &Decimal::to_double)
      .def("__str__", &Decimal::to_string)
      .def("__repr__",
           [](const Decimal& d) { return "Decimal('" + d.to_string() + "')"; })
      .def("__eq__", [](const Decimal& a, const Decimal& b) { return a == b; })
      .def("__ne__", [](const Decimal& a, const Decimal& b) { return a != b; })
      .def("__lt__", [](const Decimal& a, const Decimal& b) { return Decimal::compare(a, b) < 0; })
      .def("__le__", [](const Decimal& a, const Decimal& b) { return Decimal::compare(a, b) <= 0; })
      .def("__gt__", [](const Decimal& a, const Decimal& b) { return Decimal::compare(a, b) > 0; })
      .def("__ge__", [](const Decimal& a, const Decimal& b) { return Decimal::compare(a, b) >= 0; });

  m.def("add", &elab::add, py::arg("a"), py::arg("b"), py::arg("precision"));
  m.def("sub", &elab::sub, py::arg("a"), py::arg("b"), py::arg("precision"));
  m.def("mul", &elab::mul, py::arg("a"), py::arg("b"), py::arg("precision"));
  m.def("div", &elab::div, py::arg("a"), py::arg("b"), py::arg("precision"));
  m.def("add_exact", &elab::add_exact);
  m.def("sub_exact", &elab::sub_exact);
  m.def("mul_exact", &elab::mul_exact);
  m.def(
      "pow_int",
      [](const Decimal& base, uint64_t n, int64_t precision) {
        return pow_int(base, n, precision);
      },
      py::arg("base"), py::arg("n"), py::arg("precision"));
  m.def(
      "pow_int_with_stats",
      [](const Decimal& base, uint64_t n, int64_t precision) {
        PowStats stats;
        Decimal value = pow_int(base, n, precision, &stats);
        return py::make_tuple(value, stats.mul_count);
      },
      py::arg("base"), py::arg("n"), py::arg("precision"),
      "Returns (value, decimal_multiplications)");
  m.def("reference_e", &reference_e, py::arg("digits"));
  m.def("to_sig_figs", &to_sig_figs, py::arg("value"), py::arg("figures"));

  py::class_<StepSpec>(m, "StepSpec")
      .def(py::init<uint64_t>(), py::arg("n"))
      .def_property_readonly("n", &StepSpec::n)
      .def("dx", &StepSpec::dx, py::arg("precision"))
      .def("dx_terminates", &StepSpec::dx_terminates)
      .def("__eq__", [](const StepSpec& a, const StepSpec& b) { return a == b; })
      .def("__repr__",
           [](const StepSpec& s) { return "StepSpec(" + std::to_string(s.n()) + ")"; });

  py::enum_<Mode>(m, "Mode")
      .value("exact_decimal", Mode::exact_decimal)
      .value("float_pow", Mode::float_pow)
      .value("float_multiply_loop", Mode::float_multiply_loop)
      .value("float_log_exp", Mode::float_log_exp);
  m.def("mode_name", [](Mode mode) { return std::string(mode_name(mode)); });
  m.def("mode_from_name", [](const std::string& name) { return mode_from_name(name); });

  py::class_<Approximation>(m, "Approximation")
      .def_readonly("step", &Approximation::step)
      .def_readonly("value", &Approximation::value)
      .def_readonly("mode", &Approximation::mode)
      .def_readonly("abs_error", &Approximation::abs_error);

  py::class_<FloatApproximation>(m, "FloatApproximation")
      .def_readonly("step", &FloatApproximation::step)
      .def_readonly("mode", &FloatApproximation::mode)
      .def_readonly("value", &FloatApproximation::value)
      .def_readonly("abs_error", &FloatApproximation::abs_error)
      .def_readonly("outcome", &FloatApproximation::outcome)
      .def("skipped", &FloatApproximation::skipped);

  py::class_<Schedule>(m, "Schedule")
      .def_static("powers_of_ten", &Schedule::powers_of_ten, py::arg("lo"), py::arg("hi"))
      .def_static("doubling", &Schedule::doubling, py::arg("lo"), py::arg("hi"))
      .def_static("explicit_list", &Schedule::explicit_list, py::arg("ns"))
      .def_property_readonly("entries", &Schedule::entries);

  py::class_<EulerTrajectory>(m, "EulerTrajectory")
      .def_property_readonly("n", &EulerTrajectory::n)
      .def_property_readonly("precision", &EulerTrajectory::precision)
      .def_property_readonly("initial_scale", &EulerTrajectory::initial_scale)
      .def("dense", &EulerTrajectory::dense)
      .def("has_value", &EulerTrajectory::has_value)
      .def("value_at", &EulerTrajectory::value_at)
      .def("final_value", &EulerTrajectory::final_value)
      .def("x_at", &EulerTrajectory::x_at)
      .def("stored_indices", &EulerTrajectory::stored_indices)
      .def("ratio_at", [](const EulerTrajectory& t, uint64_t k) { return ratio_at(t, k); })
      .def("to_csv", [](const EulerTrajectory& t) {
        std::ostringstream out;
        write_csv(t, out);
        return out.str();
      });
  m.def("euler_step", &euler_step, py::arg("value"), py::arg("step"), py::arg("precision"));
  m.def("euler_march", &euler_march, py::arg("scale"), py::arg("step"), py::arg("precision"),
        py::arg("checkpoints") = std::vector<uint64_t>{});
  m.def("solve_for_e_euler", &solve_for_e_euler, py::arg("step"), py::arg("precision"));

  m.def(
      "compound_approx",
      [](const StepSpec& step, int64_t precision) { return compound_approx(step, precision); },
      py::arg("step"), py::arg("precision"));
  m.def("float_compound_approx", &float_compound_approx, py::arg("step"), py::arg("mode"));
  m.def("attach_error", &attach_error, py::arg("approx"), py::arg("reference"));
  m.def("limit_schedule", &limit_schedule, py::arg("schedule"), py::arg("precision"),
        py::arg("ref_digits"));

  m.def("estimate_order", &estimate_order, py::arg("e1"), py::arg("e2"));
  m.def("scaled_error", &scaled_error, py::arg("rows"));
  m.def("richardson_extrapolate", &richardson_extrapolate, py::arg("a_h"), py::arg("a_h2"));

  py::class_<SweepPoint>(m, "SweepPoint")
      .def_readonly("dx", &SweepPoint::dx)
      .def_readonly("mode", &SweepPoint::mode)
      .def_readonly("value", &SweepPoint::value)
      .def_readonly("abs_error", &SweepPoint::abs_error)
      .def_readonly("outcome", &SweepPoint::outcome)
      .def("skipped", &SweepPoint::skipped);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("points", &SweepResult::points)
      .def_readonly("min_index", &SweepResult::min_index)
      .def("min_dx", &SweepResult::min_dx)
      .def("min_error", &SweepResult::min_error);
  m.def("float_error_sweep", &float_error_sweep, py::arg("dx_grid"), py::arg("mode"));

  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("rows", &ConvergenceReport::rows)
      .def_readonly("estimated_order", &ConvergenceReport::estimated_order)
      .def_readonly("scaled_error_limit", &ConvergenceReport::scaled_error_limit)
      .def_readonly("extrapolated", &ConvergenceReport::extrapolated)
      .def_readonly("sweep_minimum_dx", &ConvergenceReport::sweep_minimum_dx)
      .def_readonly("sweep", &ConvergenceReport::sweep);
  m.def("make_convergence_report", &make_convergence_report, py::arg("approximations"));
  m.def(
      "report_json",
      [](const ConvergenceReport& report) { return to_json(report).dump(2); },
      py::arg("report"), "The report as a JSON document (stable key order)");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) -> py::tuple {
        std::ostringstream out, err;
        try {
          cli::RunConfig config = cli::parse_args(args);
          int code = cli::run(config, out, err);
          return py::make_tuple(code, out.str(), err.str());
        } catch (const cli::HelpRequested& help) {
          return py::make_tuple(0, help.text, std::string());
        } catch (const cli::UsageError& e) {
          return py::make_tuple(1, std::string(), "error: " + std::string(e.what()) + "\n");
        }
      },
      py::arg("args"), "Returns (exit_code, stdout, stderr)");
}
