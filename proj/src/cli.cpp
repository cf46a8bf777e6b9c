// SPDX-License-Identifier: Apache-2.0
#include "elab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "elab/analysis.hpp"
#include "elab/euler.hpp"

namespace elab::cli {

namespace {

using nlohmann::ordered_json;

uint64_t parse_uint(std::string_view text, const std::string& what) {
  uint64_t value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw UsageError("invalid " + what + ": \"" + std::string(text) + "\"");
  }
  return value;
}

int parse_int(std::string_view text, const std::string& what) {
  int value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw UsageError("invalid " + what + ": \"" + std::string(text) + "\"");
  }
  return value;
}

std::pair<int, int> parse_range(std::string_view body, const std::string& schedule) {
  size_t dots = body.find("..");
  if (dots == std::string_view::npos) {
    throw UsageError("invalid schedule \"" + schedule + "\": expected A..B");
  }
  int lo = parse_int(body.substr(0, dots), "schedule bound");
  int hi = parse_int(body.substr(dots + 2), "schedule bound");
  return {lo, hi};
}

}  // namespace

Schedule parse_schedule(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError("invalid schedule \"" + text + "\": expected kind:spec");
  }
  std::string kind = text.substr(0, colon);
  std::string body = text.substr(colon + 1);
  try {
    if (kind == "pow10") {
      auto [lo, hi] = parse_range(body, text);
      return Schedule::powers_of_ten(lo, hi);
    }
    if (kind == "doubling") {
      auto [lo, hi] = parse_range(body, text);
      return Schedule::doubling(lo, hi);
    }
    if (kind == "list") {
      std::vector<uint64_t> ns;
      size_t pos = 0;
      while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        ns.push_back(parse_uint(std::string_view(body).substr(pos, comma - pos),
                                "schedule entry"));
        pos = comma + 1;
      }
      return Schedule::explicit_list(std::move(ns));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError("invalid schedule \"" + text + "\": " + e.what());
  }
  throw UsageError("invalid schedule \"" + text + "\": unknown kind \"" + kind + "\"");
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app{"Numerics laboratory for the compound limit (1+1/n)^n -> e"};
  app.name("elab");
  app.require_subcommand(1);

  std::string mode_text = "exact";
  std::string format_text = "table";
  std::string output_text;
  bool mode_given = false;

  auto add_common = [&](CLI::App* sub, bool with_ref, bool with_mode) {
    sub->add_option_function<std::string>(
           "--precision",
           [&](const std::string& v) {
             config.precision = parse_int(v, "precision");
           },
           "Significant digits of the result (default 20)");
    if (with_ref) {
      sub->add_option_function<std::string>(
             "--ref-digits",
             [&](const std::string& v) {
               config.ref_digits = parse_int(v, "ref-digits");
             },
             "Reference digits for error measurement (default 25)");
    }
    if (with_mode) {
      sub->add_option_function<std::string>(
             "--mode",
             [&](const std::string& v) {
               mode_text = v;
               mode_given = true;
             },
             "exact | float-pow | float-multiply-loop | float-log-exp");
    }
    sub->add_option_function<std::string>(
           "--format",
           [&](const std::string& v) { format_text = v; },
           "table | csv | json (default table)");
    sub->add_option_function<std::string>(
           "--output", [&](const std::string& v) { output_text = v; },
           "Write the report to a file instead of standard output");
  };

  std::string n_text, schedule_text, digits_text;
  CLI::App* march = app.add_subcommand("march", "March f'=f across [1,2] in n steps");
  march->add_option("--n", n_text, "Number of steps (dx = 1/n)")->required();
  add_common(march, false, false);

  CLI::App* approx = app.add_subcommand("approx", "Evaluate (1+1/n)^n once");
  approx->add_option("--n", n_text, "Number of steps (dx = 1/n)")->required();
  add_common(approx, true, true);

  CLI::App* limit = app.add_subcommand("limit", "Evaluate a whole schedule of n values");
  limit->add_option("--schedule", schedule_text, "pow10:A..B | doubling:A..B | list:n1,n2,...")
      ->required();
  add_common(limit, true, true);

  CLI::App* sweep = app.add_subcommand("sweep", "Float error sweep across step sizes");
  sweep->add_option("--schedule", schedule_text, "Grid of n values; dx = 1/n")->required();
  add_common(sweep, false, true);

  CLI::App* oracle = app.add_subcommand("oracle", "Print the reference value of e");
  oracle->add_option("--digits", digits_text, "Significant digits (default 25)");
  oracle->add_option_function<std::string>(
            "--output", [&](const std::string& v) { output_text = v; },
            "Write the value to a file instead of standard output");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("elab");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    std::string text = app.help();
    for (CLI::App* sub : app.get_subcommands()) text = sub->help();
    throw HelpRequested{std::move(text)};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (march->parsed()) config.command = Command::march;
  if (approx->parsed()) config.command = Command::approx;
  if (limit->parsed()) config.command = Command::limit;
  if (sweep->parsed()) config.command = Command::sweep;
  if (oracle->parsed()) config.command = Command::oracle;

  if (!n_text.empty()) {
    uint64_t n = parse_uint(n_text, "n");
    if (n < 1) throw UsageError("n must be ≥ 1");
    config.n = n;
  }
  if (!digits_text.empty()) config.digits = parse_int(digits_text, "digits");
  if (config.precision < 1) throw UsageError("precision must be ≥ 1");
  if (config.ref_digits < 1) throw UsageError("ref-digits must be ≥ 1");
  if ((config.command == Command::approx || config.command == Command::limit) &&
      config.precision > config.ref_digits) {
    throw UsageError("precision must be ≤ ref-digits");
  }

  auto mode = mode_from_name(mode_text);
  if (!mode) throw UsageError("invalid mode \"" + mode_text + "\"");
  config.mode = *mode;
  if (config.command == Command::sweep) {
    if (!mode_given) config.mode = Mode::float_pow;
    if (!is_float_mode(config.mode)) throw UsageError("sweep requires a float mode");
  }

  if (format_text == "table") config.format = Format::table;
  else if (format_text == "csv") config.format = Format::csv;
  else if (format_text == "json") config.format = Format::json;
  else throw UsageError("invalid format \"" + format_text + "\"");

  if (!output_text.empty()) config.output_path = output_text;
  if (!schedule_text.empty()) {
    parse_schedule(schedule_text);  // validate now, fail as a usage error
    config.schedule = schedule_text;
  }
  return config;
}

namespace {

void render_table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
  std::vector<size_t> width(header.size());
  for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t c = 0; c < cells.size(); ++c) {
      out << cells[c];
      if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

std::string opt_double(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

void render_march(const EulerTrajectory& traj, Format format, std::ostream& out) {
  if (format == Format::csv) {
    write_csv(traj, out);
    return;
  }
  if (format == Format::json) {
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (uint64_t k : traj.stored_indices()) {
      j["rows"].push_back({{"k", k},
                           {"x", traj.x_at(k).to_string()},
                           {"value", traj.value_at(k).to_string()},
                           {"ratio", ratio_at(traj, k).to_string()}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (uint64_t k : traj.stored_indices()) {
    rows.push_back({std::to_string(k), traj.x_at(k).to_string(),
                    traj.value_at(k).to_string(), ratio_at(traj, k).to_string()});
  }
  render_table({"k", "x", "value", "ratio"}, rows, out);
}

ordered_json json_row(const Approximation& a, int64_t dx_precision) {
  ordered_json row;
  row["n"] = a.step.n();
  row["dx"] = a.step.dx(dx_precision).to_string();
  row["mode"] = std::string(mode_name(a.mode));
  row["value"] = a.value.to_string();
  row["abs_error"] = a.abs_error ? ordered_json(a.abs_error->to_string())
                                 : ordered_json(nullptr);
  return row;
}

ordered_json json_row(const FloatApproximation& f) {
  ordered_json row;
  row["n"] = f.step.n();
  row["dx"] = format_double(1.0 / static_cast<double>(f.step.n()));
  row["mode"] = std::string(mode_name(f.mode));
  row["value"] = f.value ? ordered_json(format_double(*f.value)) : ordered_json(nullptr);
  row["abs_error"] = f.abs_error ? ordered_json(format_double(*f.abs_error))
                                 : ordered_json(nullptr);
  row["outcome"] = f.outcome;
  return row;
}

std::vector<std::string> table_row(const Approximation& a, int64_t dx_precision) {
  return {std::to_string(a.step.n()), a.step.dx(dx_precision).to_string(),
          std::string(mode_name(a.mode)), a.value.to_string(),
          to_sig_figs(a.value, 3), a.abs_error ? a.abs_error->to_string() : ""};
}

std::vector<std::string> table_row(const FloatApproximation& f) {
  std::string sig3 = f.value ? to_sig_figs(Decimal::from_double(*f.value), 3) : "";
  return {std::to_string(f.step.n()),
          format_double(1.0 / static_cast<double>(f.step.n())),
          std::string(mode_name(f.mode)),
          f.value ? format_double(*f.value) : f.outcome,
          sig3,
          opt_double(f.abs_error)};
}

void render_approx_rows(const std::vector<Approximation>& exact,
                        const std::vector<FloatApproximation>& floats, Format format,
                        int64_t dx_precision, std::ostream& out) {
  if (format == Format::csv) {
    out << kApproxCsvHeader << '\n';
    for (const auto& a : exact) out << to_csv_row(a, dx_precision) << '\n';
    for (const auto& f : floats) out << to_csv_row(f) << '\n';
    return;
  }
  if (format == Format::json) {
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (const auto& a : exact) j["rows"].push_back(json_row(a, dx_precision));
    for (const auto& f : floats) j["rows"].push_back(json_row(f));
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& a : exact) rows.push_back(table_row(a, dx_precision));
  for (const auto& f : floats) rows.push_back(table_row(f));
  render_table({"n", "dx", "mode", "value", "value(3sf)", "abs_error"}, rows, out);
}

int finish_stream(std::ostream& stream, const RunConfig& config, std::ostream& err) {
  stream.flush();
  if (!stream.good()) {
    err << "error: failed writing "
        << (config.output_path ? *config.output_path : std::string("output")) << '\n';
    return 2;
  }
  return 0;
}

int run_impl(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* target = &out;
  if (config.output_path) {
    file.open(*config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open output file: " << *config.output_path << '\n';
      return 2;
    }
    target = &file;
  }

  switch (config.command) {
    case Command::oracle: {
      *target << reference_e(config.digits).to_string() << '\n';
      return finish_stream(*target, config, err);
    }
    case Command::march: {
      StepSpec step(config.n.value());
      std::vector<uint64_t> checkpoints;
      if (step.n() > EulerTrajectory::kDenseLimit) {
        for (uint64_t i = 0; i <= 10; ++i) {
          checkpoints.push_back(static_cast<uint64_t>(
              static_cast<unsigned __int128>(step.n()) * i / 10));
        }
      }
      EulerTrajectory traj =
          euler_march(Decimal::one(), step, config.precision, checkpoints);
      render_march(traj, config.format, *target);
      return finish_stream(*target, config, err);
    }
    case Command::approx: {
      StepSpec step(config.n.value());
      std::vector<Approximation> exact;
      std::vector<FloatApproximation> floats;
      Decimal reference = reference_e(config.ref_digits);
      if (config.mode == Mode::exact_decimal) {
        Approximation a = compound_approx(step, config.precision);
        a.abs_error = sub_exact(reference, a.value).abs();
        exact.push_back(std::move(a));
      } else {
        FloatApproximation f = float_compound_approx(step, config.mode);
        attach_error(f, reference);
        floats.push_back(std::move(f));
      }
      render_approx_rows(exact, floats, config.format, config.precision, *target);
      return finish_stream(*target, config, err);
    }
    case Command::limit: {
      Schedule schedule = parse_schedule(config.schedule);
      if (config.mode == Mode::exact_decimal) {
        std::vector<Approximation> rows =
            limit_schedule(schedule, config.precision, config.ref_digits);
        ConvergenceReport report = make_convergence_report(rows);
        if (config.format == Format::csv) {
          *target << kApproxCsvHeader << '\n';
          for (const auto& a : rows) *target << to_csv_row(a, config.precision) << '\n';
        } else if (config.format == Format::json) {
          ordered_json j = to_json(report);
          ordered_json full_rows = ordered_json::array();
          for (const auto& a : rows) full_rows.push_back(json_row(a, config.precision));
          j["rows"] = std::move(full_rows);
          *target << j.dump(2) << '\n';
        } else {
          std::vector<std::vector<std::string>> cells;
          for (const auto& a : rows) cells.push_back(table_row(a, config.precision));
          render_table({"n", "dx", "mode", "value", "value(3sf)", "abs_error"}, cells,
                       *target);
          if (report.estimated_order) {
            *target << "estimated order: " << report.estimated_order->to_string() << '\n';
          }
          if (report.scaled_error_limit) {
            *target << "scaled error (abs_error*n at largest n): "
                    << report.scaled_error_limit->to_string() << '\n';
          }
          if (report.extrapolated) {
            *target << "Richardson extrapolation of the last (n, 2n) pair: "
                    << report.extrapolated->to_string() << '\n';
          }
        }
      } else {
        std::vector<FloatApproximation> rows;
        Decimal reference = reference_e(config.ref_digits);
        for (const StepSpec& step : schedule.entries()) {
          FloatApproximation f = float_compound_approx(step, config.mode);
          attach_error(f, reference);
          rows.push_back(std::move(f));
        }
        render_approx_rows({}, rows, config.format, config.precision, *target);
      }
      return finish_stream(*target, config, err);
    }
    case Command::sweep: {
      Schedule schedule = parse_schedule(config.schedule);
      std::vector<double> grid;
      grid.reserve(schedule.entries().size());
      for (const StepSpec& step : schedule.entries()) {
        grid.push_back(1.0 / static_cast<double>(step.n()));  // increasing n: decreasing dx
      }
      SweepResult result = float_error_sweep(grid, config.mode);
      if (config.format == Format::csv) {
        *target << "dx,mode,abs_error\n";
        for (const SweepPoint& p : result.points) {
          *target << format_double(p.dx) << ',' << mode_name(p.mode) << ','
                  << opt_double(p.abs_error) << '\n';
        }
      } else if (config.format == Format::json) {
        ordered_json j;
        j["sweep"] = ordered_json::array();
        for (const SweepPoint& p : result.points) {
          ordered_json row;
          row["dx"] = format_double(p.dx);
          row["mode"] = std::string(mode_name(p.mode));
          row["abs_error"] = p.abs_error ? ordered_json(format_double(*p.abs_error))
                                         : ordered_json(nullptr);
          j["sweep"].push_back(std::move(row));
        }
        j["sweep_minimum_dx"] = format_double(result.min_dx());
        *target << j.dump(2) << '\n';
      } else {
        std::vector<std::vector<std::string>> cells;
        for (size_t i = 0; i < result.points.size(); ++i) {
          const SweepPoint& p = result.points[i];
          cells.push_back({format_double(p.dx), std::string(mode_name(p.mode)),
                           opt_double(p.value), opt_double(p.abs_error),
                           i == result.min_index ? "minimum" : p.outcome});
        }
        render_table({"dx", "mode", "value", "abs_error", "outcome"}, cells, *target);
        *target << "minimum error at dx = " << format_double(result.min_dx()) << '\n';
      }
      return finish_stream(*target, config, err);
    }
  }
  err << "error: unknown command\n";
  return 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(config, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int main_entry(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    RunConfig config = parse_args(args);
    return run(config, std::cout, std::cerr);
  } catch (const HelpRequested& help) {
    std::cout << help.text;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace elab::cli
