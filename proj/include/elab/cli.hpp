// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "elab/limit.hpp"

namespace elab::cli {

enum class Command { march, approx, limit, sweep, oracle };
enum class Format { table, csv, json };

/// Parsed and validated invocation. Defaults: precision 20, ref_digits 25,
/// mode exact (sweep: float-pow), format table, output to stdout.
struct RunConfig {
  Command command = Command::approx;
  std::optional<uint64_t> n;
  int64_t precision = 20;
  int64_t ref_digits = 25;
  std::string schedule;
  Mode mode = Mode::exact_decimal;
  Format format = Format::table;
  std::optional<std::string> output_path;
  int64_t digits = 25;  // oracle only
};

/// Bad flags or flag combinations; the message names the offence.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// --help was requested; carries the text to print (an exit-0 path).
struct HelpRequested {
  std::string text;
};

/// "pow10:A..B" (n = 10^A..10^B), "doubling:A..B" (n = 2^A..2^B),
/// "list:n1,n2,...". Throws UsageError on anything else.
Schedule parse_schedule(const std::string& text);

/// argv without the program name -> validated RunConfig.
/// Throws UsageError or HelpRequested.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes the run, report to `out` (or the configured file), diagnostics
/// to `err` only. Returns 0 on success, 1 on precondition violations,
/// 2 on I/O failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse + run against stdout/stderr.
int main_entry(int argc, char** argv);

}  // namespace elab::cli
