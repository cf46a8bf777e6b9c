// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elab/decimal.hpp"
#include "elab/step.hpp"

namespace elab {

/// How (1+1/n)^n gets evaluated.
enum class Mode {
  exact_decimal,
  float_pow,
  float_multiply_loop,
  float_log_exp,
};

/// Canonical row label: "exact-decimal", "float-pow", ...
std::string_view mode_name(Mode mode);
/// Accepts canonical labels plus the CLI alias "exact".
std::optional<Mode> mode_from_name(std::string_view name);
bool is_float_mode(Mode mode);

/// One exact-decimal evaluation of (1+1/n)^n.
struct Approximation {
  StepSpec step;
  Decimal value;
  Mode mode = Mode::exact_decimal;
  /// |value - reference_e(ref_digits)|, filled when a reference was given.
  std::optional<Decimal> abs_error;
};

/// One binary64 evaluation of (1+1/n)^n. `value` is empty when the mode
/// declined the step; `outcome` then says why ("too many iterations").
struct FloatApproximation {
  StepSpec step;
  Mode mode = Mode::float_pow;
  std::optional<double> value;
  std::optional<double> abs_error;
  std::string outcome = "ok";

  bool skipped() const { return !value.has_value(); }
};

/// Ordered list of step counts with strictly increasing n.
class Schedule {
public:
  enum class Kind { powers_of_ten, doubling, explicit_list };

  /// n = 10^lo .. 10^hi, 0 <= lo <= hi <= 18.
  static Schedule powers_of_ten(int lo, int hi);
  /// n = 2^lo .. 2^hi, 0 <= lo <= hi <= 59.
  static Schedule doubling(int lo, int hi);
  /// Arbitrary strictly increasing step counts, each >= 1.
  static Schedule explicit_list(std::vector<uint64_t> ns);

  Kind kind() const { return kind_; }
  const std::vector<StepSpec>& entries() const { return entries_; }

private:
  Schedule(Kind kind, std::vector<StepSpec> entries);
  Kind kind_;
  std::vector<StepSpec> entries_;
};

/// (1+1/n)^n rounded to `precision` digits. The base 1+1/n is formed at
/// the powering working precision, so the result tracks the exact rational
/// to well under one unit in the last place for every n this tool accepts.
Approximation compound_approx(const StepSpec& step, int64_t precision,
                              PowStats* stats = nullptr);

/// Same quantity in binary64. Requires a float mode and n <= 10^12; the
/// multiply loop declines n > 10^9 instead of running for minutes.
FloatApproximation float_compound_approx(const StepSpec& step, Mode mode);

/// Fills abs_error as |value - reference| computed exactly, then narrowed
/// back to binary64. No-op for skipped evaluations.
void attach_error(FloatApproximation& approx, const Decimal& reference);

/// compound_approx for every entry, each with abs_error against
/// reference_e(ref_digits). Requires ref_digits >= precision.
std::vector<Approximation> limit_schedule(const Schedule& schedule, int64_t precision,
                                          int64_t ref_digits);

/// Series-based log(1+u), 1 ulp for |u| <= 2^-20; delegates to the runtime
/// library outside that range. Exposed for the log-exp evaluation mode.
double log1p_portable(double u);

/// Shortest round-trip decimal rendering of a binary64 value.
std::string format_double(double value);

inline constexpr std::string_view kApproxCsvHeader = "n,dx,mode,value,abs_error";

/// CSV row `n,dx,mode,value,abs_error`. Exact rows carry decimal strings
/// only; dx is 1/n rendered at `dx_precision` digits.
std::string to_csv_row(const Approximation& approx, int64_t dx_precision);
std::string to_csv_row(const FloatApproximation& approx);

}  // namespace elab
