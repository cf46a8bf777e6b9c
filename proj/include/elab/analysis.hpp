// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "elab/decimal.hpp"
#include "elab/limit.hpp"

namespace elab {

/// One grid point of a native-float error sweep.
struct SweepPoint {
  double dx = 0.0;
  Mode mode = Mode::float_pow;
  std::optional<double> value;
  std::optional<double> abs_error;
  std::string outcome = "ok";

  bool skipped() const { return !value.has_value(); }
};

struct SweepResult {
  std::vector<SweepPoint> points;
  size_t min_index = 0;  // minimal abs_error among evaluated points

  double min_dx() const { return points[min_index].dx; }
  double min_error() const { return *points[min_index].abs_error; }
};

/// Convergence summary of a schedule run, with an optional float sweep.
struct ConvergenceReport {
  std::vector<std::pair<uint64_t, Decimal>> rows;  // (n, abs_error)
  std::optional<Decimal> estimated_order;
  std::optional<Decimal> scaled_error_limit;       // abs_error*n at largest n
  std::optional<Decimal> extrapolated;             // Richardson result
  std::optional<double> sweep_minimum_dx;
  std::vector<SweepPoint> sweep;
};

/// log2(e1/e2) for errors at step h and h/2; tends to the convergence
/// order. Both inputs must be positive.
Decimal estimate_order(const Decimal& e1, const Decimal& e2);

/// abs_error*n at the largest n of a non-empty, n-increasing row list.
/// The product tends to e/2, the first-order error coefficient.
Decimal scaled_error(const std::vector<std::pair<uint64_t, Decimal>>& rows);

/// 2*A(h/2) - A(h), exact; cancels the first-order error term, leaving
/// O(h^2). Requires a_h2.step.n == 2*a_h.step.n.
Decimal richardson_extrapolate(const Approximation& a_h, const Approximation& a_h2);

/// Evaluates (1+dx)^(1/dx) in binary64 at every grid point and measures
/// |value - reference_e(25)|. The grid must be positive, strictly
/// decreasing, with 1/dx <= 10^15. Points a mode declines are recorded as
/// skipped; min_index covers evaluated points only.
SweepResult float_error_sweep(const std::vector<double>& dx_grid, Mode mode);

/// Rows, order estimate from the last two entries, scaled error, and a
/// Richardson step over the last (n, 2n) pair when the schedule has one.
/// Every approximation must carry abs_error.
ConvergenceReport make_convergence_report(const std::vector<Approximation>& approximations);

/// {rows:[{n,abs_error}], estimated_order, scaled_error_limit,
///  extrapolated, sweep:[{dx,mode,abs_error}]}; decimals as strings.
nlohmann::ordered_json to_json(const ConvergenceReport& report);

}  // namespace elab
