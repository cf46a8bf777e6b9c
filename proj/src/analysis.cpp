// SPDX-License-Identifier: Apache-2.0
#include "elab/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace elab {

namespace {

constexpr int64_t kReferenceDigits = 25;
constexpr int64_t kOrderDigits = 15;

Decimal order_from_pairs(uint64_t n1, const Decimal& e1, uint64_t n2, const Decimal& e2) {
  double ratio = div(e1, e2, 30).to_double();
  double span = static_cast<double>(n2) / static_cast<double>(n1);
  double order = std::log(ratio) / std::log(span);
  return Decimal::from_double(order).round_to(kOrderDigits);
}

}  // namespace

Decimal estimate_order(const Decimal& e1, const Decimal& e2) {
  if (e1.signum() <= 0 || e2.signum() <= 0) {
    throw std::domain_error("error inputs must be positive");
  }
  return order_from_pairs(1, e1, 2, e2);
}

Decimal scaled_error(const std::vector<std::pair<uint64_t, Decimal>>& rows) {
  if (rows.empty()) throw std::invalid_argument("rows must not be empty");
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].first <= rows[i - 1].first) {
      throw std::invalid_argument("rows must have strictly increasing n");
    }
  }
  const auto& [n, err] = rows.back();
  return mul_exact(err, Decimal(n));
}

Decimal richardson_extrapolate(const Approximation& a_h, const Approximation& a_h2) {
  if (a_h2.step.n() != 2 * a_h.step.n()) {
    throw std::invalid_argument("mismatched step pair: need n and 2n");
  }
  return sub_exact(mul_exact(Decimal(2), a_h2.value), a_h.value);
}

SweepResult float_error_sweep(const std::vector<double>& dx_grid, Mode mode) {
  if (!is_float_mode(mode)) {
    throw std::invalid_argument("sweep requires a float mode");
  }
  if (dx_grid.empty()) throw std::out_of_range("grid out of range: empty");
  for (size_t i = 0; i < dx_grid.size(); ++i) {
    double dx = dx_grid[i];
    if (!(dx > 0.0) || 1.0 / dx > 1e15) {
      throw std::out_of_range("grid out of range: need 0 < dx and 1/dx <= 1e15");
    }
    if (i > 0 && dx >= dx_grid[i - 1]) {
      throw std::out_of_range("grid out of range: dx must be strictly decreasing");
    }
  }
  Decimal reference = reference_e(kReferenceDigits);
  SweepResult result;
  result.points.reserve(dx_grid.size());
  bool have_min = false;
  for (double dx : dx_grid) {
    SweepPoint point;
    point.dx = dx;
    point.mode = mode;
    switch (mode) {
      case Mode::float_pow:
        point.value = std::pow(1.0 + dx, 1.0 / dx);
        break;
      case Mode::float_multiply_loop: {
        double iterations = std::nearbyint(1.0 / dx);
        if (iterations > 1e9) {
          point.outcome = "too many iterations";
          break;
        }
        uint64_t n = static_cast<uint64_t>(iterations);
        double base = 1.0 + dx;
        double acc = 1.0;
        for (uint64_t i = 0; i < n; ++i) acc *= base;
        point.value = acc;
        break;
      }
      case Mode::float_log_exp:
        point.value = std::exp((1.0 / dx) * log1p_portable(dx));
        break;
      case Mode::exact_decimal:
        break;  // unreachable, rejected above
    }
    if (point.value) {
      Decimal diff = sub_exact(Decimal::from_double(*point.value), reference);
      point.abs_error = diff.abs().to_double();
      if (!have_min || *point.abs_error < result.min_error()) {
        result.min_index = result.points.size();
        have_min = true;
      }
    }
    result.points.push_back(std::move(point));
  }
  if (!have_min) throw std::domain_error("no grid point could be evaluated");
  return result;
}

ConvergenceReport make_convergence_report(const std::vector<Approximation>& approximations) {
  ConvergenceReport report;
  report.rows.reserve(approximations.size());
  for (const Approximation& a : approximations) {
    if (!a.abs_error) {
      throw std::invalid_argument("approximations need abs_error attached");
    }
    report.rows.emplace_back(a.step.n(), *a.abs_error);
  }
  if (report.rows.size() >= 2) {
    const auto& [n1, e1] = report.rows[report.rows.size() - 2];
    const auto& [n2, e2] = report.rows.back();
    if (e1.signum() > 0 && e2.signum() > 0) {
      report.estimated_order = order_from_pairs(n1, e1, n2, e2);
    }
  }
  if (!report.rows.empty()) {
    report.scaled_error_limit = scaled_error(report.rows);
  }
  for (size_t i = approximations.size(); i-- > 1;) {
    if (approximations[i].step.n() == 2 * approximations[i - 1].step.n()) {
      report.extrapolated = richardson_extrapolate(approximations[i - 1], approximations[i]);
      break;
    }
  }
  return report;
}

nlohmann::ordered_json to_json(const ConvergenceReport& report) {
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& [n, err] : report.rows) {
    j["rows"].push_back({{"n", n}, {"abs_error", err.to_string()}});
  }
  j["estimated_order"] =
      report.estimated_order ? nlohmann::ordered_json(report.estimated_order->to_string())
                             : nlohmann::ordered_json(nullptr);
  j["scaled_error_limit"] =
      report.scaled_error_limit ? nlohmann::ordered_json(report.scaled_error_limit->to_string())
                                : nlohmann::ordered_json(nullptr);
  j["extrapolated"] =
      report.extrapolated ? nlohmann::ordered_json(report.extrapolated->to_string())
                          : nlohmann::ordered_json(nullptr);
  j["sweep"] = nlohmann::ordered_json::array();
  for (const SweepPoint& p : report.sweep) {
    nlohmann::ordered_json row;
    row["dx"] = format_double(p.dx);
    row["mode"] = std::string(mode_name(p.mode));
    row["abs_error"] = p.abs_error ? nlohmann::ordered_json(format_double(*p.abs_error))
                                   : nlohmann::ordered_json(nullptr);
    j["sweep"].push_back(std::move(row));
  }
  return j;
}

}  // namespace elab
