// SPDX-License-Identifier: Apache-2.0
#include "elab/limit.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace elab {

namespace {

constexpr uint64_t kFloatStepLimit = 1000000000000ull;  // 10^12
constexpr uint64_t kLoopStepLimit = 1000000000ull;      // 10^9

}  // namespace

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::exact_decimal: return "exact-decimal";
    case Mode::float_pow: return "float-pow";
    case Mode::float_multiply_loop: return "float-multiply-loop";
    case Mode::float_log_exp: return "float-log-exp";
  }
  return "exact-decimal";
}

std::optional<Mode> mode_from_name(std::string_view name) {
  if (name == "exact" || name == "exact-decimal") return Mode::exact_decimal;
  if (name == "float-pow") return Mode::float_pow;
  if (name == "float-multiply-loop") return Mode::float_multiply_loop;
  if (name == "float-log-exp") return Mode::float_log_exp;
  return std::nullopt;
}

bool is_float_mode(Mode mode) { return mode != Mode::exact_decimal; }

Schedule::Schedule(Kind kind, std::vector<StepSpec> entries)
    : kind_(kind), entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("schedule must not be empty");
  for (size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].n() <= entries_[i - 1].n()) {
      throw std::invalid_argument("schedule step counts must be strictly increasing");
    }
  }
}

Schedule Schedule::powers_of_ten(int lo, int hi) {
  if (lo < 0 || lo > hi || hi > 18) {
    throw std::invalid_argument("powers-of-ten schedule needs 0 <= lo <= hi <= 18");
  }
  std::vector<StepSpec> entries;
  uint64_t n = 1;
  for (int i = 0; i < lo; ++i) n *= 10;
  for (int e = lo; e <= hi; ++e, n *= 10) entries.emplace_back(n);
  return Schedule(Kind::powers_of_ten, std::move(entries));
}

Schedule Schedule::doubling(int lo, int hi) {
  if (lo < 0 || lo > hi || hi > 59) {
    throw std::invalid_argument("doubling schedule needs 0 <= lo <= hi <= 59");
  }
  std::vector<StepSpec> entries;
  for (int e = lo; e <= hi; ++e) entries.emplace_back(uint64_t{1} << e);
  return Schedule(Kind::doubling, std::move(entries));
}

Schedule Schedule::explicit_list(std::vector<uint64_t> ns) {
  std::vector<StepSpec> entries;
  entries.reserve(ns.size());
  for (uint64_t n : ns) entries.emplace_back(n);
  return Schedule(Kind::explicit_list, std::move(entries));
}

Approximation compound_approx(const StepSpec& step, int64_t precision, PowStats* stats) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  RoundingPolicy policy = RoundingPolicy::for_exponent(step.n());
  int64_t wp = precision + policy.guard_digits;
  Decimal base = div(Decimal(step.n() + 1), Decimal(step.n()), wp);
  Decimal value = pow_int(base, step.n(), precision, stats, policy);
  return Approximation{step, std::move(value), Mode::exact_decimal, std::nullopt};
}

double log1p_portable(double u) {
  if (std::fabs(u) > 0x1p-20) return std::log1p(u);
  // atanh form: log(1+u) = 2*atanh(u/(2+u)); with |z| <= 2^-21 the z^7
  // term sits far below one ulp of the leading z.
  double z = u / (2.0 + u);
  double z2 = z * z;
  return 2.0 * (z + z2 * (z / 3.0 + z2 * (z / 5.0 + z2 * (z / 7.0))));
}

FloatApproximation float_compound_approx(const StepSpec& step, Mode mode) {
  if (!is_float_mode(mode)) {
    throw std::invalid_argument("float evaluation requires a float mode");
  }
  if (step.n() > kFloatStepLimit) {
    throw std::domain_error("step too large for the selected mode");
  }
  FloatApproximation out{step, mode, std::nullopt, std::nullopt, "ok"};
  double dn = static_cast<double>(step.n());
  switch (mode) {
    case Mode::float_pow:
      out.value = std::pow(1.0 + 1.0 / dn, dn);
      break;
    case Mode::float_multiply_loop: {
      if (step.n() > kLoopStepLimit) {
        out.value = std::nullopt;
        out.outcome = "too many iterations";
        return out;
      }
      double base = 1.0 + 1.0 / dn;
      double acc = 1.0;
      for (uint64_t i = 0; i < step.n(); ++i) acc *= base;
      out.value = acc;
      break;
    }
    case Mode::float_log_exp:
      out.value = std::exp(dn * log1p_portable(1.0 / dn));
      break;
    case Mode::exact_decimal:
      break;  // unreachable, rejected above
  }
  return out;
}

void attach_error(FloatApproximation& approx, const Decimal& reference) {
  if (!approx.value) return;
  Decimal diff = sub_exact(Decimal::from_double(*approx.value), reference);
  approx.abs_error = diff.abs().to_double();
}

std::vector<Approximation> limit_schedule(const Schedule& schedule, int64_t precision,
                                          int64_t ref_digits) {
  if (ref_digits < precision) {
    throw std::invalid_argument("ref_digits must be >= precision");
  }
  Decimal reference = reference_e(ref_digits);
  std::vector<Approximation> out;
  out.reserve(schedule.entries().size());
  for (const StepSpec& step : schedule.entries()) {
    Approximation a = compound_approx(step, precision);
    a.abs_error = sub_exact(reference, a.value).abs();
    out.push_back(std::move(a));
  }
  return out;
}

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string to_csv_row(const Approximation& approx, int64_t dx_precision) {
  std::string row = std::to_string(approx.step.n());
  row += ',';
  row += approx.step.dx(dx_precision).to_string();
  row += ',';
  row += mode_name(approx.mode);
  row += ',';
  row += approx.value.to_string();
  row += ',';
  if (approx.abs_error) row += approx.abs_error->to_string();
  return row;
}

std::string to_csv_row(const FloatApproximation& approx) {
  std::string row = std::to_string(approx.step.n());
  row += ',';
  row += format_double(1.0 / static_cast<double>(approx.step.n()));
  row += ',';
  row += mode_name(approx.mode);
  row += ',';
  if (approx.value) row += format_double(*approx.value);
  row += ',';
  if (approx.abs_error) row += format_double(*approx.abs_error);
  return row;
}

}  // namespace elab
