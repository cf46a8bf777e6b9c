// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "elab/bigint.hpp"

namespace elab {

/// Arbitrary-precision decimal number: value = mantissa * 10^exponent.
///
/// Values are kept normalized: the mantissa carries no trailing decimal
/// zeros and zero is exactly (mantissa 0, exponent 0). The representation
/// of any value is therefore unique and operator== is both structural and
/// numeric equality. All rounding is round-half-even on significant digits.
class Decimal {
public:
  Decimal() = default;  // zero
  explicit Decimal(int64_t value) : mantissa_(value) { normalize(); }
  explicit Decimal(uint64_t value) : mantissa_(value) { normalize(); }
  explicit Decimal(int value) : Decimal(static_cast<int64_t>(value)) {}
  Decimal(BigInt mantissa, int64_t exponent);

  /// Parses "[+|-]digits[.digits][(e|E)[+|-]digits]".
  /// Throws std::invalid_argument on anything else.
  static Decimal parse(std::string_view text);

  /// Exact decimal expansion of a finite binary64 value.
  static Decimal from_double(double value);

  static Decimal one() { return Decimal(int64_t{1}); }

  bool is_zero() const { return mantissa_.is_zero(); }
  int signum() const { return mantissa_.signum(); }
  const BigInt& mantissa() const { return mantissa_; }
  int64_t exponent() const { return exponent_; }

  /// Count of significant decimal digits; zero has none.
  int64_t sig_digits() const { return is_zero() ? 0 : mantissa_.digit_count(); }

  /// Exponent of the leading digit: value = d.ddd * 10^adjusted_exponent().
  int64_t adjusted_exponent() const { return exponent_ + sig_digits() - 1; }

  /// Round-half-even to `precision` significant digits (precision >= 1).
  /// Exact values that already fit are returned unchanged.
  Decimal round_to(int64_t precision) const;

  Decimal abs() const;
  Decimal negated() const;

  /// Exact value ordering.
  static int compare(const Decimal& a, const Decimal& b);

  bool operator==(const Decimal&) const = default;

  double to_double() const;
  std::string to_string() const;

private:
  BigInt mantissa_;
  int64_t exponent_ = 0;

  void normalize();
  friend Decimal round_impl(const Decimal& value, int64_t precision, bool sticky);
};

/// Fixed rounding discipline: mode is always round-half-even; guard_digits
/// is the extra working precision carried before the final rounding.
struct RoundingPolicy {
  enum class Mode { half_even };
  Mode mode = Mode::half_even;
  int64_t guard_digits = 0;

  /// Guard rule for a power of exponent n: ceil(log10 n) + 5. A rounded
  /// multiply has relative error <= 10^(1-p) and a square-and-multiply
  /// power performs at most 2*floor(log2 n) of them.
  static RoundingPolicy for_exponent(uint64_t n);
};

/// Per-call instrumentation for pow_int; never global state.
struct PowStats {
  uint64_t mul_count = 0;
};

Decimal add(const Decimal& a, const Decimal& b, int64_t precision);
Decimal sub(const Decimal& a, const Decimal& b, int64_t precision);
Decimal mul(const Decimal& a, const Decimal& b, int64_t precision);

Decimal add_exact(const Decimal& a, const Decimal& b);
Decimal sub_exact(const Decimal& a, const Decimal& b);
Decimal mul_exact(const Decimal& a, const Decimal& b);

/// Quotient rounded half-even to `precision` significant digits; exact when
/// the exact quotient fits. Throws std::domain_error when b is zero.
Decimal div(const Decimal& a, const Decimal& b, int64_t precision);

/// base^n rounded to `precision` significant digits via square-and-multiply
/// at precision + policy.guard_digits. The number of decimal multiplies is
/// at most 2*floor(log2 n) for n >= 1 and is reported through `stats`.
Decimal pow_int(const Decimal& base, uint64_t n, int64_t precision, PowStats* stats,
                const RoundingPolicy& policy);
Decimal pow_int(const Decimal& base, uint64_t n, int64_t precision, PowStats* stats = nullptr);

/// e to `digits` significant digits (1 <= digits <= 10000), from the
/// factorial series sum(1/k!) with the tail bounded by 2/(K+1)!.
Decimal reference_e(int64_t digits);

/// Display rounding: exactly `figures` significant digits, trailing zeros
/// kept ("2.60", not "2.6"). Falls back to scientific notation when the
/// value does not fit a plain window.
std::string to_sig_figs(const Decimal& value, int64_t figures);

}  // namespace elab
