// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace elab {

/// Arbitrary-size signed integer stored as base-10^9 limbs, little endian.
///
/// The decimal base keeps digit counting, power-of-ten scaling and
/// significant-digit splitting exact and cheap, which is what the Decimal
/// layer is built on. Magnitudes carry no leading zero limbs; zero is the
/// empty limb vector with a positive sign, so operator== is structural.
class BigInt {
public:
  BigInt() = default;
  BigInt(int64_t value);
  BigInt(uint64_t value);
  BigInt(int value) : BigInt(static_cast<int64_t>(value)) {}

  /// Parses an unsigned run of decimal digits. Throws std::invalid_argument
  /// on empty input or non-digit characters.
  static BigInt from_decimal_digits(std::string_view digits);
  static BigInt pow10(int64_t k);

  bool is_zero() const { return limbs_.empty(); }
  bool negative() const { return negative_; }
  /// -1, 0 or +1.
  int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }
  bool is_even() const { return limbs_.empty() || (limbs_[0] % 2 == 0); }

  /// Number of decimal digits of the magnitude; zero has one digit.
  int64_t digit_count() const;
  /// Count of trailing decimal zeros of the magnitude (zero -> 0).
  int64_t trailing_zero_digits() const;

  /// Magnitude as uint64_t; throws std::overflow_error when it does not fit.
  uint64_t to_uint64() const;
  bool fits_uint64() const;

  BigInt abs() const;
  BigInt negated() const;

  static int compare(const BigInt& a, const BigInt& b);
  static int compare_abs(const BigInt& a, const BigInt& b);
  bool operator==(const BigInt&) const = default;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
  BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
  BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

  BigInt mul_small(uint64_t m) const;
  BigInt mul_pow10(int64_t k) const;

  /// Truncated division by a machine word: returns (quotient, |remainder|).
  /// The quotient keeps this value's sign. Throws std::domain_error on d == 0.
  std::pair<BigInt, uint64_t> divmod_small(uint64_t d) const;

  /// Truncated division: |a| = |q|*|b| + r with 0 <= r < |b|; sign(q) =
  /// sign(a)*sign(b), sign(rem) = sign(a). Throws std::domain_error on b == 0.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem);

  /// Splits the magnitude at the k lowest decimal digits:
  /// |*this| = high*10^k + low. Sign is ignored; k < 0 is invalid.
  void split_decimal(int64_t k, BigInt& high, BigInt& low) const;

  /// Decimal digits of the magnitude, no sign.
  std::string to_digits() const;
  std::string to_string() const;

private:
  static constexpr uint32_t kBase = 1000000000;  // 10^9
  static constexpr int kBaseDigits = 9;

  std::vector<uint32_t> limbs_;
  bool negative_ = false;

  void trim();
  static BigInt add_abs(const BigInt& a, const BigInt& b);
  static BigInt sub_abs(const BigInt& a, const BigInt& b);  // requires |a| >= |b|
  static void divmod_knuth(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem);
};

}  // namespace elab
