// SPDX-License-Identifier: Apache-2.0
#include "elab/decimal.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <system_error>

namespace elab {

namespace {

int64_t digits10_u64(uint64_t n) {
  int64_t d = 1;
  while (n >= 10) {
    n /= 10;
    ++d;
  }
  return d;
}

void check_precision(int64_t precision) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
}

}  // namespace

Decimal::Decimal(BigInt mantissa, int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  normalize();
}

void Decimal::normalize() {
  if (mantissa_.is_zero()) {
    exponent_ = 0;
    return;
  }
  int64_t tz = mantissa_.trailing_zero_digits();
  if (tz > 0) {
    BigInt high, low;
    mantissa_.split_decimal(tz, high, low);
    if (mantissa_.negative()) high = high.negated();
    mantissa_ = std::move(high);
    exponent_ += tz;
  }
}

Decimal Decimal::abs() const {
  Decimal r = *this;
  r.mantissa_ = r.mantissa_.abs();
  return r;
}

Decimal Decimal::negated() const {
  Decimal r = *this;
  r.mantissa_ = r.mantissa_.negated();
  return r;
}

int Decimal::compare(const Decimal& a, const Decimal& b) {
  int sa = a.signum();
  int sb = b.signum();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  // Same nonzero sign: quick ordering by leading-digit position.
  int64_t aa = a.adjusted_exponent();
  int64_t ab = b.adjusted_exponent();
  if (aa != ab) {
    int mag = aa < ab ? -1 : 1;
    return sa > 0 ? mag : -mag;
  }
  int64_t e = std::min(a.exponent_, b.exponent_);
  BigInt ma = a.mantissa_.mul_pow10(a.exponent_ - e);
  BigInt mb = b.mantissa_.mul_pow10(b.exponent_ - e);
  return BigInt::compare(ma, mb);
}

/// Shared rounding core. `sticky` means the value is known to sit strictly
/// above the one represented here (a truncated quotient), so an exact-looking
/// tie must round away from zero.
Decimal round_impl(const Decimal& value, int64_t precision, bool sticky) {
  check_precision(precision);
  int64_t nd = value.sig_digits();
  if (nd <= precision) return value;
  int64_t drop = nd - precision;
  BigInt high, low;
  value.mantissa_.split_decimal(drop, high, low);
  BigInt half = BigInt::pow10(drop - 1).mul_small(5);
  int cmp = BigInt::compare_abs(low, half);
  bool up;
  if (cmp > 0) {
    up = true;
  } else if (cmp < 0) {
    up = false;
  } else {
    up = sticky ? true : !high.is_even();
  }
  if (up) high += BigInt(1);
  if (value.mantissa_.negative()) high = high.negated();
  return Decimal(std::move(high), value.exponent_ + drop);
}

Decimal Decimal::round_to(int64_t precision) const {
  return round_impl(*this, precision, false);
}

Decimal add_exact(const Decimal& a, const Decimal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int64_t e = std::min(a.exponent(), b.exponent());
  BigInt ma = a.mantissa().mul_pow10(a.exponent() - e);
  BigInt mb = b.mantissa().mul_pow10(b.exponent() - e);
  return Decimal(ma + mb, e);
}

Decimal sub_exact(const Decimal& a, const Decimal& b) {
  return add_exact(a, b.negated());
}

Decimal mul_exact(const Decimal& a, const Decimal& b) {
  return Decimal(a.mantissa() * b.mantissa(), a.exponent() + b.exponent());
}

Decimal add(const Decimal& a, const Decimal& b, int64_t precision) {
  check_precision(precision);
  return add_exact(a, b).round_to(precision);
}

Decimal sub(const Decimal& a, const Decimal& b, int64_t precision) {
  check_precision(precision);
  return sub_exact(a, b).round_to(precision);
}

Decimal mul(const Decimal& a, const Decimal& b, int64_t precision) {
  check_precision(precision);
  return mul_exact(a, b).round_to(precision);
}

Decimal div(const Decimal& a, const Decimal& b, int64_t precision) {
  check_precision(precision);
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_zero()) return Decimal();
  // Scale the dividend so the integer quotient carries at least
  // precision + 2 digits, then round with the remainder as sticky bit.
  int64_t da = a.mantissa().digit_count();
  int64_t db = b.mantissa().digit_count();
  int64_t shift = std::max<int64_t>(0, db - da + precision + 2);
  BigInt num = a.mantissa().abs().mul_pow10(shift);
  BigInt quot, rem;
  BigInt::divmod(num, b.mantissa().abs(), quot, rem);
  bool negative = (a.signum() * b.signum()) < 0;
  if (negative) quot = quot.negated();
  Decimal raw(std::move(quot), a.exponent() - b.exponent() - shift);
  if (rem.is_zero()) return raw.round_to(precision);
  return round_impl(raw, precision, /*sticky=*/true);
}

RoundingPolicy RoundingPolicy::for_exponent(uint64_t n) {
  RoundingPolicy policy;
  policy.guard_digits = digits10_u64(n) + 5;
  return policy;
}

Decimal pow_int(const Decimal& base, uint64_t n, int64_t precision, PowStats* stats,
                const RoundingPolicy& policy) {
  check_precision(precision);
  if (policy.guard_digits < 0) throw std::invalid_argument("guard_digits must be >= 0");
  PowStats local;
  PowStats& s = stats ? *stats : local;
  s.mul_count = 0;
  if (n == 0) return Decimal::one();
  int64_t wp = precision + policy.guard_digits;
  Decimal acc = base.round_to(wp);
  Decimal result;
  bool have_result = false;
  uint64_t remaining = n;
  while (remaining > 0) {
    if (remaining & 1) {
      if (!have_result) {
        result = acc;
        have_result = true;
      } else {
        result = mul(result, acc, wp);
        ++s.mul_count;
      }
    }
    remaining >>= 1;
    if (remaining > 0) {
      acc = mul(acc, acc, wp);
      ++s.mul_count;
    }
  }
  return result.round_to(precision);
}

Decimal pow_int(const Decimal& base, uint64_t n, int64_t precision, PowStats* stats) {
  return pow_int(base, n, precision, stats, RoundingPolicy::for_exponent(n));
}

Decimal reference_e(int64_t digits) {
  if (digits < 1 || digits > 10000) {
    throw std::out_of_range("digits must be in [1, 10000]");
  }
  // Scaled-integer factorial series: sum of floor(10^S / k!). Each floor
  // loses < 1 unit and the dropped tail past the last nonzero term is < 2
  // units, so the true scaled value exceeds `sum` by fewer than K + 2 units
  // for K terms. Retry with a wider scale in the (never yet seen) case that
  // the rounding decision falls inside that uncertainty band.
  for (int64_t extra = 15;; extra += 15) {
    int64_t scale = digits + extra;
    BigInt term = BigInt::pow10(scale);
    BigInt sum = term;
    uint64_t k = 1;
    while (!term.is_zero()) {
      term = term.divmod_small(k).first;
      sum += term;
      ++k;
    }
    uint64_t slack = 2 * k + 16;
    int64_t nd = sum.digit_count();  // scale + 1: 2 <= e < 10
    int64_t drop = nd - digits;
    BigInt high, low;
    sum.split_decimal(drop, high, low);
    BigInt half = BigInt::pow10(drop - 1).mul_small(5);
    BigInt band = half - BigInt(slack);
    if (BigInt::compare_abs(low, band) > 0 && BigInt::compare_abs(low, half) < 0) {
      continue;  // too close to the rounding boundary to decide, widen
    }
    return round_impl(Decimal(std::move(sum), -scale), digits, /*sticky=*/true);
  }
}

Decimal Decimal::parse(std::string_view text) {
  auto fail = [&]() -> Decimal {
    throw std::invalid_argument("invalid decimal literal: \"" + std::string(text) + "\"");
  };
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  size_t int_digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits.push_back(text[i]);
    ++i;
    ++int_digits;
  }
  int64_t frac_digits = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits.push_back(text[i]);
      ++i;
      ++frac_digits;
    }
  }
  if (digits.empty() || (int_digits == 0 && frac_digits == 0)) return fail();
  int64_t exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    size_t digit_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digit_begin) return fail();
    auto res = std::from_chars(text.data() + digit_begin, text.data() + i, exp10);
    if (res.ec != std::errc() || res.ptr != text.data() + i) return fail();
    if (exp_negative) exp10 = -exp10;
  }
  if (i != text.size()) return fail();
  BigInt mantissa = BigInt::from_decimal_digits(digits);
  if (negative) mantissa = mantissa.negated();
  return Decimal(std::move(mantissa), exp10 - frac_digits);
}

Decimal Decimal::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("value must be finite");
  if (value == 0.0) return Decimal();
  uint64_t bits = std::bit_cast<uint64_t>(value);
  bool negative = bits >> 63;
  int64_t raw_exp = static_cast<int64_t>((bits >> 52) & 0x7ff);
  uint64_t frac = bits & ((uint64_t{1} << 52) - 1);
  uint64_t m;
  int64_t k;  // value = +-m * 2^k
  if (raw_exp == 0) {
    m = frac;
    k = -1074;
  } else {
    m = frac | (uint64_t{1} << 52);
    k = raw_exp - 1075;
  }
  BigInt mantissa(m);
  int64_t exp10 = 0;
  if (k >= 0) {
    int64_t shift = k;
    while (shift >= 62) {
      mantissa = mantissa.mul_small(uint64_t{1} << 62);
      shift -= 62;
    }
    if (shift > 0) mantissa = mantissa.mul_small(uint64_t{1} << shift);
  } else {
    // 2^-j = 5^j * 10^-j keeps the expansion exact.
    int64_t j = -k;
    BigInt five(uint64_t{1});
    int64_t left = j;
    constexpr uint64_t kFive27 = 7450580596923828125ull;  // 5^27
    while (left >= 27) {
      five = five.mul_small(kFive27);
      left -= 27;
    }
    uint64_t tail = 1;
    for (int64_t t = 0; t < left; ++t) tail *= 5;
    if (tail > 1) five = five.mul_small(tail);
    mantissa = mantissa * five;
    exp10 = -j;
  }
  if (negative) mantissa = mantissa.negated();
  return Decimal(std::move(mantissa), exp10);
}

double Decimal::to_double() const {
  std::string text = to_string();
  double out = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), out,
                             std::chars_format::general);
  if (res.ec == std::errc::result_out_of_range) {
    return signum() < 0 ? -std::numeric_limits<double>::infinity()
                        : std::numeric_limits<double>::infinity();
  }
  if (res.ec != std::errc()) throw std::logic_error("unparseable decimal rendering");
  return out;
}

namespace {

std::string render_plain(const std::string& digits, int64_t exponent) {
  if (exponent >= 0) {
    return digits + std::string(static_cast<size_t>(exponent), '0');
  }
  int64_t nd = static_cast<int64_t>(digits.size());
  int64_t int_digits = nd + exponent;
  if (int_digits > 0) {
    return digits.substr(0, static_cast<size_t>(int_digits)) + "." +
           digits.substr(static_cast<size_t>(int_digits));
  }
  return "0." + std::string(static_cast<size_t>(-int_digits), '0') + digits;
}

std::string render_scientific(const std::string& digits, int64_t adjusted) {
  std::string out(1, digits[0]);
  if (digits.size() > 1) {
    out.push_back('.');
    out.append(digits, 1, std::string::npos);
  }
  out.push_back('e');
  out += std::to_string(adjusted);
  return out;
}

/// Plain notation is used inside a bounded window around the decimal point;
/// everything else renders as d.ddde<exp> so magnitudes stay readable.
bool in_plain_window(int64_t exponent, int64_t adjusted) {
  if (exponent <= 0) return adjusted >= -6;
  return adjusted <= 20;
}

}  // namespace

std::string Decimal::to_string() const {
  if (is_zero()) return "0";
  std::string digits = mantissa_.to_digits();
  int64_t adjusted = adjusted_exponent();
  std::string body = in_plain_window(exponent_, adjusted)
                         ? render_plain(digits, exponent_)
                         : render_scientific(digits, adjusted);
  return mantissa_.negative() ? "-" + body : body;
}

std::string to_sig_figs(const Decimal& value, int64_t figures) {
  check_precision(figures);
  Decimal r = value.round_to(figures);
  if (r.is_zero()) {
    if (figures == 1) return "0";
    return "0." + std::string(static_cast<size_t>(figures - 1), '0');
  }
  std::string digits = r.mantissa().abs().to_digits();
  int64_t pad = figures - static_cast<int64_t>(digits.size());
  digits.append(static_cast<size_t>(pad), '0');
  int64_t exponent = r.exponent() - pad;
  int64_t adjusted = exponent + figures - 1;
  std::string body = in_plain_window(exponent, adjusted)
                         ? render_plain(digits, exponent)
                         : render_scientific(digits, adjusted);
  return r.signum() < 0 ? "-" + body : body;
}

}  // namespace elab
