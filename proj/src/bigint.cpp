// SPDX-License-Identifier: Apache-2.0
#include "elab/bigint.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>

namespace elab {

namespace {

constexpr uint32_t kBase = 1000000000;
constexpr int kBaseDigits = 9;

int digits_in_u32(uint32_t v) {
  int d = 1;
  while (v >= 10) { v /= 10; ++d; }
  return d;
}

constexpr std::array<uint32_t, 10> kPow10{1u,       10u,       100u,      1000u,
                                          10000u,   100000u,   1000000u,  10000000u,
                                          100000000u, 1000000000u};

}  // namespace

BigInt::BigInt(int64_t value) {
  bool neg = value < 0;
  // careful with INT64_MIN
  uint64_t mag = neg ? (~static_cast<uint64_t>(value) + 1) : static_cast<uint64_t>(value);
  while (mag != 0) {
    limbs_.push_back(static_cast<uint32_t>(mag % kBase));
    mag /= kBase;
  }
  negative_ = neg && !limbs_.empty();
}

BigInt::BigInt(uint64_t value) {
  while (value != 0) {
    limbs_.push_back(static_cast<uint32_t>(value % kBase));
    value /= kBase;
  }
}

BigInt BigInt::from_decimal_digits(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("BigInt: empty digit string");
  BigInt r;
  size_t first = digits.size() % kBaseDigits;
  size_t pos = 0;
  auto chunk = [&](size_t len) {
    uint32_t v = 0;
    for (size_t i = 0; i < len; ++i, ++pos) {
      char c = digits[pos];
      if (c < '0' || c > '9') throw std::invalid_argument("BigInt: non-digit character");
      v = v * 10 + static_cast<uint32_t>(c - '0');
    }
    return v;
  };
  std::vector<uint32_t> big_endian;
  if (first != 0) big_endian.push_back(chunk(first));
  while (pos < digits.size()) big_endian.push_back(chunk(kBaseDigits));
  r.limbs_.assign(big_endian.rbegin(), big_endian.rend());
  r.trim();
  return r;
}

BigInt BigInt::pow10(int64_t k) {
  if (k < 0) throw std::invalid_argument("BigInt::pow10: negative exponent");
  BigInt r(uint64_t{1});
  return r.mul_pow10(k);
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

int64_t BigInt::digit_count() const {
  if (limbs_.empty()) return 1;
  return static_cast<int64_t>(limbs_.size() - 1) * kBaseDigits + digits_in_u32(limbs_.back());
}

int64_t BigInt::trailing_zero_digits() const {
  if (limbs_.empty()) return 0;
  int64_t zeros = 0;
  size_t i = 0;
  while (limbs_[i] == 0) { zeros += kBaseDigits; ++i; }
  uint32_t v = limbs_[i];
  while (v % 10 == 0) { ++zeros; v /= 10; }
  return zeros;
}

bool BigInt::fits_uint64() const {
  if (limbs_.size() > 3) return false;
  if (limbs_.size() < 3) return true;
  // top limb limited so that value <= UINT64_MAX = 18446744073709551615
  unsigned __int128 v = limbs_[2];
  v = v * kBase + limbs_[1];
  v = v * kBase + limbs_[0];
  return v <= static_cast<unsigned __int128>(UINT64_MAX);
}

uint64_t BigInt::to_uint64() const {
  if (!fits_uint64()) throw std::overflow_error("BigInt: magnitude exceeds uint64_t");
  uint64_t v = 0;
  for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
  return v;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

BigInt BigInt::negated() const {
  BigInt r = *this;
  if (!r.limbs_.empty()) r.negative_ = !r.negative_;
  return r;
}

int BigInt::compare_abs(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.negative_ != b.negative_) return a.negative_ ? -1 : 1;
  int c = compare_abs(a, b);
  return a.negative_ ? -c : c;
}

BigInt BigInt::add_abs(const BigInt& a, const BigInt& b) {
  BigInt r;
  const auto& x = a.limbs_;
  const auto& y = b.limbs_;
  size_t n = std::max(x.size(), y.size());
  r.limbs_.reserve(n + 1);
  uint32_t carry = 0;
  for (size_t i = 0; i < n; ++i) {
    uint64_t s = carry;
    if (i < x.size()) s += x[i];
    if (i < y.size()) s += y[i];
    r.limbs_.push_back(static_cast<uint32_t>(s % kBase));
    carry = static_cast<uint32_t>(s / kBase);
  }
  if (carry) r.limbs_.push_back(carry);
  return r;
}

BigInt BigInt::sub_abs(const BigInt& a, const BigInt& b) {
  assert(compare_abs(a, b) >= 0);
  BigInt r;
  r.limbs_.reserve(a.limbs_.size());
  int64_t borrow = 0;
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    int64_t d = static_cast<int64_t>(a.limbs_[i]) - borrow - (i < b.limbs_.size() ? b.limbs_[i] : 0);
    if (d < 0) { d += kBase; borrow = 1; } else { borrow = 0; }
    r.limbs_.push_back(static_cast<uint32_t>(d));
  }
  r.trim();
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.negative_ == b.negative_) {
    BigInt r = BigInt::add_abs(a, b);
    r.negative_ = a.negative_ && !r.limbs_.empty();
    return r;
  }
  int c = BigInt::compare_abs(a, b);
  if (c == 0) return BigInt{};
  BigInt r = c > 0 ? BigInt::sub_abs(a, b) : BigInt::sub_abs(b, a);
  r.negative_ = (c > 0 ? a.negative_ : b.negative_) && !r.limbs_.empty();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negated(); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt{};
  if (b.limbs_.size() <= 2) {
    BigInt r = a.mul_small(b.abs().to_uint64());
    r.negative_ = (a.negative_ != b.negative_) && !r.limbs_.empty();
    return r;
  }
  if (a.limbs_.size() <= 2) return b * a;
  BigInt r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    uint64_t carry = 0;
    uint64_t av = a.limbs_[i];
    for (size_t j = 0; j < b.limbs_.size(); ++j) {
      uint64_t cur = r.limbs_[i + j] + av * b.limbs_[j] + carry;
      r.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    size_t k = i + b.limbs_.size();
    while (carry) {
      uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<uint32_t>(cur % kBase);
      carry = cur / kBase;
      ++k;
    }
  }
  r.trim();
  r.negative_ = (a.negative_ != b.negative_) && !r.limbs_.empty();
  return r;
}

BigInt BigInt::mul_small(uint64_t m) const {
  if (m == 0 || is_zero()) return BigInt{};
  BigInt r;
  r.limbs_.reserve(limbs_.size() + 3);
  unsigned __int128 carry = 0;
  for (uint32_t limb : limbs_) {
    unsigned __int128 cur = static_cast<unsigned __int128>(limb) * m + carry;
    r.limbs_.push_back(static_cast<uint32_t>(cur % kBase));
    carry = cur / kBase;
  }
  while (carry) {
    r.limbs_.push_back(static_cast<uint32_t>(carry % kBase));
    carry /= kBase;
  }
  r.negative_ = negative_;
  return r;
}

BigInt BigInt::mul_pow10(int64_t k) const {
  if (k < 0) throw std::invalid_argument("BigInt::mul_pow10: negative exponent");
  if (is_zero() || k == 0) return *this;
  BigInt r;
  int64_t limb_shift = k / kBaseDigits;
  int small = static_cast<int>(k % kBaseDigits);
  r.limbs_.assign(static_cast<size_t>(limb_shift), 0);
  r.limbs_.insert(r.limbs_.end(), limbs_.begin(), limbs_.end());
  r.negative_ = negative_;
  if (small != 0) r = r.mul_small(kPow10[static_cast<size_t>(small)]);
  return r;
}

std::pair<BigInt, uint64_t> BigInt::divmod_small(uint64_t d) const {
  if (d == 0) throw std::domain_error("BigInt: division by zero");
  BigInt q;
  q.limbs_.assign(limbs_.size(), 0);
  unsigned __int128 rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    unsigned __int128 cur = rem * kBase + limbs_[i];
    q.limbs_[i] = static_cast<uint32_t>(cur / d);
    rem = cur % d;
  }
  q.trim();
  q.negative_ = negative_ && !q.limbs_.empty();
  return {q, static_cast<uint64_t>(rem)};
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  if (compare_abs(a, b) < 0) {
    rem = a;
    quot = BigInt{};
    return;
  }
  if (b.limbs_.size() <= 2) {
    auto [q, r] = a.divmod_small(b.abs().to_uint64());
    q.negative_ = (a.negative_ != b.negative_) && !q.limbs_.empty();
    quot = std::move(q);
    rem = BigInt(static_cast<uint64_t>(r));
    rem.negative_ = a.negative_ && !rem.limbs_.empty();
    return;
  }
  divmod_knuth(a, b, quot, rem);
}

// Knuth TAOCP 4.3.1 Algorithm D over base-10^9 limbs.
void BigInt::divmod_knuth(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
  const size_t n = b.limbs_.size();
  const size_t m = a.limbs_.size() - n;

  // D1: normalize so the divisor's top limb is >= base/2.
  uint32_t d = kBase / (b.limbs_.back() + 1);
  BigInt u = a.abs().mul_small(d);
  BigInt v = b.abs().mul_small(d);
  u.limbs_.resize(a.limbs_.size() + 1, 0);

  BigInt q;
  q.limbs_.assign(m + 1, 0);
  const uint64_t vtop = v.limbs_[n - 1];
  const uint64_t vnext = v.limbs_[n - 2];

  for (size_t j = m + 1; j-- > 0;) {
    // D3: estimate the quotient limb.
    uint64_t num = static_cast<uint64_t>(u.limbs_[j + n]) * kBase + u.limbs_[j + n - 1];
    uint64_t qhat = num / vtop;
    uint64_t rhat = num % vtop;
    while (qhat >= kBase || qhat * vnext > rhat * kBase + u.limbs_[j + n - 2]) {
      --qhat;
      rhat += vtop;
      if (rhat >= kBase) break;
    }
    // D4: multiply and subtract.
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v.limbs_[i] + carry;
      carry = p / kBase;
      int64_t t = static_cast<int64_t>(u.limbs_[i + j]) - static_cast<int64_t>(p % kBase) - borrow;
      if (t < 0) { t += kBase; borrow = 1; } else { borrow = 0; }
      u.limbs_[i + j] = static_cast<uint32_t>(t);
    }
    int64_t t = static_cast<int64_t>(u.limbs_[j + n]) - static_cast<int64_t>(carry) - borrow;
    if (t < 0) {
      // D6: estimate was one too large; add the divisor back.
      t += kBase;
      --qhat;
      uint32_t c = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(u.limbs_[i + j]) + v.limbs_[i] + c;
        u.limbs_[i + j] = static_cast<uint32_t>(s % kBase);
        c = static_cast<uint32_t>(s / kBase);
      }
      t += c;
      t -= kBase;  // the final carry cancels the borrowed limb
    }
    u.limbs_[j + n] = static_cast<uint32_t>(t);
    q.limbs_[j] = static_cast<uint32_t>(qhat);
  }

  q.trim();
  q.negative_ = (a.negative_ != b.negative_) && !q.limbs_.empty();
  u.limbs_.resize(n);
  u.trim();
  auto [r, zero_rem] = u.divmod_small(d);
  assert(zero_rem == 0);
  (void)zero_rem;
  r.negative_ = a.negative_ && !r.limbs_.empty();
  quot = std::move(q);
  rem = std::move(r);
}

void BigInt::split_decimal(int64_t k, BigInt& high, BigInt& low) const {
  if (k < 0) throw std::invalid_argument("BigInt::split_decimal: negative position");
  if (k == 0) {
    high = abs();
    low = BigInt{};
    return;
  }
  if (k >= digit_count()) {
    high = BigInt{};
    low = abs();
    return;
  }
  size_t limb_cut = static_cast<size_t>(k / kBaseDigits);
  int small = static_cast<int>(k % kBaseDigits);
  BigInt hi, lo;
  lo.limbs_.assign(limbs_.begin(), limbs_.begin() + static_cast<ptrdiff_t>(limb_cut));
  hi.limbs_.assign(limbs_.begin() + static_cast<ptrdiff_t>(limb_cut), limbs_.end());
  if (small != 0) {
    uint32_t p = kPow10[static_cast<size_t>(small)];
    // shift `small` digits out of hi into the top of lo
    uint32_t shifted_out = 0;
    for (size_t i = hi.limbs_.size(); i-- > 0;) {
      uint64_t cur = static_cast<uint64_t>(shifted_out) * kBase + hi.limbs_[i];
      hi.limbs_[i] = static_cast<uint32_t>(cur / p);
      shifted_out = static_cast<uint32_t>(cur % p);
    }
    lo.limbs_.resize(limb_cut + 1, 0);
    lo.limbs_[limb_cut] = shifted_out;
  }
  hi.trim();
  lo.trim();
  high = std::move(hi);
  low = std::move(lo);
}

std::string BigInt::to_digits() const {
  if (limbs_.empty()) return "0";
  std::string s = std::to_string(limbs_.back());
  s.reserve(limbs_.size() * kBaseDigits);
  char buf[16];
  for (size_t i = limbs_.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
    s += buf;
  }
  return s;
}

std::string BigInt::to_string() const {
  return negative_ ? "-" + to_digits() : to_digits();
}

}  // namespace elab
