// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "elab/decimal.hpp"
#include "oracles.hpp"

using elab::Decimal;
using elab::PowStats;
using elab::RoundingPolicy;

static Decimal dec(const char* s) { return Decimal::parse(s); }
static elab::BigInt big(const char* s) { return elab::BigInt::from_decimal_digits(s); }

TEST_CASE("parsing accepts sign, fraction and exponent forms") {
  CHECK(dec("0").to_string() == "0");
  CHECK(dec("2.5937424601").to_string() == "2.5937424601");
  CHECK(dec("1e-8").to_string() == "1e-8");
  CHECK(dec("1E-8").to_string() == "1e-8");
  CHECK(dec("+3.5").to_string() == "3.5");
  CHECK(dec("-0.000001").to_string() == "-0.000001");
  CHECK(dec(".5").to_string() == "0.5");
  CHECK(dec("5.").to_string() == "5");
  CHECK(dec("12.500e2").to_string() == "1250");
  CHECK(dec("0.0100").to_string() == "0.01");
  CHECK(dec("-0").to_string() == "0");
  CHECK(dec("00042").to_string() == "42");
  CHECK(dec("1e+3").to_string() == "1000");
}

TEST_CASE("parsing rejects malformed literals") {
  for (const char* bad : {"", ".", "+", "-", "e5", "1e", "1e+", "1.2.3", "1,5",
                          "abc", "0x12", "1e5x", " 1", "1 ", "--1", "≥"}) {
    CHECK_THROWS_AS(Decimal::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("values are normalized so equality is structural") {
  CHECK(dec("2.50") == dec("2.5"));
  CHECK(dec("2500e-3") == dec("2.5"));
  CHECK(dec("0.00") == Decimal());
  CHECK(dec("1000") == dec("1e3"));
  CHECK(Decimal().exponent() == 0);
  CHECK(dec("1200").mantissa().to_string() == "12");
  CHECK(dec("1200").exponent() == 2);
  CHECK(dec("2.5") != dec("2.50001"));
}

TEST_CASE("rendering picks plain or scientific by window") {
  CHECK(dec("0.000001").to_string() == "0.000001");    // adjusted -6, plain
  CHECK(dec("0.0000001").to_string() == "1e-7");       // adjusted -7, scientific
  CHECK(dec("123456.789").to_string() == "123456.789");
  CHECK(Decimal(big("5"), 20).to_string() == "500000000000000000000");
  CHECK(Decimal(big("5"), 21).to_string() == "5e21");
  CHECK(dec("-1e-8").to_string() == "-1e-8");
  CHECK(dec("2.5e9").to_string() == "2500000000");
}

TEST_CASE("compare orders by value across exponents") {
  CHECK(Decimal::compare(dec("1.0001"), dec("1.001")) < 0);
  CHECK(Decimal::compare(dec("-5"), dec("3")) < 0);
  CHECK(Decimal::compare(dec("-5"), dec("-3")) < 0);
  CHECK(Decimal::compare(dec("2.59"), dec("2.59")) == 0);
  CHECK(Decimal::compare(dec("1e10"), dec("9999999999")) > 0);
  CHECK(Decimal::compare(Decimal(), dec("-1e-30")) > 0);
  CHECK(dec("-2.5").abs() == dec("2.5"));
  CHECK(dec("2.5").negated() == dec("-2.5"));
}

TEST_CASE("round_to is round-half-even on significant digits") {
  CHECK(dec("2.5").round_to(1) == dec("2"));
  CHECK(dec("3.5").round_to(1) == dec("4"));
  CHECK(dec("-2.5").round_to(1) == dec("-2"));
  CHECK(dec("-3.5").round_to(1) == dec("-4"));
  CHECK(dec("0.995").round_to(2) == dec("1.0"));
  CHECK(dec("2.451").round_to(2) == dec("2.5"));
  CHECK(dec("2.449").round_to(2) == dec("2.4"));
  CHECK(dec("9.99").round_to(2) == dec("10"));
  CHECK(dec("1.25").round_to(2) == dec("1.2"));
  CHECK(dec("1.35").round_to(2) == dec("1.4"));
  // exact fit is returned unchanged
  CHECK(dec("2.59").round_to(15) == dec("2.59"));
  CHECK(dec("2.59").round_to(3) == dec("2.59"));
  CHECK_THROWS_AS(dec("1").round_to(0), std::invalid_argument);
}

TEST_CASE("exact arithmetic is exact") {
  CHECK(elab::add_exact(dec("1.25"), dec("1.25")) == dec("2.5"));
  CHECK(elab::sub_exact(dec("1"), dec("0.999999999999999999999")) == dec("1e-21"));
  CHECK(elab::mul_exact(dec("1.1"), dec("1.1")) == dec("1.21"));
  CHECK(elab::mul_exact(dec("-1.1"), dec("1.1")) == dec("-1.21"));
  CHECK(elab::add_exact(dec("1e20"), dec("1e-20")).to_string()
        == "100000000000000000000.00000000000000000001");
  CHECK(elab::mul_exact(dec("0"), dec("123.456")).is_zero());
}

TEST_CASE("rounded arithmetic rounds once at the requested precision") {
  CHECK(elab::add(dec("1.25"), dec("1.25"), 2) == dec("2.5"));
  CHECK(elab::add(dec("0.144"), dec("0.001"), 2) == dec("0.14"));  // 0.145 ties to even
  CHECK(elab::mul(dec("1.1"), dec("1.1"), 2) == dec("1.2"));
  CHECK(elab::mul(dec("1.15"), dec("2"), 3) == dec("2.3"));
  CHECK(elab::sub(dec("1"), dec("0.0001"), 3) == dec("1"));
}

TEST_CASE("division rounds correctly and detects exactness") {
  CHECK(elab::div(Decimal(1), Decimal(3), 10) == dec("0.3333333333"));
  CHECK(elab::div(Decimal(2), Decimal(3), 10) == dec("0.6666666667"));
  CHECK(elab::div(Decimal(1), Decimal(8), 10) == dec("0.125"));
  CHECK(elab::div(Decimal(1), Decimal(8), 2) == dec("0.12"));  // 0.125 ties to even
  CHECK(elab::div(dec("-1"), Decimal(3), 4) == dec("-0.3333"));
  CHECK(elab::div(dec("1e100"), dec("1e-100"), 5) == dec("1e200"));
  CHECK(elab::div(Decimal(1), Decimal(7), 25) == dec("0.1428571428571428571428571"));
  CHECK_THROWS_AS(elab::div(Decimal(1), Decimal(), 5), std::domain_error);
  CHECK(elab::div(Decimal(), Decimal(7), 5).is_zero());
}

TEST_CASE("binary64 conversion is exact both ways") {
  CHECK(Decimal::from_double(0.5).to_string() == "0.5");
  CHECK(Decimal::from_double(-2.5).to_string() == "-2.5");
  CHECK(Decimal::from_double(3.0).to_string() == "3");
  CHECK(Decimal::from_double(0.1).to_string() ==
        "0.1000000000000000055511151231257827021181583404541015625");
  CHECK(Decimal::from_double(0.0).is_zero());
  CHECK(Decimal::from_double(5e-324).signum() == 1);       // subnormal
  CHECK(Decimal::from_double(5e-324).to_double() == 5e-324);
  CHECK(Decimal::from_double(1e308).to_double() == 1e308);
  CHECK(dec("0.1").to_double() == 0.1);
  CHECK(dec("2.718281828459045235360287").to_double() == 2.718281828459045);
  CHECK(dec("1e400").to_double() == HUGE_VAL);             // overflow saturates
  CHECK_THROWS_AS(Decimal::from_double(HUGE_VAL), std::invalid_argument);
  CHECK_THROWS_AS(Decimal::from_double(NAN), std::invalid_argument);
  // round trip across magnitudes
  for (double v : {1.0, 1.5, 6.02214076e23, 2.2250738585072014e-308, 0.3333333333333333}) {
    CHECK(Decimal::from_double(v).to_double() == v);
  }
}

TEST_CASE("pow_int matches exact repeated multiplication") {
  // exact brute force (no rounding at all), then one rounding at the end
  for (const char* base : {"1.1", "2.5", "0.37", "7.77"}) {
    Decimal b = dec(base);
    for (uint64_t n = 1; n <= 64; ++n) {
      Decimal exact = elab::oracles::naive_pow_exact(b, n);
      CHECK(elab::pow_int(b, n, 40, nullptr) == exact.round_to(40));
    }
  }
  CHECK(elab::pow_int(dec("1.1"), 0, 10, nullptr) == Decimal(1));
  CHECK(elab::pow_int(dec("0"), 5, 10, nullptr).is_zero());
}

TEST_CASE("pow_int multiplication count stays within 2*floor(log2 n)") {
  auto muls = [](uint64_t n) {
    PowStats stats;
    elab::pow_int(dec("1.0001"), n, 20, &stats);
    return stats.mul_count;
  };
  CHECK(muls(1) == 0);
  CHECK(muls(2) == 1);
  CHECK(muls(3) == 2);
  CHECK(muls(10) == 4);
  CHECK(muls(10000) == 17);      // bits 14, popcount 5
  CHECK(muls(100000000) == 37);  // bits 27, popcount 12
  for (uint64_t n : {2ull, 10ull, 10000ull, 100000000ull}) {
    uint64_t bound = 2 * static_cast<uint64_t>(std::floor(std::log2(double(n))));
    CHECK(muls(n) <= bound);
  }
}

TEST_CASE("pow_int guard policy tracks the exponent's size") {
  CHECK(RoundingPolicy::for_exponent(1).guard_digits == 6);
  CHECK(RoundingPolicy::for_exponent(9).guard_digits == 6);
  CHECK(RoundingPolicy::for_exponent(10).guard_digits == 7);
  CHECK(RoundingPolicy::for_exponent(100000000).guard_digits == 14);
  // per-call stats are independent contexts
  PowStats a, b;
  elab::pow_int(dec("1.1"), 10, 20, &a);
  elab::pow_int(dec("1.1"), 2, 20, &b);
  CHECK(a.mul_count == 4);
  CHECK(b.mul_count == 1);
}

TEST_CASE("reference value of e: pinned digits") {
  CHECK(elab::reference_e(1).to_string() == "3");
  CHECK(elab::reference_e(2).to_string() == "2.7");
  CHECK(elab::reference_e(6).to_string() == "2.71828");
  CHECK(elab::reference_e(16).to_string() == "2.718281828459045");
  CHECK(elab::reference_e(25).to_string() == "2.718281828459045235360287");
  CHECK_THROWS_AS(elab::reference_e(0), std::out_of_range);
  CHECK_THROWS_AS(elab::reference_e(10001), std::out_of_range);
}

TEST_CASE("reference value of e: continued-fraction oracle agreement") {
  for (int64_t d = 2; d <= 50; ++d) {
    CAPTURE(d);
    CHECK(elab::reference_e(d) == elab::oracles::continued_fraction_e(d));
  }
}

TEST_CASE("reference value of e: prefix stability") {
  Decimal wide = elab::reference_e(60);
  for (int64_t d = 2; d <= 50; ++d) {
    CAPTURE(d);
    CHECK(elab::reference_e(d) == wide.round_to(d));
  }
  // a long request agrees with the oracle at full width
  CHECK(elab::reference_e(200) == elab::oracles::continued_fraction_e(200));
}

TEST_CASE("sig-fig display keeps trailing zeros") {
  CHECK(elab::to_sig_figs(dec("2.5937424601"), 3) == "2.59");
  CHECK(elab::to_sig_figs(dec("2.598"), 3) == "2.60");
  CHECK(elab::to_sig_figs(dec("2.5937424601"), 5) == "2.5937");
  CHECK(elab::to_sig_figs(Decimal(1), 4) == "1.000");
  CHECK(elab::to_sig_figs(dec("12345"), 2) == "12000");
  CHECK(elab::to_sig_figs(dec("0.00012345"), 3) == "0.000123");
  CHECK(elab::to_sig_figs(dec("1.234e25"), 3) == "1.23e25");
  CHECK(elab::to_sig_figs(dec("9.99"), 2) == "10");
  CHECK(elab::to_sig_figs(dec("-2.598"), 3) == "-2.60");
  CHECK(elab::to_sig_figs(Decimal(), 3) == "0.00");
  CHECK(elab::to_sig_figs(dec("2.59"), 4) == "2.590");
  CHECK_THROWS_AS(elab::to_sig_figs(dec("1"), 0), std::invalid_argument);
}
