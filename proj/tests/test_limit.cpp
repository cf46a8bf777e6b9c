// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "elab/limit.hpp"
#include "oracles.hpp"

using elab::Approximation;
using elab::Decimal;
using elab::FloatApproximation;
using elab::Mode;
using elab::Schedule;
using elab::StepSpec;

static Decimal dec(const char* s) { return Decimal::parse(s); }

TEST_CASE("mode names round-trip and accept the exact alias") {
  for (Mode m : {Mode::exact_decimal, Mode::float_pow, Mode::float_multiply_loop,
                 Mode::float_log_exp}) {
    CHECK(elab::mode_from_name(elab::mode_name(m)) == m);
  }
  CHECK(elab::mode_name(Mode::exact_decimal) == "exact-decimal");
  CHECK(elab::mode_name(Mode::float_pow) == "float-pow");
  CHECK(elab::mode_from_name("exact") == Mode::exact_decimal);
  CHECK_FALSE(elab::mode_from_name("exact_decimal").has_value());
  CHECK_FALSE(elab::mode_from_name("").has_value());
  CHECK_FALSE(elab::is_float_mode(Mode::exact_decimal));
  CHECK(elab::is_float_mode(Mode::float_pow));
  CHECK(elab::is_float_mode(Mode::float_multiply_loop));
  CHECK(elab::is_float_mode(Mode::float_log_exp));
}

TEST_CASE("schedules are strictly increasing step counts") {
  Schedule p = Schedule::powers_of_ten(1, 4);
  CHECK(p.kind() == Schedule::Kind::powers_of_ten);
  REQUIRE(p.entries().size() == 4);
  CHECK(p.entries()[0].n() == 10);
  CHECK(p.entries()[3].n() == 10000);
  CHECK(Schedule::powers_of_ten(0, 0).entries().size() == 1);
  CHECK(Schedule::powers_of_ten(0, 18).entries().back().n() == 1000000000000000000ull);
  CHECK_THROWS_AS(Schedule::powers_of_ten(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(Schedule::powers_of_ten(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(Schedule::powers_of_ten(0, 19), std::invalid_argument);

  Schedule d = Schedule::doubling(0, 3);
  CHECK(d.kind() == Schedule::Kind::doubling);
  REQUIRE(d.entries().size() == 4);
  CHECK(d.entries()[0].n() == 1);
  CHECK(d.entries()[3].n() == 8);
  CHECK(Schedule::doubling(0, 59).entries().back().n() == (uint64_t{1} << 59));
  CHECK_THROWS_AS(Schedule::doubling(0, 60), std::invalid_argument);

  Schedule l = Schedule::explicit_list({10, 20});
  CHECK(l.kind() == Schedule::Kind::explicit_list);
  CHECK(l.entries()[1].n() == 20);
  CHECK(Schedule::explicit_list({5}).entries().size() == 1);
  CHECK_THROWS_AS(Schedule::explicit_list({}), std::invalid_argument);
  CHECK_THROWS_AS(Schedule::explicit_list({10, 10}), std::invalid_argument);
  CHECK_THROWS_AS(Schedule::explicit_list({20, 10}), std::invalid_argument);
  CHECK_THROWS_AS(Schedule::explicit_list({0, 10}), std::invalid_argument);
}

TEST_CASE("exact evaluation matches the correctly rounded rational") {
  for (uint64_t n : {10ull, 100ull, 1000ull, 10000ull}) {
    CAPTURE(n);
    CHECK(elab::compound_approx(StepSpec(n), 20).value
          == elab::oracles::compound_exact_rational(n, 20));
  }
  CHECK(elab::compound_approx(StepSpec(10), 20).value == dec("2.5937424601"));
  CHECK(elab::compound_approx(StepSpec(100), 20).value == dec("2.7048138294215260933"));
}

TEST_CASE("exact evaluation of n = 10^8 stays cheap") {
  elab::PowStats stats;
  Approximation a = elab::compound_approx(StepSpec(100000000), 20, &stats);
  CHECK(a.value == dec("2.7182818148676362177"));
  CHECK(stats.mul_count == 37);
  CHECK(stats.mul_count <= 54);
}

TEST_CASE("schedule sweep fills errors against the reference") {
  std::vector<Approximation> rows = elab::limit_schedule(Schedule::powers_of_ten(1, 4), 20, 25);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].value == dec("2.5937424601"));
  CHECK(rows[1].value == dec("2.7048138294215260933"));
  CHECK(rows[2].value == dec("2.7169239322358924574"));
  CHECK(rows[3].value == dec("2.718145926825224864"));
  REQUIRE(rows[0].abs_error.has_value());
  CHECK(*rows[0].abs_error == dec("0.124539368359045235360287"));
  CHECK(*rows[1].abs_error == dec("0.013467999037519142060287"));
  CHECK(*rows[2].abs_error == dec("0.001357896223152777960287"));
  CHECK(*rows[3].abs_error == dec("0.000135901633820371360287"));
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(Decimal::compare(*rows[i].abs_error, *rows[i - 1].abs_error) < 0);
    CHECK(rows[i].abs_error->signum() == 1);
  }
  CHECK_THROWS_AS(elab::limit_schedule(Schedule::powers_of_ten(1, 2), 20, 19),
                  std::invalid_argument);
}

TEST_CASE("doubling schedule reproduces the dyadic values") {
  std::vector<Approximation> rows = elab::limit_schedule(Schedule::doubling(0, 3), 20, 25);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].value == Decimal(2));
  CHECK(rows[1].value == dec("2.25"));
  CHECK(rows[2].value == dec("2.44140625"));
  CHECK(rows[3].value == dec("2.5657845139503479004"));
  CHECK(elab::to_sig_figs(rows[3].value, 10) == "2.565784514");
}

TEST_CASE("binary64 modes agree with the exact value where doubles can") {
  for (Mode m : {Mode::float_pow, Mode::float_multiply_loop, Mode::float_log_exp}) {
    FloatApproximation one = elab::float_compound_approx(StepSpec(1), m);
    CHECK(one.value == 2.0);
    CHECK(one.outcome == "ok");
    CHECK_FALSE(one.skipped());
  }
  FloatApproximation p10 = elab::float_compound_approx(StepSpec(10), Mode::float_pow);
  CHECK(std::fabs(*p10.value - 2.5937424601) <= 1e-12);
  FloatApproximation m10 = elab::float_compound_approx(StepSpec(10), Mode::float_multiply_loop);
  CHECK(std::fabs(*m10.value - 2.5937424601) <= 1e-12);
  FloatApproximation le = elab::float_compound_approx(StepSpec(100000000), Mode::float_log_exp);
  double exact8 = 2.7182818148676362;  // (1+1e-8)^1e8 to binary64
  CHECK(std::fabs(*le.value - exact8) / exact8 <= 1e-13);
}

TEST_CASE("binary64 modes stay within a thousand ulps of each other") {
  auto ulp = [](double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()) - v; };
  for (uint64_t n : {1ull, 2ull, 5ull, 10ull, 100ull, 1000ull, 10000ull}) {
    CAPTURE(n);
    double a = *elab::float_compound_approx(StepSpec(n), Mode::float_pow).value;
    double b = *elab::float_compound_approx(StepSpec(n), Mode::float_multiply_loop).value;
    double c = *elab::float_compound_approx(StepSpec(n), Mode::float_log_exp).value;
    CHECK(std::fabs(a - b) <= 1000 * ulp(a));
    CHECK(std::fabs(a - c) <= 1000 * ulp(a));
    CHECK(std::fabs(b - c) <= 1000 * ulp(b));
  }
}

TEST_CASE("the multiply loop declines absurd step counts; all modes cap at 10^12") {
  FloatApproximation sk =
      elab::float_compound_approx(StepSpec(10000000000ull), Mode::float_multiply_loop);
  CHECK(sk.skipped());
  CHECK_FALSE(sk.value.has_value());
  CHECK(sk.outcome == "too many iterations");
  elab::attach_error(sk, elab::reference_e(25));
  CHECK_FALSE(sk.abs_error.has_value());  // attach is a no-op for skips
  CHECK(elab::to_csv_row(sk) == "10000000000,1e-10,float-multiply-loop,,");

  for (Mode m : {Mode::float_pow, Mode::float_multiply_loop, Mode::float_log_exp}) {
    CHECK_THROWS_AS(elab::float_compound_approx(StepSpec(10000000000001ull), m),
                    std::domain_error);
  }
  CHECK_THROWS_AS(elab::float_compound_approx(StepSpec(10), Mode::exact_decimal),
                  std::invalid_argument);
}

TEST_CASE("exact value exceeds every finite-n approximation") {
  Decimal e30 = elab::reference_e(30);
  for (uint64_t n : {1ull, 10ull, 100000000ull}) {
    CAPTURE(n);
    Decimal v = elab::compound_approx(StepSpec(n), 30).value;
    CHECK(elab::sub_exact(e30, v).signum() == 1);
  }
}

TEST_CASE("series log(1+u) tracks the runtime library") {
  auto ulp = [](double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()) - v; };
  CHECK(elab::log1p_portable(0.0) == 0.0);
  // above the crossover the runtime library is used verbatim
  CHECK(elab::log1p_portable(0.5) == std::log1p(0.5));
  CHECK(elab::log1p_portable(1e-3) == std::log1p(1e-3));
  for (double u : {1e-7, 1e-8, 1e-9, 0x1p-21, -1e-9, -0x1p-22, 3e-8}) {
    CAPTURE(u);
    double mine = elab::log1p_portable(u);
    double ref = std::log1p(u);
    CHECK(std::fabs(mine - ref) <= ulp(std::fabs(ref)));
  }
}

TEST_CASE("csv rows") {
  CHECK(elab::kApproxCsvHeader == "n,dx,mode,value,abs_error");
  Approximation bare = elab::compound_approx(StepSpec(10), 20);
  CHECK(elab::to_csv_row(bare, 20) == "10,0.1,exact-decimal,2.5937424601,");

  std::vector<Approximation> rows = elab::limit_schedule(Schedule::powers_of_ten(1, 1), 20, 25);
  CHECK(elab::to_csv_row(rows[0], 20)
        == "10,0.1,exact-decimal,2.5937424601,0.124539368359045235360287");

  Decimal ref = elab::reference_e(25);
  FloatApproximation fp = elab::float_compound_approx(StepSpec(10), Mode::float_pow);
  elab::attach_error(fp, ref);
  CHECK(elab::to_csv_row(fp) == "10,0.1,float-pow,2.5937424601000023,0.12453936835904292");

  FloatApproximation le = elab::float_compound_approx(StepSpec(1000), Mode::float_log_exp);
  elab::attach_error(le, ref);
  CHECK(elab::to_csv_row(le) == "1000,0.001,float-log-exp,2.7169239322358925,0.0013578962231527772");

  FloatApproximation ml = elab::float_compound_approx(StepSpec(1000), Mode::float_multiply_loop);
  elab::attach_error(ml, ref);
  CHECK(elab::to_csv_row(ml)
        == "1000,0.001,float-multiply-loop,2.7169239322355985,0.0013578962234467643");

  // scientific dx once the plain window closes
  FloatApproximation p4 = elab::float_compound_approx(StepSpec(10000), Mode::float_pow);
  elab::attach_error(p4, ref);
  CHECK(elab::to_csv_row(p4) == "10000,1e-04,float-pow,2.7181459268249255,0.00013590163411972855");
}

TEST_CASE("evaluations are deterministic across calls") {
  std::vector<Approximation> a = elab::limit_schedule(Schedule::powers_of_ten(1, 3), 20, 25);
  std::vector<Approximation> b = elab::limit_schedule(Schedule::powers_of_ten(1, 3), 20, 25);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(elab::to_csv_row(a[i], 20) == elab::to_csv_row(b[i], 20));
  }
  for (Mode m : {Mode::float_pow, Mode::float_multiply_loop, Mode::float_log_exp}) {
    FloatApproximation x = elab::float_compound_approx(StepSpec(1000), m);
    FloatApproximation y = elab::float_compound_approx(StepSpec(1000), m);
    CHECK(x.value == y.value);
  }
}

TEST_CASE("shortest round-trip double rendering") {
  CHECK(elab::format_double(0.1) == "0.1");
  CHECK(elab::format_double(2.5937424601000023) == "2.5937424601000023");
  CHECK(elab::format_double(3.011168751033943e-08) == "3.011168751033943e-08");
  CHECK(elab::format_double(0.0001) == "1e-04");
  CHECK(elab::format_double(0.001) == "0.001");
  CHECK(elab::format_double(-2.5) == "-2.5");
  CHECK(elab::format_double(2.0) == "2");
  CHECK(elab::format_double(0.0) == "0");
}
