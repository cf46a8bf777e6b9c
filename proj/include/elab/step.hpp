// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "elab/decimal.hpp"

namespace elab {

/// Step size dx = 1/n over an interval of length 1, for integer n >= 1.
///
/// The step is carried as the exact rational (numerator 1, denominator n),
/// so dx*n = 1 holds by construction for every n. A terminating decimal
/// form of dx exists exactly when n has no prime factors beyond 2 and 5
/// (all powers of ten qualify); dx(p) returns it unrounded in that case.
class StepSpec {
public:
  explicit StepSpec(uint64_t n);

  uint64_t n() const { return n_; }
  uint64_t numerator() const { return 1; }
  uint64_t denominator() const { return n_; }

  /// True when 1/n has a finite decimal expansion.
  bool dx_terminates() const;

  /// 1/n rounded half-even to `precision` digits; exact when it terminates
  /// within that many digits.
  Decimal dx(int64_t precision) const;

  bool operator==(const StepSpec&) const = default;

private:
  uint64_t n_;
};

}  // namespace elab
