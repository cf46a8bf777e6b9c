// SPDX-License-Identifier: Apache-2.0
#include "elab/step.hpp"

#include <stdexcept>

namespace elab {

StepSpec::StepSpec(uint64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("n must be ≥ 1");
}

bool StepSpec::dx_terminates() const {
  uint64_t m = n_;
  while (m % 2 == 0) m /= 2;
  while (m % 5 == 0) m /= 5;
  return m == 1;
}

Decimal StepSpec::dx(int64_t precision) const {
  return div(Decimal::one(), Decimal(n_), precision);
}

}  // namespace elab
