// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "elab/decimal.hpp"
#include "elab/limit.hpp"
#include "elab/step.hpp"

namespace elab {

/// Forward march of f' = f across [1, 2] in n steps of dx = 1/n.
///
/// values[k] = scale*(1+dx)^k at the march precision; x_at(k) = 1 + k/n.
/// Dense trajectories keep every value. Beyond kDenseLimit steps only the
/// requested checkpoint values survive; the march itself still runs every
/// step on the single running value.
class EulerTrajectory {
public:
  static constexpr uint64_t kDenseLimit = 1000000;

  const StepSpec& step() const { return step_; }
  const Decimal& initial_scale() const { return scale_; }
  int64_t precision() const { return precision_; }
  uint64_t n() const { return step_.n(); }
  bool dense() const { return dense_; }

  bool has_value(uint64_t k) const;
  /// Stored value at step k; throws std::out_of_range for k > n or for a
  /// non-checkpoint index of a streamed trajectory.
  const Decimal& value_at(uint64_t k) const;
  const Decimal& final_value() const { return value_at(step_.n()); }

  /// Grid point 1 + k/n at the march precision (exact when 1/n terminates).
  Decimal x_at(uint64_t k) const;

  /// Indices with stored values, ascending. Dense: 0..n.
  std::vector<uint64_t> stored_indices() const;

private:
  friend EulerTrajectory euler_march(const Decimal& scale, const StepSpec& step,
                                     int64_t precision,
                                     const std::vector<uint64_t>& checkpoints);
  StepSpec step_{1};
  Decimal scale_;
  int64_t precision_ = 0;
  bool dense_ = true;
  std::vector<Decimal> values_;            // dense storage
  std::map<uint64_t, Decimal> sparse_;     // streamed checkpoints
};

/// One forward step: value*(1+dx) as the exact rational value*(n+1)/n,
/// rounded once, half-even, to `precision` digits.
Decimal euler_step(const Decimal& value, const StepSpec& step, int64_t precision);

/// Marches scale through n steps at `precision`. For n <= kDenseLimit all
/// n+1 values are stored; above that only {0, n} plus `checkpoints` are.
/// Rejects nothing beyond StepSpec's own n >= 1 (an empty march would leave
/// the interval uncovered, so no StepSpec can express one).
EulerTrajectory euler_march(const Decimal& scale, const StepSpec& step, int64_t precision,
                            const std::vector<uint64_t>& checkpoints = {});

/// values[k] / initial_scale at the march precision: the accumulated factor
/// (1+dx)^k, independent of scale. Throws std::out_of_range like value_at.
Decimal ratio_at(const EulerTrajectory& traj, uint64_t k);

/// Marches at a guarded working precision, divides the scale back out and
/// rounds to `precision`. Lands on the same digits as
/// pow_int(1+1/n, n, precision) for every n this tool accepts.
Approximation solve_for_e_euler(const StepSpec& step, int64_t precision);

/// CSV export, header `k,x,value,ratio`, one row per stored index.
void write_csv(const EulerTrajectory& traj, std::ostream& out);

}  // namespace elab
