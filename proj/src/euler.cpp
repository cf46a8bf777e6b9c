// SPDX-License-Identifier: Apache-2.0
#include "elab/euler.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

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

}  // namespace

bool EulerTrajectory::has_value(uint64_t k) const {
  if (k > step_.n()) return false;
  if (dense_) return true;
  return sparse_.count(k) != 0;
}

const Decimal& EulerTrajectory::value_at(uint64_t k) const {
  if (k > step_.n()) throw std::out_of_range("step index exceeds n");
  if (dense_) return values_[static_cast<size_t>(k)];
  auto it = sparse_.find(k);
  if (it == sparse_.end()) {
    throw std::out_of_range("no stored value at this index of a streamed march");
  }
  return it->second;
}

Decimal EulerTrajectory::x_at(uint64_t k) const {
  if (k > step_.n()) throw std::out_of_range("step index exceeds n");
  return div(Decimal(step_.n() + k), Decimal(step_.n()), precision_);
}

std::vector<uint64_t> EulerTrajectory::stored_indices() const {
  std::vector<uint64_t> out;
  if (dense_) {
    out.resize(values_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = i;
  } else {
    out.reserve(sparse_.size());
    for (const auto& [k, v] : sparse_) out.push_back(k);
  }
  return out;
}

Decimal euler_step(const Decimal& value, const StepSpec& step, int64_t precision) {
  Decimal scaled = mul_exact(value, Decimal(step.n() + 1));
  return div(scaled, Decimal(step.n()), precision);
}

EulerTrajectory euler_march(const Decimal& scale, const StepSpec& step, int64_t precision,
                            const std::vector<uint64_t>& checkpoints) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  EulerTrajectory traj;
  traj.step_ = step;
  traj.scale_ = scale;
  traj.precision_ = precision;
  uint64_t n = step.n();
  traj.dense_ = n <= EulerTrajectory::kDenseLimit;
  if (traj.dense_) {
    traj.values_.reserve(static_cast<size_t>(n) + 1);
    traj.values_.push_back(scale);
    for (uint64_t k = 0; k < n; ++k) {
      traj.values_.push_back(euler_step(traj.values_.back(), step, precision));
    }
    return traj;
  }
  std::vector<uint64_t> wanted = checkpoints;
  wanted.push_back(0);
  wanted.push_back(n);
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  if (wanted.back() > n) throw std::out_of_range("checkpoint index exceeds n");
  Decimal running = scale;
  size_t next = 0;
  if (wanted[next] == 0) {
    traj.sparse_.emplace(0, running);
    ++next;
  }
  for (uint64_t k = 1; k <= n; ++k) {
    running = euler_step(running, step, precision);
    if (next < wanted.size() && wanted[next] == k) {
      traj.sparse_.emplace(k, running);
      ++next;
    }
  }
  return traj;
}

Decimal ratio_at(const EulerTrajectory& traj, uint64_t k) {
  const Decimal& v = traj.value_at(k);
  if (traj.initial_scale().is_zero()) {
    throw std::domain_error("trajectory scale is zero");
  }
  return div(v, traj.initial_scale(), traj.precision());
}

Approximation solve_for_e_euler(const StepSpec& step, int64_t precision) {
  if (precision < 1) throw std::invalid_argument("precision must be >= 1");
  // The march rounds once per step, n times in a row, so it needs twice the
  // usual guard: n * 10^(1-wp) accumulated roundoff stays below one unit in
  // the (precision+4)-th digit.
  int64_t wp = precision + 2 * digits10_u64(step.n()) + 5;
  EulerTrajectory traj = euler_march(Decimal::one(), step, wp);
  Decimal ratio = ratio_at(traj, step.n());
  return Approximation{step, ratio.round_to(precision), Mode::exact_decimal, std::nullopt};
}

void write_csv(const EulerTrajectory& traj, std::ostream& out) {
  out << "k,x,value,ratio\n";
  for (uint64_t k : traj.stored_indices()) {
    out << k << ',' << traj.x_at(k).to_string() << ',' << traj.value_at(k).to_string()
        << ',' << ratio_at(traj, k).to_string() << '\n';
  }
}

}  // namespace elab
