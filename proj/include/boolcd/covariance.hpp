#pragma once

#include <cstdint>
#include <vector>

#include "boolcd/bool_matrix.hpp"
#include "boolcd/real_matrix.hpp"

namespace boolcd {

/// Per-slot weight applied to the old accumulator before the new covariance is
/// added. Constant and ExponentialDecay both apply a fixed lambda each step;
/// the decay name reflects the geometric weighting of history that the
/// recurrence induces. SeasonalMask cycles through per-slot weights so chosen
/// slots can be remembered or forgotten.
class TimeWeight {
 public:
  enum class Kind { Constant, ExponentialDecay, SeasonalMask };

  static TimeWeight constant(double lambda);
  static TimeWeight exponential_decay(double lambda);
  static TimeWeight seasonal_mask(std::size_t period, std::vector<double> weights);

  Kind kind() const { return kind_; }
  double lambda() const { return lambda_; }
  std::size_t period() const { return period_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Weight for folding in the covariance of slot `slot` (0-based).
  double weight_at(std::size_t slot) const;

  bool operator==(const TimeWeight&) const = default;

 private:
  TimeWeight(Kind kind, double lambda, std::size_t period, std::vector<double> weights);

  Kind kind_ = Kind::ExponentialDecay;
  double lambda_ = 0.9;
  std::size_t period_ = 1;
  std::vector<double> weights_;
};

/// Time-weighted covariance accumulators of the three factor matrices. Their
/// dimensions depend only on the ranks, which is what keeps streaming state
/// bounded no matter how many slots pass.
struct CovarianceState {
  RealMatrix ca;  // r1 x r1
  RealMatrix cb;  // r2 x r2
  RealMatrix cc;  // r3 x r3
  std::size_t slots_seen = 0;

  static CovarianceState zeros(std::size_t r1, std::size_t r2, std::size_t r3);
};

/// Sample covariance across the rows of a binary matrix, output cols x cols.
/// A single-row matrix yields the zero matrix; the result is exactly symmetric
/// because only one triangle is computed and mirrored.
RealMatrix covariance_of(const BoolMatrix& m);

/// Elementwise old * weight + fresh.
RealMatrix accumulate(const RealMatrix& cov_old, const RealMatrix& cov_new, double weight);

}  // namespace boolcd
