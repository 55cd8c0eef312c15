#include "boolcd/covariance.hpp"

#include <string>

#include "boolcd/errors.hpp"

namespace boolcd {

TimeWeight::TimeWeight(Kind kind, double lambda, std::size_t period, std::vector<double> weights)
    : kind_(kind), lambda_(lambda), period_(period), weights_(std::move(weights)) {}

TimeWeight TimeWeight::constant(double lambda) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw ConfigError("constant time weight must lie in [0,1]");
  }
  return TimeWeight(Kind::Constant, lambda, 1, {});
}

TimeWeight TimeWeight::exponential_decay(double lambda) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw ConfigError("decay lambda must lie in [0,1]");
  }
  return TimeWeight(Kind::ExponentialDecay, lambda, 1, {});
}

TimeWeight TimeWeight::seasonal_mask(std::size_t period, std::vector<double> weights) {
  if (period < 1) {
    throw ConfigError("seasonal period must be >= 1");
  }
  if (weights.size() != period) {
    throw ConfigError("seasonal mask needs one weight per period slot (" +
                      std::to_string(period) + " expected, " + std::to_string(weights.size()) +
                      " given)");
  }
  for (double w : weights) {
    if (w < 0.0 || w > 1.0) {
      throw ConfigError("seasonal weights must lie in [0,1]");
    }
  }
  return TimeWeight(Kind::SeasonalMask, 0.0, period, std::move(weights));
}

double TimeWeight::weight_at(std::size_t slot) const {
  switch (kind_) {
    case Kind::Constant:
    case Kind::ExponentialDecay:
      return lambda_;
    case Kind::SeasonalMask:
      return weights_[slot % period_];
  }
  return lambda_;
}

CovarianceState CovarianceState::zeros(std::size_t r1, std::size_t r2, std::size_t r3) {
  CovarianceState s;
  s.ca = RealMatrix(r1, r1);
  s.cb = RealMatrix(r2, r2);
  s.cc = RealMatrix(r3, r3);
  s.slots_seen = 0;
  return s;
}

RealMatrix covariance_of(const BoolMatrix& m) {
  if (m.rows() < 1) {
    throw DomainError("covariance_of: matrix has no rows");
  }
  const std::size_t n = m.rows();
  const std::size_t k = m.cols();
  RealMatrix out(k, k);
  if (n == 1) {
    return out;
  }
  std::vector<double> mean(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) ones += m.get(i, j);
    mean[j] = static_cast<double>(ones) / static_cast<double>(n);
  }
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = p; q < k; ++q) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        sum += ((m.get(i, p) ? 1.0 : 0.0) - mean[p]) * ((m.get(i, q) ? 1.0 : 0.0) - mean[q]);
      }
      const double cov = sum / static_cast<double>(n - 1);
      out.at(p, q) = cov;
      out.at(q, p) = cov;
    }
  }
  return out;
}

RealMatrix accumulate(const RealMatrix& cov_old, const RealMatrix& cov_new, double weight) {
  if (!cov_old.same_shape(cov_new)) {
    throw ShapeError("accumulate: shapes " + std::to_string(cov_old.rows) + "x" +
                     std::to_string(cov_old.cols) + " vs " + std::to_string(cov_new.rows) + "x" +
                     std::to_string(cov_new.cols));
  }
  RealMatrix out(cov_old.rows, cov_old.cols);
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    out.data[i] = cov_old.data[i] * weight + cov_new.data[i];
  }
  return out;
}

}  // namespace boolcd
