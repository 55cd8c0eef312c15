#include "boolcd/model.hpp"

namespace boolcd {

void Ranks::validate_for(std::size_t dim_o, std::size_t dim_f, std::size_t dim_t) const {
  if (r1 < 1 || r2 < 1 || r3 < 1) {
    throw ConfigError("ranks must each be >= 1");
  }
  if (r1 > 64 || r2 > 64 || r3 > 64) {
    throw ConfigError("ranks above 64 are unsupported");
  }
  if (r1 > dim_o || r2 > dim_f || r3 > dim_t) {
    throw ConfigError("ranks (" + std::to_string(r1) + "," + std::to_string(r2) + "," +
                      std::to_string(r3) + ") exceed tensor dims (" + std::to_string(dim_o) +
                      "," + std::to_string(dim_f) + "," + std::to_string(dim_t) + ")");
  }
}

void TuckerModel::validate_against(const BoolTensor3& x) const {
  if (a.cols() != core.dim_o() || b.cols() != core.dim_f() || c.cols() != core.dim_t()) {
    throw ShapeError("model: factor columns do not match core dims");
  }
  if (a.rows() != x.dim_o() || b.rows() != x.dim_f() || c.rows() != x.dim_t()) {
    throw ShapeError("model: factor rows (" + std::to_string(a.rows()) + "," +
                     std::to_string(b.rows()) + "," + std::to_string(c.rows()) +
                     ") do not match tensor dims (" + std::to_string(x.dim_o()) + "," +
                     std::to_string(x.dim_f()) + "," + std::to_string(x.dim_t()) + ")");
  }
}

void FitConfig::validate() const {
  if (error_threshold < 0.0) {
    throw ConfigError("error_threshold must be >= 0");
  }
  if (max_sweeps < 1) {
    throw ConfigError("max_sweeps must be >= 1");
  }
  if (!(init_density > 0.0 && init_density < 1.0)) {
    throw ConfigError("init_density must lie strictly between 0 and 1");
  }
}

std::string to_string(FitStatus status) {
  switch (status) {
    case FitStatus::Converged:
      return "converged";
    case FitStatus::Stalled:
      return "stalled";
    case FitStatus::MaxSweeps:
      return "max_sweeps";
  }
  return "unknown";
}

std::pair<std::size_t, double> evaluate(const BoolTensor3& x, const TuckerModel& model) {
  model.validate_against(x);
  const BoolTensor3 xhat = tucker_reconstruct(model.core, model.a, model.b, model.c);
  const HammingError err = hamming_error(x, xhat);
  return {err.mismatches, err.relative};
}

bool error_within(ErrorKind kind, std::size_t mismatches, double relative, double threshold) {
  if (kind == ErrorKind::Absolute) {
    return static_cast<double>(mismatches) <= threshold;
  }
  return relative <= threshold;
}

}  // namespace boolcd
