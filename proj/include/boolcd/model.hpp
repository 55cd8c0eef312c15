#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "boolcd/bool_matrix.hpp"
#include "boolcd/bool_tensor.hpp"
#include "boolcd/kernels.hpp"

namespace boolcd {

/// Component counts per mode; also the core tensor dimensions.
struct Ranks {
  std::size_t r1 = 1;
  std::size_t r2 = 1;
  std::size_t r3 = 1;

  /// Each rank must be >= 1 and no larger than the matching tensor dimension.
  /// Ranks above 64 are rejected: factor rows are manipulated as single words.
  void validate_for(std::size_t dim_o, std::size_t dim_f, std::size_t dim_t) const;

  bool operator==(const Ranks&) const = default;
};

enum class ErrorKind { Absolute, Relative };

/// How fit_batch builds its starting model. DataSeeded places one singleton
/// per component at a random data 1-cell and lets the sweeps grow it;
/// Bernoulli fills the factors i.i.d. at init_density. Random dense factors
/// almost never give a core cell a support that is mostly data-ones, so on
/// sparse data the Bernoulli start tends to collapse to the zero model;
/// DataSeeded is the default for that reason.
enum class InitKind { DataSeeded, Bernoulli };

/// Binary core tensor plus one binary factor matrix per mode.
struct TuckerModel {
  BoolTensor3 core;  // r1 x r2 x r3
  BoolMatrix a;      // O x r1
  BoolMatrix b;      // F x r2
  BoolMatrix c;      // T x r3

  Ranks ranks() const { return {core.dim_o(), core.dim_f(), core.dim_t()}; }

  /// Throws ShapeError unless the four components are mutually consistent and
  /// match the data tensor's dimensions.
  void validate_against(const BoolTensor3& x) const;

  bool operator==(const TuckerModel&) const = default;
};

struct FitConfig {
  Ranks ranks;
  double error_threshold = 0.05;
  std::size_t max_sweeps = 100;
  std::size_t stall_sweeps = 3;
  std::uint64_t seed = 0;
  double init_density = 0.5;
  ErrorKind error_kind = ErrorKind::Relative;
  InitKind init_kind = InitKind::DataSeeded;

  void validate() const;
};

struct SweepRecord {
  std::size_t sweep = 0;
  std::size_t mismatches = 0;
  double relative = 0.0;
  double wall_millis = 0.0;
};

enum class FitStatus { Converged, Stalled, MaxSweeps };

std::string to_string(FitStatus status);

/// Per-sweep (batch) or per-slot (stream) convergence evidence.
struct FitTrace {
  std::vector<SweepRecord> records;
  FitStatus status = FitStatus::MaxSweeps;

  std::size_t final_mismatches() const {
    return records.empty() ? 0 : records.back().mismatches;
  }
};

/// Reconstruct and compare: (mismatches, relative error).
std::pair<std::size_t, double> evaluate(const BoolTensor3& x, const TuckerModel& model);

/// True when the configured error metric is at or below the threshold.
bool error_within(ErrorKind kind, std::size_t mismatches, double relative, double threshold);

}  // namespace boolcd
