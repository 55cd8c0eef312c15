#pragma once

#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "boolcd/batch.hpp"
#include "boolcd/covariance.hpp"
#include "boolcd/model.hpp"

namespace boolcd {

struct StreamConfig {
  Ranks ranks;
  std::size_t window_w = 12;
  TimeWeight time_weight = TimeWeight::exponential_decay(0.9);
  std::size_t inner_sweeps = 5;
  double error_threshold = 0.05;
  std::uint64_t seed = 0;
  ErrorKind error_kind = ErrorKind::Relative;
  // Bootstrap quality settings: the initial two-slot fit fixes the component
  // basis every later slot updates, so it gets restarts the per-slot loop
  // never needs.
  std::size_t bootstrap_restarts = 5;
  std::size_t bootstrap_max_sweeps = 50;
  double init_density = 0.5;

  void validate() const;

  /// The batch config a bootstrap restart runs with (seed filled per restart).
  FitConfig bootstrap_fit_config(std::uint64_t restart_seed) const;
};

/// Restart seeds used by bootstrap, split off config.seed in order.
std::vector<std::uint64_t> bootstrap_seeds(const StreamConfig& config);

/// Streaming fit state. The factor C covers only the slots currently in the
/// window; everything older reaches the fit solely through the covariance
/// accumulators.
struct StreamState {
  TuckerModel model;
  CovarianceState cov;
  std::deque<BoolMatrix> window;
  StreamConfig config;
  FitTrace trace;
  /// Window mismatch count after each inner sweep of the most recent ingest.
  std::vector<std::size_t> last_inner_errors;

  /// The window stacked into an O x F x L tensor (L = current window length).
  BoolTensor3 window_tensor() const;

  std::pair<std::size_t, double> window_error() const;

  /// Bytes retained by the fitting state: window bits, model bits and the
  /// covariance accumulators. The trace is an output log, not fitting state,
  /// so it is not counted.
  std::size_t retained_bytes() const;
};

/// Stack the first two slots into an O x F x 2 tensor, fit it batch-style
/// (best of config.bootstrap_restarts), and seed the accumulators from the
/// fitted factors.
StreamState bootstrap(const BoolMatrix& slot1, const BoolMatrix& slot2,
                      const StreamConfig& config);

/// Core cells ordered by descending priority ca[r1,r1]*cb[r2,r2]*cc[r3,r3],
/// ties broken lexicographically.
std::vector<CoreCell> prioritized_core_order(const Ranks& ranks, const CovarianceState& cov);

/// Core update in covariance-priority order. Acceptance per cell is the same
/// exact Boolean gain test as the batch update, so window error never rises.
TuckerModel update_core_prioritized(const BoolTensor3& x_window, const TuckerModel& model,
                                    const CovarianceState& cov);

/// Append a slot (evicting the oldest once the window is full), then run up to
/// config.inner_sweeps of factor updates, covariance accumulation and a
/// prioritized core update, stopping early once the window error is within the
/// threshold. At least one sweep always runs, so every slot contributes one
/// covariance term per accumulator.
void ingest_slot(StreamState& state, const BoolMatrix& slot);

/// Bootstrap on the first two slots, ingest the rest, return the final state
/// and its per-slot trace.
std::pair<StreamState, FitTrace> run_stream(const std::vector<BoolMatrix>& slots,
                                            const StreamConfig& config);

}  // namespace boolcd
