#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "boolcd/model.hpp"
#include "boolcd/stream.hpp"
#include "boolcd/synth.hpp"

namespace boolcd {

/// One benchmark measurement. `index` is the sweep position for core-size and
/// density sweeps and the slot number for time sweeps.
struct BenchRow {
  std::string method;  // "batch" or "incremental"
  std::size_t dim_o = 0;
  std::size_t dim_f = 0;
  std::size_t dim_t = 0;
  Ranks ranks;
  double density = 0.0;
  std::size_t index = 0;
  std::size_t mismatches = 0;
  double relative = 0.0;
  double wall_millis = 0.0;
  std::uint64_t seed = 0;
};

/// Stable schema: method,O,F,T,r1,r2,r3,density,index,mismatches,relative,wall_millis,seed
std::string bench_csv_header();
std::string bench_rows_to_csv(const std::vector<BenchRow>& rows);
void write_bench_csv(const std::vector<BenchRow>& rows, const std::filesystem::path& path);

/// Worker threads for sweep points: BOOLCD_THREADS when set (strictly parsed),
/// otherwise hardware concurrency, never more than `jobs`.
std::size_t bench_worker_count(std::size_t jobs);

struct CoreSizeSweepConfig {
  std::size_t dim_o = 30;
  std::size_t dim_f = 15;
  std::size_t dim_t = 10;
  std::vector<Ranks> ranks_list;
  std::vector<std::uint64_t> seeds;
  Ranks planted_ranks{2, 2, 2};
  double factor_density = 0.3;
  double core_density = 0.5;
  double error_threshold = 0.05;
  std::size_t restarts = 3;
};

/// Error versus core size on a planted tensor, both methods per point.
/// The incremental method streams the tensor's slots with a window covering
/// the full history so both methods optimize the same objective.
std::vector<BenchRow> run_core_size_sweep(const CoreSizeSweepConfig& config);

struct DensitySweepConfig {
  std::size_t dim_o = 30;
  std::size_t dim_f = 15;
  std::size_t dim_t = 10;
  Ranks ranks{3, 3, 3};
  std::vector<double> densities;
  std::vector<std::uint64_t> seeds;
  double core_density = 0.5;
  double error_threshold = 0.05;
  std::size_t restarts = 3;
};

/// Error versus planted factor density at fixed ranks, both methods per point.
std::vector<BenchRow> run_density_sweep(const DensitySweepConfig& config);

struct TimeSweepConfig {
  std::size_t dim_o = 50;
  std::size_t dim_f = 10;
  std::size_t slot_count = 30;
  Ranks ranks{2, 2, 2};
  std::vector<std::uint64_t> seeds;
  double factor_density = 0.3;
  double core_density = 0.5;
  double error_threshold = 0.05;
  std::size_t window_w = 12;
  std::size_t inner_sweeps = 5;
};

/// Per-slot wall time of the incremental stream versus a batch refit from
/// scratch on the tensor grown by one slot per step ("traditional": all slots
/// so far are kept and refit each time). Jobs run sequentially so wall times
/// are not skewed by contention.
std::vector<BenchRow> run_time_sweep(const TimeSweepConfig& config);

/// Figure analogues assembled from sweep rows (seed-averaged).
std::string svg_for_core_size(const std::vector<BenchRow>& rows);
std::string svg_for_density(const std::vector<BenchRow>& rows);
std::string svg_for_time(const std::vector<BenchRow>& rows);

}  // namespace boolcd
