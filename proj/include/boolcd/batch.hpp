#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "boolcd/model.hpp"
#include "boolcd/rng.hpp"

namespace boolcd {

/// One core tensor coordinate.
struct CoreCell {
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  std::size_t r3 = 0;

  bool operator==(const CoreCell&) const = default;
};

BoolMatrix random_bool_matrix(std::size_t rows, std::size_t cols, double density, SplitMix64& rng);

/// Factors filled i.i.d. Bernoulli(init_density) from per-component streams
/// split off the config seed; core starts all zero.
TuckerModel init_model(Dims3 dims, const FitConfig& config);

/// Density-matched initialization density: the cube root of the tensor
/// density, so a random rank-1 block has roughly the data's fill rate.
double density_matched_init_density(const BoolTensor3& x);

/// Start every component from the data: one singleton per factor column,
/// placed at the coordinates of a randomly sampled 1-cell of x, then a greedy
/// core fill. Each seeded diagonal core cell covers exactly one data 1-cell,
/// so it always survives the gain test and the sweeps can grow it.
TuckerModel data_seeded_model(const BoolTensor3& x, const FitConfig& config);

/// Revive dead (all-zero) factor columns by planting a singleton at a random
/// 1-cell of x the current model leaves uncovered, dropping core cells that
/// referenced the dead column. Neither change touches the reconstruction, so
/// the error is exactly preserved. Returns true when anything changed.
bool reseed_dead_components(const BoolTensor3& x, TuckerModel& model, SplitMix64& rng);

/// Replace every row of the mode's factor by a greedily chosen binary row.
/// Bits are decided in ascending component order; a bit becomes 1 only when
/// that strictly lowers the row's Hamming distance, so ties fall to 0 and the
/// total error never increases.
TuckerModel update_factor(const BoolTensor3& x, const TuckerModel& model, Mode mode);

/// Greedy core update visiting the given cells in order: a cell is set to 1
/// exactly when that strictly lowers the mismatch count against x given the
/// current factors and the other core cells, else cleared.
TuckerModel update_core_visit(const BoolTensor3& x, const TuckerModel& model,
                              const std::vector<CoreCell>& order);

/// Cells in ascending lexicographic (r1, r2, r3) order.
std::vector<CoreCell> lexicographic_core_order(const Ranks& ranks);

/// Batch core update: lexicographic single pass.
TuckerModel update_core(const BoolTensor3& x, const TuckerModel& model);

/// Traditional batch fit: alternating factor and core updates until the error
/// threshold, a stall, or the sweep cap. The all-zero initial core is filled
/// by one core update before the sweeps begin; without it a zero core makes
/// every factor row tie to zero and the model collapses.
std::pair<TuckerModel, FitTrace> fit_batch(const BoolTensor3& x, const FitConfig& config);

/// Best of `restarts` independent fit_batch runs; restart seeds are split off
/// config.seed, lowest final mismatch count wins, first winner kept on ties.
std::pair<TuckerModel, FitTrace> fit_batch_best_of(const BoolTensor3& x, const FitConfig& config,
                                                   std::size_t restarts);

}  // namespace boolcd
