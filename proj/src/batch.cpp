#include "boolcd/batch.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "boolcd/detail/bits.hpp"

namespace boolcd {

namespace {

double millis_since(std::chrono::steady_clock::time_point start) {
  const auto dt = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(dt).count();
}

// H rows for the greedy row update: unfold(core, mode) times the transposed
// Kronecker pairing of the two fixed factors, higher mode first so H's columns
// line up with unfold(x, mode).
BoolMatrix combination_rows(const TuckerModel& model, Mode mode) {
  switch (mode) {
    case Mode::Objects:
      return bool_matmul(unfold(model.core, Mode::Objects),
                         transpose(bool_kronecker(model.c, model.b)));
    case Mode::Features:
      return bool_matmul(unfold(model.core, Mode::Features),
                         transpose(bool_kronecker(model.c, model.a)));
    case Mode::Time:
      return bool_matmul(unfold(model.core, Mode::Time),
                         transpose(bool_kronecker(model.b, model.a)));
  }
  throw ConfigError("combination_rows: bad mode");
}

std::uint64_t factor_row_mask(const BoolMatrix& m, std::size_t i) {
  std::uint64_t mask = 0;
  for (std::size_t r = 0; r < m.cols(); ++r) {
    if (m.get(i, r)) mask |= std::uint64_t{1} << r;
  }
  return mask;
}

void write_factor_row(BoolMatrix& m, std::size_t i, std::uint64_t mask) {
  for (std::size_t r = 0; r < m.cols(); ++r) {
    m.set(i, r, (mask >> r) & 1u);
  }
}

}  // namespace

BoolMatrix random_bool_matrix(std::size_t rows, std::size_t cols, double density,
                              SplitMix64& rng) {
  BoolMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (rng.bernoulli(density)) m.set(i, j, true);
    }
  }
  return m;
}

TuckerModel init_model(Dims3 dims, const FitConfig& config) {
  config.validate();
  config.ranks.validate_for(dims.dim_o, dims.dim_f, dims.dim_t);
  SplitMix64 root(config.seed);
  SplitMix64 rng_a = root.split();
  SplitMix64 rng_b = root.split();
  SplitMix64 rng_c = root.split();
  TuckerModel model;
  model.core = BoolTensor3(config.ranks.r1, config.ranks.r2, config.ranks.r3);
  model.a = random_bool_matrix(dims.dim_o, config.ranks.r1, config.init_density, rng_a);
  model.b = random_bool_matrix(dims.dim_f, config.ranks.r2, config.init_density, rng_b);
  model.c = random_bool_matrix(dims.dim_t, config.ranks.r3, config.init_density, rng_c);
  return model;
}

double density_matched_init_density(const BoolTensor3& x) {
  const double d = density(x);
  if (d <= 0.0) return 0.01;
  if (d >= 1.0) return 0.99;
  return std::cbrt(d);
}

namespace {

std::vector<std::array<std::size_t, 3>> one_cells(const BoolTensor3& x) {
  std::vector<std::array<std::size_t, 3>> ones;
  for (std::size_t t = 0; t < x.dim_t(); ++t) {
    for (std::size_t f = 0; f < x.dim_f(); ++f) {
      detail::for_each_set_bit(x.fiber(f, t),
                               [&](std::size_t o) { ones.push_back({o, f, t}); });
    }
  }
  return ones;
}

}  // namespace

TuckerModel data_seeded_model(const BoolTensor3& x, const FitConfig& config) {
  config.validate();
  config.ranks.validate_for(x.dim_o(), x.dim_f(), x.dim_t());
  TuckerModel model;
  model.core = BoolTensor3(config.ranks.r1, config.ranks.r2, config.ranks.r3);
  model.a = BoolMatrix(x.dim_o(), config.ranks.r1);
  model.b = BoolMatrix(x.dim_f(), config.ranks.r2);
  model.c = BoolMatrix(x.dim_t(), config.ranks.r3);

  const auto ones = one_cells(x);
  if (ones.empty()) {
    return model;  // nothing to seed; the zero model is already exact
  }
  SplitMix64 rng(config.seed);
  const std::size_t components =
      std::max(config.ranks.r1, std::max(config.ranks.r2, config.ranks.r3));
  for (std::size_t k = 0; k < components; ++k) {
    const auto& [o, f, t] = ones[rng.next_u64() % ones.size()];
    model.a.set(o, k % config.ranks.r1, true);
    model.b.set(f, k % config.ranks.r2, true);
    model.c.set(t, k % config.ranks.r3, true);
  }
  return update_core(x, model);
}

bool reseed_dead_components(const BoolTensor3& x, TuckerModel& model, SplitMix64& rng) {
  const BoolTensor3 recon = tucker_reconstruct(model.core, model.a, model.b, model.c);
  std::vector<std::array<std::size_t, 3>> uncovered;
  for (std::size_t t = 0; t < x.dim_t(); ++t) {
    for (std::size_t f = 0; f < x.dim_f(); ++f) {
      for (std::size_t o = 0; o < x.dim_o(); ++o) {
        if (x.get(o, f, t) && !recon.get(o, f, t)) uncovered.push_back({o, f, t});
      }
    }
  }
  if (uncovered.empty()) {
    return false;
  }
  const Ranks ranks = model.ranks();
  bool changed = false;
  const auto revive = [&](BoolMatrix& factor, std::size_t col, int mode_axis) {
    const auto& cell = uncovered[rng.next_u64() % uncovered.size()];
    factor.set(cell[static_cast<std::size_t>(mode_axis)], col, true);
    changed = true;
  };
  for (std::size_t r1 = 0; r1 < ranks.r1; ++r1) {
    if (model.a.column_indices(r1).empty()) {
      revive(model.a, r1, 0);
      for (std::size_t r2 = 0; r2 < ranks.r2; ++r2)
        for (std::size_t r3 = 0; r3 < ranks.r3; ++r3) model.core.set(r1, r2, r3, false);
    }
  }
  for (std::size_t r2 = 0; r2 < ranks.r2; ++r2) {
    if (model.b.column_indices(r2).empty()) {
      revive(model.b, r2, 1);
      for (std::size_t r1 = 0; r1 < ranks.r1; ++r1)
        for (std::size_t r3 = 0; r3 < ranks.r3; ++r3) model.core.set(r1, r2, r3, false);
    }
  }
  for (std::size_t r3 = 0; r3 < ranks.r3; ++r3) {
    if (model.c.column_indices(r3).empty()) {
      revive(model.c, r3, 2);
      for (std::size_t r1 = 0; r1 < ranks.r1; ++r1)
        for (std::size_t r2 = 0; r2 < ranks.r2; ++r2) model.core.set(r1, r2, r3, false);
    }
  }
  return changed;
}

TuckerModel update_factor(const BoolTensor3& x, const TuckerModel& model, Mode mode) {
  model.validate_against(x);
  TuckerModel out = model;
  BoolMatrix& factor = mode == Mode::Objects ? out.a : (mode == Mode::Features ? out.b : out.c);
  const BoolMatrix xn = unfold(x, mode);
  const BoolMatrix h = combination_rows(model, mode);
  const std::size_t rank = factor.cols();
  const std::size_t wpr = xn.words_per_row();

  std::vector<std::uint64_t> base(wpr);
  for (std::size_t i = 0; i < factor.rows(); ++i) {
    const auto xrow = xn.row(i);
    std::uint64_t mask = factor_row_mask(factor, i);
    for (std::size_t r = 0; r < rank; ++r) {
      std::fill(base.begin(), base.end(), 0);
      for (std::size_t s = 0; s < rank; ++s) {
        if (s != r && ((mask >> s) & 1u)) {
          detail::or_into({base.data(), wpr}, h.row(s));
        }
      }
      const std::size_t err_without = detail::popcount_xor(xrow, {base.data(), wpr});
      detail::or_into({base.data(), wpr}, h.row(r));
      const std::size_t err_with = detail::popcount_xor(xrow, {base.data(), wpr});
      if (err_with < err_without) {
        mask |= std::uint64_t{1} << r;
      } else {
        mask &= ~(std::uint64_t{1} << r);
      }
    }
    write_factor_row(factor, i, mask);
  }
  return out;
}

std::vector<CoreCell> lexicographic_core_order(const Ranks& ranks) {
  std::vector<CoreCell> order;
  order.reserve(ranks.r1 * ranks.r2 * ranks.r3);
  for (std::size_t r1 = 0; r1 < ranks.r1; ++r1) {
    for (std::size_t r2 = 0; r2 < ranks.r2; ++r2) {
      for (std::size_t r3 = 0; r3 < ranks.r3; ++r3) {
        order.push_back({r1, r2, r3});
      }
    }
  }
  return order;
}

TuckerModel update_core_visit(const BoolTensor3& x, const TuckerModel& model,
                              const std::vector<CoreCell>& order) {
  model.validate_against(x);
  TuckerModel out = model;
  const std::size_t O = x.dim_o();
  const std::size_t F = x.dim_f();
  const std::size_t T = x.dim_t();
  const Ranks ranks = model.ranks();

  std::vector<std::vector<std::uint32_t>> a_cols(ranks.r1);
  for (std::size_t r = 0; r < ranks.r1; ++r) a_cols[r] = out.a.column_indices(r);
  std::vector<std::vector<std::uint32_t>> b_cols(ranks.r2);
  for (std::size_t r = 0; r < ranks.r2; ++r) b_cols[r] = out.b.column_indices(r);
  std::vector<std::vector<std::uint32_t>> c_cols(ranks.r3);
  for (std::size_t r = 0; r < ranks.r3; ++r) c_cols[r] = out.c.column_indices(r);

  // Coverage multiplicity per tensor cell; a cell is 1 in the reconstruction
  // exactly when its count is positive.
  std::vector<std::uint16_t> counts(O * F * T, 0);
  const auto idx = [O, F](std::size_t o, std::size_t f, std::size_t t) {
    return (t * F + f) * O + o;
  };
  const auto apply = [&](const CoreCell& cell, int delta) {
    for (std::uint32_t t : c_cols[cell.r3]) {
      for (std::uint32_t f : b_cols[cell.r2]) {
        for (std::uint32_t o : a_cols[cell.r1]) {
          counts[idx(o, f, t)] = static_cast<std::uint16_t>(counts[idx(o, f, t)] + delta);
        }
      }
    }
  };
  for (const CoreCell& cell : lexicographic_core_order(ranks)) {
    if (out.core.get(cell.r1, cell.r2, cell.r3)) apply(cell, +1);
  }

  // Current mismatch count for the running reconstruction.
  std::ptrdiff_t mismatches = 0;
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t f = 0; f < F; ++f) {
      for (std::size_t o = 0; o < O; ++o) {
        const bool rec = counts[idx(o, f, t)] > 0;
        if (rec != x.get(o, f, t)) ++mismatches;
      }
    }
  }

  for (const CoreCell& cell : order) {
    const bool current = out.core.get(cell.r1, cell.r2, cell.r3);
    if (current) {
      // Mismatch change if this cell were cleared: cells covered only by it
      // flip 1 -> 0 in the reconstruction.
      std::ptrdiff_t delta_clear = 0;
      for (std::uint32_t t : c_cols[cell.r3]) {
        for (std::uint32_t f : b_cols[cell.r2]) {
          for (std::uint32_t o : a_cols[cell.r1]) {
            if (counts[idx(o, f, t)] == 1) {
              delta_clear += x.get(o, f, t) ? +1 : -1;
            }
          }
        }
      }
      // Keep the 1 only when clearing would strictly raise the error.
      if (delta_clear <= 0) {
        out.core.set(cell.r1, cell.r2, cell.r3, false);
        apply(cell, -1);
        mismatches += delta_clear;
      }
    } else {
      std::ptrdiff_t delta_set = 0;
      for (std::uint32_t t : c_cols[cell.r3]) {
        for (std::uint32_t f : b_cols[cell.r2]) {
          for (std::uint32_t o : a_cols[cell.r1]) {
            if (counts[idx(o, f, t)] == 0) {
              delta_set += x.get(o, f, t) ? -1 : +1;
            }
          }
        }
      }
      if (delta_set < 0) {
        out.core.set(cell.r1, cell.r2, cell.r3, true);
        apply(cell, +1);
        mismatches += delta_set;
      }
    }
  }
  return out;
}

TuckerModel update_core(const BoolTensor3& x, const TuckerModel& model) {
  return update_core_visit(x, model, lexicographic_core_order(model.ranks()));
}

std::pair<TuckerModel, FitTrace> fit_batch(const BoolTensor3& x, const FitConfig& config) {
  config.validate();
  config.ranks.validate_for(x.dim_o(), x.dim_f(), x.dim_t());

  TuckerModel model;
  if (config.init_kind == InitKind::Bernoulli) {
    model = init_model({x.dim_o(), x.dim_f(), x.dim_t()}, config);
    model = update_core(x, model);
  } else {
    model = data_seeded_model(x, config);
  }
  SplitMix64 reseed_rng(SplitMix64(config.seed).split().next_u64());

  FitTrace trace;
  trace.status = FitStatus::MaxSweeps;
  std::size_t prev_mismatches = evaluate(x, model).first;
  std::size_t stall_run = 0;

  // A candidate component update is taken only when it does not raise the
  // error (the greedy updates already guarantee this; the guard keeps the
  // sweep safe against any future update variant).
  const auto accept = [&x](TuckerModel& current, std::size_t current_err,
                           TuckerModel&& candidate) {
    const std::size_t cand_err = evaluate(x, candidate).first;
    if (cand_err <= current_err) {
      current = std::move(candidate);
      return cand_err;
    }
    return current_err;
  };

  for (std::size_t sweep = 1; sweep <= config.max_sweeps; ++sweep) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t err = prev_mismatches;
    err = accept(model, err, update_factor(x, model, Mode::Objects));
    err = accept(model, err, update_factor(x, model, Mode::Features));
    err = accept(model, err, update_factor(x, model, Mode::Time));
    err = accept(model, err, update_core(x, model));

    const auto [mismatches, relative] = evaluate(x, model);
    trace.records.push_back({sweep, mismatches, relative, millis_since(start)});

    if (error_within(config.error_kind, mismatches, relative, config.error_threshold)) {
      trace.status = FitStatus::Converged;
      break;
    }
    if (mismatches >= prev_mismatches) {  // improvement below one whole mismatch
      if (++stall_run >= config.stall_sweeps) {
        trace.status = FitStatus::Stalled;
        break;
      }
    } else {
      stall_run = 0;
    }
    prev_mismatches = mismatches;
  }
  return {model, trace};
}

std::pair<TuckerModel, FitTrace> fit_batch_best_of(const BoolTensor3& x, const FitConfig& config,
                                                   std::size_t restarts) {
  if (restarts < 1) {
    throw ConfigError("restarts must be >= 1");
  }
  SplitMix64 root(config.seed);
  TuckerModel best_model;
  FitTrace best_trace;
  std::size_t best_err = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < restarts; ++i) {
    FitConfig run = config;
    run.seed = root.next_u64();
    auto [model, trace] = fit_batch(x, run);
    const std::size_t err = evaluate(x, model).first;
    if (err < best_err) {
      best_err = err;
      best_model = std::move(model);
      best_trace = std::move(trace);
    }
  }
  return {best_model, best_trace};
}

}  // namespace boolcd
