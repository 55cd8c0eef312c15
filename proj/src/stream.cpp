#include "boolcd/stream.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace boolcd {

namespace {

double millis_since(std::chrono::steady_clock::time_point start) {
  const auto dt = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(dt).count();
}

BoolTensor3 stack_slots(const std::deque<BoolMatrix>& window) {
  const std::size_t O = window.front().rows();
  const std::size_t F = window.front().cols();
  BoolTensor3 x(O, F, window.size());
  for (std::size_t t = 0; t < window.size(); ++t) {
    for (std::size_t f = 0; f < F; ++f) {
      for (std::size_t o = 0; o < O; ++o) {
        if (window[t].get(o, f)) x.set(o, f, t, true);
      }
    }
  }
  return x;
}

void require_slot_shape(const StreamState& state, const BoolMatrix& slot) {
  const BoolMatrix& ref = state.window.front();
  if (slot.rows() != ref.rows() || slot.cols() != ref.cols()) {
    throw ShapeError("ingest_slot: slot is " + std::to_string(slot.rows()) + "x" +
                     std::to_string(slot.cols()) + ", stream carries " +
                     std::to_string(ref.rows()) + "x" + std::to_string(ref.cols()));
  }
}

// A dead (all-zero) factor column cannot re-enter the greedy fit: every core
// cell referencing it has empty support, and those zero cells in turn keep the
// column's row updates at a tie. Refill dead columns from a per-slot seed
// stream and drop the core cells they referenced; both had empty contribution,
// so the reconstruction and the window error are unchanged.
void reseed_dead_components(StreamState& state, std::size_t slot_index) {
  SplitMix64 rng(SplitMix64(state.config.seed + 0x632be59bd9b4e019ULL * (slot_index + 1)).next_u64());
  TuckerModel& m = state.model;
  const Ranks ranks = m.ranks();
  const auto refill = [&](BoolMatrix& factor, std::size_t col) {
    for (std::size_t i = 0; i < factor.rows(); ++i) {
      factor.set(i, col, rng.bernoulli(state.config.init_density));
    }
  };
  for (std::size_t r1 = 0; r1 < ranks.r1; ++r1) {
    if (m.a.column_indices(r1).empty()) {
      refill(m.a, r1);
      for (std::size_t r2 = 0; r2 < ranks.r2; ++r2)
        for (std::size_t r3 = 0; r3 < ranks.r3; ++r3) m.core.set(r1, r2, r3, false);
    }
  }
  for (std::size_t r2 = 0; r2 < ranks.r2; ++r2) {
    if (m.b.column_indices(r2).empty()) {
      refill(m.b, r2);
      for (std::size_t r1 = 0; r1 < ranks.r1; ++r1)
        for (std::size_t r3 = 0; r3 < ranks.r3; ++r3) m.core.set(r1, r2, r3, false);
    }
  }
  for (std::size_t r3 = 0; r3 < ranks.r3; ++r3) {
    if (m.c.column_indices(r3).empty()) {
      refill(m.c, r3);
      for (std::size_t r1 = 0; r1 < ranks.r1; ++r1)
        for (std::size_t r2 = 0; r2 < ranks.r2; ++r2) m.core.set(r1, r2, r3, false);
    }
  }
}

}  // namespace

void StreamConfig::validate() const {
  if (window_w < 2) {
    throw ConfigError("window_w must be >= 2");
  }
  if (inner_sweeps < 1) {
    throw ConfigError("inner_sweeps must be >= 1");
  }
  if (bootstrap_restarts < 1) {
    throw ConfigError("bootstrap_restarts must be >= 1");
  }
  if (error_threshold < 0.0) {
    throw ConfigError("error_threshold must be >= 0");
  }
  if (!(init_density > 0.0 && init_density < 1.0)) {
    throw ConfigError("init_density must lie strictly between 0 and 1");
  }
}

FitConfig StreamConfig::bootstrap_fit_config(std::uint64_t restart_seed) const {
  FitConfig fit;
  fit.ranks = ranks;
  fit.error_threshold = error_threshold;
  fit.max_sweeps = bootstrap_max_sweeps;
  fit.stall_sweeps = 3;
  fit.seed = restart_seed;
  fit.init_density = init_density;
  fit.error_kind = error_kind;
  return fit;
}

std::vector<std::uint64_t> bootstrap_seeds(const StreamConfig& config) {
  SplitMix64 root(config.seed);
  std::vector<std::uint64_t> seeds(config.bootstrap_restarts);
  for (auto& s : seeds) s = root.next_u64();
  return seeds;
}

BoolTensor3 StreamState::window_tensor() const { return stack_slots(window); }

std::pair<std::size_t, double> StreamState::window_error() const {
  return evaluate(window_tensor(), model);
}

std::size_t StreamState::retained_bytes() const {
  std::size_t words = 0;
  for (const BoolMatrix& slot : window) words += slot.word_count();
  words += model.core.word_count();
  words += model.a.word_count() + model.b.word_count() + model.c.word_count();
  std::size_t doubles = cov.ca.data.size() + cov.cb.data.size() + cov.cc.data.size();
  return words * sizeof(std::uint64_t) + doubles * sizeof(double);
}

StreamState bootstrap(const BoolMatrix& slot1, const BoolMatrix& slot2,
                      const StreamConfig& config) {
  config.validate();
  if (slot1.rows() != slot2.rows() || slot1.cols() != slot2.cols()) {
    throw ShapeError("bootstrap: slot shapes " + std::to_string(slot1.rows()) + "x" +
                     std::to_string(slot1.cols()) + " vs " + std::to_string(slot2.rows()) + "x" +
                     std::to_string(slot2.cols()));
  }
  config.ranks.validate_for(slot1.rows(), slot1.cols(), 2);

  const auto start = std::chrono::steady_clock::now();

  StreamState state;
  state.config = config;
  state.window.push_back(slot1);
  state.window.push_back(slot2);

  const BoolTensor3 x2 = state.window_tensor();
  TuckerModel best;
  std::size_t best_err = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t seed : bootstrap_seeds(config)) {
    auto [model, trace] = fit_batch(x2, config.bootstrap_fit_config(seed));
    const std::size_t err = evaluate(x2, model).first;
    if (err < best_err) {
      best_err = err;
      best = std::move(model);
    }
  }
  state.model = std::move(best);

  state.cov = CovarianceState::zeros(config.ranks.r1, config.ranks.r2, config.ranks.r3);
  state.cov.ca = covariance_of(state.model.a);
  state.cov.cb = covariance_of(state.model.b);
  state.cov.cc = covariance_of(state.model.c);
  state.cov.slots_seen = 2;

  const auto [mism, rel] = state.window_error();
  state.last_inner_errors = {mism};
  state.trace.records.push_back({2, mism, rel, millis_since(start)});
  state.trace.status = error_within(config.error_kind, mism, rel, config.error_threshold)
                           ? FitStatus::Converged
                           : FitStatus::MaxSweeps;
  return state;
}

std::vector<CoreCell> prioritized_core_order(const Ranks& ranks, const CovarianceState& cov) {
  struct Scored {
    double score;
    CoreCell cell;
  };
  std::vector<Scored> scored;
  scored.reserve(ranks.r1 * ranks.r2 * ranks.r3);
  for (const CoreCell& cell : lexicographic_core_order(ranks)) {
    const double v =
        cov.ca.at(cell.r1, cell.r1) * cov.cb.at(cell.r2, cell.r2) * cov.cc.at(cell.r3, cell.r3);
    scored.push_back({v, cell});
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const Scored& lhs, const Scored& rhs) { return lhs.score > rhs.score; });
  std::vector<CoreCell> order;
  order.reserve(scored.size());
  for (const Scored& s : scored) order.push_back(s.cell);
  return order;
}

TuckerModel update_core_prioritized(const BoolTensor3& x_window, const TuckerModel& model,
                                    const CovarianceState& cov) {
  return update_core_visit(x_window, model, prioritized_core_order(model.ranks(), cov));
}

void ingest_slot(StreamState& state, const BoolMatrix& slot) {
  if (state.window.empty()) {
    throw StateError("ingest_slot: stream not bootstrapped");
  }
  state.config.validate();
  require_slot_shape(state, slot);

  const auto start = std::chrono::steady_clock::now();
  const std::size_t slot_index = state.cov.slots_seen;  // 0-based index of this slot

  state.window.push_back(slot);
  if (state.window.size() > state.config.window_w) {
    state.window.pop_front();
  }

  // Roll C to the window: drop the evicted slot's row, give the new slot a row
  // copied from the most recent one (a stationary guess the first sweep then
  // refines).
  {
    const std::size_t new_len = state.window.size();
    const BoolMatrix& old_c = state.model.c;
    BoolMatrix c(new_len, old_c.cols());
    const std::size_t dropped = old_c.rows() + 1 > new_len ? old_c.rows() + 1 - new_len : 0;
    for (std::size_t i = 0; i + dropped < old_c.rows(); ++i) {
      for (std::size_t j = 0; j < old_c.cols(); ++j) {
        c.set(i, j, old_c.get(i + dropped, j));
      }
    }
    const std::size_t last_old = new_len - 2;
    for (std::size_t j = 0; j < c.cols(); ++j) {
      c.set(new_len - 1, j, c.get(last_old, j));
    }
    state.model.c = std::move(c);
  }

  const BoolTensor3 xw = state.window_tensor();
  const double weight = state.config.time_weight.weight_at(slot_index);

  const auto accept = [&xw](TuckerModel& current, std::size_t current_err,
                            TuckerModel&& candidate) {
    const std::size_t cand_err = evaluate(xw, candidate).first;
    if (cand_err <= current_err) {
      current = std::move(candidate);
      return cand_err;
    }
    return current_err;
  };

  state.last_inner_errors.clear();
  auto [mism, rel] = evaluate(xw, state.model);
  if (!error_within(state.config.error_kind, mism, rel, state.config.error_threshold)) {
    reseed_dead_components(state, slot_index);
  }
  for (std::size_t sweep = 0; sweep < state.config.inner_sweeps; ++sweep) {
    mism = accept(state.model, mism, update_factor(xw, state.model, Mode::Objects));
    state.cov.ca = accumulate(state.cov.ca, covariance_of(state.model.a), weight);
    mism = accept(state.model, mism, update_factor(xw, state.model, Mode::Features));
    state.cov.cb = accumulate(state.cov.cb, covariance_of(state.model.b), weight);
    mism = accept(state.model, mism, update_factor(xw, state.model, Mode::Time));
    state.cov.cc = accumulate(state.cov.cc, covariance_of(state.model.c), weight);
    mism = accept(state.model, mism, update_core_prioritized(xw, state.model, state.cov));

    const auto [m, r] = evaluate(xw, state.model);
    mism = m;
    rel = r;
    state.last_inner_errors.push_back(m);
    if (error_within(state.config.error_kind, m, r, state.config.error_threshold)) {
      break;
    }
  }

  state.cov.slots_seen += 1;
  state.trace.records.push_back({state.cov.slots_seen, mism, rel, millis_since(start)});
  state.trace.status =
      error_within(state.config.error_kind, mism, rel, state.config.error_threshold)
          ? FitStatus::Converged
          : FitStatus::MaxSweeps;
}

std::pair<StreamState, FitTrace> run_stream(const std::vector<BoolMatrix>& slots,
                                            const StreamConfig& config) {
  if (slots.size() < 2) {
    throw InputError("run_stream: need at least 2 slots, got " + std::to_string(slots.size()));
  }
  for (std::size_t i = 1; i < slots.size(); ++i) {
    if (slots[i].rows() != slots[0].rows() || slots[i].cols() != slots[0].cols()) {
      throw ShapeError("run_stream: slot " + std::to_string(i) + " is " +
                       std::to_string(slots[i].rows()) + "x" + std::to_string(slots[i].cols()) +
                       ", slot 0 is " + std::to_string(slots[0].rows()) + "x" +
                       std::to_string(slots[0].cols()));
    }
  }
  StreamState state = bootstrap(slots[0], slots[1], config);
  for (std::size_t i = 2; i < slots.size(); ++i) {
    ingest_slot(state, slots[i]);
  }
  FitTrace trace = state.trace;
  return {std::move(state), std::move(trace)};
}

}  // namespace boolcd
