#include "boolcd/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <thread>

#include "boolcd/batch.hpp"
#include "boolcd/io.hpp"
#include "boolcd/svg.hpp"

namespace boolcd {

namespace {

double millis_since(std::chrono::steady_clock::time_point start) {
  const auto dt = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(dt).count();
}

std::vector<BoolMatrix> tensor_to_slots(const BoolTensor3& x) {
  std::vector<BoolMatrix> slots;
  slots.reserve(x.dim_t());
  for (std::size_t t = 0; t < x.dim_t(); ++t) {
    BoolMatrix slot(x.dim_o(), x.dim_f());
    for (std::size_t f = 0; f < x.dim_f(); ++f) {
      for (std::size_t o = 0; o < x.dim_o(); ++o) {
        if (x.get(o, f, t)) slot.set(o, f, true);
      }
    }
    slots.push_back(std::move(slot));
  }
  return slots;
}

/// Run `jobs` indexed tasks on a small worker pool; results land by index so
/// the merge order never depends on scheduling.
void parallel_for_index(std::size_t jobs, std::size_t workers,
                        const std::function<void(std::size_t)>& fn) {
  if (jobs == 0) return;
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

struct FitPoint {
  std::size_t mismatches = 0;
  double relative = 0.0;
  double wall_millis = 0.0;
};

FitPoint time_batch_fit(const BoolTensor3& x, const FitConfig& config, std::size_t restarts) {
  const auto start = std::chrono::steady_clock::now();
  auto [model, trace] = fit_batch_best_of(x, config, restarts);
  const double ms = millis_since(start);
  const auto [mism, rel] = evaluate(x, model);
  return {mism, rel, ms};
}

FitPoint time_stream_fit(const std::vector<BoolMatrix>& slots, const StreamConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  auto [state, trace] = run_stream(slots, config);
  const double ms = millis_since(start);
  const auto [mism, rel] = state.window_error();
  return {mism, rel, ms};
}

}  // namespace

std::string bench_csv_header() {
  return "method,O,F,T,r1,r2,r3,density,index,mismatches,relative,wall_millis,seed";
}

std::string bench_rows_to_csv(const std::vector<BenchRow>& rows) {
  std::string out = bench_csv_header() + "\n";
  for (const BenchRow& r : rows) {
    out += r.method + "," + std::to_string(r.dim_o) + "," + std::to_string(r.dim_f) + "," +
           std::to_string(r.dim_t) + "," + std::to_string(r.ranks.r1) + "," +
           std::to_string(r.ranks.r2) + "," + std::to_string(r.ranks.r3) + "," +
           format_double(r.density) + "," + std::to_string(r.index) + "," +
           std::to_string(r.mismatches) + "," + format_double(r.relative) + "," +
           format_double(r.wall_millis) + "," + std::to_string(r.seed) + "\n";
  }
  return out;
}

void write_bench_csv(const std::vector<BenchRow>& rows, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DataError("cannot open " + path.string() + " for writing");
  }
  out << bench_rows_to_csv(rows);
}

std::size_t bench_worker_count(std::size_t jobs) {
  if (jobs <= 1) return 1;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BOOLCD_THREADS")) {
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || parsed == 0) {
      throw ConfigError("BOOLCD_THREADS must be a positive integer, got '" + std::string(env) +
                        "'");
    }
    workers = parsed;
  }
  return std::min(workers, jobs);
}

std::vector<BenchRow> run_core_size_sweep(const CoreSizeSweepConfig& config) {
  if (config.ranks_list.empty() || config.seeds.empty()) {
    throw InputError("core-size sweep: empty ranks list or seed list");
  }
  struct Job {
    std::size_t point;
    std::size_t seed_idx;
  };
  std::vector<Job> jobs;
  for (std::size_t p = 0; p < config.ranks_list.size(); ++p) {
    for (std::size_t s = 0; s < config.seeds.size(); ++s) {
      jobs.push_back({p, s});
    }
  }
  std::vector<std::vector<BenchRow>> results(jobs.size());
  parallel_for_index(jobs.size(), bench_worker_count(jobs.size()), [&](std::size_t j) {
    const Job& job = jobs[j];
    const Ranks ranks = config.ranks_list[job.point];
    const std::uint64_t seed = config.seeds[job.seed_idx];

    PlantedSpec spec;
    spec.dim_o = config.dim_o;
    spec.dim_f = config.dim_f;
    spec.dim_t = config.dim_t;
    spec.ranks = config.planted_ranks;
    spec.density_a = spec.density_b = spec.density_c = config.factor_density;
    spec.density_core = config.core_density;
    spec.seed = seed;
    const Planted planted = generate_planted(spec);
    const BoolTensor3 x = planted.tensor();
    const double dens = density(x);

    FitConfig fit;
    fit.ranks = ranks;
    fit.error_threshold = config.error_threshold;
    fit.seed = seed;
    const FitPoint batch = time_batch_fit(x, fit, config.restarts);

    StreamConfig stream;
    stream.ranks = ranks;
    stream.window_w = x.dim_t();  // full history: both methods fit the same tensor
    stream.error_threshold = config.error_threshold;
    stream.seed = seed;
    const FitPoint inc = time_stream_fit(tensor_to_slots(x), stream);

    results[j] = {
        {"batch", x.dim_o(), x.dim_f(), x.dim_t(), ranks, dens, job.point, batch.mismatches,
         batch.relative, batch.wall_millis, seed},
        {"incremental", x.dim_o(), x.dim_f(), x.dim_t(), ranks, dens, job.point, inc.mismatches,
         inc.relative, inc.wall_millis, seed},
    };
  });
  std::vector<BenchRow> rows;
  for (const auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

std::vector<BenchRow> run_density_sweep(const DensitySweepConfig& config) {
  if (config.densities.empty() || config.seeds.empty()) {
    throw InputError("density sweep: empty density list or seed list");
  }
  struct Job {
    std::size_t point;
    std::size_t seed_idx;
  };
  std::vector<Job> jobs;
  for (std::size_t p = 0; p < config.densities.size(); ++p) {
    for (std::size_t s = 0; s < config.seeds.size(); ++s) {
      jobs.push_back({p, s});
    }
  }
  std::vector<std::vector<BenchRow>> results(jobs.size());
  parallel_for_index(jobs.size(), bench_worker_count(jobs.size()), [&](std::size_t j) {
    const Job& job = jobs[j];
    const double factor_density = config.densities[job.point];
    const std::uint64_t seed = config.seeds[job.seed_idx];

    PlantedSpec spec;
    spec.dim_o = config.dim_o;
    spec.dim_f = config.dim_f;
    spec.dim_t = config.dim_t;
    spec.ranks = config.ranks;
    spec.density_a = spec.density_b = spec.density_c = factor_density;
    spec.density_core = config.core_density;
    spec.seed = seed;
    const Planted planted = generate_planted(spec);
    const BoolTensor3 x = planted.tensor();
    const double dens = density(x);

    FitConfig fit;
    fit.ranks = config.ranks;
    fit.error_threshold = config.error_threshold;
    fit.seed = seed;
    const FitPoint batch = time_batch_fit(x, fit, config.restarts);

    StreamConfig stream;
    stream.ranks = config.ranks;
    stream.window_w = x.dim_t();
    stream.error_threshold = config.error_threshold;
    stream.seed = seed;
    const FitPoint inc = time_stream_fit(tensor_to_slots(x), stream);

    results[j] = {
        {"batch", x.dim_o(), x.dim_f(), x.dim_t(), config.ranks, factor_density, job.point,
         batch.mismatches, batch.relative, batch.wall_millis, seed},
        {"incremental", x.dim_o(), x.dim_f(), x.dim_t(), config.ranks, factor_density, job.point,
         inc.mismatches, inc.relative, inc.wall_millis, seed},
    };
  });
  std::vector<BenchRow> rows;
  for (const auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

std::vector<BenchRow> run_time_sweep(const TimeSweepConfig& config) {
  if (config.seeds.empty()) {
    throw InputError("time sweep: empty seed list");
  }
  if (config.slot_count < 2) {
    throw InputError("time sweep: need at least 2 slots");
  }
  std::vector<BenchRow> rows;
  // Sequential on purpose: these rows are wall-time measurements.
  for (const std::uint64_t seed : config.seeds) {
    PlantedSpec spec;
    spec.dim_o = config.dim_o;
    spec.dim_f = config.dim_f;
    spec.dim_t = config.slot_count;
    spec.ranks = config.ranks;
    spec.density_a = spec.density_b = spec.density_c = config.factor_density;
    spec.density_core = config.core_density;
    spec.seed = seed;
    const Planted planted = generate_planted(spec);
    const double dens = density(planted.tensor());

    StreamConfig stream;
    stream.ranks = config.ranks;
    stream.window_w = config.window_w;
    stream.inner_sweeps = config.inner_sweeps;
    stream.error_threshold = config.error_threshold;
    stream.seed = seed;
    auto [state, trace] = run_stream(planted.slots, stream);
    for (const SweepRecord& rec : trace.records) {
      rows.push_back({"incremental", config.dim_o, config.dim_f, config.slot_count, config.ranks,
                      dens, rec.sweep, rec.mismatches, rec.relative, rec.wall_millis, seed});
    }

    // Traditional baseline: keep every slot and refit from scratch as the
    // tensor grows by one slot per step.
    for (std::size_t t = 2; t <= config.slot_count; ++t) {
      BoolTensor3 x(config.dim_o, config.dim_f, t);
      for (std::size_t k = 0; k < t; ++k) {
        for (std::size_t f = 0; f < config.dim_f; ++f) {
          for (std::size_t o = 0; o < config.dim_o; ++o) {
            if (planted.slots[k].get(o, f)) x.set(o, f, k, true);
          }
        }
      }
      FitConfig fit;
      fit.ranks = config.ranks;
      fit.error_threshold = config.error_threshold;
      fit.seed = seed;
      const FitPoint point = time_batch_fit(x, fit, 1);
      rows.push_back({"batch", config.dim_o, config.dim_f, config.slot_count, config.ranks, dens,
                      t, point.mismatches, point.relative, point.wall_millis, seed});
    }
  }
  return rows;
}

namespace {

/// Mean of `value` over seeds, grouped by (method, index), index ascending.
std::vector<Series> averaged_series(const std::vector<BenchRow>& rows,
                                    double (*value)(const BenchRow&), bool cumulative) {
  std::map<std::string, std::map<std::size_t, std::pair<double, std::size_t>>> grouped;
  for (const BenchRow& r : rows) {
    auto& [sum, count] = grouped[r.method][r.index];
    sum += value(r);
    count += 1;
  }
  std::vector<Series> series;
  for (const auto& [method, points] : grouped) {
    Series s;
    s.name = method;
    double acc = 0.0;
    for (const auto& [index, sum_count] : points) {
      const double mean = sum_count.first / static_cast<double>(sum_count.second);
      acc = cumulative ? acc + mean : mean;
      s.points.emplace_back(static_cast<double>(index), acc);
    }
    series.push_back(std::move(s));
  }
  return series;
}

double relative_of(const BenchRow& r) { return r.relative; }
double millis_of(const BenchRow& r) { return r.wall_millis; }

}  // namespace

std::string svg_for_core_size(const std::vector<BenchRow>& rows) {
  return emit_svg_line("Reconstruction error vs core tensor size", "core size sweep point",
                       "mean relative error", averaged_series(rows, relative_of, false));
}

std::string svg_for_density(const std::vector<BenchRow>& rows) {
  return emit_svg_line("Reconstruction error vs factor density", "density sweep point",
                       "mean relative error", averaged_series(rows, relative_of, false));
}

std::string svg_for_time(const std::vector<BenchRow>& rows) {
  return emit_svg_line("Cumulative convergence time", "slot",
                       "cumulative mean wall millis", averaged_series(rows, millis_of, true));
}

}  // namespace boolcd
