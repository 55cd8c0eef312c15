#include "boolcd/synth.hpp"

#include <limits>

#include "boolcd/batch.hpp"
#include "boolcd/rng.hpp"

namespace boolcd {

namespace {

void check_unit(double v, const char* name) {
  if (v < 0.0 || v > 1.0) {
    throw ConfigError(std::string(name) + " must lie in [0,1]");
  }
}

BoolTensor3 random_bool_tensor(std::size_t o, std::size_t f, std::size_t t, double density,
                               SplitMix64& rng) {
  BoolTensor3 x(o, f, t);
  for (std::size_t kt = 0; kt < t; ++kt) {
    for (std::size_t kf = 0; kf < f; ++kf) {
      for (std::size_t ko = 0; ko < o; ++ko) {
        if (rng.bernoulli(density)) x.set(ko, kf, kt, true);
      }
    }
  }
  return x;
}

}  // namespace

void PlantedSpec::validate() const {
  ranks.validate_for(dim_o, dim_f, dim_t);
  check_unit(density_a, "density_a");
  check_unit(density_b, "density_b");
  check_unit(density_c, "density_c");
  check_unit(density_core, "density_core");
  check_unit(noise, "noise");
  if (drift.kind == Drift::Kind::Toggle && (drift.object >= dim_o || drift.feature >= dim_f)) {
    throw ConfigError("toggle drift target outside dims");
  }
}

BoolTensor3 Planted::tensor() const {
  const std::size_t O = slots.front().rows();
  const std::size_t F = slots.front().cols();
  BoolTensor3 x(O, F, slots.size());
  for (std::size_t t = 0; t < slots.size(); ++t) {
    for (std::size_t f = 0; f < F; ++f) {
      for (std::size_t o = 0; o < O; ++o) {
        if (slots[t].get(o, f)) x.set(o, f, t, true);
      }
    }
  }
  return x;
}

Planted generate_planted(const PlantedSpec& spec) {
  spec.validate();
  SplitMix64 root(spec.seed);
  SplitMix64 rng_core = root.split();
  SplitMix64 rng_a = root.split();
  SplitMix64 rng_b = root.split();
  SplitMix64 rng_c = root.split();
  SplitMix64 rng_drift = root.split();
  SplitMix64 rng_noise = root.split();

  Planted out;
  out.truth.core =
      random_bool_tensor(spec.ranks.r1, spec.ranks.r2, spec.ranks.r3, spec.density_core, rng_core);
  out.truth.a = random_bool_matrix(spec.dim_o, spec.ranks.r1, spec.density_a, rng_a);
  out.truth.b = random_bool_matrix(spec.dim_f, spec.ranks.r2, spec.density_b, rng_b);
  out.truth.c = random_bool_matrix(spec.dim_t, spec.ranks.r3, spec.density_c, rng_c);

  const BoolTensor3 xhat =
      tucker_reconstruct(out.truth.core, out.truth.a, out.truth.b, out.truth.c);

  // StepChange swaps in a second core for slots at or past the change point.
  BoolTensor3 xhat_after;
  if (spec.drift.kind == Drift::Kind::StepChange) {
    const BoolTensor3 core2 = random_bool_tensor(spec.ranks.r1, spec.ranks.r2, spec.ranks.r3,
                                                 spec.density_core, rng_drift);
    xhat_after = tucker_reconstruct(core2, out.truth.a, out.truth.b, out.truth.c);
  }

  out.slots.reserve(spec.dim_t);
  for (std::size_t t = 0; t < spec.dim_t; ++t) {
    const BoolTensor3& source =
        (spec.drift.kind == Drift::Kind::StepChange && t >= spec.drift.at_slot) ? xhat_after
                                                                                : xhat;
    BoolMatrix slot(spec.dim_o, spec.dim_f);
    for (std::size_t o = 0; o < spec.dim_o; ++o) {
      for (std::size_t f = 0; f < spec.dim_f; ++f) {
        slot.set(o, f, source.get(o, f, t));
      }
    }
    if (spec.drift.kind == Drift::Kind::Toggle) {
      slot.set(spec.drift.object, spec.drift.feature, t % 2 == 1);
    }
    for (std::size_t o = 0; o < spec.dim_o; ++o) {
      for (std::size_t f = 0; f < spec.dim_f; ++f) {
        if (rng_noise.bernoulli(spec.noise)) {
          slot.set(o, f, !slot.get(o, f));
        }
      }
    }
    out.slots.push_back(std::move(slot));
  }
  return out;
}

OracleResult exhaustive_oracle(const BoolTensor3& x, const Ranks& ranks) {
  ranks.validate_for(x.dim_o(), x.dim_f(), x.dim_t());
  const std::size_t O = x.dim_o();
  const std::size_t F = x.dim_f();
  const std::size_t T = x.dim_t();
  const std::size_t bits_a = O * ranks.r1;
  const std::size_t bits_b = F * ranks.r2;
  const std::size_t bits_c = T * ranks.r3;
  const std::size_t bits_g = ranks.r1 * ranks.r2 * ranks.r3;
  const std::size_t total = bits_a + bits_b + bits_c + bits_g;
  if (total > 24) {
    throw CapacityError("exhaustive_oracle: search space exponent " + std::to_string(total) +
                        " exceeds the guard of 24");
  }

  const auto unpack_matrix = [](std::uint64_t bits, std::size_t rows, std::size_t cols) {
    BoolMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if ((bits >> (i * cols + j)) & 1u) m.set(i, j, true);
      }
    }
    return m;
  };
  const auto unpack_core = [&ranks](std::uint64_t bits) {
    BoolTensor3 g(ranks.r1, ranks.r2, ranks.r3);
    std::size_t k = 0;
    for (std::size_t r1 = 0; r1 < ranks.r1; ++r1) {
      for (std::size_t r2 = 0; r2 < ranks.r2; ++r2) {
        for (std::size_t r3 = 0; r3 < ranks.r3; ++r3, ++k) {
          if ((bits >> k) & 1u) g.set(r1, r2, r3, true);
        }
      }
    }
    return g;
  };

  OracleResult best;
  best.best_error = std::numeric_limits<std::size_t>::max();
  const std::uint64_t limit = std::uint64_t{1} << total;
  for (std::uint64_t assignment = 0; assignment < limit; ++assignment) {
    std::uint64_t rest = assignment;
    const std::uint64_t ga = rest & ((std::uint64_t{1} << bits_g) - 1);
    rest >>= bits_g;
    const std::uint64_t aa = rest & ((std::uint64_t{1} << bits_a) - 1);
    rest >>= bits_a;
    const std::uint64_t ba = rest & ((std::uint64_t{1} << bits_b) - 1);
    rest >>= bits_b;
    const std::uint64_t ca = rest;

    TuckerModel model;
    model.core = unpack_core(ga);
    model.a = unpack_matrix(aa, O, ranks.r1);
    model.b = unpack_matrix(ba, F, ranks.r2);
    model.c = unpack_matrix(ca, T, ranks.r3);

    const BoolTensor3 xhat = tucker_reconstruct(model.core, model.a, model.b, model.c);
    const std::size_t err = hamming_error(x, xhat).mismatches;
    if (err < best.best_error) {
      best.best_error = err;
      best.best_model = std::move(model);
      if (err == 0) break;
    }
  }
  return best;
}

}  // namespace boolcd
