#pragma once

#include <cstdint>
#include <vector>

#include "boolcd/bool_matrix.hpp"
#include "boolcd/bool_tensor.hpp"
#include "boolcd/kernels.hpp"
#include "boolcd/model.hpp"

namespace boolcd {

/// How a planted stream drifts over time.
struct Drift {
  enum class Kind { Stationary, StepChange, Toggle };

  Kind kind = Kind::Stationary;
  std::size_t at_slot = 0;   // StepChange: first slot of the new regime
  std::size_t object = 0;    // Toggle target
  std::size_t feature = 0;

  static Drift stationary() { return {}; }
  static Drift step_change(std::size_t at_slot) {
    return {Kind::StepChange, at_slot, 0, 0};
  }
  static Drift toggle(std::size_t object, std::size_t feature) {
    return {Kind::Toggle, 0, object, feature};
  }
};

/// Ground-truth generator standing in for real labeled image series.
struct PlantedSpec {
  std::size_t dim_o = 0;
  std::size_t dim_f = 0;
  std::size_t dim_t = 0;
  Ranks ranks;
  double density_a = 0.3;
  double density_b = 0.3;
  double density_c = 0.3;
  double density_core = 0.5;
  double noise = 0.0;  // independent cell flip probability
  std::uint64_t seed = 0;
  Drift drift = Drift::stationary();

  void validate() const;
};

struct Planted {
  std::vector<BoolMatrix> slots;  // one O x F matrix per time slot
  TuckerModel truth;              // the pre-drift generating model

  BoolTensor3 tensor() const;
};

/// Draw core and factors at the given densities from per-component seed
/// streams, reconstruct, apply drift, then flip each cell with probability
/// `noise`.
Planted generate_planted(const PlantedSpec& spec);

struct OracleResult {
  std::size_t best_error = 0;
  TuckerModel best_model;
};

/// Global optimum by enumerating every binary assignment of the factors and
/// core. Guarded: the search space exponent O*r1 + F*r2 + T*r3 + r1*r2*r3 must
/// not exceed 24.
OracleResult exhaustive_oracle(const BoolTensor3& x, const Ranks& ranks);

}  // namespace boolcd
