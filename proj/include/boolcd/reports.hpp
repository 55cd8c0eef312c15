#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "boolcd/bool_tensor.hpp"
#include "boolcd/model.hpp"

namespace boolcd {

/// Groups consecutive time slots into reporting frames. T need not divide
/// evenly; the last frame may be short.
struct FrameSpec {
  std::size_t slots_per_frame = 1;
  std::vector<std::string> labels;

  void validate() const;
  std::size_t frame_count(std::size_t dim_t) const;
  /// Half-open slot range [first, last) of a frame.
  std::pair<std::size_t, std::size_t> frame_range(std::size_t frame, std::size_t dim_t) const;
};

/// Per (object, feature, frame) normalized change activity in [0, 1]:
/// 4*p*(1-p) for p the fraction of frame slots in which the cell is present.
/// Constant presence or absence scores 0, toggling half the slots scores 1.
struct FeatureVarianceReport {
  std::size_t objects = 0;
  std::size_t features = 0;
  std::size_t frames = 0;
  std::vector<double> values;  // indexed (o * features + f) * frames + frame
  std::vector<std::string> warnings;

  double at(std::size_t o, std::size_t f, std::size_t frame) const {
    return values[(o * features + f) * frames + frame];
  }

  /// CSV with fixed header object,feature,frame,value.
  std::string to_csv() const;
};

/// Per (class, frame) share of core-tensor activity, normalized to sum to 1
/// over classes within each frame that has any activity.
struct ClassProportionReport {
  std::size_t classes = 0;
  std::size_t frames = 0;
  std::vector<double> proportions;      // indexed o * frames + frame
  std::vector<bool> inactive_frames;    // frames with zero total activity

  double at(std::size_t o, std::size_t frame) const { return proportions[o * frames + frame]; }

  /// CSV with fixed header class,frame,proportion.
  std::string to_csv() const;
};

struct GainLossEntry {
  double gain_pct = 0.0;
  double loss_pct = 0.0;
  /// Class absent in the first frame but active later; no percentage exists.
  bool new_class = false;
};

/// First-to-last frame change per class; gain and loss are mutually exclusive.
struct GainLossReport {
  std::vector<GainLossEntry> classes;

  /// CSV with fixed header class,gain_pct,loss_pct,new_class.
  std::string to_csv() const;
};

FeatureVarianceReport feature_variance(const BoolTensor3& xhat, const FrameSpec& frames);
FeatureVarianceReport feature_variance(const TuckerModel& model, const FrameSpec& frames);

ClassProportionReport class_proportions(const TuckerModel& model, const FrameSpec& frames);

/// Needs at least two frames; a class with zero first-frame share and later
/// activity is reported with the new_class flag rather than a percentage.
GainLossReport gain_loss(const ClassProportionReport& report);

}  // namespace boolcd
