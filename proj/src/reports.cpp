#include "boolcd/reports.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boolcd/io.hpp"

namespace boolcd {

void FrameSpec::validate() const {
  if (slots_per_frame < 1) {
    throw ConfigError("slots_per_frame must be >= 1");
  }
}

std::size_t FrameSpec::frame_count(std::size_t dim_t) const {
  return (dim_t + slots_per_frame - 1) / slots_per_frame;
}

std::pair<std::size_t, std::size_t> FrameSpec::frame_range(std::size_t frame,
                                                           std::size_t dim_t) const {
  const std::size_t first = frame * slots_per_frame;
  const std::size_t last = std::min(first + slots_per_frame, dim_t);
  return {first, last};
}

std::string FeatureVarianceReport::to_csv() const {
  std::string out = "object,feature,frame,value\n";
  for (std::size_t o = 0; o < objects; ++o) {
    for (std::size_t f = 0; f < features; ++f) {
      for (std::size_t fr = 0; fr < frames; ++fr) {
        out += std::to_string(o) + "," + std::to_string(f) + "," + std::to_string(fr) + "," +
               format_double(at(o, f, fr)) + "\n";
      }
    }
  }
  return out;
}

std::string ClassProportionReport::to_csv() const {
  std::string out = "class,frame,proportion\n";
  for (std::size_t o = 0; o < classes; ++o) {
    for (std::size_t fr = 0; fr < frames; ++fr) {
      out += std::to_string(o) + "," + std::to_string(fr) + "," + format_double(at(o, fr)) + "\n";
    }
  }
  return out;
}

std::string GainLossReport::to_csv() const {
  std::string out = "class,gain_pct,loss_pct,new_class\n";
  for (std::size_t o = 0; o < classes.size(); ++o) {
    const GainLossEntry& e = classes[o];
    out += std::to_string(o) + "," + format_double(e.gain_pct) + "," +
           format_double(e.loss_pct) + "," + (e.new_class ? "1" : "0") + "\n";
  }
  return out;
}

FeatureVarianceReport feature_variance(const BoolTensor3& xhat, const FrameSpec& frames) {
  frames.validate();
  FeatureVarianceReport report;
  report.objects = xhat.dim_o();
  report.features = xhat.dim_f();
  report.frames = frames.frame_count(xhat.dim_t());
  report.values.assign(report.objects * report.features * report.frames, 0.0);

  for (std::size_t fr = 0; fr < report.frames; ++fr) {
    const auto [first, last] = frames.frame_range(fr, xhat.dim_t());
    if (first >= last) {
      report.warnings.push_back("frame " + std::to_string(fr) + " is empty, skipped");
      continue;
    }
    const double len = static_cast<double>(last - first);
    for (std::size_t o = 0; o < report.objects; ++o) {
      for (std::size_t f = 0; f < report.features; ++f) {
        std::size_t present = 0;
        for (std::size_t t = first; t < last; ++t) present += xhat.get(o, f, t);
        const double p = static_cast<double>(present) / len;
        report.values[(o * report.features + f) * report.frames + fr] = 4.0 * p * (1.0 - p);
      }
    }
  }
  return report;
}

FeatureVarianceReport feature_variance(const TuckerModel& model, const FrameSpec& frames) {
  return feature_variance(tucker_reconstruct(model.core, model.a, model.b, model.c), frames);
}

ClassProportionReport class_proportions(const TuckerModel& model, const FrameSpec& frames) {
  frames.validate();
  const std::size_t classes = model.a.rows();
  const std::size_t dim_t = model.c.rows();
  const Ranks ranks = model.ranks();

  ClassProportionReport report;
  report.classes = classes;
  report.frames = frames.frame_count(dim_t);
  report.proportions.assign(classes * report.frames, 0.0);
  report.inactive_frames.assign(report.frames, false);

  // Core activity of class o at slot t: 1-cells of G whose object and time
  // components are both active there. B is deliberately marginalized; the
  // report is a class-versus-time view.
  std::vector<double> activity(classes * dim_t, 0.0);
  for (std::size_t o = 0; o < classes; ++o) {
    for (std::size_t t = 0; t < dim_t; ++t) {
      std::size_t count = 0;
      for (std::size_t r1 = 0; r1 < ranks.r1; ++r1) {
        if (!model.a.get(o, r1)) continue;
        for (std::size_t r3 = 0; r3 < ranks.r3; ++r3) {
          if (!model.c.get(t, r3)) continue;
          for (std::size_t r2 = 0; r2 < ranks.r2; ++r2) {
            count += model.core.get(r1, r2, r3);
          }
        }
      }
      activity[o * dim_t + t] = static_cast<double>(count);
    }
  }

  for (std::size_t fr = 0; fr < report.frames; ++fr) {
    const auto [first, last] = frames.frame_range(fr, dim_t);
    const double len = static_cast<double>(last - first);
    double total = 0.0;
    std::vector<double> means(classes, 0.0);
    for (std::size_t o = 0; o < classes; ++o) {
      double sum = 0.0;
      for (std::size_t t = first; t < last; ++t) sum += activity[o * dim_t + t];
      means[o] = len > 0.0 ? sum / len : 0.0;
      total += means[o];
    }
    if (total <= 0.0) {
      report.inactive_frames[fr] = true;
      continue;
    }
    for (std::size_t o = 0; o < classes; ++o) {
      report.proportions[o * report.frames + fr] = means[o] / total;
    }
  }
  return report;
}

GainLossReport gain_loss(const ClassProportionReport& report) {
  if (report.frames < 2) {
    throw InputError("gain_loss: need at least 2 frames, got " + std::to_string(report.frames));
  }
  GainLossReport out;
  out.classes.resize(report.classes);
  const double floor = std::numeric_limits<double>::min();
  for (std::size_t o = 0; o < report.classes; ++o) {
    const double first = report.at(o, 0);
    const double last = report.at(o, report.frames - 1);
    GainLossEntry& e = out.classes[o];
    if (first == 0.0) {
      e.new_class = last > 0.0;
      continue;
    }
    const double delta = last - first;
    const double denom = std::max(first, floor);
    e.gain_pct = 100.0 * std::max(delta, 0.0) / denom;
    e.loss_pct = 100.0 * std::max(-delta, 0.0) / denom;
  }
  return out;
}

}  // namespace boolcd
