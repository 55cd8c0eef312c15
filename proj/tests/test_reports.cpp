#include <doctest.h>

#include "boolcd/reports.hpp"
#include "boolcd/synth.hpp"
#include "test_helpers.hpp"

using namespace boolcd;

namespace {

// Two classes where class 0's core activity is exactly twice class 1's in
// every slot: ranks (2,1,1), both core cells on, class 0 in both components,
// class 1 in the first only.
TuckerModel two_to_one_model(std::size_t dim_t) {
  TuckerModel m;
  m.core = BoolTensor3(2, 1, 1);
  m.core.set(0, 0, 0, true);
  m.core.set(1, 0, 0, true);
  m.a = BoolMatrix::from_rows({{1, 1}, {1, 0}});
  m.b = BoolMatrix::from_rows({{1}});
  m.c = BoolMatrix(dim_t, 1);
  for (std::size_t t = 0; t < dim_t; ++t) m.c.set(t, 0, true);
  return m;
}

}  // namespace

TEST_CASE("feature variance: constant presence scores zero, half toggling scores one") {
  BoolTensor3 x(1, 2, 4);
  for (std::size_t t = 0; t < 4; ++t) x.set(0, 0, t, true);  // constant
  x.set(0, 1, 0, true);                                      // half the frame
  x.set(0, 1, 1, true);
  const auto report = feature_variance(x, FrameSpec{4, {}});
  CHECK(report.at(0, 0, 0) == 0.0);
  CHECK(report.at(0, 1, 0) == 1.0);
}

TEST_CASE("feature variance flags only the toggled cell of a toggle stream") {
  PlantedSpec spec;
  spec.dim_o = 6;
  spec.dim_f = 4;
  spec.dim_t = 20;
  spec.ranks = {2, 2, 2};
  spec.seed = 5;
  spec.density_a = spec.density_b = spec.density_c = 0.0;  // background empty
  spec.density_core = 0.0;
  spec.drift = Drift::toggle(3, 2);
  const Planted planted = generate_planted(spec);
  const auto report = feature_variance(planted.tensor(), FrameSpec{10, {}});
  for (std::size_t o = 0; o < 6; ++o) {
    for (std::size_t f = 0; f < 4; ++f) {
      for (std::size_t fr = 0; fr < report.frames; ++fr) {
        if (o == 3 && f == 2) {
          CHECK(report.at(o, f, fr) >= 0.9);
        } else {
          CHECK(report.at(o, f, fr) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("feature variance is invariant under slot relabeling within a frame") {
  const auto x = helpers::random_tensor(9, 4, 3, 6, 0.4);
  // swap two slots inside the single frame
  BoolTensor3 y = x;
  for (std::size_t o = 0; o < 4; ++o) {
    for (std::size_t f = 0; f < 3; ++f) {
      y.set(o, f, 1, x.get(o, f, 4));
      y.set(o, f, 4, x.get(o, f, 1));
    }
  }
  const auto rx = feature_variance(x, FrameSpec{6, {}});
  const auto ry = feature_variance(y, FrameSpec{6, {}});
  CHECK(rx.values == ry.values);
}

TEST_CASE("uneven final frame is allowed") {
  BoolTensor3 x(1, 1, 5);
  x.set(0, 0, 4, true);
  const auto report = feature_variance(x, FrameSpec{2, {}});
  CHECK(report.frames == 3);  // 2 + 2 + 1
  CHECK(report.at(0, 0, 2) == 0.0);  // constant within the short frame
}

TEST_CASE("class proportions: single active class and symmetric classes") {
  TuckerModel single;
  single.core = BoolTensor3(1, 1, 1);
  single.core.set(0, 0, 0, true);
  single.a = BoolMatrix::from_rows({{1}, {0}, {0}});
  single.b = BoolMatrix::from_rows({{1}});
  single.c = BoolMatrix::from_rows({{1}, {1}, {1}, {1}});
  const auto rep = class_proportions(single, FrameSpec{2, {}});
  for (std::size_t fr = 0; fr < rep.frames; ++fr) {
    CHECK(rep.at(0, fr) == doctest::Approx(1.0));
    CHECK(rep.at(1, fr) == doctest::Approx(0.0));
  }

  TuckerModel twin = single;
  twin.a = BoolMatrix::from_rows({{1}, {1}});
  const auto rep2 = class_proportions(twin, FrameSpec{2, {}});
  for (std::size_t fr = 0; fr < rep2.frames; ++fr) {
    CHECK(rep2.at(0, fr) == doctest::Approx(0.5));
    CHECK(rep2.at(1, fr) == doctest::Approx(0.5));
  }
}

TEST_CASE("class proportions: 2:1 activity gives 2/3 and 1/3") {
  const auto rep = class_proportions(two_to_one_model(6), FrameSpec{3, {}});
  REQUIRE(rep.frames == 2);
  for (std::size_t fr = 0; fr < 2; ++fr) {
    CHECK(rep.at(0, fr) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(rep.at(1, fr) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("class proportions sum to one on active frames") {
  PlantedSpec spec;
  spec.dim_o = 8;
  spec.dim_f = 5;
  spec.dim_t = 12;
  spec.ranks = {2, 2, 2};
  spec.seed = 21;
  const Planted planted = generate_planted(spec);
  const auto rep = class_proportions(planted.truth, FrameSpec{3, {}});
  for (std::size_t fr = 0; fr < rep.frames; ++fr) {
    double total = 0.0;
    for (std::size_t o = 0; o < rep.classes; ++o) total += rep.at(o, fr);
    if (!rep.inactive_frames[fr]) {
      CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    } else {
      CHECK(total == 0.0);
    }
  }
}

TEST_CASE("fully inactive frames are flagged all-zero") {
  TuckerModel m;
  m.core = BoolTensor3(1, 1, 1);
  m.core.set(0, 0, 0, true);
  m.a = BoolMatrix::from_rows({{1}, {1}});
  m.b = BoolMatrix::from_rows({{1}});
  m.c = BoolMatrix::from_rows({{1}, {1}, {0}, {0}});  // second frame silent
  const auto rep = class_proportions(m, FrameSpec{2, {}});
  REQUIRE(rep.frames == 2);
  CHECK_FALSE(rep.inactive_frames[0]);
  CHECK(rep.inactive_frames[1]);
  CHECK(rep.at(0, 1) == 0.0);
  CHECK(rep.at(1, 1) == 0.0);
}

TEST_CASE("gain_loss arithmetic and guards") {
  ClassProportionReport rep;
  rep.classes = 3;
  rep.frames = 2;
  // class 0: 0.4 -> 0.2 (50% loss); class 1: 0.6 -> 0.8; class 2: new
  rep.proportions = {0.4, 0.2, 0.6, 0.7, 0.0, 0.1};
  rep.inactive_frames = {false, false};
  const auto gl = gain_loss(rep);
  CHECK(gl.classes[0].loss_pct == 50.0);
  CHECK(gl.classes[0].gain_pct == 0.0);
  CHECK(gl.classes[1].gain_pct > 0.0);
  CHECK(gl.classes[1].loss_pct == 0.0);
  CHECK(gl.classes[2].new_class);
  CHECK(gl.classes[2].gain_pct == 0.0);
  CHECK(gl.classes[2].loss_pct == 0.0);

  // gain and loss are mutually exclusive per class
  for (const auto& e : gl.classes) {
    CHECK((e.gain_pct == 0.0 || e.loss_pct == 0.0));
  }

  // identical first and last frames: everything zero
  ClassProportionReport flat;
  flat.classes = 2;
  flat.frames = 3;
  flat.proportions = {0.5, 0.1, 0.5, 0.5, 0.9, 0.5};
  flat.inactive_frames = {false, false, false};
  const auto gl_flat = gain_loss(flat);
  for (const auto& e : gl_flat.classes) {
    CHECK(e.gain_pct == 0.0);
    CHECK(e.loss_pct == 0.0);
    CHECK_FALSE(e.new_class);
  }

  ClassProportionReport one_frame;
  one_frame.classes = 1;
  one_frame.frames = 1;
  one_frame.proportions = {1.0};
  one_frame.inactive_frames = {false};
  CHECK_THROWS_AS(gain_loss(one_frame), InputError);
}

TEST_CASE("gain_loss agrees with an independent recomputation") {
  const auto rep = class_proportions(two_to_one_model(8), FrameSpec{2, {}});
  const auto gl = gain_loss(rep);
  for (std::size_t o = 0; o < rep.classes; ++o) {
    const double first = rep.at(o, 0);
    const double last = rep.at(o, rep.frames - 1);
    if (first == 0.0) continue;
    const double gain = last > first ? 100.0 * (last - first) / first : 0.0;
    const double loss = last < first ? 100.0 * (first - last) / first : 0.0;
    CHECK(gl.classes[o].gain_pct == gain);
    CHECK(gl.classes[o].loss_pct == loss);
  }
}

TEST_CASE("report CSV output is bit-identical for identical inputs") {
  const auto model = two_to_one_model(6);
  const FrameSpec frames{3, {}};
  CHECK(class_proportions(model, frames).to_csv() == class_proportions(model, frames).to_csv());
  CHECK(feature_variance(model, frames).to_csv() == feature_variance(model, frames).to_csv());
  const auto gl = gain_loss(class_proportions(model, frames));
  CHECK(gl.to_csv() == gain_loss(class_proportions(model, frames)).to_csv());

  // pinned headers
  CHECK(feature_variance(model, frames).to_csv().starts_with("object,feature,frame,value\n"));
  CHECK(class_proportions(model, frames).to_csv().starts_with("class,frame,proportion\n"));
  CHECK(gl.to_csv().starts_with("class,gain_pct,loss_pct,new_class\n"));
}
