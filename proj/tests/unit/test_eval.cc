// Copyright 2026 The sirstbench Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "oracles/oracles.h"
#include "sirstbench/error.h"
#include "sirstbench/eval.h"
#include "sirstbench/io/synth.h"
#include "unit/test_util.h"

namespace sirst {
namespace {

Detection det_at(Point c, double score, const std::string& id = "img") {
  return {BBox::from_center(c, 3, 3), score, id};
}

// One image, single hot pixel target: NoCo is 1 at (15, 15).
struct HotPixel {
  GrayImage img{30, 30, 0.0};
  std::vector<GtTarget> gts;
  NoCoMap map;
  HotPixel() {
    img(15, 15) = 1.0;
    gts.push_back({BBox::from_center({15.5, 15.5}, 1, 1), Point{15.5, 15.5}});
    map = image_noco_map(img, gts, NoCoConfig{});
  }
};

TEST(Match, DetectionOnPeakIsTruePositive) {
  HotPixel f;
  const std::vector<Detection> dets{det_at({15.5, 15.5}, 0.7)};
  const MatchResult m = match_detections(dets, f.gts, f.map, 0.9);
  EXPECT_TRUE(m.is_tp[0]);
  EXPECT_TRUE(m.gt_matched[0]);
  EXPECT_EQ(m.noco[0], 1.0f);
}

TEST(Match, DuplicateIsFalsePositive) {
  HotPixel f;
  const std::vector<Detection> dets{det_at({15.5, 15.5}, 0.6), det_at({15.7, 15.2}, 0.9)};
  const MatchResult m = match_detections(dets, f.gts, f.map, 0.5);
  EXPECT_FALSE(m.is_tp[0]);
  EXPECT_TRUE(m.is_tp[1]);
  EXPECT_EQ(m.order, (std::vector<std::size_t>{1, 0}));
}

TEST(Match, AgreesWithBruteForceMatcher) {
  io::Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const GrayImage img = testing::random_image(rng, 32, 32);
    // Two targets with overlapping extended regions.
    const std::vector<GtTarget> gts{
        {BBox::from_center({12.5, 14.5}, 3, 3), Point{12.5, 14.5}},
        {BBox::from_center({16.5, 15.5}, 4, 4), Point{16.5, 15.5}}};
    const NoCoMap map = image_noco_map(img, gts, NoCoConfig{});
    const oracle::DenseMap dense = oracle::dense_noco_map(img, gts, NoCoConfig{});
    std::vector<Detection> dets;
    const int n = 3 + static_cast<int>(rng.uniform() * 3);
    for (int k = 0; k < n; ++k) {
      // Coarse scores force ties now and then.
      dets.push_back(det_at({rng.uniform(8, 22), rng.uniform(9, 21)},
                            std::floor(rng.uniform(0, 4)) / 4.0));
    }
    for (double delta : {0.1, 0.5, 0.9}) {
      const MatchResult m = match_detections(dets, gts, map, delta);
      EXPECT_EQ(m.is_tp, oracle::brute_force_match(dets, dense, gts.size(), delta))
          << "trial " << trial << " delta " << delta;
    }
  }
}

TEST(Match, CentreOutsideImageNeverMatches) {
  HotPixel f;
  const std::vector<Detection> dets{{{-4, -4, -1, -1}, 0.9, "img"}};
  EXPECT_FALSE(match_detections(dets, f.gts, f.map, 0.1).is_tp[0]);
}

TEST(AveragePrecision, HandComputedCases) {
  EXPECT_DOUBLE_EQ(average_precision({true}, 1), 1.0);
  EXPECT_DOUBLE_EQ(average_precision({false, true}, 1), 0.5);
  EXPECT_NEAR(average_precision({true, false, true}, 2), (1.0 + 2.0 / 3.0) / 2.0, 1e-15);
  EXPECT_NEAR(average_precision({true, false, true}, 2), 0.8333333333333333, 1e-15);
  EXPECT_EQ(average_precision({}, 3), 0.0);
  EXPECT_EQ(average_precision({false, false}, 3), 0.0);
  EXPECT_THROW(average_precision({true}, 0), ValidationError);
}

TEST(AveragePrecision, AgreesWithEnvelopeOracle) {
  io::Rng rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform() * 30);
    std::vector<bool> flags(n);
    std::size_t tp = 0;
    for (std::size_t i = 0; i < n; ++i) tp += (flags[i] = rng.uniform() < 0.5);
    const std::size_t num_gt = tp + static_cast<std::size_t>(rng.uniform() * 4) + (tp == 0);
    EXPECT_NEAR(average_precision(flags, num_gt), oracle::reference_ap(flags, num_gt), 1e-12);
  }
}

TEST(PrecisionRecall, Points) {
  const auto pr = precision_recall({true, false, true}, 4);
  ASSERT_EQ(pr.size(), 3u);
  EXPECT_DOUBLE_EQ(pr[1].precision, 0.5);
  EXPECT_DOUBLE_EQ(pr[2].recall, 0.5);
}

TEST(EvalConfig, Validation) {
  EvalConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.deltas = {};
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg.deltas = {0.5, 0.3};
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg.deltas = {0.0, 0.5};
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg.deltas = {0.5, 1.0};
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg = EvalConfig{};
  cfg.max_dets_per_image = 0;
  EXPECT_THROW(cfg.validate(), ValidationError);
}

// Detections near each centroid plus clutter, with random scores.
std::vector<EvalImage> noisy_dataset(std::uint64_t seed, int count) {
  io::Rng rng(seed);
  std::vector<EvalImage> out;
  for (int i = 0; i < count; ++i) {
    io::SceneSpec spec = io::easy_spec(seed, i);
    spec.height = spec.width = 96;
    spec.sigma_max = 1.6;
    const io::Scene scene = io::synth_scene(spec);
    EvalImage e{"img" + std::to_string(i), scene.image, scene.targets, {}};
    for (const GtTarget& t : scene.targets) {
      const Point c = *t.centroid;
      const int copies = static_cast<int>(rng.uniform() * 3);
      for (int k = 0; k < copies; ++k) {
        e.detections.push_back(det_at({c.x + rng.uniform(-2.5, 2.5), c.y + rng.uniform(-2.5, 2.5)},
                                      rng.uniform(), e.image_id));
      }
    }
    for (int k = 0; k < 4; ++k) {
      e.detections.push_back(det_at({rng.uniform(0, 96), rng.uniform(0, 96)}, rng.uniform(), e.image_id));
    }
    out.push_back(std::move(e));
  }
  return out;
}

TEST(Mnocoap, PerfectDetectionsScoreOne) {
  std::vector<EvalImage> ds;
  for (const io::Scene& s : io::easy_suite(3, 4)) {
    EvalImage e{"s" + std::to_string(ds.size()), s.image, s.targets, {}};
    for (const GtTarget& t : s.targets) e.detections.push_back(det_at(*t.centroid, 0.9, e.image_id));
    ds.push_back(std::move(e));
  }
  const EvalReport r = mnocoap(ds, EvalConfig{});
  EXPECT_NEAR(r.mnocoap, 1.0, 1e-12);
  for (const DeltaResult& d : r.per_delta) {
    EXPECT_EQ(d.fp, 0u);
    EXPECT_EQ(d.fn, 0u);
  }
}

TEST(Mnocoap, NoDetectionsScoreZero) {
  std::vector<EvalImage> ds;
  for (const io::Scene& s : io::easy_suite(3, 2)) ds.push_back({"s" + std::to_string(ds.size()), s.image, s.targets, {}});
  EXPECT_EQ(mnocoap(ds, EvalConfig{}).mnocoap, 0.0);
}

TEST(Mnocoap, NoTargetsIsAnError) {
  std::vector<EvalImage> ds{{"a", GrayImage(10, 10, 0.0), {}, {}}};
  EXPECT_THROW(mnocoap(ds, EvalConfig{}), ValidationError);
  EXPECT_THROW(mnocoap({}, EvalConfig{}), ValidationError);
}

TEST(Mnocoap, MatchesSlowReferenceEvaluator) {
  const std::vector<EvalImage> ds = noisy_dataset(31, 20);
  const EvalReport r = mnocoap(ds, EvalConfig{});
  EXPECT_NEAR(r.mnocoap, oracle::reference_mnocoap(ds, EvalConfig{}), 1e-9);
  EXPECT_GT(r.mnocoap, 0.0);
  EXPECT_LT(r.mnocoap, 1.0);
}

TEST(Mnocoap, ApNonIncreasingInDelta) {
  for (std::uint64_t seed = 40; seed < 60; ++seed) {
    const EvalReport r = mnocoap(noisy_dataset(seed, 3), EvalConfig{});
    for (std::size_t d = 1; d < r.per_delta.size(); ++d) {
      EXPECT_LE(r.per_delta[d].ap, r.per_delta[d - 1].ap);
    }
  }
}

TEST(Mnocoap, ScoreScalingLeavesReportUnchanged) {
  std::vector<EvalImage> ds = noisy_dataset(32, 5);
  const EvalReport a = mnocoap(ds, EvalConfig{});
  for (EvalImage& e : ds) {
    for (Detection& d : e.detections) d.score *= 0.5;
  }
  const EvalReport b = mnocoap(ds, EvalConfig{});
  EXPECT_EQ(a.mnocoap, b.mnocoap);
  for (std::size_t d = 0; d < a.per_delta.size(); ++d) {
    EXPECT_EQ(a.per_delta[d].ap, b.per_delta[d].ap);
    EXPECT_EQ(a.per_delta[d].tp, b.per_delta[d].tp);
  }
}

TEST(Mnocoap, LowScoreFalsePositiveNeverHelps) {
  std::vector<EvalImage> ds = noisy_dataset(33, 5);
  const EvalReport a = mnocoap(ds, EvalConfig{});
  ds[2].detections.push_back({{0, 0, 2, 2}, 0.0, ds[2].image_id});
  const EvalReport b = mnocoap(ds, EvalConfig{});
  for (std::size_t d = 0; d < a.per_delta.size(); ++d) {
    EXPECT_LE(b.per_delta[d].ap, a.per_delta[d].ap);
  }
}

TEST(Mnocoap, LowScoreTruePositiveNeverHurts) {
  std::vector<EvalImage> ds = noisy_dataset(34, 5);
  // Remove every detection of one target so a late TP can add recall.
  EvalImage& e = ds[1];
  const Point c = *e.targets[0].centroid;
  std::erase_if(e.detections, [&](const Detection& d) {
    return std::abs(d.box.center().x - c.x) < 6 && std::abs(d.box.center().y - c.y) < 6;
  });
  const EvalReport a = mnocoap(ds, EvalConfig{});
  e.detections.push_back(det_at(c, 0.0, e.image_id));
  const EvalReport b = mnocoap(ds, EvalConfig{});
  for (std::size_t d = 0; d < a.per_delta.size(); ++d) {
    EXPECT_GE(b.per_delta[d].ap, a.per_delta[d].ap);
  }
}

TEST(Mnocoap, ParallelEqualsSerial) {
  const std::vector<EvalImage> ds = noisy_dataset(35, 12);
  const EvalReport a = mnocoap(ds, EvalConfig{}, 1);
  const EvalReport b = mnocoap(ds, EvalConfig{}, 4);
  EXPECT_EQ(a.mnocoap, b.mnocoap);
  for (std::size_t d = 0; d < a.per_delta.size(); ++d) {
    EXPECT_EQ(a.per_delta[d].ap, b.per_delta[d].ap);
  }
}

TEST(Mnocoap, EqualScoresRankByImageIdThenIndex) {
  // Two images whose only TP carries the same score as an FP elsewhere;
  // the pooled order must be by image id, so the result is fixed.
  HotPixel f;
  std::vector<EvalImage> ds{
      {"b", f.img, f.gts, {det_at({15.5, 15.5}, 0.5, "b")}},
      {"a", f.img, f.gts, {det_at({2.5, 2.5}, 0.5, "a")}}};
  EvalConfig cfg;
  cfg.deltas = {0.5};
  // "a" (FP) ranks before "b" (TP): precision 1/2 at recall 1/2.
  EXPECT_DOUBLE_EQ(mnocoap(ds, cfg).mnocoap, 0.25);
  std::swap(ds[0], ds[1]);
  EXPECT_DOUBLE_EQ(mnocoap(ds, cfg).mnocoap, 0.25);
}

TEST(Mnocoap, DetectionCapKeepsHighestScores) {
  HotPixel f;
  EvalImage e{"img", f.img, f.gts, {}};
  for (int k = 0; k < 150; ++k) e.detections.push_back(det_at({2.5, 2.5}, 0.5 + k / 1000.0));
  e.detections.push_back(det_at({15.5, 15.5}, 0.1));
  EvalConfig cfg;
  EXPECT_EQ(mnocoap(std::vector<EvalImage>{e}, cfg).mnocoap, 0.0);
  cfg.max_dets_per_image = 200;
  EXPECT_GT(mnocoap(std::vector<EvalImage>{e}, cfg).mnocoap, 0.0);
}

}  // namespace
}  // namespace sirst
