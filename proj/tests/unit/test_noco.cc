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

#include <algorithm>
#include <cmath>

#include "oracles/oracles.h"
#include "sirstbench/error.h"
#include "sirstbench/io/synth.h"
#include "sirstbench/noco.h"
#include "unit/test_util.h"

namespace sirst {
namespace {

GtTarget square_at(double cx, double cy, double side) {
  return {BBox::from_center({cx, cy}, side, side), Point{cx, cy}};
}

TEST(ExtendRegion, BorderEqualsTargetAtGammaOne) {
  const BBox r = extend_region(square_at(50, 50, 4), NoCoConfig{}, 200, 200);
  EXPECT_EQ(r, (BBox{44, 44, 56, 56}));
}

TEST(ExtendRegion, ClippedAtImageCorner) {
  const GtTarget t{{0, 0, 2, 2}, std::nullopt};
  const BBox r = extend_region(t, NoCoConfig{}, 50, 50);
  EXPECT_EQ(r, (BBox{0, 0, 4, 4}));
  EXPECT_LE(r.x0, t.box.x0);
  EXPECT_GE(r.x1, t.box.x1);
}

TEST(ExtendRegion, SmallerGammaWidensBorder) {
  NoCoConfig cfg;
  cfg.gamma = 0.5;
  const GtTarget t{BBox::from_center({100, 100}, 4, 6), std::nullopt};
  const BBox r = extend_region(t, cfg, 300, 300);
  EXPECT_EQ(r.height(), 30.0);
  EXPECT_EQ(r.width(), 20.0);
}

TEST(ExtendRegion, MinBorderAppliesToTinyTargets) {
  const GtTarget t{BBox::from_center({10, 10}, 0.5, 0.5), std::nullopt};
  EXPECT_EQ(extend_region(t, NoCoConfig{}, 40, 40).width(), 2.5);
}

TEST(ExtendRegion, RejectsDegenerateAndOutsideTargets) {
  EXPECT_THROW(extend_region({{5, 5, 5, 8}, std::nullopt}, NoCoConfig{}, 20, 20),
               ValidationError);
  EXPECT_THROW(extend_region({{30, 30, 33, 33}, std::nullopt}, NoCoConfig{}, 20, 20),
               ValidationError);
}

TEST(NoCoConfig, Validation) {
  NoCoConfig cfg;
  cfg.gamma = 0.0;
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg.gamma = 1.5;
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg = NoCoConfig{};
  cfg.sigma_scale = -1;
  EXPECT_THROW(cfg.validate(), ValidationError);
  cfg = NoCoConfig{};
  cfg.min_border = 0.5;
  EXPECT_THROW(cfg.validate(), ValidationError);
}

TEST(TargetNoCo, DeltaTarget) {
  GrayImage img(30, 30, 0.0);
  img(15, 15) = 1.0;
  const NoCoPatch p = target_noco(img, square_at(15.5, 15.5, 1), NoCoConfig{});
  EXPECT_EQ(p.at(15, 15), 1.0f);
  for (int r = p.pixels.row0; r < p.pixels.row0 + p.pixels.rows; ++r) {
    for (int c = p.pixels.col0; c < p.pixels.col0 + p.pixels.cols; ++c) {
      if (r != 15 || c != 15) EXPECT_LT(p.at(r, c), 1.0f);
    }
  }
}

TEST(TargetNoCo, UniformRegionIsAllZero) {
  const GrayImage img(30, 30, 0.4);
  const NoCoPatch p = target_noco(img, square_at(15.5, 15.5, 3), NoCoConfig{});
  for (float v : p.values) EXPECT_EQ(v, 0.0f);
}

TEST(TargetNoCo, GaussianBlobPeaksAtCentre) {
  GrayImage img(41, 41, 0.2);
  const double cx = 20.5, cy = 20.5, sigma = 1.5;
  for (int r = 0; r < 41; ++r) {
    for (int c = 0; c < 41; ++c) {
      const double dx = c + 0.5 - cx, dy = r + 0.5 - cy;
      img(r, c) += 0.6 * std::exp(-(dx * dx + dy * dy) / (2 * sigma * sigma));
    }
  }
  const GtTarget t = square_at(cx, cy, 3 * sigma);
  const NoCoPatch p = target_noco(img, t, NoCoConfig{});
  const auto it = std::max_element(p.values.begin(), p.values.end());
  const std::size_t k = static_cast<std::size_t>(it - p.values.begin());
  EXPECT_EQ(p.pixels.row0 + static_cast<int>(k) / p.pixels.cols, 20);
  EXPECT_EQ(p.pixels.col0 + static_cast<int>(k) % p.pixels.cols, 20);

  const Raster<double> dense = oracle::dense_noco(img, t, NoCoConfig{});
  for (int r = 0; r < 41; ++r) {
    for (int c = 0; c < 41; ++c) {
      const bool in = r >= p.pixels.row0 && r < p.pixels.row0 + p.pixels.rows &&
                      c >= p.pixels.col0 && c < p.pixels.col0 + p.pixels.cols;
      EXPECT_EQ(in, dense(r, c) >= 0.0) << r << "," << c;
      if (in) EXPECT_NEAR(p.at(r, c), dense(r, c), 1e-6);
    }
  }
}

TEST(TargetNoCo, CentroidShiftsTheGaussian) {
  io::Rng rng(5);
  const GrayImage img = testing::random_image(rng, 30, 30);
  GtTarget t{{10, 10, 16, 16}, Point{11.5, 14.5}};
  const NoCoPatch p = target_noco(img, t, NoCoConfig{});
  const Raster<double> dense = oracle::dense_noco(img, t, NoCoConfig{});
  for (int r = p.pixels.row0; r < p.pixels.row0 + p.pixels.rows; ++r) {
    for (int c = p.pixels.col0; c < p.pixels.col0 + p.pixels.cols; ++c) {
      EXPECT_NEAR(p.at(r, c), dense(r, c), 1e-6);
    }
  }
}

TEST(ImageNoCoMap, NoTargetsGivesZeroMap) {
  const GrayImage img(12, 9, 0.3);
  const NoCoMap m = image_noco_map(img, {}, NoCoConfig{});
  for (float v : m.values.data()) EXPECT_EQ(v, 0.0f);
  for (int o : m.owner.data()) EXPECT_EQ(o, -1);
}

TEST(ImageNoCoMap, DisjointTargetsKeepTheirPatches) {
  io::Rng rng(6);
  const GrayImage img = testing::random_image(rng, 60, 60);
  const std::vector<GtTarget> ts{square_at(12.5, 12.5, 3), square_at(45.5, 40.5, 4)};
  const NoCoMap m = image_noco_map(img, ts, NoCoConfig{});
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const NoCoPatch p = target_noco(img, ts[k], NoCoConfig{});
    for (int r = p.pixels.row0; r < p.pixels.row0 + p.pixels.rows; ++r) {
      for (int c = p.pixels.col0; c < p.pixels.col0 + p.pixels.cols; ++c) {
        EXPECT_EQ(m.values(r, c), p.at(r, c));
        EXPECT_EQ(m.owner(r, c), static_cast<int>(k));
      }
    }
  }
}

TEST(ImageNoCoMap, OverlapsMatchDenseTwoPassOracle) {
  io::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const GrayImage img = testing::random_image(rng, 40, 40);
    std::vector<GtTarget> ts;
    for (int k = 0; k < 3; ++k) {
      const double cx = std::floor(rng.uniform(8, 32)) + 0.5;
      const double cy = std::floor(rng.uniform(8, 32)) + 0.5;
      ts.push_back(square_at(cx, cy, std::floor(rng.uniform(2, 7))));
    }
    const NoCoMap m = image_noco_map(img, ts, NoCoConfig{});
    const oracle::DenseMap d = oracle::dense_noco_map(img, ts, NoCoConfig{});
    for (int r = 0; r < 40; ++r) {
      for (int c = 0; c < 40; ++c) {
        EXPECT_NEAR(m.values(r, c), d.value(r, c), 1e-6);
        EXPECT_EQ(m.owner(r, c), d.owner(r, c)) << r << "," << c;
      }
    }
  }
}

TEST(ImageNoCoMap, ZeroOutsideRegionsAndPatchesSpanZeroToOne) {
  io::Rng rng(8);
  const GrayImage img = testing::random_image(rng, 64, 64);
  const std::vector<GtTarget> ts{square_at(10.5, 10.5, 3), square_at(40.5, 30.5, 5),
                                 square_at(55.5, 55.5, 2)};
  const NoCoMap m = image_noco_map(img, ts, NoCoConfig{});
  std::vector<BBox> regions;
  for (const GtTarget& t : ts) {
    regions.push_back(extend_region(t, NoCoConfig{}, 64, 64));
    const NoCoPatch p = target_noco(img, t, NoCoConfig{});
    EXPECT_EQ(*std::max_element(p.values.begin(), p.values.end()), 1.0f);
    EXPECT_EQ(*std::min_element(p.values.begin(), p.values.end()), 0.0f);
  }
  for (int r = 0; r < 64; ++r) {
    for (int c = 0; c < 64; ++c) {
      const bool covered = std::any_of(regions.begin(), regions.end(), [&](const BBox& b) {
        return c + 1 > b.x0 && c < b.x1 && r + 1 > b.y0 && r < b.y1;
      });
      if (!covered) {
        EXPECT_EQ(m.values(r, c), 0.0f);
        EXPECT_EQ(m.owner(r, c), -1);
      }
    }
  }
}

TEST(ImageNoCoMap, AffineIntensityInvariance) {
  io::Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const GrayImage img = testing::random_image(rng, 32, 32);
    const double a = rng.uniform(0.05, 20.0);
    const double b = rng.uniform(-5.0, 5.0);
    std::vector<double> scaled(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) scaled[i] = a * img.data()[i] + b;
    const GrayImage img2(32, 32, scaled);
    std::vector<GtTarget> ts{square_at(std::floor(rng.uniform(6, 26)) + 0.5,
                                       std::floor(rng.uniform(6, 26)) + 0.5, 3)};
    const NoCoMap m1 = image_noco_map(img, ts, NoCoConfig{});
    const NoCoMap m2 = image_noco_map(img2, ts, NoCoConfig{});
    EXPECT_TRUE(m1.values == m2.values) << "trial " << trial;
    EXPECT_TRUE(m1.owner == m2.owner);
  }
}

TEST(ImageNoCoMap, TranslationEquivariance) {
  io::Rng rng(10);
  const GrayImage img = testing::random_image(rng, 48, 48);
  const int dy = 5, dx = 7;
  GrayImage img2(48, 48, 0.0);
  for (int r = 0; r < 48; ++r) {
    for (int c = 0; c < 48; ++c) img2(r, c) = img.clamped(r - dy, c - dx);
  }
  const GtTarget t = square_at(20.5, 18.5, 4);
  const GtTarget t2 = square_at(20.5 + dx, 18.5 + dy, 4);
  const NoCoMap m1 = image_noco_map(img, std::vector<GtTarget>{t}, NoCoConfig{});
  const NoCoMap m2 = image_noco_map(img2, std::vector<GtTarget>{t2}, NoCoConfig{});
  for (int r = 0; r + dy < 48; ++r) {
    for (int c = 0; c + dx < 48; ++c) EXPECT_EQ(m1.values(r, c), m2.values(r + dy, c + dx));
  }
}

TEST(ImageNoCoMap, JobsDoNotChangeTheResult) {
  io::Rng rng(13);
  const GrayImage img = testing::random_image(rng, 64, 64);
  std::vector<GtTarget> ts;
  for (int k = 0; k < 12; ++k) {
    ts.push_back(square_at(std::floor(rng.uniform(4, 60)) + 0.5,
                           std::floor(rng.uniform(4, 60)) + 0.5, 3));
  }
  const NoCoMap a = image_noco_map(img, ts, NoCoConfig{}, 1);
  const NoCoMap b = image_noco_map(img, ts, NoCoConfig{}, 4);
  EXPECT_TRUE(a.values == b.values);
  EXPECT_TRUE(a.owner == b.owner);
}

TEST(ImageNoCoMap, ErrorsNameTheTarget) {
  const GrayImage img(20, 20, 0.0);
  const std::vector<GtTarget> ts{square_at(5.5, 5.5, 2), {{30, 30, 32, 32}, std::nullopt}};
  try {
    image_noco_map(img, ts, NoCoConfig{});
    FAIL() << "expected a ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("target 1"), std::string::npos);
  }
}

TEST(Lookup, ValueAtHotPixelAndOutside) {
  GrayImage img(30, 30, 0.0);
  img(15, 15) = 1.0;
  const NoCoMap m = image_noco_map(img, std::vector<GtTarget>{square_at(15.5, 15.5, 1)},
                                   NoCoConfig{});
  EXPECT_EQ(noco_lookup(m, {15.5, 15.5}), 1.0f);
  EXPECT_EQ(noco_owner(m, {15.5, 15.5}), 0);
  EXPECT_EQ(noco_lookup(m, {-5, -5}), 0.0f);
  EXPECT_EQ(noco_owner(m, {-5, -5}), -1);
  EXPECT_EQ(noco_lookup(m, {30.0, 3.0}), 0.0f);
  EXPECT_EQ(noco_lookup(m, {NAN, 3.0}), 0.0f);
}

TEST(Lookup, ReturnsThePixelContainingThePoint) {
  NoCoMap m{Raster<float>(20, 20, 0.0f), Raster<std::int32_t>(20, 20, -1)};
  for (int r = 0; r < 20; ++r) {
    for (int c = 0; c < 20; ++c) m.values(r, c) = static_cast<float>(100 * r + c);
  }
  // Pixel (row 10, col 10) spans [10, 11) x [10, 11); its centre is (10.5, 10.5).
  EXPECT_EQ(noco_lookup(m, {10.4, 10.6}), 1010.0f);
  EXPECT_EQ(noco_lookup(m, {10.0, 11.0}), 1110.0f);
  EXPECT_EQ(noco_lookup(m, {10.999, 10.999}), 1010.0f);
  EXPECT_EQ(pixel_index(3.5), 3);
  EXPECT_EQ(pixel_index(4.0), 4);
}

}  // namespace
}  // namespace sirst
