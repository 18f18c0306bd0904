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

#include "oracles/oracles.h"
#include "sirstbench/assign.h"
#include "sirstbench/error.h"
#include "unit/test_util.h"

namespace sirst {
namespace {

std::vector<GtTarget> random_squares(std::uint64_t seed, int n, int lo, int hi, int img) {
  io::Rng rng(seed);
  std::vector<GtTarget> out;
  for (int i = 0; i < n; ++i) out.push_back({testing::random_square(rng, lo, hi, img, img), std::nullopt});
  return out;
}

std::size_t positives_of(const AssignmentResult& r, int target) {
  return static_cast<std::size_t>(std::count(r.labels.begin(), r.labels.end(), target));
}

TEST(PseudoBox, SmallTargetInflatedToPseudoSize) {
  const BBox b = pseudo_box({10, 10, 13, 13}, LevelSpec{8, 1.5});
  EXPECT_EQ(b, (BBox{5.5, 5.5, 17.5, 17.5}));
}

TEST(PseudoBox, LargeTargetUnchanged) {
  const BBox gt{0, 0, 20, 20};
  EXPECT_EQ(pseudo_box(gt, LevelSpec{8, 1.5}), gt);
}

TEST(PseudoBox, AreaEqualToPseudoAreaIsReplaced) {
  // 9 x 16 has area 144 = 12^2, so the strict inequality replaces it.
  const BBox b = pseudo_box({0, 0, 9, 16}, LevelSpec{8, 1.5});
  EXPECT_EQ(b, (BBox{-1.5, 2, 10.5, 14}));
}

TEST(LevelSpec, Validation) {
  EXPECT_THROW((LevelSpec{0, 1.5}).validate(), ValidationError);
  EXPECT_THROW((LevelSpec{8, 0.5}).validate(), ValidationError);
  EXPECT_THROW(aspb_assign({}, {}, 32, 32), ValidationError);
}

TEST(CenterAssign, OffLatticeSmallTargetHasNoPositives) {
  // Stride-8 points sit at 4, 12, 20, ...; [5, 8) x [5, 8) contains none.
  const std::vector<GtTarget> gts{{{5, 5, 8, 8}, std::nullopt}};
  const AssignmentResult r = center_assign(gts, LevelSpec{8}, 32, 32);
  EXPECT_EQ(r.num_pos, 0u);
  EXPECT_EQ(coverage_stats(1, std::vector<AssignmentResult>{r}).targets_with_zero_positives, 1u);
}

TEST(CenterAssign, LargeTargetOnLatticeHasPositives) {
  const std::vector<GtTarget> gts{{BBox::from_center({12, 12}, 16, 16), std::nullopt}};
  EXPECT_GE(center_assign(gts, LevelSpec{8}, 64, 64).num_pos, 1u);
}

TEST(CenterAssign, MatchesBruteForce) {
  const auto gts = random_squares(51, 500, 2, 20, 128);
  for (int s : {4, 8, 16}) {
    // Assign in small batches so conflicts occur but do not saturate.
    for (std::size_t b = 0; b < gts.size(); b += 10) {
      const std::vector<GtTarget> batch(gts.begin() + b, gts.begin() + b + 10);
      const AssignmentResult r = center_assign(batch, LevelSpec{s}, 128, 128);
      EXPECT_EQ(r.labels, oracle::brute_force_labels(batch, LevelSpec{s}, 128, 128, false));
    }
  }
}

TEST(CenterAssign, EqualsPseudoAssignmentWhenPseudoSizeIsTheTargetSize) {
  for (int side : {8, 12, 16}) {
    const auto gts = random_squares(52 + side, 50, side, side, 96);
    for (int s : {4, 8}) {
      const LevelSpec level{s, static_cast<double>(side) / s};
      for (const GtTarget& g : gts) {
        const std::vector<GtTarget> one{g};
        const AssignmentResult a = center_assign(one, level, 96, 96);
        const AssignmentResult b = aspb_assign(one, std::vector<LevelSpec>{level}, 96, 96)[0];
        EXPECT_EQ(a.labels, b.labels);
      }
    }
  }
}

TEST(CenterAssign, ConflictsGoToSmallerThenLowerIndex) {
  const std::vector<GtTarget> gts{{{0, 0, 16, 16}, std::nullopt},
                                  {{2, 2, 10, 10}, std::nullopt},
                                  {{2, 2, 10, 10}, std::nullopt}};
  const AssignmentResult r = center_assign(gts, LevelSpec{4}, 16, 16);
  // Point (6, 6) is inside all three; the smaller boxes tie, index 1 wins.
  EXPECT_EQ(r.labels[1 * 4 + 1], 1);
  EXPECT_EQ(r.labels[3 * 4 + 3], 0);
  EXPECT_EQ(positives_of(r, 2), 0u);
}

TEST(Aspb, GuaranteeAtPseudoSizeEqualToStride) {
  for (int s : {4, 8, 16}) {
    const auto gts = random_squares(60 + s, 2000, 2, 12, 256);
    const std::vector<LevelSpec> levels{{s, 1.0}};
    for (const GtTarget& g : gts) {
      const std::vector<GtTarget> one{g};
      EXPECT_GE(aspb_assign(one, levels, 256, 256)[0].num_pos, 1u);
    }
  }
}

TEST(Aspb, EmptyTargetListIsAllNegative) {
  const std::vector<LevelSpec> levels{{4, 1.5}, {8, 1.5}};
  for (const AssignmentResult& r : aspb_assign({}, levels, 40, 40)) {
    EXPECT_EQ(r.num_pos, 0u);
    EXPECT_TRUE(std::all_of(r.labels.begin(), r.labels.end(), [](int l) { return l == kNegative; }));
  }
}

TEST(Aspb, MatchesBruteForceOnThousandBoxSuite) {
  const auto gts = random_squares(53, 1000, 2, 12, 160);
  const std::vector<LevelSpec> levels{{4, 1.5}, {8, 1.5}, {16, 1.5}};
  for (std::size_t b = 0; b < gts.size(); b += 8) {
    const std::vector<GtTarget> batch(gts.begin() + b, gts.begin() + b + 8);
    const auto results = aspb_assign(batch, levels, 160, 160);
    for (std::size_t l = 0; l < levels.size(); ++l) {
      EXPECT_EQ(results[l].labels, oracle::brute_force_labels(batch, levels[l], 160, 160, true));
    }
  }
}

TEST(Aspb, RegressionTargetsUseTheOriginalBox) {
  const BBox gt{10, 10, 13, 13};
  const std::vector<GtTarget> gts{{gt, std::nullopt}};
  const AssignmentResult r = aspb_assign(gts, std::vector<LevelSpec>{{8, 1.5}}, 32, 32)[0];
  ASSERT_GE(r.num_pos, 1u);
  for (std::size_t i = 0; i < r.labels.size(); ++i) {
    if (r.labels[i] == kNegative) {
      EXPECT_EQ(r.targets[i].values, (std::array<double, 4>{0, 0, 0, 0}));
      continue;
    }
    const DecodedBox d = decode_point_box(r.lattice.point(i), r.targets[i], 8);
    EXPECT_NEAR(d.box.x0, gt.x0, 1e-12);
    EXPECT_NEAR(d.box.y1, gt.y1, 1e-12);
  }
}

TEST(Aspb, PositivesGrowWithPseudoSize) {
  const auto gts = random_squares(54, 500, 2, 12, 128);
  for (const GtTarget& g : gts) {
    const std::vector<GtTarget> one{g};
    std::vector<int> prev;
    for (double f : {1.0, 1.25, 1.5, 2.0, 3.0}) {
      const auto labels = aspb_assign(one, std::vector<LevelSpec>{{8, f}}, 128, 128)[0].labels;
      for (std::size_t i = 0; i < prev.size(); ++i) {
        if (prev[i] != kNegative) EXPECT_NE(labels[i], kNegative);
      }
      prev = labels;
    }
  }
}

TEST(Aspb, ElongatedTargetNarrowerThanStrideCanMissEveryPoint) {
  // Area 18 > 4^2 keeps the raw box, whose x-extent [6.5, 8.5) falls between
  // the stride-4 columns at x = 6 and x = 10.
  const std::vector<GtTarget> gts{{{6.5, 0, 8.5, 9}, std::nullopt}};
  EXPECT_EQ(aspb_assign(gts, std::vector<LevelSpec>{{4, 1.0}}, 32, 32)[0].num_pos, 0u);
}

TEST(Schemes, TranslationByWholeCellsShiftsLabels) {
  const auto gts = random_squares(55, 6, 2, 12, 64);
  const int s = 8, k = 2;
  std::vector<GtTarget> moved;
  for (const GtTarget& g : gts) {
    moved.push_back({{g.box.x0 + k * s, g.box.y0 + k * s, g.box.x1 + k * s, g.box.y1 + k * s},
                     std::nullopt});
  }
  const std::vector<LevelSpec> levels{{s, 1.5}};
  const AssignmentResult a = aspb_assign(gts, levels, 128, 128)[0];
  const AssignmentResult b = aspb_assign(moved, levels, 128, 128)[0];
  const AssignmentResult c = center_assign(gts, levels[0], 128, 128);
  const AssignmentResult d = center_assign(moved, levels[0], 128, 128);
  const int cols = a.lattice.cols;
  for (int r = 0; r + k < a.lattice.rows; ++r) {
    for (int cc = 0; cc + k < cols; ++cc) {
      EXPECT_EQ(a.labels[r * cols + cc], b.labels[(r + k) * cols + cc + k]);
      EXPECT_EQ(c.labels[r * cols + cc], d.labels[(r + k) * cols + cc + k]);
    }
  }
}

TEST(SimpleGrid, CentroidOnPatchCornerHitsExactlyOnePatch) {
  const std::vector<GtTarget> gts{{{6, 6, 10, 10}, Point{8, 8}}};
  const AssignmentResult r = simplegrid_assign(gts, 8, 32, 32);
  EXPECT_EQ(r.num_pos, 1u);
  EXPECT_EQ(r.labels[1 * 4 + 1], 0);
}

TEST(SimpleGrid, NoTargetsAllNegative) {
  EXPECT_EQ(simplegrid_assign({}, 8, 32, 32).num_pos, 0u);
}

TEST(SimpleGrid, MatchesPatchScan) {
  io::Rng rng(56);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<GtTarget> gts;
    for (int k = 0; k < 6; ++k) {
      const BBox b = testing::random_square(rng, 2, 10, 64, 64);
      gts.push_back({b, Point{rng.uniform(b.x0, b.x1), rng.uniform(b.y0, b.y1)}});
    }
    const int p = 8;
    const AssignmentResult r = simplegrid_assign(gts, p, 64, 64);
    for (int pr = 0; pr < 8; ++pr) {
      for (int pc = 0; pc < 8; ++pc) {
        int expect = kNegative;
        for (std::size_t g = 0; g < gts.size(); ++g) {
          const Point c = *gts[g].centroid;
          if (c.x >= pc * p && c.x < (pc + 1) * p && c.y >= pr * p && c.y < (pr + 1) * p) {
            expect = static_cast<int>(g);
            break;
          }
        }
        EXPECT_EQ(r.labels[pr * 8 + pc], expect);
      }
    }
  }
}

TEST(Coverage, CenterMislabelsAndAspbDoesNotOnSuite) {
  const auto gts = random_squares(57, 1000, 2, 12, 256);
  std::size_t oracle_zero = 0;
  std::size_t center_zero = 0;
  std::size_t aspb_zero = 0;
  for (const GtTarget& g : gts) {
    const std::vector<GtTarget> one{g};
    const auto labels = oracle::brute_force_labels(one, LevelSpec{8}, 256, 256, false);
    oracle_zero += std::none_of(labels.begin(), labels.end(), [](int l) { return l == 0; });
    const std::vector<AssignmentResult> c{center_assign(one, LevelSpec{8}, 256, 256)};
    center_zero += coverage_stats(1, c).targets_with_zero_positives;
    const auto a = aspb_assign(one, std::vector<LevelSpec>{{8, 1.0}}, 256, 256);
    aspb_zero += coverage_stats(1, a).targets_with_zero_positives;
  }
  EXPECT_EQ(center_zero, oracle_zero);
  EXPECT_EQ(aspb_zero, 0u);
  EXPECT_GT(center_zero, 0u);
}

TEST(Coverage, CountsPositivesAndNegativesAcrossLevels) {
  const std::vector<GtTarget> gts{{{0, 0, 16, 16}, std::nullopt}, {{5, 5, 8, 8}, std::nullopt}};
  const std::vector<AssignmentResult> rs{center_assign(gts, LevelSpec{8}, 16, 16),
                                         center_assign(gts, LevelSpec{4}, 16, 16)};
  const CoverageStats s = coverage_stats(2, rs);
  EXPECT_EQ(s.targets_total, 2u);
  EXPECT_EQ(s.positives_total + s.negatives_total, 4u + 16u);
  // Target 1 contains the stride-4 point (6, 6).
  EXPECT_EQ(s.targets_with_zero_positives, 0u);
}

}  // namespace
}  // namespace sirst
