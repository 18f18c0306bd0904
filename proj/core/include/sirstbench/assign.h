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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sirstbench/codec.h"
#include "sirstbench/geometry.h"

namespace sirst {

// One pyramid level: lattice stride s and pseudo-box side p = pseudo_factor * s.
struct LevelSpec {
  int stride = 8;
  double pseudo_factor = 1.5;

  double pseudo_size() const { return pseudo_factor * stride; }
  void validate() const;
};

inline constexpr int kNegative = -1;

// Labels and regression targets for every lattice point of one level.
struct AssignmentResult {
  Lattice lattice;
  // Per point: kNegative or the index of the assigned ground-truth target.
  std::vector<int> labels;
  // Per point: (l, t, r, b) of the assigned original ground-truth box;
  // all-zero for negatives.
  std::vector<RegressionTarget> targets;
  std::size_t num_pos = 0;
};

// All-scale pseudo-box: boxes with h * w > p^2 are returned unchanged, all
// others become a p x p box with the same centre (so h * w == p^2 is
// replaced).
BBox pseudo_box(const BBox& gt, const LevelSpec& level);

// Center-based baseline: a point is positive iff it lies inside a ground-truth
// box (half-open). Points inside several boxes go to the smallest-area box,
// then the lowest index. level.pseudo_factor is ignored.
AssignmentResult center_assign(std::span<const GtTarget> gts,
                               const LevelSpec& level, int img_h, int img_w);

// All-scale pseudo-box assignment: every level assigns every target, with
// spatial membership tested against pseudo_box(gt). Regression targets and
// the area tie-break use the original boxes.
std::vector<AssignmentResult> aspb_assign(std::span<const GtTarget> gts,
                                          std::span<const LevelSpec> levels,
                                          int img_h, int img_w);

// Patch-level assignment: a patch [c p, (c+1) p) x [r p, (r+1) p) is
// positive iff it contains a target centroid; the lowest such index wins.
AssignmentResult simplegrid_assign(std::span<const GtTarget> gts, int patch,
                                   int img_h, int img_w);

struct CoverageStats {
  std::size_t targets_total = 0;
  // Targets with no positive point in any of the supplied results.
  std::size_t targets_with_zero_positives = 0;
  std::size_t positives_total = 0;
  std::size_t negatives_total = 0;

  friend bool operator==(const CoverageStats&, const CoverageStats&) = default;
};

CoverageStats coverage_stats(std::size_t num_targets,
                             std::span<const AssignmentResult> results);

}  // namespace sirst
