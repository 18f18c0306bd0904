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

#include <span>

#include "sirstbench/assign.h"
#include "sirstbench/geometry.h"

namespace sirst {

// Forward values of the detector's training objective. No gradients.

struct LossConfig {
  double focal_alpha = 0.25;
  double focal_gamma = 2.0;
  double qfl_beta = 2.0;
  // Weight of the NoCo-branch term.
  double lambda = 1.0;

  // Alternative NoCo weight selected by the lambda ablation.
  static constexpr double kAblationLambda = 1e3;

  void validate() const;
};

// Predictions are clamped to [1e-12, 1 - 1e-12] inside the logs only; the
// modulating factors use the prediction clamped to [0, 1].
inline constexpr double kProbClamp = 1e-12;

// Sigmoid focal loss for one binary prediction:
//   label 1: -alpha (1 - p)^gamma ln p
//   label 0: -(1 - alpha) p^gamma ln(1 - p)
double focal_loss(double pred, bool label, const LossConfig& cfg);

// 1 - IoU.
double iou_loss(const BBox& pred, const BBox& gt);

// Quality focal loss: -|y - p|^beta (y ln p + (1 - y) ln(1 - p)).
double quality_focal_loss(double pred, double quality, const LossConfig& cfg);

// One prediction head over an assignment lattice. `cls` and `boxes` are
// per-point, row-major, and must match assignment.labels in length.
struct HeadInput {
  std::span<const double> cls;
  std::span<const BBox> boxes;
  const AssignmentResult* assignment = nullptr;
};

// Per-point NoCo predictions and targets on the low-level lattice.
struct NoCoInput {
  std::span<const double> pred;
  std::span<const double> target;
};

struct LossBreakdown {
  double cls_high = 0.0;
  double reg_high = 0.0;
  double cls_low = 0.0;
  double reg_low = 0.0;
  // Already multiplied by lambda.
  double noco = 0.0;
  double total = 0.0;
  std::size_t num_pos_high = 0;
  std::size_t num_pos_low = 0;
  // Set when a head had no positives and its normalizer fell back to 1.
  bool high_no_positives = false;
  bool low_no_positives = false;
};

// Two-head objective:
//   1/N_h sum[cls_h + 1{pos} reg_h] + 1/N_l sum[cls_l + 1{pos} reg_l]
//   + lambda * L_noco
// L_noco is the quality focal loss summed over low-level positives and
// divided by N_l. The regression target at a positive point is its assigned
// ground-truth box. Throws ValidationError if any grid length disagrees.
LossBreakdown total_loss(const HeadInput& high, const HeadInput& low,
                         const NoCoInput& noco, const LossConfig& cfg);

// Deterministic pairwise-tree sum.
double pairwise_sum(std::span<const double> values);

}  // namespace sirst
