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

#include <array>
#include <span>
#include <vector>

#include "sirstbench/geometry.h"

namespace sirst {

enum class TargetKind {
  // (l, t, r, b): stride-normalized distances from a point to the box sides.
  kPointDistances,
  // (dx0, dy0, dx1, dy1): stride-normalized corner offsets from a coarse box.
  kCascadeOffsets,
};

struct RegressionTarget {
  TargetKind kind = TargetKind::kPointDistances;
  std::array<double, 4> values{};

  friend bool operator==(const RegressionTarget&,
                         const RegressionTarget&) = default;
};

// A decoded box. `clamped` is set when the raw decode had x0 > x1 or y0 > y1
// and was collapsed to a zero-extent box at the midpoint.
struct DecodedBox {
  BBox box;
  bool clamped = false;
};

RegressionTarget encode_point_box(Point p, const BBox& gt, double stride);
DecodedBox decode_point_box(Point p, const RegressionTarget& target,
                            double stride);

// Per-lattice-point boxes in image coordinates, row-major.
struct BoxGrid {
  int rows = 0;
  int cols = 0;
  std::vector<BBox> boxes;

  const BBox& at(int r, int c) const {
    return boxes[static_cast<std::size_t>(r) * cols + c];
  }
};

// Nearest-neighbour upsampling of a stride-2s box grid onto the stride-s
// lattice: fine point (r, c) takes the box of coarse cell (r / 2, c / 2).
// Throws ValidationError unless ceil(fine / 2) == coarse on both axes.
BoxGrid upsample_boxes(const BoxGrid& coarse, int fine_rows, int fine_cols);

// Refinement offsets of a ground-truth box relative to an upsampled coarse
// box, normalized by the fine stride.
RegressionTarget cascade_encode(const BBox& gt, const BBox& coarse,
                                double stride);
DecodedBox cascade_decode(const BBox& coarse, const RegressionTarget& delta,
                          double stride);

// Final detection score: high-level classification x low-level
// classification x predicted NoCo. Inputs are clamped to [0, 1].
double fuse_scores(double cls_high, double cls_low, double noco);

// Greedy NMS. Candidates are visited by (score desc, input index asc); a
// candidate is dropped when its IoU with any kept box exceeds iou_thresh.
// Output is sorted by score descending.
std::vector<Detection> nms(std::span<const Detection> dets, double iou_thresh);

}  // namespace sirst
