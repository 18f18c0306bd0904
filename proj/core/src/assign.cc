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

#include "sirstbench/assign.h"

#include <algorithm>
#include <cmath>

#include "sirstbench/error.h"

namespace sirst {

void LevelSpec::validate() const {
  if (stride < 1) throw ValidationError("level stride must be >= 1");
  if (!(pseudo_factor >= 1.0) || !std::isfinite(pseudo_factor)) {
    throw ValidationError("pseudo_factor must be >= 1");
  }
}

BBox pseudo_box(const BBox& gt, const LevelSpec& level) {
  const double p = level.pseudo_size();
  if (gt.area() > p * p) return gt;
  return BBox::from_center(gt.center(), p, p);
}

namespace {

// Shared by the center-based and pseudo-box schemes: `spatial[i]` decides
// membership, `original[i]` supplies the regression target and tie-break area.
AssignmentResult assign_points(std::span<const BBox> spatial,
                               std::span<const BBox> original,
                               const Lattice& lattice) {
  AssignmentResult out;
  out.lattice = lattice;
  out.labels.assign(lattice.size(), kNegative);
  out.targets.assign(lattice.size(), RegressionTarget{});

  std::vector<double> best_area(lattice.size(), 0.0);
  for (std::size_t g = 0; g < spatial.size(); ++g) {
    const BBox& box = spatial[g];
    // Only cells whose centre can fall inside the box are visited.
    const int s = lattice.stride;
    const int c_lo = std::max(0, static_cast<int>(std::floor(box.x0 / s - 0.5)));
    const int c_hi = std::min(lattice.cols - 1, static_cast<int>(std::ceil(box.x1 / s - 0.5)));
    const int r_lo = std::max(0, static_cast<int>(std::floor(box.y0 / s - 0.5)));
    const int r_hi = std::min(lattice.rows - 1, static_cast<int>(std::ceil(box.y1 / s - 0.5)));
    const double area = original[g].area();
    for (int r = r_lo; r <= r_hi; ++r) {
      for (int c = c_lo; c <= c_hi; ++c) {
        if (!box.contains(lattice.point(r, c))) continue;
        const std::size_t idx = static_cast<std::size_t>(r) * lattice.cols + c;
        if (out.labels[idx] == kNegative || area < best_area[idx]) {
          out.labels[idx] = static_cast<int>(g);
          best_area[idx] = area;
        }
      }
    }
  }

  for (std::size_t idx = 0; idx < out.labels.size(); ++idx) {
    if (out.labels[idx] == kNegative) continue;
    ++out.num_pos;
    out.targets[idx] = encode_point_box(lattice.point(idx), original[out.labels[idx]],
                                        lattice.stride);
  }
  return out;
}

std::vector<BBox> boxes_of(std::span<const GtTarget> gts) {
  std::vector<BBox> boxes;
  boxes.reserve(gts.size());
  for (const auto& g : gts) boxes.push_back(g.box);
  return boxes;
}

}  // namespace

AssignmentResult center_assign(std::span<const GtTarget> gts,
                               const LevelSpec& level, int img_h, int img_w) {
  const std::vector<BBox> boxes = boxes_of(gts);
  return assign_points(boxes, boxes, Lattice::for_image(level.stride, img_h, img_w));
}

std::vector<AssignmentResult> aspb_assign(std::span<const GtTarget> gts,
                                          std::span<const LevelSpec> levels,
                                          int img_h, int img_w) {
  if (levels.empty()) throw ValidationError("at least one level is required");
  const std::vector<BBox> original = boxes_of(gts);
  std::vector<AssignmentResult> results;
  results.reserve(levels.size());
  for (const LevelSpec& level : levels) {
    level.validate();
    std::vector<BBox> spatial;
    spatial.reserve(original.size());
    for (const BBox& b : original) spatial.push_back(pseudo_box(b, level));
    results.push_back(assign_points(
        spatial, original, Lattice::for_image(level.stride, img_h, img_w)));
  }
  return results;
}

AssignmentResult simplegrid_assign(std::span<const GtTarget> gts, int patch,
                                   int img_h, int img_w) {
  const Lattice lattice = Lattice::for_image(patch, img_h, img_w);
  AssignmentResult out;
  out.lattice = lattice;
  out.labels.assign(lattice.size(), kNegative);
  out.targets.assign(lattice.size(), RegressionTarget{});
  for (std::size_t g = 0; g < gts.size(); ++g) {
    const Point p = gts[g].centroid_or_center();
    if (!(p.x >= 0.0 && p.y >= 0.0)) continue;
    const int c = static_cast<int>(std::floor(p.x / patch));
    const int r = static_cast<int>(std::floor(p.y / patch));
    if (r >= lattice.rows || c >= lattice.cols) continue;
    const std::size_t idx = static_cast<std::size_t>(r) * lattice.cols + c;
    if (out.labels[idx] != kNegative) continue;
    out.labels[idx] = static_cast<int>(g);
    out.targets[idx] = encode_point_box(lattice.point(idx), gts[g].box, patch);
    ++out.num_pos;
  }
  return out;
}

CoverageStats coverage_stats(std::size_t num_targets,
                             std::span<const AssignmentResult> results) {
  CoverageStats stats;
  stats.targets_total = num_targets;
  std::vector<bool> covered(num_targets, false);
  for (const AssignmentResult& res : results) {
    for (int label : res.labels) {
      if (label == kNegative) {
        ++stats.negatives_total;
        continue;
      }
      ++stats.positives_total;
      if (static_cast<std::size_t>(label) < num_targets) covered[label] = true;
    }
  }
  stats.targets_with_zero_positives =
      static_cast<std::size_t>(std::count(covered.begin(), covered.end(), false));
  return stats;
}

}  // namespace sirst
