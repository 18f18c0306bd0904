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

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "sirstbench/geometry.h"
#include "sirstbench/image.h"

namespace sirst {

// Normalized-contrast (NoCo) ground-truth maps.
//
// For a target box T = (cx, cy, h_t, w_t) the contrast is evaluated over the
// extended region R = (cx, cy, h_t + 2 h_b, w_t + 2 w_b) with
// h_t = gamma * h_b and w_t = gamma * w_b:
//
//   C_i = R_i - min(R)
//   n_i = (C_i G_i - min(C G)) / (max(C G) - min(C G))
//
// where G is a 2-D Gaussian centred at the target centroid. Pixels outside
// every extended region are 0, so the map works as a lookup table for the
// localization quality of a predicted box centre.

struct NoCoConfig {
  // Border ratio in (0, 1]; the border is h_t / gamma.
  double gamma = 1.0;
  // Gaussian sigma as a fraction of the region half-extent, per axis.
  double sigma_scale = 0.5;
  // Lower bound on h_b and w_b, pixels.
  double min_border = 1.0;

  // Throws ValidationError when out of range.
  void validate() const;
};

// Integer pixel window [row0, row0 + rows) x [col0, col0 + cols).
struct PixelRect {
  int row0 = 0;
  int col0 = 0;
  int rows = 0;
  int cols = 0;

  std::size_t size() const {
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
};

// NoCo values of one target over the pixels of its extended region.
struct NoCoPatch {
  BBox region;      // clipped extended region, continuous coordinates
  PixelRect pixels; // pixels overlapping `region`
  std::vector<float> values;  // row-major over `pixels`

  float at(int r, int c) const {
    return values[static_cast<std::size_t>(r - pixels.row0) *
                      static_cast<std::size_t>(pixels.cols) +
                  static_cast<std::size_t>(c - pixels.col0)];
  }
};

// Per-image NoCo lookup table. `owner` holds the index of the target whose
// patch attains the maximum at each pixel (lowest index on ties), or -1
// outside every extended region.
struct NoCoMap {
  Raster<float> values;
  Raster<std::int32_t> owner;

  int height() const { return values.height(); }
  int width() const { return values.width(); }
};

// Extended region R of `target`, clipped to the image. Throws
// ValidationError if the box has no positive area or does not overlap the
// image.
BBox extend_region(const GtTarget& target, const NoCoConfig& cfg, int img_h,
                   int img_w);

NoCoPatch target_noco(const GrayImage& img, const GtTarget& target,
                      const NoCoConfig& cfg);

// Pixelwise maximum over all target patches, zero elsewhere. Per-target
// failures are rethrown with the target index in the message.
NoCoMap image_noco_map(const GrayImage& img, std::span<const GtTarget> targets,
                       const NoCoConfig& cfg, int jobs = 1);

// Index of the pixel containing coordinate v, i.e. the nearest pixel centre
// (centres sit at k + 0.5; ties go to the higher index).
inline int pixel_index(double v) { return static_cast<int>(std::floor(v)); }

// Nearest-pixel lookup; 0 outside the raster.
float noco_lookup(const NoCoMap& map, Point p);

// Owning target at the pixel nearest to p; -1 outside the raster or outside
// every extended region.
std::int32_t noco_owner(const NoCoMap& map, Point p);

}  // namespace sirst
