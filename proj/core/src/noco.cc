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

#include "sirstbench/noco.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sirstbench/error.h"
#include "sirstbench/parallel.h"

namespace sirst {

void NoCoConfig::validate() const {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw ValidationError("gamma must lie in (0, 1]");
  }
  if (!(sigma_scale > 0.0) || !std::isfinite(sigma_scale)) {
    throw ValidationError("sigma_scale must be > 0");
  }
  if (!(min_border >= 1.0) || !std::isfinite(min_border)) {
    throw ValidationError("min_border must be >= 1");
  }
}

BBox extend_region(const GtTarget& target, const NoCoConfig& cfg, int img_h,
                   int img_w) {
  cfg.validate();
  const BBox& t = target.box;
  if (!t.valid() || !(t.width() > 0.0 && t.height() > 0.0)) {
    throw ValidationError("target box has no positive area");
  }
  if (t.x1 <= 0.0 || t.y1 <= 0.0 || t.x0 >= img_w || t.y0 >= img_h) {
    throw ValidationError("target outside image");
  }
  const double h_b = std::max(t.height() / cfg.gamma, cfg.min_border);
  const double w_b = std::max(t.width() / cfg.gamma, cfg.min_border);
  const BBox region =
      BBox::from_center(t.center(), t.width() + 2.0 * w_b, t.height() + 2.0 * h_b);
  return {std::max(region.x0, 0.0), std::max(region.y0, 0.0),
          std::min(region.x1, static_cast<double>(img_w)),
          std::min(region.y1, static_cast<double>(img_h))};
}

NoCoPatch target_noco(const GrayImage& img, const GtTarget& target,
                      const NoCoConfig& cfg) {
  NoCoPatch patch;
  patch.region = extend_region(target, cfg, img.height(), img.width());

  const BBox& reg = patch.region;
  const int c0 = std::max(0, static_cast<int>(std::floor(reg.x0)));
  const int r0 = std::max(0, static_cast<int>(std::floor(reg.y0)));
  const int c1 = std::min(img.width(), static_cast<int>(std::ceil(reg.x1)));
  const int r1 = std::min(img.height(), static_cast<int>(std::ceil(reg.y1)));
  patch.pixels = {r0, c0, r1 - r0, c1 - c0};

  double lo = std::numeric_limits<double>::infinity();
  for (int r = r0; r < r1; ++r) {
    for (int c = c0; c < c1; ++c) lo = std::min(lo, img(r, c));
  }

  // The Gaussian is built on the clipped region, centred on the centroid.
  const Point centre = target.centroid_or_center();
  const double sx = cfg.sigma_scale * reg.width() / 2.0;
  const double sy = cfg.sigma_scale * reg.height() / 2.0;

  std::vector<double> weighted;
  weighted.reserve(patch.pixels.size());
  for (int r = r0; r < r1; ++r) {
    const double dy = (r + 0.5 - centre.y) / sy;
    for (int c = c0; c < c1; ++c) {
      const double dx = (c + 0.5 - centre.x) / sx;
      const double g = std::exp(-0.5 * (dx * dx + dy * dy));
      weighted.push_back((img(r, c) - lo) * g);
    }
  }

  const auto [mn, mx] = std::minmax_element(weighted.begin(), weighted.end());
  const double wmin = *mn;
  const double range = *mx - wmin;
  patch.values.assign(weighted.size(), 0.0f);
  if (range > 0.0) {
    for (std::size_t i = 0; i < weighted.size(); ++i) {
      patch.values[i] = static_cast<float>((weighted[i] - wmin) / range);
    }
  }
  return patch;
}

NoCoMap image_noco_map(const GrayImage& img, std::span<const GtTarget> targets,
                       const NoCoConfig& cfg, int jobs) {
  cfg.validate();
  NoCoMap map{Raster<float>(img.height(), img.width(), 0.0f),
              Raster<std::int32_t>(img.height(), img.width(), -1)};

  std::vector<NoCoPatch> patches(targets.size());
  parallel_for(targets.size(), jobs, [&](std::size_t i) {
    try {
      patches[i] = target_noco(img, targets[i], cfg);
    } catch (const ValidationError& e) {
      std::ostringstream os;
      os << "target " << i << ": " << e.what();
      throw ValidationError(os.str());
    }
  });

  // Index-ordered merge with a strict comparison keeps the lowest index on
  // ties, so the owner raster does not depend on scheduling.
  for (std::size_t i = 0; i < patches.size(); ++i) {
    const NoCoPatch& p = patches[i];
    for (int r = 0; r < p.pixels.rows; ++r) {
      for (int c = 0; c < p.pixels.cols; ++c) {
        const int ir = p.pixels.row0 + r;
        const int ic = p.pixels.col0 + c;
        const float v = p.values[static_cast<std::size_t>(r) * p.pixels.cols + c];
        if (map.owner(ir, ic) < 0 || v > map.values(ir, ic)) {
          map.values(ir, ic) = v;
          map.owner(ir, ic) = static_cast<std::int32_t>(i);
        }
      }
    }
  }
  return map;
}

float noco_lookup(const NoCoMap& map, Point p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) return 0.0f;
  if (p.x < 0.0 || p.y < 0.0 || p.x >= map.width() || p.y >= map.height()) {
    return 0.0f;
  }
  return map.values(pixel_index(p.y), pixel_index(p.x));
}

std::int32_t noco_owner(const NoCoMap& map, Point p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) return -1;
  if (p.x < 0.0 || p.y < 0.0 || p.x >= map.width() || p.y >= map.height()) {
    return -1;
  }
  return map.owner(pixel_index(p.y), pixel_index(p.x));
}

}  // namespace sirst
