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

#include "sirstbench/geometry.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sirstbench/error.h"

namespace sirst {

bool BBox::valid() const {
  return std::isfinite(x0) && std::isfinite(y0) && std::isfinite(x1) &&
         std::isfinite(y1) && x0 <= x1 && y0 <= y1;
}

void validate_target(const GtTarget& target) {
  const BBox& b = target.box;
  if (!b.valid()) {
    std::ostringstream os;
    os << "invalid box [" << b.x0 << ", " << b.y0 << ", " << b.x1 << ", "
       << b.y1 << "]";
    throw ValidationError(os.str());
  }
  if (target.centroid) {
    const Point& p = *target.centroid;
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.x < b.x0 ||
        p.x > b.x1 || p.y < b.y0 || p.y > b.y1) {
      std::ostringstream os;
      os << "centroid (" << p.x << ", " << p.y << ") outside its box";
      throw ValidationError(os.str());
    }
  }
}

void validate_detection(const Detection& det) {
  if (!det.box.valid()) {
    throw ValidationError("detection has an invalid box");
  }
  if (!std::isfinite(det.score) || det.score < 0.0 || det.score > 1.0) {
    std::ostringstream os;
    os << "detection score " << det.score << " outside [0, 1]";
    throw ValidationError(os.str());
  }
}

double iou(const BBox& a, const BBox& b) {
  const double iw = std::min(a.x1, b.x1) - std::max(a.x0, b.x0);
  const double ih = std::min(a.y1, b.y1) - std::max(a.y0, b.y0);
  const double inter = (iw > 0.0 && ih > 0.0) ? iw * ih : 0.0;
  const double uni = a.area() + b.area() - inter;
  if (uni <= 0.0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

Lattice Lattice::for_image(int stride, int img_h, int img_w) {
  if (stride < 1) throw ValidationError("stride must be >= 1");
  if (img_h < 0 || img_w < 0) throw ValidationError("negative image size");
  return {stride, (img_h + stride - 1) / stride, (img_w + stride - 1) / stride};
}

std::vector<Point> feature_lattice(int stride, int img_h, int img_w) {
  const Lattice lattice = Lattice::for_image(stride, img_h, img_w);
  std::vector<Point> points;
  points.reserve(lattice.size());
  for (int r = 0; r < lattice.rows; ++r) {
    for (int c = 0; c < lattice.cols; ++c) points.push_back(lattice.point(r, c));
  }
  return points;
}

}  // namespace sirst
