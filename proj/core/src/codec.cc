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

#include "sirstbench/codec.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sirstbench/error.h"

namespace sirst {

namespace {

DecodedBox clamp_degenerate(BBox b) {
  DecodedBox out{b, false};
  if (b.x0 > b.x1) {
    out.box.x0 = out.box.x1 = (b.x0 + b.x1) / 2.0;
    out.clamped = true;
  }
  if (b.y0 > b.y1) {
    out.box.y0 = out.box.y1 = (b.y0 + b.y1) / 2.0;
    out.clamped = true;
  }
  return out;
}

}  // namespace

RegressionTarget encode_point_box(Point p, const BBox& gt, double stride) {
  return {TargetKind::kPointDistances,
          {(p.x - gt.x0) / stride, (p.y - gt.y0) / stride,
           (gt.x1 - p.x) / stride, (gt.y1 - p.y) / stride}};
}

DecodedBox decode_point_box(Point p, const RegressionTarget& target,
                            double stride) {
  const auto& v = target.values;
  return clamp_degenerate({p.x - v[0] * stride, p.y - v[1] * stride,
                           p.x + v[2] * stride, p.y + v[3] * stride});
}

BoxGrid upsample_boxes(const BoxGrid& coarse, int fine_rows, int fine_cols) {
  if (fine_rows < 0 || fine_cols < 0 || (fine_rows + 1) / 2 != coarse.rows ||
      (fine_cols + 1) / 2 != coarse.cols ||
      coarse.boxes.size() != static_cast<std::size_t>(coarse.rows) * coarse.cols) {
    std::ostringstream os;
    os << "cannot upsample a " << coarse.rows << "x" << coarse.cols
       << " box grid to " << fine_rows << "x" << fine_cols;
    throw ValidationError(os.str());
  }
  BoxGrid fine{fine_rows, fine_cols, {}};
  fine.boxes.reserve(static_cast<std::size_t>(fine_rows) * fine_cols);
  for (int r = 0; r < fine_rows; ++r) {
    for (int c = 0; c < fine_cols; ++c) fine.boxes.push_back(coarse.at(r / 2, c / 2));
  }
  return fine;
}

RegressionTarget cascade_encode(const BBox& gt, const BBox& coarse,
                                double stride) {
  return {TargetKind::kCascadeOffsets,
          {(gt.x0 - coarse.x0) / stride, (gt.y0 - coarse.y0) / stride,
           (gt.x1 - coarse.x1) / stride, (gt.y1 - coarse.y1) / stride}};
}

DecodedBox cascade_decode(const BBox& coarse, const RegressionTarget& delta,
                          double stride) {
  const auto& v = delta.values;
  return clamp_degenerate({coarse.x0 + v[0] * stride, coarse.y0 + v[1] * stride,
                           coarse.x1 + v[2] * stride, coarse.y1 + v[3] * stride});
}

double fuse_scores(double cls_high, double cls_low, double noco) {
  return std::clamp(cls_high, 0.0, 1.0) * std::clamp(cls_low, 0.0, 1.0) *
         std::clamp(noco, 0.0, 1.0);
}

std::vector<Detection> nms(std::span<const Detection> dets, double iou_thresh) {
  if (!(iou_thresh >= 0.0 && iou_thresh <= 1.0)) {
    throw ValidationError("NMS IoU threshold must lie in [0, 1]");
  }
  std::vector<std::size_t> order(dets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dets[a].score > dets[b].score;
  });

  std::vector<Detection> kept;
  for (std::size_t i : order) {
    const bool suppressed =
        std::any_of(kept.begin(), kept.end(), [&](const Detection& k) {
          return iou(k.box, dets[i].box) > iou_thresh;
        });
    if (!suppressed) kept.push_back(dets[i]);
  }
  return kept;
}

}  // namespace sirst
