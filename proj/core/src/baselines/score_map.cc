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

#include "sirstbench/baselines/score_map.h"

#include <algorithm>
#include <cmath>

#include "sirstbench/error.h"

namespace sirst {

std::vector<Detection> scoremap_to_detections(const ScoreMap& map, double k) {
  if (!std::isfinite(k)) throw ValidationError("threshold factor must be finite");
  std::vector<Detection> dets;
  if (map.empty()) return dets;

  const auto values = map.data();
  double sum = 0.0;
  double peak = 0.0;
  for (double v : values) {
    sum += v;
    peak = std::max(peak, v);
  }
  if (peak <= 0.0) return dets;
  const double n = static_cast<double>(values.size());
  const double mean = sum / n;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  const double threshold = mean + k * std::sqrt(var / n);

  const int h = map.height();
  const int w = map.width();
  std::vector<int> stack;
  Raster<char> seen(h, w, 0);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (seen(r, c) || !(map(r, c) > threshold)) continue;
      int rmin = r, rmax = r, cmin = c, cmax = c;
      double best = map(r, c);
      seen(r, c) = 1;
      stack.assign(1, r * w + c);
      while (!stack.empty()) {
        const int idx = stack.back();
        stack.pop_back();
        const int pr = idx / w;
        const int pc = idx % w;
        rmin = std::min(rmin, pr);
        rmax = std::max(rmax, pr);
        cmin = std::min(cmin, pc);
        cmax = std::max(cmax, pc);
        best = std::max(best, map(pr, pc));
        for (int dr = -1; dr <= 1; ++dr) {
          for (int dc = -1; dc <= 1; ++dc) {
            const int nr = pr + dr;
            const int nc = pc + dc;
            if (!map.in_bounds(nr, nc) || seen(nr, nc) || !(map(nr, nc) > threshold)) {
              continue;
            }
            seen(nr, nc) = 1;
            stack.push_back(nr * w + nc);
          }
        }
      }
      Detection d;
      d.box = {static_cast<double>(cmin), static_cast<double>(rmin),
               static_cast<double>(cmax + 1), static_cast<double>(rmax + 1)};
      d.score = std::clamp(best / peak, 0.0, 1.0);
      dets.push_back(std::move(d));
    }
  }
  std::stable_sort(dets.begin(), dets.end(), [](const Detection& a, const Detection& b) {
    return a.score > b.score;
  });
  return dets;
}

}  // namespace sirst
