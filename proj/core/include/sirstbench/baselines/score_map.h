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

#include <vector>

#include "sirstbench/geometry.h"
#include "sirstbench/image.h"

namespace sirst {

// Per-pixel target salience produced by a model-driven detector.
class ScoreMap : public Raster<double> {
 public:
  using Raster<double>::Raster;
};

// Threshold factors k of the mu + k * sigma detection rule.
inline constexpr double kLcmThresholdFactor = 3.0;
inline constexpr double kMpcmThresholdFactor = 13.0;
inline constexpr double kIpiThresholdFactor = 3.0;

// Thresholds the map at mean + k * stddev and returns one detection per
// 8-connected component above it. The box is the component's pixel extent;
// the score is the component maximum divided by the global maximum.
// Detections are sorted by score descending, then by raster order of the
// component's first pixel. image_id is left empty.
std::vector<Detection> scoremap_to_detections(const ScoreMap& map, double k);

}  // namespace sirst
