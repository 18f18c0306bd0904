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

#include "sirstbench/baselines/detector.h"

#include "sirstbench/error.h"

namespace sirst {

Method parse_method(const std::string& name) {
  if (name == "lcm") return Method::kLcm;
  if (name == "mpcm") return Method::kMpcm;
  if (name == "ipi") return Method::kIpi;
  throw ValidationError("unknown method '" + name + "' (lcm, mpcm, ipi)");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::kLcm: return "lcm";
    case Method::kMpcm: return "mpcm";
    case Method::kIpi: return "ipi";
  }
  return "lcm";
}

double default_threshold_factor(Method m) {
  switch (m) {
    case Method::kLcm: return kLcmThresholdFactor;
    case Method::kMpcm: return kMpcmThresholdFactor;
    case Method::kIpi: return kIpiThresholdFactor;
  }
  return kLcmThresholdFactor;
}

ScoreMap score_map(const GrayImage& img, Method m) {
  switch (m) {
    case Method::kLcm: return lcm(img);
    case Method::kMpcm: return mpcm(img);
    case Method::kIpi: return ipi(img, IpiConfig{}).map;
  }
  return lcm(img);
}

std::vector<Detection> detect(const GrayImage& img, Method m,
                              const std::string& image_id) {
  std::vector<Detection> dets =
      scoremap_to_detections(score_map(img, m), default_threshold_factor(m));
  for (Detection& d : dets) d.image_id = image_id;
  return dets;
}

}  // namespace sirst
