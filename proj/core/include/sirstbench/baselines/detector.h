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

#include <string>
#include <vector>

#include "sirstbench/baselines/ipi.h"
#include "sirstbench/baselines/local_contrast.h"
#include "sirstbench/baselines/score_map.h"
#include "sirstbench/geometry.h"
#include "sirstbench/image.h"

namespace sirst {

enum class Method { kLcm, kMpcm, kIpi };

Method parse_method(const std::string& name);
std::string method_name(Method m);
double default_threshold_factor(Method m);

ScoreMap score_map(const GrayImage& img, Method m);

// score_map followed by scoremap_to_detections with the method's default
// threshold factor. Every detection gets `image_id`.
std::vector<Detection> detect(const GrayImage& img, Method m,
                              const std::string& image_id);

}  // namespace sirst
