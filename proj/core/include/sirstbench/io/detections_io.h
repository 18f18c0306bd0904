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

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sirstbench/geometry.h"

namespace sirst::io {

// JSON lines, one detection per line:
//   {"image_id": str, "bbox": [x0, y0, x1, y1], "score": float}

std::string detections_to_jsonl(std::span<const Detection> dets);

void write_detections(const std::filesystem::path& path,
                      std::span<const Detection> dets);

// Throws ValidationError naming the 1-based line of the first bad record.
// Blank lines are skipped.
std::vector<Detection> read_detections(const std::filesystem::path& path);
std::vector<Detection> parse_detections(const std::string& text);

// Groups detections by image id, keeping file order within each image.
std::map<std::string, std::vector<Detection>> group_by_image(
    std::span<const Detection> dets);

}  // namespace sirst::io
