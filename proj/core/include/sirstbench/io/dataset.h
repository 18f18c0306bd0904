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
#include <string>
#include <vector>

#include "sirstbench/geometry.h"
#include "sirstbench/image.h"

namespace sirst::io {

// Dataset index stored as <root>/annotations.json:
//
//   {"images": [{"id": str, "file": str, "height": int, "width": int,
//                "targets": [{"bbox": [x0, y0, x1, y1],
//                             "centroid": [x, y]}]}]}
//
// "centroid" is optional; "file" is relative to the root.

inline constexpr const char* kAnnotationsFile = "annotations.json";

struct DatasetEntry {
  std::string id;
  std::string file;
  int height = 0;
  int width = 0;
  std::vector<GtTarget> targets;
};

struct DatasetIndex {
  std::filesystem::path root;
  std::vector<DatasetEntry> entries;
};

// Validates ids (unique), image files (must exist) and boxes. Boxes that
// stick out of the image are clipped and reported through `warnings`.
// Throws ValidationError naming the offending image id.
DatasetIndex load_dataset(const std::filesystem::path& root,
                          std::vector<std::string>* warnings = nullptr);

// Serialized annotations.json content.
std::string annotations_to_json(const DatasetIndex& index);

// Writes <root>/annotations.json; image files are not touched.
void save_dataset(const DatasetIndex& index, const std::filesystem::path& root);

// Loads an entry's image and checks it against the annotated dimensions.
GrayImage load_entry_image(const DatasetIndex& index, const DatasetEntry& entry);

}  // namespace sirst::io
