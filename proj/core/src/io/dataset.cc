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

#include "sirstbench/io/dataset.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sirstbench/error.h"
#include "sirstbench/io/image_io.h"

namespace sirst::io {

namespace {

using nlohmann::json;

[[noreturn]] void entry_error(const std::string& id, const std::string& what) {
  throw ValidationError("image '" + id + "': " + what);
}

std::vector<double> numbers(const json& j, std::size_t n, const std::string& id,
                            const char* field) {
  if (!j.is_array() || j.size() != n) {
    entry_error(id, std::string(field) + " must be an array of " + std::to_string(n) +
                        " numbers");
  }
  std::vector<double> out;
  for (const json& v : j) {
    if (!v.is_number()) entry_error(id, std::string(field) + " must contain numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

GtTarget parse_target(const json& t, const DatasetEntry& e, std::size_t k,
                      std::vector<std::string>* warnings) {
  if (!t.is_object() || !t.contains("bbox")) {
    entry_error(e.id, "target " + std::to_string(k) + " lacks a bbox");
  }
  const auto b = numbers(t["bbox"], 4, e.id, "bbox");
  GtTarget target;
  target.box = {b[0], b[1], b[2], b[3]};
  if (!target.box.valid()) {
    std::ostringstream os;
    os << "target " << k << " has an invalid bbox [" << b[0] << ", " << b[1] << ", "
       << b[2] << ", " << b[3] << "]";
    entry_error(e.id, os.str());
  }
  const BBox clipped{std::max(b[0], 0.0), std::max(b[1], 0.0),
                     std::min(b[2], static_cast<double>(e.width)),
                     std::min(b[3], static_cast<double>(e.height))};
  if (!(clipped.x0 < clipped.x1 && clipped.y0 < clipped.y1)) {
    entry_error(e.id, "target " + std::to_string(k) + " lies outside the image");
  }
  if (!(clipped == target.box)) {
    if (warnings != nullptr) {
      warnings->push_back("image '" + e.id + "': target " + std::to_string(k) +
                          " clipped to image bounds");
    }
    target.box = clipped;
  }
  if (t.contains("centroid") && !t["centroid"].is_null()) {
    const auto c = numbers(t["centroid"], 2, e.id, "centroid");
    target.centroid = Point{c[0], c[1]};
  }
  try {
    validate_target(target);
  } catch (const ValidationError& err) {
    entry_error(e.id, "target " + std::to_string(k) + ": " + err.what());
  }
  return target;
}

}  // namespace

DatasetIndex load_dataset(const std::filesystem::path& root,
                          std::vector<std::string>* warnings) {
  const std::filesystem::path file = root / kAnnotationsFile;
  std::ifstream in(file);
  if (!in) throw ValidationError("cannot open " + file.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(file.string() + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("images") || !doc["images"].is_array()) {
    throw ValidationError(file.string() + ": expected an object with an \"images\" array");
  }

  DatasetIndex index;
  index.root = root;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < doc["images"].size(); ++i) {
    const json& img = doc["images"][i];
    if (!img.is_object() || !img.contains("id") || !img["id"].is_string()) {
      throw ValidationError("images[" + std::to_string(i) + "] lacks a string id");
    }
    DatasetEntry e;
    e.id = img["id"].get<std::string>();
    if (!ids.insert(e.id).second) entry_error(e.id, "duplicate image id");
    if (!img.contains("file") || !img["file"].is_string()) entry_error(e.id, "missing file");
    e.file = img["file"].get<std::string>();
    for (const char* key : {"height", "width"}) {
      if (!img.contains(key) || !img[key].is_number_integer() || img[key].get<long>() < 1) {
        entry_error(e.id, std::string(key) + " must be a positive integer");
      }
    }
    e.height = img["height"].get<int>();
    e.width = img["width"].get<int>();
    if (!std::filesystem::exists(root / e.file)) {
      entry_error(e.id, "image file '" + e.file + "' not found");
    }
    if (img.contains("targets")) {
      if (!img["targets"].is_array()) entry_error(e.id, "targets must be an array");
      for (std::size_t k = 0; k < img["targets"].size(); ++k) {
        e.targets.push_back(parse_target(img["targets"][k], e, k, warnings));
      }
    }
    index.entries.push_back(std::move(e));
  }
  return index;
}

std::string annotations_to_json(const DatasetIndex& index) {
  nlohmann::ordered_json images = nlohmann::ordered_json::array();
  for (const DatasetEntry& e : index.entries) {
    nlohmann::ordered_json targets = nlohmann::ordered_json::array();
    for (const GtTarget& t : e.targets) {
      nlohmann::ordered_json jt;
      jt["bbox"] = {t.box.x0, t.box.y0, t.box.x1, t.box.y1};
      if (t.centroid) jt["centroid"] = {t.centroid->x, t.centroid->y};
      targets.push_back(std::move(jt));
    }
    nlohmann::ordered_json je;
    je["id"] = e.id;
    je["file"] = e.file;
    je["height"] = e.height;
    je["width"] = e.width;
    je["targets"] = std::move(targets);
    images.push_back(std::move(je));
  }
  nlohmann::ordered_json doc;
  doc["images"] = std::move(images);
  return doc.dump(2) + "\n";
}

void save_dataset(const DatasetIndex& index, const std::filesystem::path& root) {
  std::filesystem::create_directories(root);
  const std::filesystem::path file = root / kAnnotationsFile;
  std::ofstream out(file, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + file.string());
  out << annotations_to_json(index);
}

GrayImage load_entry_image(const DatasetIndex& index, const DatasetEntry& entry) {
  GrayImage img = read_image(index.root / entry.file);
  if (img.height() != entry.height || img.width() != entry.width) {
    std::ostringstream os;
    os << "image is " << img.height() << "x" << img.width() << ", annotated as "
       << entry.height << "x" << entry.width;
    entry_error(entry.id, os.str());
  }
  return img;
}

}  // namespace sirst::io
