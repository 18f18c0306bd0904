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

#include "sirstbench/io/detections_io.h"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sirstbench/error.h"

namespace sirst::io {

std::string detections_to_jsonl(std::span<const Detection> dets) {
  std::string out;
  for (const Detection& d : dets) {
    nlohmann::ordered_json j;
    j["image_id"] = d.image_id;
    j["bbox"] = {d.box.x0, d.box.y0, d.box.x1, d.box.y1};
    j["score"] = d.score;
    out += j.dump();
    out += '\n';
  }
  return out;
}

void write_detections(const std::filesystem::path& path,
                      std::span<const Detection> dets) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << detections_to_jsonl(dets);
}

std::vector<Detection> parse_detections(const std::string& text) {
  std::vector<Detection> dets;
  std::istringstream in(text);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto bad = [&](const std::string& what) -> ValidationError {
      return ValidationError("detections line " + std::to_string(lineno) + ": " + what);
    };
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw bad("malformed JSON");
    }
    if (!j.is_object() || !j.contains("image_id") || !j["image_id"].is_string()) {
      throw bad("missing string image_id");
    }
    if (!j.contains("bbox") || !j["bbox"].is_array() || j["bbox"].size() != 4) {
      throw bad("bbox must be [x0, y0, x1, y1]");
    }
    if (!j.contains("score") || !j["score"].is_number()) throw bad("missing numeric score");
    Detection d;
    d.image_id = j["image_id"].get<std::string>();
    double v[4];
    for (int i = 0; i < 4; ++i) {
      if (!j["bbox"][i].is_number()) throw bad("bbox must contain numbers");
      v[i] = j["bbox"][i].get<double>();
    }
    d.box = {v[0], v[1], v[2], v[3]};
    d.score = j["score"].get<double>();
    try {
      validate_detection(d);
    } catch (const ValidationError& e) {
      throw bad(e.what());
    }
    dets.push_back(std::move(d));
  }
  return dets;
}

std::vector<Detection> read_detections(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_detections(buf.str());
}

std::map<std::string, std::vector<Detection>> group_by_image(
    std::span<const Detection> dets) {
  std::map<std::string, std::vector<Detection>> out;
  for (const Detection& d : dets) out[d.image_id].push_back(d);
  return out;
}

}  // namespace sirst::io
