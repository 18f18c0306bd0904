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

#include "sirstbench/noco.h"

namespace sirst::io {

// Flat binary raster: uint32 height, uint32 width (little-endian), then
// height * width little-endian float32 values, row-major.
std::string encode_noco_bin(const Raster<float>& values);
Raster<float> decode_noco_bin(const std::string& bytes);

void write_noco_bin(const std::filesystem::path& path, const NoCoMap& map);
Raster<float> read_noco_bin(const std::filesystem::path& path);

// 8-bit PGM preview, value 1.0 -> 255.
void write_noco_pgm(const std::filesystem::path& path, const NoCoMap& map);

}  // namespace sirst::io
