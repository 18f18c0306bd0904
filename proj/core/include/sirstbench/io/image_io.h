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

#include "sirstbench/image.h"

namespace sirst::io {

// Reads an 8/16-bit grayscale PGM (P2 or P5) or PNG, chosen by file magic.
// Intensities are normalized to [0, 1] by the format's maximum value.
// Throws ValidationError for unreadable, malformed or colour files.
GrayImage read_image(const std::filesystem::path& path);

GrayImage read_pgm(const std::filesystem::path& path);
GrayImage read_png(const std::filesystem::path& path);

// Binary PGM (P5). Values are clamped to [0, 1] and quantized to
// round(v * max_value); max_value <= 255 writes 8-bit samples, otherwise
// 16-bit big-endian.
void write_pgm(const std::filesystem::path& path, const Raster<double>& img,
               int max_value = 65535);

}  // namespace sirst::io
