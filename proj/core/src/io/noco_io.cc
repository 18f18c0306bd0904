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

#include "sirstbench/io/noco_io.h"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "sirstbench/error.h"
#include "sirstbench/io/image_io.h"

namespace sirst::io {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const std::string& in, std::size_t pos) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
  }
  return v;
}

}  // namespace

std::string encode_noco_bin(const Raster<float>& values) {
  std::string out;
  out.reserve(8 + 4 * values.size());
  put_u32(out, static_cast<std::uint32_t>(values.height()));
  put_u32(out, static_cast<std::uint32_t>(values.width()));
  for (float v : values.data()) put_u32(out, std::bit_cast<std::uint32_t>(v));
  return out;
}

Raster<float> decode_noco_bin(const std::string& bytes) {
  if (bytes.size() < 8) throw ValidationError("NoCo raster shorter than its header");
  const std::uint32_t h = get_u32(bytes, 0);
  const std::uint32_t w = get_u32(bytes, 4);
  const std::uint64_t n = static_cast<std::uint64_t>(h) * w;
  if (bytes.size() != 8 + 4 * n) throw ValidationError("NoCo raster size does not match its header");
  Raster<float> out(static_cast<int>(h), static_cast<int>(w), 0.0f);
  for (std::uint64_t i = 0; i < n; ++i) {
    out.data()[i] = std::bit_cast<float>(get_u32(bytes, 8 + 4 * i));
  }
  return out;
}

void write_noco_bin(const std::filesystem::path& path, const NoCoMap& map) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << encode_noco_bin(map.values);
}

Raster<float> read_noco_bin(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode_noco_bin(buf.str());
}

void write_noco_pgm(const std::filesystem::path& path, const NoCoMap& map) {
  Raster<double> preview(map.height(), map.width(), 0.0);
  for (std::size_t i = 0; i < preview.size(); ++i) preview.data()[i] = map.values.data()[i];
  write_pgm(path, preview, 255);
}

}  // namespace sirst::io
