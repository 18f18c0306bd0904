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

#include "sirstbench/io/image_io.h"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "sirstbench/error.h"

namespace sirst::io {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw ValidationError(path.string() + ": " + what);
}

std::string read_token(std::istream& in) {
  std::string tok;
  int ch;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(ch));
  }
  return tok;
}

int parse_positive(const std::filesystem::path& path, const std::string& tok,
                   const char* field) {
  try {
    std::size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used == tok.size() && v > 0 && v <= (1L << 24)) return static_cast<int>(v);
  } catch (const std::exception&) {
  }
  fail(path, std::string("bad PGM ") + field + " '" + tok + "'");
}

}  // namespace

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open");
  const std::string magic = read_token(in);
  if (magic != "P5" && magic != "P2") fail(path, "not a grayscale PGM");
  const int width = parse_positive(path, read_token(in), "width");
  const int height = parse_positive(path, read_token(in), "height");
  const int maxval = parse_positive(path, read_token(in), "maxval");
  if (maxval > 65535) fail(path, "PGM maxval above 65535");

  const std::size_t n = static_cast<std::size_t>(width) * height;
  std::vector<double> data(n);
  if (magic == "P2") {
    for (std::size_t i = 0; i < n; ++i) {
      const std::string tok = read_token(in);
      if (tok.empty()) fail(path, "truncated PGM data");
      long v = 0;
      try {
        v = std::stol(tok);
      } catch (const std::exception&) {
        fail(path, "bad PGM sample '" + tok + "'");
      }
      if (v < 0 || v > maxval) fail(path, "PGM sample out of range");
      data[i] = static_cast<double>(v) / maxval;
    }
  } else {
    const std::size_t bytes = maxval > 255 ? 2 : 1;
    std::vector<unsigned char> raw(n * bytes);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size()) fail(path, "truncated PGM data");
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned v = bytes == 2 ? (raw[2 * i] << 8) | raw[2 * i + 1] : raw[i];
      if (v > static_cast<unsigned>(maxval)) fail(path, "PGM sample out of range");
      data[i] = static_cast<double>(v) / maxval;
    }
  }
  return GrayImage(height, width, std::move(data));
}

GrayImage read_png(const std::filesystem::path& path) {
  std::unique_ptr<FILE, int (*)(FILE*)> fp(std::fopen(path.c_str(), "rb"), &std::fclose);
  if (!fp) fail(path, "cannot open");

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) fail(path, "cannot allocate PNG reader");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    fail(path, "cannot allocate PNG info");
  }

  // Everything touched between setjmp and a possible longjmp lives out here.
  volatile int width = 0, height = 0, depth = 0, channels = 0;
  png_byte color = 0;
  std::vector<unsigned char> pixels;
  std::vector<png_bytep> rows;
  std::string error;
  if (setjmp(png_jmpbuf(png))) {
    error = "corrupt PNG";
  } else {
    png_init_io(png, fp.get());
    png_read_info(png, info);
    color = png_get_color_type(png, info);
    depth = png_get_bit_depth(png, info);
    if (color != PNG_COLOR_TYPE_GRAY && color != PNG_COLOR_TYPE_GRAY_ALPHA) {
      error = "colour PNG images are not supported";
    } else {
      if (depth < 8) png_set_expand_gray_1_2_4_to_8(png);
      png_read_update_info(png, info);
      width = static_cast<int>(png_get_image_width(png, info));
      height = static_cast<int>(png_get_image_height(png, info));
      depth = png_get_bit_depth(png, info);
      channels = png_get_channels(png, info);
      const std::size_t row_bytes = png_get_rowbytes(png, info);
      pixels.resize(row_bytes * height);
      rows.assign(height, nullptr);
      for (int r = 0; r < static_cast<int>(rows.size()); ++r) rows[r] = pixels.data() + r * row_bytes;
      png_read_image(png, rows.data());
    }
  }
  png_destroy_read_struct(&png, &info, nullptr);
  if (!error.empty()) fail(path, error);

  const int w = width, h = height, bits = depth;
  const double maxval = bits == 16 ? 65535.0 : 255.0;
  const std::size_t stride = static_cast<std::size_t>(channels) * (bits == 16 ? 2 : 1);
  std::vector<double> data(static_cast<std::size_t>(w) * h);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const unsigned char* p = pixels.data() + i * stride;
    const unsigned v = bits == 16 ? (p[0] << 8) | p[1] : p[0];
    data[i] = v / maxval;
  }
  return GrayImage(h, w, std::move(data));
}

GrayImage read_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open image");
  std::array<unsigned char, 8> magic{};
  in.read(reinterpret_cast<char*>(magic.data()), magic.size());
  in.close();
  static constexpr std::array<unsigned char, 8> kPng{0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (magic == kPng) return read_png(path);
  if (magic[0] == 'P' && (magic[1] == '5' || magic[1] == '2')) return read_pgm(path);
  fail(path, "unsupported image format (expected PGM or PNG)");
}

void write_pgm(const std::filesystem::path& path, const Raster<double>& img,
               int max_value) {
  if (max_value < 1 || max_value > 65535) {
    throw ValidationError("PGM max value must be in [1, 65535]");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot write");
  out << "P5\n" << img.width() << " " << img.height() << "\n" << max_value << "\n";
  const bool wide = max_value > 255;
  std::vector<unsigned char> raw;
  raw.reserve(img.size() * (wide ? 2 : 1));
  for (double v : img.data()) {
    const auto q = static_cast<unsigned>(std::lround(std::clamp(v, 0.0, 1.0) * max_value));
    if (wide) raw.push_back(static_cast<unsigned char>(q >> 8));
    raw.push_back(static_cast<unsigned char>(q & 0xff));
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) fail(path, "write failed");
}

}  // namespace sirst::io
