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

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace sirst {

// Row-major 2-D raster.
template <typename T>
class Raster {
 public:
  Raster() = default;
  Raster(int height, int width, T fill = T{})
      : height_(height),
        width_(width),
        data_(static_cast<std::size_t>(height) * static_cast<std::size_t>(width),
              fill) {}

  int height() const { return height_; }
  int width() const { return width_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  bool in_bounds(int r, int c) const {
    return r >= 0 && r < height_ && c >= 0 && c < width_;
  }

  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }

  // Replicate-padded read.
  const T& clamped(int r, int c) const {
    return (*this)(std::clamp(r, 0, height_ - 1), std::clamp(c, 0, width_ - 1));
  }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }
  std::vector<T>& storage() { return data_; }
  const std::vector<T>& storage() const { return data_; }

  friend bool operator==(const Raster&, const Raster&) = default;

 protected:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(c);
  }

  int height_ = 0;
  int width_ = 0;
  std::vector<T> data_;
};

// Grayscale intensity image. Values are finite reals, normalized to [0, 1]
// when loaded from 8/16-bit files.
class GrayImage : public Raster<double> {
 public:
  GrayImage() = default;
  // Throws ValidationError if height or width < 1.
  GrayImage(int height, int width, double fill = 0.0);
  // Throws ValidationError on size mismatch or non-finite values.
  GrayImage(int height, int width, std::vector<double> data);
};

}  // namespace sirst
