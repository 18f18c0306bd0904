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

#include "sirstbench/image.h"

#include <cmath>

#include "sirstbench/error.h"

namespace sirst {

namespace {

int checked_height(int height, int width) {
  if (height < 1 || width < 1) {
    throw ValidationError("image dimensions must be >= 1");
  }
  return height;
}

}  // namespace

GrayImage::GrayImage(int height, int width, double fill)
    : Raster<double>(checked_height(height, width), width, fill) {
  if (!std::isfinite(fill)) throw ValidationError("non-finite fill value");
}

GrayImage::GrayImage(int height, int width, std::vector<double> data) {
  checked_height(height, width);
  if (data.size() !=
      static_cast<std::size_t>(height) * static_cast<std::size_t>(width)) {
    throw ValidationError("image data length does not match height x width");
  }
  for (double v : data) {
    if (!std::isfinite(v)) throw ValidationError("non-finite pixel value");
  }
  height_ = height;
  width_ = width;
  data_ = std::move(data);
}

}  // namespace sirst
