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

#include "sirstbench/baselines/local_contrast.h"

#include <algorithm>
#include <array>

#include "sirstbench/error.h"

namespace sirst {

namespace {

// Summed-area table over a replicate-padded copy of the image.
class WindowMeans {
 public:
  WindowMeans(const GrayImage& img, int pad)
      : pad_(pad),
        h_(img.height() + 2 * pad),
        w_(img.width() + 2 * pad),
        sums_(static_cast<std::size_t>(h_ + 1) * (w_ + 1), 0.0) {
    for (int r = 0; r < h_; ++r) {
      double row = 0.0;
      for (int c = 0; c < w_; ++c) {
        row += img.clamped(r - pad_, c - pad_);
        at(r + 1, c + 1) = at(r, c + 1) + row;
      }
    }
  }

  // Sum over the (2 half + 1)^2 window centred on image pixel (r, c).
  double sum(int r, int c, int half) const {
    const int r0 = r - half + pad_;
    const int c0 = c - half + pad_;
    const int r1 = r + half + pad_ + 1;
    const int c1 = c + half + pad_ + 1;
    return at(r1, c1) - at(r0, c1) - at(r1, c0) + at(r0, c0);
  }

  double mean(int r, int c, int half) const {
    const double side = 2.0 * half + 1.0;
    return sum(r, c, half) / (side * side);
  }

 private:
  double& at(int r, int c) { return sums_[static_cast<std::size_t>(r) * (w_ + 1) + c]; }
  double at(int r, int c) const { return sums_[static_cast<std::size_t>(r) * (w_ + 1) + c]; }

  int pad_;
  int h_;
  int w_;
  std::vector<double> sums_;
};

// Neighbour offsets in units of the window size; entry i + 4 is opposite i.
constexpr std::array<std::array<int, 2>, 8> kNeighbours{{
    {-1, -1}, {-1, 0}, {-1, 1}, {0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}}};

}  // namespace

ScoreMap lcm(const GrayImage& img, int cell) {
  if (cell < 1 || cell % 2 == 0) throw ValidationError("LCM cell size must be odd and >= 1");
  if (img.height() < 3 * cell || img.width() < 3 * cell) {
    throw ValidationError("image smaller than the 3x3-cell LCM window");
  }
  const int half = cell / 2;
  const WindowMeans means(img, cell + half);
  ScoreMap out(img.height(), img.width(), 0.0);
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      double peak = img.clamped(r - half, c - half);
      for (int dr = -half; dr <= half; ++dr) {
        for (int dc = -half; dc <= half; ++dc) peak = std::max(peak, img.clamped(r + dr, c + dc));
      }
      double denom = 0.0;
      for (const auto& [oy, ox] : kNeighbours) {
        denom = std::max(denom, means.mean(r + oy * cell, c + ox * cell, half));
      }
      out(r, c) = peak * peak / std::max(denom, 1e-12);
    }
  }
  return out;
}

ScoreMap mpcm(const GrayImage& img, std::span<const int> scales) {
  if (scales.empty()) throw ValidationError("MPCM needs at least one scale");
  int largest = 0;
  for (int n : scales) {
    if (n < 1 || n % 2 == 0) throw ValidationError("MPCM scales must be odd and >= 1");
    largest = std::max(largest, n);
  }
  const WindowMeans means(img, largest + largest / 2);
  ScoreMap out(img.height(), img.width(), 0.0);
  for (int n : scales) {
    const int half = n / 2;
    const double area = static_cast<double>(n) * n;
    for (int r = 0; r < img.height(); ++r) {
      for (int c = 0; c < img.width(); ++c) {
        // Differences of window sums: a constant offset cancels before dividing.
        const double centre = means.sum(r, c, half);
        std::array<double, 8> d{};
        for (std::size_t i = 0; i < kNeighbours.size(); ++i) {
          d[i] = (centre - means.sum(r + kNeighbours[i][0] * n,
                                     c + kNeighbours[i][1] * n, half)) / area;
        }
        double contrast = d[0] * d[4];
        for (std::size_t i = 1; i < 4; ++i) contrast = std::min(contrast, d[i] * d[i + 4]);
        out(r, c) = std::max(out(r, c), contrast);
      }
    }
  }
  return out;
}

}  // namespace sirst
