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

#include <span>
#include <vector>

#include "sirstbench/baselines/score_map.h"
#include "sirstbench/image.h"

namespace sirst {

// Local contrast measure (Chen et al., TGRS 2013).
//
// A 3x3 grid of cell x cell windows is centred on every pixel. With L the
// maximum intensity of the centre window and m_i the mean of neighbour
// window i, the contrast is
//
//   C = min_i L^2 / m_i = L^2 / max_i m_i
//
// The denominator is guarded at 1e-12. Borders are replicate-padded.
// Throws ValidationError unless the image is at least 3 cells on each side.
ScoreMap lcm(const GrayImage& img, int cell = 3);

// Multiscale patch-based contrast measure (Wei et al., PR 2016).
//
// For each odd scale N, m_T is the mean of the N x N window at the pixel and
// m_i the means of the eight windows offset by N. With d_i = m_T - m_i and
// opposite neighbours paired as (i, i + 4),
//
//   D_N = min_{i < 4} d_i * d_{i+4}
//
// The result is max_N D_N with negatives clamped to 0, so bright and dark
// targets both score positively.
ScoreMap mpcm(const GrayImage& img, std::span<const int> scales);

inline const std::vector<int>& default_mpcm_scales() {
  static const std::vector<int> scales{1, 3, 5, 7, 9};
  return scales;
}

inline ScoreMap mpcm(const GrayImage& img) { return mpcm(img, default_mpcm_scales()); }

}  // namespace sirst
