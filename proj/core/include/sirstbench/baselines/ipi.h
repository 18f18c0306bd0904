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

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "sirstbench/baselines/score_map.h"
#include "sirstbench/image.h"

namespace sirst {

// Infrared patch-image model (Gao et al., TIP 2013).
//
// Sliding patches are vectorized into the columns of a patch-image D, which is
// split into a low-rank background B and a sparse target T:
//
//   min ||B||_* + lambda ||T||_1   s.t.  D = B + T,   lambda = L / sqrt(min(m, n))
//
// solved with the inexact augmented Lagrange multiplier method.

enum class FoldMode { kMean, kMedian };

struct IpiConfig {
  int patch = 50;
  int stride = 20;
  double L = 2.5;
  double eps = 1e-7;
  int max_iters = 500;
  // Initial penalty; defaults to 1.25 / sigma_1(D).
  std::optional<double> mu0;
  double rho = 1.5;
  FoldMode fold = FoldMode::kMean;

  void validate() const;
};

// Top-left corners of the sliding patches. A final patch flush with the
// far border is added when the stride does not land on it.
struct PatchLayout {
  int height = 0;
  int width = 0;
  int patch = 0;
  std::vector<int> rows;
  std::vector<int> cols;

  std::size_t count() const { return rows.size() * cols.size(); }
};

PatchLayout make_patch_layout(int height, int width, int patch, int stride);

// patch^2 x count matrix; column j = patch (j / cols.size(), j % cols.size()),
// vectorized row-major.
Eigen::MatrixXd build_patch_image(const GrayImage& img, const PatchLayout& layout);

// Inverse of build_patch_image; overlapping contributions are combined by
// mean or median. Pixels not covered by any patch are 0.
Raster<double> fold_patch_image(const Eigen::MatrixXd& d, const PatchLayout& layout,
                                FoldMode mode);

// U max(S - tau, 0) V^T.
Eigen::MatrixXd singular_value_threshold(const Eigen::MatrixXd& x, double tau);

// sign(x) max(|x| - tau, 0), elementwise.
Eigen::MatrixXd soft_threshold(const Eigen::MatrixXd& x, double tau);

struct RpcaOptions {
  double lambda = 0.0;
  double tol = 1e-7;
  int max_iters = 500;
  std::optional<double> mu0;
  double rho = 1.5;
};

struct RpcaResult {
  Eigen::MatrixXd low_rank;
  Eigen::MatrixXd sparse;
  int iterations = 0;
  bool converged = false;
  // ||D - B - T||_F / ||D||_F after each iteration.
  std::vector<double> residuals;
};

// Inexact ALM for robust PCA. Returns the last iterate with converged = false
// when max_iters is reached first.
RpcaResult rpca_inexact_alm(const Eigen::MatrixXd& d, const RpcaOptions& opts);

struct IpiResult {
  ScoreMap map;                // folded sparse part, negatives clamped to 0
  Raster<double> background;  // folded low-rank part
  int iterations = 0;
  bool converged = false;
  std::vector<double> residuals;
};

// Throws ValidationError if the image is smaller than one patch.
IpiResult ipi(const GrayImage& img, const IpiConfig& cfg);

}  // namespace sirst
