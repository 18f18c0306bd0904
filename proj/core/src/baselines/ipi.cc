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

#include "sirstbench/baselines/ipi.h"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "sirstbench/error.h"

namespace sirst {

void IpiConfig::validate() const {
  if (stride < 1 || patch < stride) {
    throw ValidationError("IPI requires patch >= stride >= 1");
  }
  if (!(L > 0.0) || !(eps > 0.0) || !(rho > 1.0) || max_iters < 1) {
    throw ValidationError("IPI requires L > 0, eps > 0, rho > 1, max_iters >= 1");
  }
  if (mu0 && !(*mu0 > 0.0)) throw ValidationError("IPI mu0 must be > 0");
}

namespace {

std::vector<int> positions(int extent, int patch, int stride) {
  std::vector<int> out;
  for (int p = 0; p + patch <= extent; p += stride) out.push_back(p);
  if (out.back() + patch < extent) out.push_back(extent - patch);
  return out;
}

}  // namespace

PatchLayout make_patch_layout(int height, int width, int patch, int stride) {
  if (patch < 1 || stride < 1) throw ValidationError("patch and stride must be >= 1");
  if (height < patch || width < patch) {
    throw ValidationError("image is smaller than one patch");
  }
  return {height, width, patch, positions(height, patch, stride),
          positions(width, patch, stride)};
}

Eigen::MatrixXd build_patch_image(const GrayImage& img, const PatchLayout& layout) {
  const int p = layout.patch;
  Eigen::MatrixXd d(p * p, static_cast<Eigen::Index>(layout.count()));
  Eigen::Index col = 0;
  for (int r0 : layout.rows) {
    for (int c0 : layout.cols) {
      for (int r = 0; r < p; ++r) {
        for (int c = 0; c < p; ++c) d(r * p + c, col) = img(r0 + r, c0 + c);
      }
      ++col;
    }
  }
  return d;
}

Raster<double> fold_patch_image(const Eigen::MatrixXd& d, const PatchLayout& layout,
                                FoldMode mode) {
  const int p = layout.patch;
  Raster<double> out(layout.height, layout.width, 0.0);
  if (mode == FoldMode::kMean) {
    Raster<int> hits(layout.height, layout.width, 0);
    Eigen::Index col = 0;
    for (int r0 : layout.rows) {
      for (int c0 : layout.cols) {
        for (int r = 0; r < p; ++r) {
          for (int c = 0; c < p; ++c) {
            out(r0 + r, c0 + c) += d(r * p + c, col);
            ++hits(r0 + r, c0 + c);
          }
        }
        ++col;
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (hits.data()[i] > 0) out.data()[i] /= hits.data()[i];
    }
    return out;
  }

  Raster<std::vector<double>> samples(layout.height, layout.width);
  Eigen::Index col = 0;
  for (int r0 : layout.rows) {
    for (int c0 : layout.cols) {
      for (int r = 0; r < p; ++r) {
        for (int c = 0; c < p; ++c) samples(r0 + r, c0 + c).push_back(d(r * p + c, col));
      }
      ++col;
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<double>& v = samples.data()[i];
    if (v.empty()) continue;
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    out.data()[i] = v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
  }
  return out;
}

Eigen::MatrixXd singular_value_threshold(const Eigen::MatrixXd& x, double tau) {
  // Patch-images are tall: reduce to the square R factor of x = QR first.
  if (x.rows() > 2 * x.cols()) {
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
    const Eigen::MatrixXd r =
        qr.matrixQR().topRows(x.cols()).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd shrunk = singular_value_threshold(r, tau);
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(x.rows(), x.cols());
    out.topRows(x.cols()) = shrunk;
    return qr.householderQ() * out;
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd s = (svd.singularValues().array() - tau).max(0.0).matrix();
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > 0.0) ++rank;
  if (rank == 0) return Eigen::MatrixXd::Zero(x.rows(), x.cols());
  return svd.matrixU().leftCols(rank) * s.head(rank).asDiagonal() *
         svd.matrixV().leftCols(rank).transpose();
}

Eigen::MatrixXd soft_threshold(const Eigen::MatrixXd& x, double tau) {
  return x.unaryExpr([tau](double v) {
    return v > tau ? v - tau : (v < -tau ? v + tau : 0.0);
  });
}

RpcaResult rpca_inexact_alm(const Eigen::MatrixXd& d, const RpcaOptions& opts) {
  RpcaResult res;
  res.low_rank = Eigen::MatrixXd::Zero(d.rows(), d.cols());
  res.sparse = Eigen::MatrixXd::Zero(d.rows(), d.cols());
  const double d_norm = d.norm();
  if (d_norm == 0.0) {
    res.converged = true;
    return res;
  }

  const double norm_two = Eigen::BDCSVD<Eigen::MatrixXd>(d).singularValues()(0);
  const double norm_inf = d.cwiseAbs().maxCoeff() / opts.lambda;
  Eigen::MatrixXd y = d / std::max(norm_two, norm_inf);
  double mu = opts.mu0.value_or(1.25 / norm_two);
  const double mu_bar = mu * 1e7;

  for (int it = 1; it <= opts.max_iters; ++it) {
    res.sparse = soft_threshold(d - res.low_rank + y / mu, opts.lambda / mu);
    res.low_rank = singular_value_threshold(d - res.sparse + y / mu, 1.0 / mu);
    const Eigen::MatrixXd z = d - res.low_rank - res.sparse;
    y += mu * z;
    mu = std::min(mu * opts.rho, mu_bar);

    const double residual = z.norm() / d_norm;
    res.residuals.push_back(residual);
    res.iterations = it;
    if (residual <= opts.tol) {
      res.converged = true;
      break;
    }
  }
  return res;
}

IpiResult ipi(const GrayImage& img, const IpiConfig& cfg) {
  cfg.validate();
  const PatchLayout layout = make_patch_layout(img.height(), img.width(), cfg.patch, cfg.stride);
  const Eigen::MatrixXd d = build_patch_image(img, layout);

  RpcaOptions opts;
  opts.lambda = cfg.L / std::sqrt(static_cast<double>(std::min(d.rows(), d.cols())));
  opts.tol = cfg.eps;
  opts.max_iters = cfg.max_iters;
  opts.mu0 = cfg.mu0;
  opts.rho = cfg.rho;
  RpcaResult rpca = rpca_inexact_alm(d, opts);

  IpiResult out;
  const Raster<double> target = fold_patch_image(rpca.sparse, layout, cfg.fold);
  out.map = ScoreMap(img.height(), img.width(), 0.0);
  for (std::size_t i = 0; i < target.size(); ++i) {
    out.map.data()[i] = std::max(target.data()[i], 0.0);
  }
  out.background = fold_patch_image(rpca.low_rank, layout, cfg.fold);
  out.iterations = rpca.iterations;
  out.converged = rpca.converged;
  out.residuals = std::move(rpca.residuals);
  return out;
}

}  // namespace sirst
