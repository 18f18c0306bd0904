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

#include "sirstbench/losses.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sirstbench/error.h"

namespace sirst {

void LossConfig::validate() const {
  for (double v : {focal_alpha, focal_gamma, qfl_beta, lambda}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("loss parameters must be finite and non-negative");
    }
  }
}

namespace {

double clamp_prob(double p) { return std::clamp(p, kProbClamp, 1.0 - kProbClamp); }

struct HeadSums {
  double cls = 0.0;
  double reg = 0.0;
  std::size_t num_pos = 0;
};

HeadSums head_sums(const HeadInput& head, const LossConfig& cfg,
                   const char* name) {
  if (head.assignment == nullptr) {
    throw ValidationError(std::string(name) + " head has no assignment");
  }
  const AssignmentResult& a = *head.assignment;
  const std::size_t n = a.labels.size();
  if (head.cls.size() != n || head.boxes.size() != n || a.targets.size() != n) {
    throw ValidationError(std::string(name) +
                          " head predictions do not match the assignment grid");
  }
  std::vector<double> cls(n), reg(n, 0.0);
  HeadSums sums;
  for (std::size_t i = 0; i < n; ++i) {
    const bool pos = a.labels[i] != kNegative;
    cls[i] = focal_loss(head.cls[i], pos, cfg);
    if (pos) {
      ++sums.num_pos;
      const BBox gt =
          decode_point_box(a.lattice.point(i), a.targets[i], a.lattice.stride).box;
      reg[i] = iou_loss(head.boxes[i], gt);
    }
  }
  sums.cls = pairwise_sum(cls);
  sums.reg = pairwise_sum(reg);
  return sums;
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double focal_loss(double pred, bool label, const LossConfig& cfg) {
  const double q = std::clamp(pred, 0.0, 1.0);
  const double p = clamp_prob(pred);
  if (label) return -cfg.focal_alpha * std::pow(1.0 - q, cfg.focal_gamma) * std::log(p);
  return -(1.0 - cfg.focal_alpha) * std::pow(q, cfg.focal_gamma) * std::log(1.0 - p);
}

double iou_loss(const BBox& pred, const BBox& gt) { return 1.0 - iou(pred, gt); }

double quality_focal_loss(double pred, double quality, const LossConfig& cfg) {
  const double p = clamp_prob(pred);
  const double y = quality;
  const double bce = -(y * std::log(p) + (1.0 - y) * std::log(1.0 - p));
  return std::pow(std::abs(y - std::clamp(pred, 0.0, 1.0)), cfg.qfl_beta) * bce;
}

LossBreakdown total_loss(const HeadInput& high, const HeadInput& low,
                         const NoCoInput& noco, const LossConfig& cfg) {
  cfg.validate();
  const HeadSums h = head_sums(high, cfg, "high-level");
  const HeadSums l = head_sums(low, cfg, "low-level");

  const std::size_t n_low = low.assignment->labels.size();
  if (noco.pred.size() != n_low || noco.target.size() != n_low) {
    throw ValidationError("NoCo predictions do not match the low-level grid");
  }
  std::vector<double> q(n_low, 0.0);
  for (std::size_t i = 0; i < n_low; ++i) {
    if (low.assignment->labels[i] != kNegative) {
      q[i] = quality_focal_loss(noco.pred[i], noco.target[i], cfg);
    }
  }

  LossBreakdown out;
  out.num_pos_high = h.num_pos;
  out.num_pos_low = l.num_pos;
  out.high_no_positives = h.num_pos == 0;
  out.low_no_positives = l.num_pos == 0;
  const double norm_h = h.num_pos == 0 ? 1.0 : static_cast<double>(h.num_pos);
  const double norm_l = l.num_pos == 0 ? 1.0 : static_cast<double>(l.num_pos);
  out.cls_high = h.cls / norm_h;
  out.reg_high = h.reg / norm_h;
  out.cls_low = l.cls / norm_l;
  out.reg_low = l.reg / norm_l;
  out.noco = cfg.lambda * (pairwise_sum(q) / norm_l);
  out.total = out.cls_high + out.reg_high + out.cls_low + out.reg_low + out.noco;
  return out;
}

}  // namespace sirst
