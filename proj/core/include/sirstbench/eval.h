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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sirstbench/geometry.h"
#include "sirstbench/image.h"
#include "sirstbench/noco.h"

namespace sirst {

// mNoCoAP: COCO-style average precision where a detection is a true positive
// when the ground-truth NoCo value at its box centre reaches delta, averaged
// over delta in {0.1, ..., 0.9}.

std::vector<double> default_deltas();

struct EvalConfig {
  std::vector<double> deltas = default_deltas();
  NoCoConfig noco;
  std::size_t max_dets_per_image = 100;

  // Throws ValidationError unless every delta is in (0, 1), deltas are
  // strictly increasing and non-empty, and max_dets_per_image >= 1.
  void validate() const;
};

struct MatchResult {
  // Indexed like the input detections.
  std::vector<bool> is_tp;
  std::vector<float> noco;
  std::vector<bool> gt_matched;
  // Detection indices by (score desc, index asc).
  std::vector<std::size_t> order;
};

// Greedy one-to-one matching in descending score order. A detection is a
// TP iff the NoCo value at its box centre is >= delta and the target owning
// that pixel is still unmatched.
MatchResult match_detections(std::span<const Detection> dets,
                             std::span<const GtTarget> gts, const NoCoMap& map,
                             double delta);

struct PrPoint {
  double recall = 0.0;
  double precision = 0.0;
};

// Precision/recall after each ranked detection.
std::vector<PrPoint> precision_recall(const std::vector<bool>& ranked_tp,
                                      std::size_t num_gt);

// All-point interpolated AP: area under the monotone precision envelope.
// Throws ValidationError when num_gt == 0.
double average_precision(const std::vector<bool>& ranked_tp, std::size_t num_gt);

// Matches of one image at every delta, restricted to the top
// max_dets_per_image detections.
struct ImageMatches {
  std::string image_id;
  std::size_t num_gt = 0;
  std::vector<double> scores;               // kept detections
  std::vector<std::size_t> det_index;       // index in the input list
  std::vector<std::vector<bool>> tp;        // [delta][kept detection]
};

ImageMatches evaluate_image(const std::string& image_id, const NoCoMap& map,
                            std::span<const GtTarget> gts,
                            std::span<const Detection> dets,
                            const EvalConfig& cfg);

struct DeltaResult {
  double delta = 0.0;
  double ap = 0.0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::vector<PrPoint> pr;
};

struct EvalReport {
  std::vector<DeltaResult> per_delta;
  double mnocoap = 0.0;
  EvalConfig config;
  std::size_t num_images = 0;
  std::size_t num_gt = 0;
  std::size_t num_dets = 0;
};

// Pools the per-image flags into one ranking per delta, ordered by
// (score desc, image_id asc, detection index asc). Throws ValidationError if
// there are no ground-truth targets at all.
EvalReport accumulate(std::span<const ImageMatches> images, const EvalConfig& cfg);

struct EvalImage {
  std::string image_id;
  GrayImage image;
  std::vector<GtTarget> targets;
  std::vector<Detection> detections;
};

// End-to-end evaluation of in-memory images. Per-image work runs on up to
// `jobs` threads; the result does not depend on `jobs`.
EvalReport mnocoap(std::span<const EvalImage> dataset, const EvalConfig& cfg,
                   int jobs = 1);

}  // namespace sirst
