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

#include "sirstbench/eval.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sirstbench/error.h"
#include "sirstbench/parallel.h"

namespace sirst {

std::vector<double> default_deltas() {
  std::vector<double> d;
  for (int i = 1; i <= 9; ++i) d.push_back(i / 10.0);
  return d;
}

void EvalConfig::validate() const {
  if (deltas.empty()) throw ValidationError("at least one delta is required");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0 && deltas[i] < 1.0)) {
      std::ostringstream os;
      os << "delta " << deltas[i] << " outside (0, 1)";
      throw ValidationError(os.str());
    }
    if (i > 0 && !(deltas[i] > deltas[i - 1])) {
      throw ValidationError("deltas must be strictly increasing");
    }
  }
  if (max_dets_per_image < 1) {
    throw ValidationError("max_dets_per_image must be >= 1");
  }
  noco.validate();
}

namespace {

std::vector<std::size_t> score_order(std::span<const Detection> dets) {
  std::vector<std::size_t> order(dets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dets[a].score > dets[b].score;
  });
  return order;
}

}  // namespace

MatchResult match_detections(std::span<const Detection> dets,
                             std::span<const GtTarget> gts, const NoCoMap& map,
                             double delta) {
  MatchResult out;
  out.is_tp.assign(dets.size(), false);
  out.noco.assign(dets.size(), 0.0f);
  out.gt_matched.assign(gts.size(), false);
  out.order = score_order(dets);

  for (std::size_t i : out.order) {
    const Point centre = dets[i].box.center();
    const float v = noco_lookup(map, centre);
    out.noco[i] = v;
    if (static_cast<double>(v) < delta) continue;
    const std::int32_t owner = noco_owner(map, centre);
    if (owner < 0 || static_cast<std::size_t>(owner) >= gts.size()) continue;
    if (out.gt_matched[owner]) continue;
    out.gt_matched[owner] = true;
    out.is_tp[i] = true;
  }
  return out;
}

std::vector<PrPoint> precision_recall(const std::vector<bool>& ranked_tp,
                                      std::size_t num_gt) {
  std::vector<PrPoint> pr;
  pr.reserve(ranked_tp.size());
  std::size_t tp = 0;
  for (std::size_t i = 0; i < ranked_tp.size(); ++i) {
    if (ranked_tp[i]) ++tp;
    pr.push_back({num_gt == 0 ? 0.0 : static_cast<double>(tp) / num_gt,
                  static_cast<double>(tp) / static_cast<double>(i + 1)});
  }
  return pr;
}

double average_precision(const std::vector<bool>& ranked_tp, std::size_t num_gt) {
  if (num_gt == 0) throw ValidationError("no targets to evaluate");
  const std::vector<PrPoint> pr = precision_recall(ranked_tp, num_gt);

  // Precision envelope: running maximum from the right.
  std::vector<double> envelope(pr.size());
  double best = 0.0;
  for (std::size_t i = pr.size(); i-- > 0;) {
    best = std::max(best, pr[i].precision);
    envelope[i] = best;
  }
  double ap = 0.0;
  double prev_recall = 0.0;
  for (std::size_t i = 0; i < pr.size(); ++i) {
    ap += (pr[i].recall - prev_recall) * envelope[i];
    prev_recall = pr[i].recall;
  }
  return std::clamp(ap, 0.0, 1.0);
}

ImageMatches evaluate_image(const std::string& image_id, const NoCoMap& map,
                            std::span<const GtTarget> gts,
                            std::span<const Detection> dets,
                            const EvalConfig& cfg) {
  std::vector<std::size_t> order = score_order(dets);
  if (order.size() > cfg.max_dets_per_image) order.resize(cfg.max_dets_per_image);

  std::vector<Detection> kept;
  kept.reserve(order.size());
  for (std::size_t i : order) kept.push_back(dets[i]);

  ImageMatches out;
  out.image_id = image_id;
  out.num_gt = gts.size();
  out.det_index = order;
  for (const auto& d : kept) out.scores.push_back(d.score);
  for (double delta : cfg.deltas) {
    out.tp.push_back(match_detections(kept, gts, map, delta).is_tp);
  }
  return out;
}

EvalReport accumulate(std::span<const ImageMatches> images, const EvalConfig& cfg) {
  struct Ranked {
    double score;
    std::size_t image;
    std::size_t local;
  };
  std::vector<Ranked> ranked;
  EvalReport report;
  report.config = cfg;
  report.num_images = images.size();
  for (std::size_t m = 0; m < images.size(); ++m) {
    report.num_gt += images[m].num_gt;
    for (std::size_t k = 0; k < images[m].scores.size(); ++k) {
      ranked.push_back({images[m].scores[k], m, k});
    }
  }
  report.num_dets = ranked.size();
  if (report.num_gt == 0) throw ValidationError("no targets to evaluate");

  std::sort(ranked.begin(), ranked.end(), [&](const Ranked& a, const Ranked& b) {
    if (a.score != b.score) return a.score > b.score;
    const std::string& ia = images[a.image].image_id;
    const std::string& ib = images[b.image].image_id;
    if (ia != ib) return ia < ib;
    if (a.image != b.image) return a.image < b.image;
    return images[a.image].det_index[a.local] < images[b.image].det_index[b.local];
  });

  double ap_sum = 0.0;
  for (std::size_t d = 0; d < cfg.deltas.size(); ++d) {
    std::vector<bool> flags;
    flags.reserve(ranked.size());
    for (const Ranked& r : ranked) flags.push_back(images[r.image].tp[d][r.local]);

    DeltaResult res;
    res.delta = cfg.deltas[d];
    res.ap = average_precision(flags, report.num_gt);
    res.tp = static_cast<std::size_t>(std::count(flags.begin(), flags.end(), true));
    res.fp = flags.size() - res.tp;
    res.fn = report.num_gt - res.tp;
    res.pr = precision_recall(flags, report.num_gt);
    ap_sum += res.ap;
    report.per_delta.push_back(std::move(res));
  }
  report.mnocoap = ap_sum / static_cast<double>(cfg.deltas.size());
  return report;
}

EvalReport mnocoap(std::span<const EvalImage> dataset, const EvalConfig& cfg,
                   int jobs) {
  cfg.validate();
  if (dataset.empty()) throw ValidationError("dataset is empty");
  std::vector<ImageMatches> matches(dataset.size());
  parallel_for(dataset.size(), jobs, [&](std::size_t i) {
    const EvalImage& e = dataset[i];
    const NoCoMap map = image_noco_map(e.image, e.targets, cfg.noco);
    matches[i] = evaluate_image(e.image_id, map, e.targets, e.detections, cfg);
  });
  return accumulate(matches, cfg);
}

}  // namespace sirst
