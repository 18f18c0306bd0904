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

#include <string>
#include <string_view>

#include "sirstbench/eval.h"

namespace sirst {

// JSON document:
//   {"metric": "mNoCoAP", "mnocoap": real,
//    "ap_per_delta": {"0.10": real, ...},
//    "counts": {"0.10": {"tp": n, "fp": n, "fn": n}, ...},
//    "pr_curves": {"0.10": {"recall": [...], "precision": [...]}, ...},
//    "dataset": {"images": n, "targets": n, "detections": n},
//    "config": {"deltas": [...], "gamma": real, "sigma_scale": real,
//               "min_border": real, "max_dets_per_image": n}}
// pr_curves is omitted when with_curves is false.
std::string report_to_json(const EvalReport& report, bool with_curves = true);

// Aligned plain-text table: one row per method with mNoCoAP followed by
// AP_<100 * delta> columns, values in [0, 1] with three decimals.
std::string report_to_table(const EvalReport& report, std::string_view method);

// Standalone SVG with one precision-recall polyline per delta.
std::string report_to_svg(const EvalReport& report);

// "0.10"-style key for a delta.
std::string delta_key(double delta);

}  // namespace sirst
