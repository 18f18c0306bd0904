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

#include "sirstbench/report.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sirst {

std::string delta_key(double delta) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", delta);
  return buf;
}

std::string report_to_json(const EvalReport& report, bool with_curves) {
  nlohmann::ordered_json j;
  j["metric"] = "mNoCoAP";
  j["mnocoap"] = report.mnocoap;
  auto& ap = j["ap_per_delta"] = nlohmann::ordered_json::object();
  auto& counts = j["counts"] = nlohmann::ordered_json::object();
  for (const DeltaResult& d : report.per_delta) {
    ap[delta_key(d.delta)] = d.ap;
    counts[delta_key(d.delta)] = {{"tp", d.tp}, {"fp", d.fp}, {"fn", d.fn}};
  }
  if (with_curves) {
    auto& curves = j["pr_curves"] = nlohmann::ordered_json::object();
    for (const DeltaResult& d : report.per_delta) {
      std::vector<double> recall, precision;
      for (const PrPoint& p : d.pr) {
        recall.push_back(p.recall);
        precision.push_back(p.precision);
      }
      curves[delta_key(d.delta)] = {{"recall", recall}, {"precision", precision}};
    }
  }
  j["dataset"] = {{"images", report.num_images},
                  {"targets", report.num_gt},
                  {"detections", report.num_dets}};
  j["config"] = {{"deltas", report.config.deltas},
                 {"gamma", report.config.noco.gamma},
                 {"sigma_scale", report.config.noco.sigma_scale},
                 {"min_border", report.config.noco.min_border},
                 {"max_dets_per_image", report.config.max_dets_per_image}};
  return j.dump(2) + "\n";
}

std::string report_to_table(const EvalReport& report, std::string_view method) {
  std::ostringstream os;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%-12s %8s", "Method", "mNoCoAP");
  os << buf;
  for (const DeltaResult& d : report.per_delta) {
    std::snprintf(buf, sizeof(buf), " %7s",
                  ("AP_" + std::to_string(static_cast<int>(std::lround(d.delta * 100)))).c_str());
    os << buf;
  }
  os << "\n";
  std::snprintf(buf, sizeof(buf), "%-12s %8.3f", std::string(method).c_str(),
                report.mnocoap);
  os << buf;
  for (const DeltaResult& d : report.per_delta) {
    std::snprintf(buf, sizeof(buf), " %7.3f", d.ap);
    os << buf;
  }
  os << "\n";
  return os.str();
}

std::string report_to_svg(const EvalReport& report) {
  constexpr int kSize = 400;
  constexpr int kPad = 40;
  constexpr double kPlot = kSize - 2 * kPad;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize
     << "\" height=\"" << kSize << "\">\n";
  os << "<rect x=\"" << kPad << "\" y=\"" << kPad << "\" width=\"" << kPlot
     << "\" height=\"" << kPlot << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << kSize / 2 << "\" y=\"" << kSize - 10
     << "\" text-anchor=\"middle\">recall</text>\n";
  os << "<text x=\"12\" y=\"" << kSize / 2
     << "\" transform=\"rotate(-90 12," << kSize / 2
     << ")\" text-anchor=\"middle\">precision</text>\n";
  const std::size_t n = report.per_delta.size();
  for (std::size_t i = 0; i < n; ++i) {
    const DeltaResult& d = report.per_delta[i];
    const int hue = n > 1 ? static_cast<int>(240.0 * i / (n - 1)) : 0;
    os << "<polyline fill=\"none\" stroke=\"hsl(" << hue
       << ",80%,45%)\" data-delta=\"" << delta_key(d.delta) << "\" points=\"";
    char buf[64];
    for (const PrPoint& p : d.pr) {
      std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", kPad + p.recall * kPlot,
                    kPad + (1.0 - p.precision) * kPlot);
      os << buf;
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace sirst
