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

#include "cli/commands.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "sirstbench/assign.h"
#include "sirstbench/baselines/detector.h"
#include "sirstbench/error.h"
#include "sirstbench/eval.h"
#include "sirstbench/io/dataset.h"
#include "sirstbench/io/detections_io.h"
#include "sirstbench/io/image_io.h"
#include "sirstbench/io/noco_io.h"
#include "sirstbench/io/synth.h"
#include "sirstbench/losses.h"
#include "sirstbench/noco.h"
#include "sirstbench/parallel.h"
#include "sirstbench/report.h"

namespace sirst::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char* kDatasetHint =
    "dataset layout: <DIR>/annotations.json\n"
    "  {\"images\": [{\"id\": str, \"file\": str, \"height\": int, \"width\": int,\n"
    "               \"targets\": [{\"bbox\": [x0, y0, x1, y1], \"centroid\": [x, y]}]}]}\n"
    "  \"centroid\" is optional; \"file\" is relative to DIR (PGM or 8/16-bit gray PNG)\n";
constexpr const char* kDetectionsHint =
    "detections: JSON lines, one object per detection\n"
    "  {\"image_id\": str, \"bbox\": [x0, y0, x1, y1], \"score\": float in [0, 1]}\n";
constexpr const char* kFixtureHint =
    "loss fixture: JSON object\n"
    "  {\"image\": {\"height\": int, \"width\": int},\n"
    "   \"targets\": [{\"bbox\": [x0, y0, x1, y1]}],\n"
    "   \"levels\": {\"high\": {\"stride\": int, \"pseudo_factor\": real}, \"low\": {...}},\n"
    "   \"config\": {\"focal_alpha\", \"focal_gamma\", \"qfl_beta\", \"lambda\"} (optional),\n"
    "   \"high\": {\"cls\": [real], \"boxes\": [[x0, y0, x1, y1]]}, \"low\": {...},\n"
    "   \"noco\": {\"pred\": [real], \"target\": [real]}}\n"
    "  per-point arrays are row-major over each level's lattice\n"
    "  `sirstbench loss-eval --example` prints a complete fixture\n";

struct Options {
  std::string dataset;
  std::string detections;
  std::string out;
  std::string method = "lcm";
  std::string format;
  std::string scheme = "aspb";
  std::string preset = "easy";
  std::string fixture;
  std::string label;
  double gamma = 1.0;
  double sigma_scale = 0.5;
  double pseudo_factor = 1.5;
  std::vector<double> deltas;
  std::vector<int> strides{8};
  std::uint64_t seed = 0;
  int count = 20;
  int jobs = 1;
  int size = 3;
  bool example = false;
};

struct Context {
  std::ostream& out;
  spdlog::logger& log;
};

// Writes to --out when given, otherwise to stdout.
void emit(const Context& ctx, const std::string& path, const std::string& text) {
  if (path.empty()) {
    ctx.out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + path);
  f << text;
  if (!f) throw ValidationError("failed writing " + path);
}

std::string require(const std::string& value, const char* flag) {
  if (value.empty()) throw ValidationError(std::string(flag) + " is required");
  return value;
}

io::DatasetIndex load(const Context& ctx, const std::string& root) {
  std::vector<std::string> warnings;
  io::DatasetIndex index = io::load_dataset(require(root, "--dataset"), &warnings);
  for (const std::string& w : warnings) ctx.log.warn("{}", w);
  ctx.log.info("loaded {} images from {}", index.entries.size(), root);
  return index;
}

NoCoConfig noco_config(const Options& o) {
  NoCoConfig cfg;
  cfg.gamma = o.gamma;
  cfg.sigma_scale = o.sigma_scale;
  cfg.validate();
  return cfg;
}

void check_file_name(const std::string& id) {
  if (id.empty() || id == "." || id == ".." || id.find('/') != std::string::npos ||
      id.find('\\') != std::string::npos) {
    throw ValidationError("image id '" + id + "' cannot be used as a file name");
  }
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

int cmd_noco_gen(const Options& o, const Context& ctx) {
  const io::DatasetIndex index = load(ctx, o.dataset);
  const NoCoConfig cfg = noco_config(o);
  const fs::path out_dir = require(o.out, "--out");
  for (const io::DatasetEntry& e : index.entries) check_file_name(e.id);
  fs::create_directories(out_dir);
  parallel_for(index.entries.size(), o.jobs, [&](std::size_t i) {
    const io::DatasetEntry& e = index.entries[i];
    const GrayImage img = io::load_entry_image(index, e);
    const NoCoMap map = image_noco_map(img, e.targets, cfg);
    io::write_noco_bin(out_dir / (e.id + ".noco.bin"), map);
    io::write_noco_pgm(out_dir / (e.id + ".noco.pgm"), map);
  });
  std::string listing;
  for (const io::DatasetEntry& e : index.entries) {
    listing += e.id + "\t" + std::to_string(e.targets.size()) + "\t" + e.id + ".noco.bin\n";
  }
  ctx.out << listing;
  return kExitOk;
}

int cmd_detect(const Options& o, const Context& ctx) {
  const Method method = parse_method(o.method);
  const io::DatasetIndex index = load(ctx, o.dataset);
  std::vector<std::vector<Detection>> per_image(index.entries.size());
  parallel_for(index.entries.size(), o.jobs, [&](std::size_t i) {
    const io::DatasetEntry& e = index.entries[i];
    per_image[i] = detect(io::load_entry_image(index, e), method, e.id);
  });
  std::vector<Detection> all;
  for (auto& dets : per_image) all.insert(all.end(), dets.begin(), dets.end());
  ctx.log.info("{}: {} detections", method_name(method), all.size());
  emit(ctx, o.out, io::detections_to_jsonl(all));
  return kExitOk;
}

int cmd_eval(const Options& o, const Context& ctx) {
  const std::string format = o.format.empty() ? "json" : o.format;
  EvalConfig cfg;
  if (!o.deltas.empty()) cfg.deltas = o.deltas;
  cfg.noco = noco_config(o);
  cfg.validate();

  const io::DatasetIndex index = load(ctx, o.dataset);
  const std::vector<Detection> dets = io::read_detections(require(o.detections, "--detections"));
  auto groups = io::group_by_image(dets);
  std::set<std::string> known;
  for (const io::DatasetEntry& e : index.entries) known.insert(e.id);
  for (const auto& [id, unused] : groups) {
    if (!known.contains(id)) {
      throw ValidationError("detections reference unknown image_id '" + id + "'");
    }
  }

  std::vector<EvalImage> dataset(index.entries.size());
  parallel_for(index.entries.size(), o.jobs, [&](std::size_t i) {
    const io::DatasetEntry& e = index.entries[i];
    dataset[i].image_id = e.id;
    dataset[i].image = io::load_entry_image(index, e);
    dataset[i].targets = e.targets;
  });
  for (EvalImage& e : dataset) {
    if (auto it = groups.find(e.image_id); it != groups.end()) e.detections = std::move(it->second);
  }
  const EvalReport report = mnocoap(dataset, cfg, o.jobs);
  ctx.log.info("mNoCoAP = {:.6f}", report.mnocoap);

  std::string label = o.label;
  if (label.empty()) label = fs::path(o.detections).stem().string();
  if (format == "json") {
    emit(ctx, o.out, report_to_json(report));
  } else if (format == "table") {
    emit(ctx, o.out, report_to_table(report, label));
  } else {
    emit(ctx, o.out, report_to_svg(report));
  }
  return kExitOk;
}

int cmd_assign_stats(const Options& o, const Context& ctx) {
  const std::string format = o.format.empty() ? "json" : o.format;
  if (o.strides.empty()) throw ValidationError("--stride needs at least one value");
  std::vector<LevelSpec> levels;
  for (int s : o.strides) {
    LevelSpec level{s, o.pseudo_factor};
    level.validate();
    levels.push_back(level);
  }
  const io::DatasetIndex index = load(ctx, o.dataset);

  CoverageStats total;
  for (const io::DatasetEntry& e : index.entries) {
    std::vector<AssignmentResult> results;
    if (o.scheme == "aspb") {
      results = aspb_assign(e.targets, levels, e.height, e.width);
    } else {
      for (const LevelSpec& level : levels) {
        results.push_back(o.scheme == "center"
                              ? center_assign(e.targets, level, e.height, e.width)
                              : simplegrid_assign(e.targets, level.stride, e.height, e.width));
      }
    }
    const CoverageStats s = coverage_stats(e.targets.size(), results);
    total.targets_total += s.targets_total;
    total.targets_with_zero_positives += s.targets_with_zero_positives;
    total.positives_total += s.positives_total;
    total.negatives_total += s.negatives_total;
  }

  if (format == "json") {
    ordered_json j;
    j["scheme"] = o.scheme;
    j["strides"] = o.strides;
    j["pseudo_factor"] = o.pseudo_factor;
    j["images"] = index.entries.size();
    j["targets_total"] = total.targets_total;
    j["targets_with_zero_positives"] = total.targets_with_zero_positives;
    j["positives_total"] = total.positives_total;
    j["negatives_total"] = total.negatives_total;
    emit(ctx, o.out, j.dump(2) + "\n");
  } else {
    std::string strides;
    for (std::size_t i = 0; i < o.strides.size(); ++i) {
      strides += (i ? ";" : "") + std::to_string(o.strides[i]);
    }
    std::ostringstream os;
    os << "scheme,strides,pseudo_factor,images,targets_total,targets_with_zero_positives,"
          "positives_total,negatives_total\n"
       << o.scheme << "," << strides << "," << json(o.pseudo_factor).dump() << ","
       << index.entries.size() << "," << total.targets_total << ","
       << total.targets_with_zero_positives << "," << total.positives_total << ","
       << total.negatives_total << "\n";
    emit(ctx, o.out, os.str());
  }
  return kExitOk;
}

// --- loss-eval -------------------------------------------------------------

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("fixture is missing \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<double> real_array(const json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const json& v : j) {
    if (!v.is_number()) throw ValidationError(std::string(what) + " must contain numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

BBox box_of(const json& j, const char* what) {
  const std::vector<double> v = real_array(j, what);
  if (v.size() != 4) throw ValidationError(std::string(what) + " must have 4 numbers");
  return {v[0], v[1], v[2], v[3]};
}

LevelSpec level_of(const json& j) {
  LevelSpec level;
  level.stride = field(j, "stride").get<int>();
  if (j.contains("pseudo_factor")) level.pseudo_factor = j["pseudo_factor"].get<double>();
  level.validate();
  return level;
}

struct HeadData {
  std::vector<double> cls;
  std::vector<BBox> boxes;
};

HeadData head_of(const json& j) {
  HeadData h;
  h.cls = real_array(field(j, "cls"), "cls");
  const json& boxes = field(j, "boxes");
  if (!boxes.is_array()) throw ValidationError("boxes must be an array");
  for (const json& b : boxes) h.boxes.push_back(box_of(b, "box"));
  return h;
}

ordered_json breakdown_json(const LossBreakdown& b, const LossConfig& cfg) {
  ordered_json j;
  j["cls_high"] = b.cls_high;
  j["reg_high"] = b.reg_high;
  j["cls_low"] = b.cls_low;
  j["reg_low"] = b.reg_low;
  j["noco"] = b.noco;
  j["total"] = b.total;
  j["num_pos_high"] = b.num_pos_high;
  j["num_pos_low"] = b.num_pos_low;
  j["high_no_positives"] = b.high_no_positives;
  j["low_no_positives"] = b.low_no_positives;
  j["config"] = {{"focal_alpha", cfg.focal_alpha},
                 {"focal_gamma", cfg.focal_gamma},
                 {"qfl_beta", cfg.qfl_beta},
                 {"lambda", cfg.lambda}};
  return j;
}

int cmd_loss_eval(const Options& o, const Context& ctx) {
  if (o.example) {
    emit(ctx, o.out, example_loss_fixture(o.seed));
    return kExitOk;
  }
  const std::string format = o.format.empty() ? "json" : o.format;
  std::ifstream in(require(o.fixture, "FIXTURE"), std::ios::binary);
  if (!in) throw ValidationError("cannot open " + o.fixture);
  json fx;
  try {
    fx = json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError("malformed fixture JSON: " + std::string(e.what()));
  }

  try {
    LossConfig cfg;
    if (fx.contains("config")) {
      const json& c = fx["config"];
      cfg.focal_alpha = c.value("focal_alpha", cfg.focal_alpha);
      cfg.focal_gamma = c.value("focal_gamma", cfg.focal_gamma);
      cfg.qfl_beta = c.value("qfl_beta", cfg.qfl_beta);
      cfg.lambda = c.value("lambda", cfg.lambda);
    }
    cfg.validate();
    const json& image = field(fx, "image");
    const int h = field(image, "height").get<int>();
    const int w = field(image, "width").get<int>();
    if (h < 1 || w < 1) throw ValidationError("image dimensions must be >= 1");
    std::vector<GtTarget> targets;
    for (const json& t : field(fx, "targets")) {
      GtTarget target{box_of(field(t, "bbox"), "bbox"), std::nullopt};
      validate_target(target);
      targets.push_back(target);
    }
    const json& levels = field(fx, "levels");
    const std::vector<LevelSpec> specs{level_of(field(levels, "high")),
                                       level_of(field(levels, "low"))};
    const std::vector<AssignmentResult> assigned = aspb_assign(targets, specs, h, w);

    const HeadData high = head_of(field(fx, "high"));
    const HeadData low = head_of(field(fx, "low"));
    const json& noco = field(fx, "noco");
    const std::vector<double> noco_pred = real_array(field(noco, "pred"), "noco.pred");
    const std::vector<double> noco_target = real_array(field(noco, "target"), "noco.target");

    const LossBreakdown b = total_loss({high.cls, high.boxes, &assigned[0]},
                                       {low.cls, low.boxes, &assigned[1]},
                                       {noco_pred, noco_target}, cfg);
    if (b.high_no_positives) ctx.log.warn("high-level head has no positives");
    if (b.low_no_positives) ctx.log.warn("low-level head has no positives");

    const ordered_json j = breakdown_json(b, cfg);
    if (format == "json") {
      emit(ctx, o.out, j.dump(2) + "\n");
    } else {
      std::string table;
      for (const char* key : {"cls_high", "reg_high", "cls_low", "reg_low", "noco", "total"}) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%-10s %.10g\n", key, j[key].get<double>());
        table += buf;
      }
      emit(ctx, o.out, table);
    }
  } catch (const json::exception& e) {
    throw ValidationError("bad fixture field: " + std::string(e.what()));
  }
  return kExitOk;
}

int cmd_synth(const Options& o, const Context& ctx) {
  if (o.count < 0) throw ValidationError("--count must be >= 0");
  const fs::path out_dir = require(o.out, "--out");
  fs::create_directories(out_dir);
  io::DatasetIndex index{out_dir, std::vector<io::DatasetEntry>(static_cast<std::size_t>(o.count))};
  parallel_for(index.entries.size(), o.jobs, [&](std::size_t i) {
    const int k = static_cast<int>(i);
    const io::SceneSpec spec = o.preset == "hard" ? io::hard_spec(o.seed, k) : io::easy_spec(o.seed, k);
    const io::Scene scene = io::synth_scene(spec);
    char id[32];
    std::snprintf(id, sizeof id, "scene_%03d", k);
    io::DatasetEntry& e = index.entries[i];
    e.id = id;
    e.file = e.id + ".pgm";
    e.height = spec.height;
    e.width = spec.width;
    e.targets = scene.targets;
    io::write_pgm(out_dir / e.file, scene.image);
  });
  io::save_dataset(index, out_dir);
  std::size_t targets = 0;
  for (const io::DatasetEntry& e : index.entries) targets += e.targets.size();
  ctx.out << "synth: " << o.count << " " << o.preset << " images, " << targets
          << " targets, seed " << o.seed << "\n";
  return kExitOk;
}

int cmd_iou_demo(const Options& o, const Context& ctx) {
  if (o.size < 1) throw ValidationError("--size must be >= 1");
  const double n = o.size;
  const BBox gt{0.0, 0.0, n, n};
  std::string text = "gt " + std::to_string(o.size) + "x" + std::to_string(o.size) +
                     ", prediction shifted diagonally\nshift_px  iou\n";
  for (int shift = 0; shift <= o.size; ++shift) {
    const BBox pred{gt.x0 + shift, gt.y0 + shift, gt.x1 + shift, gt.y1 + shift};
    text += std::to_string(shift) + std::string(10 - std::to_string(shift).size(), ' ') +
            fixed(iou(gt, pred), 6) + "\n";
  }
  ctx.out << text;
  return kExitOk;
}

spdlog::level::level_enum log_level() {
  const char* env = std::getenv("SIRSTBENCH_LOG");
  if (env == nullptr || *env == '\0') return spdlog::level::warn;
  return spdlog::level::from_str(env);
}

void print_hint(std::ostream& err, const std::string& command) {
  if (command == "noco-gen" || command == "detect" || command == "assign-stats") {
    err << kDatasetHint;
  } else if (command == "eval") {
    err << kDatasetHint << kDetectionsHint;
  } else if (command == "loss-eval") {
    err << kFixtureHint;
  }
}

}  // namespace

std::string example_loss_fixture(unsigned long long seed) {
  io::Rng rng(seed);
  const int h = 32, w = 32;
  const LevelSpec high{8, 1.5}, low{4, 1.5};
  ordered_json fx;
  fx["image"] = {{"height", h}, {"width", w}};
  fx["levels"] = {{"high", {{"stride", high.stride}, {"pseudo_factor", high.pseudo_factor}}},
                  {"low", {{"stride", low.stride}, {"pseudo_factor", low.pseudo_factor}}}};
  LossConfig cfg;
  fx["config"] = {{"focal_alpha", cfg.focal_alpha},
                  {"focal_gamma", cfg.focal_gamma},
                  {"qfl_beta", cfg.qfl_beta},
                  {"lambda", cfg.lambda}};
  ordered_json targets = ordered_json::array();
  for (int t = 0; t < 2; ++t) {
    const double side = 2.0 + std::floor(rng.uniform(0.0, 6.0));
    const double x0 = std::floor(rng.uniform(0.0, w - side));
    const double y0 = std::floor(rng.uniform(0.0, h - side));
    targets.push_back({{"bbox", {x0, y0, x0 + side, y0 + side}}});
  }
  fx["targets"] = targets;
  auto head = [&](const LevelSpec& level) {
    const Lattice lattice = Lattice::for_image(level.stride, h, w);
    ordered_json cls = ordered_json::array(), boxes = ordered_json::array();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      cls.push_back(rng.uniform(0.01, 0.99));
      const Point p = lattice.point(i);
      const double half = rng.uniform(1.0, 6.0);
      boxes.push_back({p.x - half, p.y - half, p.x + half, p.y + half});
    }
    return ordered_json{{"cls", cls}, {"boxes", boxes}};
  };
  fx["high"] = head(high);
  fx["low"] = head(low);
  const Lattice low_lattice = Lattice::for_image(low.stride, h, w);
  ordered_json pred = ordered_json::array(), target = ordered_json::array();
  for (std::size_t i = 0; i < low_lattice.size(); ++i) {
    pred.push_back(rng.uniform(0.01, 0.99));
    target.push_back(rng.uniform(0.0, 1.0));
  }
  fx["noco"] = {{"pred", pred}, {"target", target}};
  return fx.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  spdlog::logger log("sirstbench", sink);
  log.set_pattern("[%l] %v");
  log.set_level(log_level());
  const Context ctx{out, log};

  Options o;
  CLI::App app{"Infrared small-target benchmarking toolkit", "sirstbench"};
  app.require_subcommand(1);
  const auto jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  };
  const auto noco_flags = [&](CLI::App* sub) {
    sub->add_option("--gamma", o.gamma, "NoCo border ratio in (0, 1]")->capture_default_str();
    sub->add_option("--sigma-scale", o.sigma_scale, "NoCo Gaussian sigma / region half-extent")
        ->capture_default_str();
  };

  CLI::App* noco_gen = app.add_subcommand("noco-gen", "Write NoCo maps (.noco.bin + .noco.pgm) per image");
  noco_gen->add_option("--dataset", o.dataset, "Dataset directory")->required();
  noco_gen->add_option("--out", o.out, "Output directory")->required();
  noco_flags(noco_gen);
  jobs(noco_gen);

  CLI::App* detect_cmd = app.add_subcommand("detect", "Run a baseline detector over a dataset");
  detect_cmd->add_option("--dataset", o.dataset, "Dataset directory")->required();
  detect_cmd->add_option("--method", o.method, "lcm, mpcm or ipi")
      ->check(CLI::IsMember({"lcm", "mpcm", "ipi"}))
      ->capture_default_str();
  detect_cmd->add_option("--out", o.out, "Detections file (JSON lines); stdout if omitted");
  jobs(detect_cmd);

  CLI::App* eval_cmd = app.add_subcommand("eval", "Score detections with mNoCoAP");
  eval_cmd->add_option("--dataset", o.dataset, "Dataset directory")->required();
  eval_cmd->add_option("--detections", o.detections, "Detections file (JSON lines)")->required();
  eval_cmd->add_option("--deltas", o.deltas, "Comma-separated NoCo thresholds")->delimiter(',');
  eval_cmd->add_option("--format", o.format, "json, table or svg (default json)")
      ->check(CLI::IsMember({"json", "table", "svg"}));
  eval_cmd->add_option("--label", o.label, "Row label in table output (default: detections file stem)");
  eval_cmd->add_option("--out", o.out, "Report file; stdout if omitted");
  noco_flags(eval_cmd);
  jobs(eval_cmd);

  CLI::App* assign_cmd = app.add_subcommand("assign-stats", "Label-assignment coverage statistics");
  assign_cmd->add_option("--dataset", o.dataset, "Dataset directory")->required();
  assign_cmd->add_option("--scheme", o.scheme, "center, aspb or simplegrid")
      ->check(CLI::IsMember({"center", "aspb", "simplegrid"}))
      ->capture_default_str();
  assign_cmd->add_option("--stride", o.strides, "Comma-separated lattice strides")
      ->delimiter(',')
      ->capture_default_str();
  assign_cmd->add_option("--pseudo-factor", o.pseudo_factor, "Pseudo-box side / stride")
      ->capture_default_str();
  assign_cmd->add_option("--format", o.format, "json or csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  assign_cmd->add_option("--out", o.out, "Output file; stdout if omitted");

  CLI::App* loss_cmd = app.add_subcommand("loss-eval", "Evaluate the training objective on a fixture");
  loss_cmd->add_option("fixture", o.fixture, "Fixture JSON file");
  loss_cmd->add_flag("--example", o.example, "Print a random fixture instead");
  loss_cmd->add_option("--seed", o.seed, "Seed for --example")->capture_default_str();
  loss_cmd->add_option("--format", o.format, "json or table (default json)")
      ->check(CLI::IsMember({"json", "table"}));
  loss_cmd->add_option("--out", o.out, "Output file; stdout if omitted");

  CLI::App* synth_cmd = app.add_subcommand("synth", "Generate a synthetic dataset");
  synth_cmd->add_option("--out", o.out, "Output directory")->required();
  synth_cmd->add_option("--preset", o.preset, "easy or hard")
      ->check(CLI::IsMember({"easy", "hard"}))
      ->capture_default_str();
  synth_cmd->add_option("--seed", o.seed, "Base seed; image i uses seed + i")->capture_default_str();
  synth_cmd->add_option("--count", o.count, "Number of images")->capture_default_str();
  jobs(synth_cmd);

  CLI::App* iou_cmd = app.add_subcommand("iou-demo", "IoU of a small box under diagonal pixel shifts");
  iou_cmd->add_option("--size", o.size, "Box side in pixels")->capture_default_str();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::string command;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    command = app.get_subcommands().front()->get_name();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    const auto parsed = app.get_subcommands();
    if (!parsed.empty()) print_hint(err, parsed.front()->get_name());
    return kExitValidation;
  }

  try {
    if (command == "noco-gen") return cmd_noco_gen(o, ctx);
    if (command == "detect") return cmd_detect(o, ctx);
    if (command == "eval") return cmd_eval(o, ctx);
    if (command == "assign-stats") return cmd_assign_stats(o, ctx);
    if (command == "loss-eval") return cmd_loss_eval(o, ctx);
    if (command == "synth") return cmd_synth(o, ctx);
    return cmd_iou_demo(o, ctx);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    print_hint(err, command);
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace sirst::cli
