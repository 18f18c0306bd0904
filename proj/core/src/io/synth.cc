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

#include "sirstbench/io/synth.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sirstbench/error.h"

namespace sirst::io {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Background parse_background(const std::string& name) {
  if (name == "flat") return Background::kFlat;
  if (name == "gradient") return Background::kGradient;
  if (name == "clouds") return Background::kClouds;
  throw ValidationError("unknown background '" + name + "' (flat, gradient, clouds)");
}

std::string background_name(Background b) {
  switch (b) {
    case Background::kFlat: return "flat";
    case Background::kGradient: return "gradient";
    case Background::kClouds: return "clouds";
  }
  return "flat";
}

void SceneSpec::validate() const {
  if (height < 1 || width < 1) throw ValidationError("scene dimensions must be >= 1");
  if (n_targets < 0) throw ValidationError("n_targets must be >= 0");
  if (!(sigma_min > 0.0) || !(sigma_max >= sigma_min)) {
    throw ValidationError("need 0 < sigma_min <= sigma_max");
  }
  if (!(amplitude >= 0.0) || !(noise_sigma >= 0.0) || !(clutter >= 0.0)) {
    throw ValidationError("amplitude, noise_sigma and clutter must be >= 0");
  }
  if (max_retries < 1) throw ValidationError("max_retries must be >= 1");
}

namespace {

void add_background(const SceneSpec& spec, Rng& rng, Raster<double>& img) {
  const double level = rng.uniform(0.15, 0.35);
  double gx = 0.0, gy = 0.0;
  if (spec.background != Background::kFlat) {
    gx = rng.uniform(-0.2, 0.2);
    gy = rng.uniform(-0.2, 0.2);
  }
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      img(r, c) = level + gx * ((c + 0.5) / img.width() - 0.5) +
                  gy * ((r + 0.5) / img.height() - 0.5);
    }
  }
  if (spec.background != Background::kClouds) return;

  const double extent = std::min(img.height(), img.width());
  // Broad smooth cloud bodies.
  for (int k = 0; k < 6; ++k) {
    const double cx = rng.uniform(0.0, img.width());
    const double cy = rng.uniform(0.0, img.height());
    const double s = rng.uniform(extent / 16.0, extent / 6.0);
    const double a = rng.uniform(0.0, spec.clutter);
    for (int r = 0; r < img.height(); ++r) {
      for (int c = 0; c < img.width(); ++c) {
        const double dx = c + 0.5 - cx, dy = r + 0.5 - cy;
        img(r, c) += a * std::exp(-(dx * dx + dy * dy) / (2.0 * s * s));
      }
    }
  }
  // Bright patches with sharp borders.
  for (int k = 0; k < 2; ++k) {
    const double cx = rng.uniform(0.0, img.width());
    const double cy = rng.uniform(0.0, img.height());
    const double radius = rng.uniform(extent / 10.0, extent / 5.0);
    const double a = 0.5 * spec.clutter * rng.uniform(0.5, 1.0);
    for (int r = 0; r < img.height(); ++r) {
      for (int c = 0; c < img.width(); ++c) {
        const double dist = std::hypot(c + 0.5 - cx, r + 0.5 - cy);
        img(r, c) += a / (1.0 + std::exp(dist - radius));
      }
    }
  }
}

}  // namespace

Scene synth_scene(const SceneSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  Raster<double> canvas(spec.height, spec.width, 0.0);
  add_background(spec, rng, canvas);

  struct Blob {
    Point centre;
    double sigma;
    double amplitude;
  };
  std::vector<Blob> blobs;
  std::vector<GtTarget> targets;
  for (int t = 0; t < spec.n_targets; ++t) {
    bool placed = false;
    for (int attempt = 0; attempt < spec.max_retries && !placed; ++attempt) {
      const double sigma = rng.uniform(spec.sigma_min, spec.sigma_max);
      const double side = 3.0 * sigma;
      // Half extent of the gamma = 1 NoCo region plus one pixel.
      const double reach = 1.5 * side + 1.0;
      const double amp = spec.amplitude * rng.uniform(0.8, 1.2);
      if (2.0 * reach >= spec.width || 2.0 * reach >= spec.height) continue;
      Point c{rng.uniform(reach, spec.width - reach), rng.uniform(reach, spec.height - reach)};
      if (!spec.subpixel) c = {std::floor(c.x) + 0.5, std::floor(c.y) + 0.5};
      const bool clash = std::any_of(blobs.begin(), blobs.end(), [&](const Blob& b) {
        const double other = 1.5 * 3.0 * b.sigma + 1.0;
        return std::abs(b.centre.x - c.x) < reach + other &&
               std::abs(b.centre.y - c.y) < reach + other;
      });
      if (clash) continue;
      blobs.push_back({c, sigma, amp});
      targets.push_back({BBox::from_center(c, side, side), c});
      placed = true;
    }
    if (!placed) {
      std::ostringstream os;
      os << "could not place target " << t << " after " << spec.max_retries << " attempts";
      throw ValidationError(os.str());
    }
  }

  for (const Blob& b : blobs) {
    const int r0 = std::max(0, static_cast<int>(b.centre.y - 5.0 * b.sigma));
    const int r1 = std::min(spec.height, static_cast<int>(b.centre.y + 5.0 * b.sigma) + 1);
    const int c0 = std::max(0, static_cast<int>(b.centre.x - 5.0 * b.sigma));
    const int c1 = std::min(spec.width, static_cast<int>(b.centre.x + 5.0 * b.sigma) + 1);
    for (int r = r0; r < r1; ++r) {
      for (int c = c0; c < c1; ++c) {
        const double dx = c + 0.5 - b.centre.x, dy = r + 0.5 - b.centre.y;
        canvas(r, c) += b.amplitude * std::exp(-(dx * dx + dy * dy) / (2.0 * b.sigma * b.sigma));
      }
    }
  }

  std::vector<double> data(canvas.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double noise = spec.noise_sigma > 0.0 ? spec.noise_sigma * rng.normal() : 0.0;
    data[i] = std::clamp(canvas.data()[i] + noise, 0.0, 1.0);
  }
  return {GrayImage(spec.height, spec.width, std::move(data)), std::move(targets)};
}

SceneSpec easy_spec(std::uint64_t seed, int index) {
  SceneSpec s;
  s.height = 256;
  s.width = 256;
  s.n_targets = 3;
  s.sigma_min = 0.7;
  s.sigma_max = 2.0;
  s.amplitude = 0.5;
  s.noise_sigma = 0.005;
  s.background = index % 2 == 0 ? Background::kFlat : Background::kGradient;
  s.seed = seed + static_cast<std::uint64_t>(index);
  return s;
}

SceneSpec hard_spec(std::uint64_t seed, int index) {
  SceneSpec s = easy_spec(seed, index);
  s.amplitude = 0.15;
  s.noise_sigma = 0.01;
  s.background = Background::kClouds;
  s.clutter = 0.3;
  return s;
}

std::vector<Scene> easy_suite(std::uint64_t seed, int count) {
  std::vector<Scene> out;
  for (int i = 0; i < count; ++i) out.push_back(synth_scene(easy_spec(seed, i)));
  return out;
}

std::vector<Scene> hard_suite(std::uint64_t seed, int count) {
  std::vector<Scene> out;
  for (int i = 0; i < count; ++i) out.push_back(synth_scene(hard_spec(seed, i)));
  return out;
}

}  // namespace sirst::io
