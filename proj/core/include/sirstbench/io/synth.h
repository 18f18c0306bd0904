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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sirstbench/geometry.h"
#include "sirstbench/image.h"

namespace sirst::io {

// Seeded generator whose output is identical on every platform:
// std::mt19937_64 is fully specified by the standard, the standard
// distributions are not, so the mapping to doubles is done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

enum class Background { kFlat, kGradient, kClouds };

Background parse_background(const std::string& name);
std::string background_name(Background b);

struct SceneSpec {
  int height = 128;
  int width = 128;
  int n_targets = 3;
  // Blob sigma range, pixels. The GT box is the 3-sigma extent (side 3 sigma).
  double sigma_min = 0.7;
  double sigma_max = 2.0;
  // Peak amplitude above background; each target draws a factor in [0.8, 1.2].
  double amplitude = 0.5;
  // Stddev of additive white noise. SNR = amplitude / noise_sigma.
  double noise_sigma = 0.005;
  Background background = Background::kFlat;
  // Amplitude of cloud structures (kClouds only).
  double clutter = 0.0;
  // false: blob centres sit on pixel centres, as annotated centroids do.
  bool subpixel = false;
  std::uint64_t seed = 0;
  int max_retries = 1000;

  void validate() const;
};

struct Scene {
  GrayImage image;
  std::vector<GtTarget> targets;
};

// Renders background + isotropic Gaussian blobs + noise, clipped to [0, 1].
// Targets are placed so that their NoCo extended regions (gamma = 1) do not
// overlap and stay inside the image; throws ValidationError once max_retries
// placements are rejected for one target.
Scene synth_scene(const SceneSpec& spec);

// Fixed scene families used by tests, benchmarks and `synth --preset`.
// Scene i uses seed (seed + i).
//   easy: high SNR, flat and gradient backgrounds alternating.
//   hard: low SNR over cloud clutter.
SceneSpec easy_spec(std::uint64_t seed, int index);
SceneSpec hard_spec(std::uint64_t seed, int index);
std::vector<Scene> easy_suite(std::uint64_t seed, int count = 20);
std::vector<Scene> hard_suite(std::uint64_t seed, int count = 20);

}  // namespace sirst::io
