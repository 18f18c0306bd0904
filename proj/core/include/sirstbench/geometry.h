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
#include <optional>
#include <string>
#include <vector>

namespace sirst {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Axis-aligned continuous rectangle in image coordinates.
//
// Pixel (r, c) occupies [c, c+1) x [r, r+1), so an n x n "pixel box" spans
// n units and has area n * n.
struct BBox {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  Point center() const { return {(x0 + x1) / 2.0, (y0 + y1) / 2.0}; }

  // Finite corners with x0 <= x1 and y0 <= y1.
  bool valid() const;

  // Half-open membership: [x0, x1) x [y0, y1).
  bool contains(Point p) const {
    return p.x >= x0 && p.x < x1 && p.y >= y0 && p.y < y1;
  }

  static BBox from_center(Point c, double w, double h) {
    return {c.x - w / 2.0, c.y - h / 2.0, c.x + w / 2.0, c.y + h / 2.0};
  }

  friend bool operator==(const BBox&, const BBox&) = default;
};

// Annotated ground-truth target. The centroid, when present, is the
// annotated pixel of highest signal-to-clutter ratio.
struct GtTarget {
  BBox box;
  std::optional<Point> centroid;

  Point centroid_or_center() const {
    return centroid ? *centroid : box.center();
  }
};

struct Detection {
  BBox box;
  double score = 0.0;
  std::string image_id;
};

// Throws ValidationError unless the box is valid and the centroid (if any)
// lies inside the closed box.
void validate_target(const GtTarget& target);

// Throws ValidationError unless box is valid and score is a finite value in
// [0, 1].
void validate_detection(const Detection& det);

// Intersection over union of two continuous rectangles. Returns 0 when the
// union has zero area.
double iou(const BBox& a, const BBox& b);

// Grid of feature points for one pyramid level. Point (r, c) sits at the
// center of its stride x stride cell.
struct Lattice {
  int stride = 1;
  int rows = 0;
  int cols = 0;

  static Lattice for_image(int stride, int img_h, int img_w);

  std::size_t size() const {
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  Point point(int r, int c) const {
    return {(c + 0.5) * stride, (r + 0.5) * stride};
  }
  Point point(std::size_t index) const {
    return point(static_cast<int>(index / cols), static_cast<int>(index % cols));
  }
};

// Row-major list of lattice points covering an img_h x img_w image;
// ceil(img_h / stride) * ceil(img_w / stride) entries.
std::vector<Point> feature_lattice(int stride, int img_h, int img_w);

}  // namespace sirst
