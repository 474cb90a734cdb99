/**
 * Copyright 2026 The boxrot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BOXROT_ANNOTATIONS_HPP
#define BOXROT_ANNOTATIONS_HPP

// COCO-style annotation subset.
//
//   {
//     "images":      [{"id": int, "width": int, "height": int, "file_name": str}],
//     "annotations": [{"id": int, "image_id": int, "category_id": int,
//                      "bbox": [x, y, w, h],
//                      "segmentation": [[x1, y1, x2, y2, ...], ...]   (optional)}],
//     "categories":  [{"id": int, "name": str}]
//   }
//
// Boxes are held in corner form. Only polygon segmentations are supported;
// RLE masks are rejected. When an annotation has several polygons the
// largest-area one is kept as the object shape.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "boxrot/geometry.hpp"

namespace boxrot {

struct ImageInfo {
  std::int64_t id = 0;
  int width = 0;
  int height = 0;
  std::string file_name;

  friend bool operator==(const ImageInfo&, const ImageInfo&) = default;
};

struct Annotation {
  std::int64_t id = 0;
  std::int64_t image_id = 0;
  std::int64_t category_id = 0;
  AABox box{0.0, 0.0, 1.0, 1.0};
  std::optional<Polygon> segmentation;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct Category {
  std::int64_t id = 0;
  std::string name;

  friend bool operator==(const Category&, const Category&) = default;
};

struct AnnotationSet {
  std::vector<ImageInfo> images;
  std::vector<Annotation> annotations;
  std::vector<Category> categories;

  const ImageInfo* find_image(std::int64_t id) const;

  friend bool operator==(const AnnotationSet&, const AnnotationSet&) = default;
};

// Notes produced while loading (merged multi-polygons, repaired polygons).
using LoadWarnings = std::vector<std::string>;

AnnotationSet parse_annotations(const std::string& json_text, LoadWarnings* warnings = nullptr);
AnnotationSet load_annotations(const std::filesystem::path& path, LoadWarnings* warnings = nullptr);

// Deterministic key order, coordinates rounded to 6 decimals.
std::string serialize_annotations(const AnnotationSet& set);
void save_annotations(const AnnotationSet& set, const std::filesystem::path& path);

// Rounds to 6 decimal places, the precision used in every written file.
double round6(double v);

}  // namespace boxrot

#endif  // BOXROT_ANNOTATIONS_HPP
