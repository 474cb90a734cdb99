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

#ifndef BOXROT_EVAL_HPP
#define BOXROT_EVAL_HPP

// Label quality of rotation methods against perfect labels derived from
// object shapes.
//
// Label AP at threshold t is the fraction of instances whose generated label
// reaches IoU >= t with the perfect label. Each generated label belongs to
// exactly one truth instance and all confidences are equal, so the
// precision-recall curve collapses to that single accuracy value.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boxrot/annotations.hpp"
#include "boxrot/csv.hpp"
#include "boxrot/eiou.hpp"
#include "boxrot/geometry.hpp"
#include "boxrot/rotators.hpp"

namespace boxrot {

struct AnnotatedInstance {
  std::int64_t image_id = 0;
  std::int64_t annotation_id = 0;
  AABox box{0.0, 0.0, 1.0, 1.0};
  std::optional<Polygon> shape;
  std::int64_t category_id = 0;
};

struct QualityRow {
  std::string method;
  std::optional<double> theta_deg;  // nullopt for the pooled row
  double mean_iou = 0.0;            // fractions in [0, 1]
  double ap50 = 0.0;
  double ap75 = 0.0;
  std::size_t n = 0;
};

struct LabelQualityReport {
  std::vector<QualityRow> rows;
  std::size_t instances = 0;
  // Instances whose box disagreed with their shape by more than a pixel; the
  // box was rederived from the shape.
  std::vector<std::int64_t> rederived;

  const QualityRow* find(const std::string& method, std::optional<double> theta_deg) const;

  // Columns method, theta_deg, mean_iou, ap50, ap75, n; metrics scaled by 100.
  CsvTable to_csv() const;
  std::string to_pretty() const;
};

struct EvalConfig {
  bool pool = false;        // add one row per method over all angles
  ShapeDistConfig random_shapes;  // for the random method; draw index = instance index
  int jobs = 1;
};

// Generated labels come from each method, truth from the perfect method on
// the instance shape, both pivot-local (IoU does not depend on the canvas).
// Throws InvalidArgument listing the ids of instances without a shape.
LabelQualityReport evaluate_labels(std::span<const AnnotatedInstance> instances,
                                   std::span<const MethodId> methods,
                                   std::span<const double> thetas_rad, const EvalConfig& cfg = {});

// Instances of an annotation set, in annotation order.
std::vector<AnnotatedInstance> instances_from(const AnnotationSet& set);

enum class CorpusKind {
  kConvex,   // shapes from the random shape family
  kEllipse,  // inscribed ellipses (circles when the box is square)
  kCircle,   // circles in square boxes
};

struct CorpusConfig {
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  CorpusKind kind = CorpusKind::kConvex;
  ShapeDistConfig shapes;  // seed is taken from `seed`
  int image_size = 512;
};

// Synthetic annotation set: one image per instance, boxes with random size
// and aspect ratio centered in the image, and a polygon segmentation.
AnnotationSet synthetic_corpus(const CorpusConfig& cfg);

struct EiouQualityRow {
  std::string method;
  double eiou = 0.0;  // 0-100
  double ap50 = 0.0;  // fractions
  double ap75 = 0.0;
};

struct EiouQualityTable {
  std::vector<EiouQualityRow> rows;
  double spearman_eiou_ap75 = 0.0;

  CsvTable to_csv() const;
};

// EIoU of each method on `box` next to its label AP on `corpus` at
// `theta_rad`. Needs at least three methods.
EiouQualityTable eiou_vs_quality_table(std::span<const MethodId> methods, const AABox& box,
                                       const EiouConfig& ecfg,
                                       std::span<const AnnotatedInstance> corpus,
                                       double theta_rad = deg_to_rad(10.0));

// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> a, std::span<const double> b);

}  // namespace boxrot

#endif  // BOXROT_EVAL_HPP
