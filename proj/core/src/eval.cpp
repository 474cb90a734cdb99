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

#include "boxrot/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <fmt/format.h>

#include "boxrot/error.hpp"
#include "boxrot/random.hpp"
#include "boxrot/parallel.hpp"

namespace boxrot {
namespace {

constexpr double kShapeBoxTolerance = 1.0;  // pixels
constexpr int kCorpusEllipseVertices = 256;
// Corpus shapes come from their own index range so that a random-method label
// drawn with a small index (instance index, annotation id) never reuses them.
constexpr std::uint64_t kCorpusDrawBase = std::uint64_t{1} << 62;

FrameSpec local_frame(const AABox& box) {
  FrameSpec frame;
  frame.width = 1.0;
  frame.height = 1.0;
  frame.mode = CanvasMode::kKeep;
  frame.pivot = box.center();
  return frame;
}

struct Tally {
  double iou_sum = 0.0;
  std::size_t hit50 = 0;
  std::size_t hit75 = 0;
  std::size_t n = 0;

  void add(double iou) {
    iou_sum += iou;
    hit50 += iou >= 0.5;
    hit75 += iou >= 0.75;
    ++n;
  }
  void merge(const Tally& o) {
    iou_sum += o.iou_sum;
    hit50 += o.hit50;
    hit75 += o.hit75;
    n += o.n;
  }
  QualityRow row(std::string method, std::optional<double> theta_deg) const {
    const double denom = n ? static_cast<double>(n) : 1.0;
    return {std::move(method), theta_deg, iou_sum / denom, static_cast<double>(hit50) / denom,
            static_cast<double>(hit75) / denom, n};
  }
};

std::vector<double> ranks(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

const QualityRow* LabelQualityReport::find(const std::string& method,
                                           std::optional<double> theta_deg) const {
  for (const QualityRow& row : rows) {
    if (row.method != method || row.theta_deg.has_value() != theta_deg.has_value()) continue;
    if (!theta_deg || std::abs(*row.theta_deg - *theta_deg) < 1e-9) return &row;
  }
  return nullptr;
}

CsvTable LabelQualityReport::to_csv() const {
  CsvTable table({"method", "theta_deg", "mean_iou", "ap50", "ap75", "n"});
  for (const QualityRow& r : rows) {
    table.add_row({r.method, r.theta_deg ? format_real(*r.theta_deg) : "pooled",
                   format_real(100.0 * r.mean_iou), format_real(100.0 * r.ap50),
                   format_real(100.0 * r.ap75), std::to_string(r.n)});
  }
  return table;
}

std::string LabelQualityReport::to_pretty() const {
  std::ostringstream out;
  out << fmt::format("{:<14} {:>9} {:>9} {:>9} {:>9} {:>7}\n", "method", "theta", "mean_iou",
                     "AP50", "AP75", "n");
  for (const QualityRow& r : rows) {
    out << fmt::format("{:<14} {:>9} {:>9.2f} {:>9.2f} {:>9.2f} {:>7}\n", r.method,
                       r.theta_deg ? fmt::format("{:.2f}", *r.theta_deg) : std::string("pooled"),
                       100.0 * r.mean_iou, 100.0 * r.ap50, 100.0 * r.ap75, r.n);
  }
  return out.str();
}

LabelQualityReport evaluate_labels(std::span<const AnnotatedInstance> instances,
                                   std::span<const MethodId> methods,
                                   std::span<const double> thetas_rad, const EvalConfig& cfg) {
  std::vector<std::string> missing;
  for (const AnnotatedInstance& inst : instances) {
    if (!inst.shape) {
      missing.push_back(fmt::format("image {} annotation {}", inst.image_id, inst.annotation_id));
    }
  }
  if (!missing.empty()) {
    std::string msg = fmt::format("{} instance(s) have no segmentation:", missing.size());
    for (const std::string& m : missing) msg += " [" + m + "]";
    throw InvalidArgument(msg);
  }
  if (methods.empty()) throw InvalidArgument("no methods to evaluate");
  if (thetas_rad.empty()) throw InvalidArgument("no angles to evaluate");

  LabelQualityReport report;
  report.instances = instances.size();
  std::vector<AABox> boxes;
  boxes.reserve(instances.size());
  for (const AnnotatedInstance& inst : instances) {
    const AABox from_shape = bbox_of(*inst.shape);
    if (!from_shape.approx_equal(inst.box, kShapeBoxTolerance)) {
      report.rederived.push_back(inst.annotation_id);
    }
    boxes.push_back(from_shape);
  }

  for (const MethodId& method : methods) {
    Tally pooled;
    for (double theta : thetas_rad) {
      std::vector<double> ious(instances.size());
      parallel_for(instances.size(), cfg.jobs, [&](std::size_t i) {
        const AABox& b0 = boxes[i];
        const FrameSpec frame = local_frame(b0);
        const AABox truth =
            rotate_label(MethodId::perfect(), b0, theta, frame, {&*instances[i].shape, {}});
        LabelInputs inputs;
        if (method.kind() == MethodKind::kPerfect) inputs.shape = &*instances[i].shape;
        inputs.rng = {cfg.random_shapes, i};
        const AABox generated = rotate_label(method, b0, theta, frame, inputs);
        ious[i] = iou_aabb(generated, truth);
      });
      Tally tally;
      for (double v : ious) tally.add(v);
      pooled.merge(tally);
      report.rows.push_back(tally.row(method.name(), rad_to_deg(theta)));
    }
    if (cfg.pool) report.rows.push_back(pooled.row(method.name(), std::nullopt));
  }
  return report;
}

std::vector<AnnotatedInstance> instances_from(const AnnotationSet& set) {
  std::vector<AnnotatedInstance> out;
  out.reserve(set.annotations.size());
  for (const Annotation& ann : set.annotations) {
    out.push_back({ann.image_id, ann.id, ann.box, ann.segmentation, ann.category_id});
  }
  return out;
}

AnnotationSet synthetic_corpus(const CorpusConfig& cfg) {
  if (cfg.image_size < 64) throw InvalidArgument("synthetic corpus image size must be >= 64");
  AnnotationSet set;
  set.categories.push_back({1, "object"});
  ShapeDistConfig shapes = cfg.shapes;
  shapes.seed = cfg.seed;
  const double size = cfg.image_size;
  const double max_side = 0.5 * size;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    DrawStream rng(cfg.seed, Stream::kCorpus, i);
    const double w = rng.uniform(0.0625 * size, max_side);
    double h = w;
    if (cfg.kind != CorpusKind::kCircle) {
      h = std::clamp(w * std::exp(rng.uniform(-std::log(3.0), std::log(3.0))), 8.0, max_side);
    }
    const double cx = 0.5 * size;
    const double cy = 0.5 * size;
    const AABox box(round6(cx - 0.5 * w), round6(cy - 0.5 * h), round6(cx + 0.5 * w),
                    round6(cy + 0.5 * h));
    const Polygon raw = cfg.kind == CorpusKind::kConvex
                            ? sample_valid_shape(box, shapes, kCorpusDrawBase + i)
                            : inscribed_ellipse(box, kCorpusEllipseVertices);
    std::vector<Point2> pts;
    pts.reserve(raw.size());
    for (const Point2& p : raw.vertices()) pts.push_back({round6(p.x), round6(p.y)});

    const auto id = static_cast<std::int64_t>(i + 1);
    set.images.push_back({id, cfg.image_size, cfg.image_size, fmt::format("synthetic_{:06}.ppm", id)});
    Annotation ann;
    ann.id = id;
    ann.image_id = id;
    ann.category_id = 1;
    ann.box = box;
    ann.segmentation = Polygon::from_trusted(std::move(pts));
    set.annotations.push_back(std::move(ann));
  }
  return set;
}

double spearman(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidArgument("spearman: length mismatch");
  if (a.size() < 2) throw InvalidArgument("spearman: need at least two values");
  const std::vector<double> ra = ranks(a);
  const std::vector<double> rb = ranks(b);
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    sab += (ra[i] - ma) * (rb[i] - mb);
    saa += (ra[i] - ma) * (ra[i] - ma);
    sbb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

CsvTable EiouQualityTable::to_csv() const {
  CsvTable table({"method", "eiou", "ap50", "ap75"});
  for (const EiouQualityRow& r : rows) {
    table.add_row({r.method, format_real(r.eiou), format_real(100.0 * r.ap50),
                   format_real(100.0 * r.ap75)});
  }
  return table;
}

EiouQualityTable eiou_vs_quality_table(std::span<const MethodId> methods, const AABox& box,
                                       const EiouConfig& ecfg,
                                       std::span<const AnnotatedInstance> corpus, double theta_rad) {
  if (methods.size() < 3) {
    throw InvalidArgument("EIoU/quality correlation needs at least 3 methods");
  }
  const CandidateSet candidates(box, ecfg);
  EiouQualityTable table;
  std::vector<double> eious, ap75s;
  const double thetas[] = {theta_rad};
  for (const MethodId& method : methods) {
    const double eiou = estimate_eiou_for_method(method, candidates, ecfg.shapes, ecfg.jobs).mean;
    EvalConfig cfg;
    cfg.random_shapes = ecfg.shapes;
    cfg.jobs = ecfg.jobs;
    const MethodId one[] = {method};
    const LabelQualityReport report = evaluate_labels(corpus, one, thetas, cfg);
    const QualityRow& row = report.rows.front();
    table.rows.push_back({method.name(), eiou, row.ap50, row.ap75});
    eious.push_back(eiou);
    ap75s.push_back(row.ap75);
  }
  table.spearman_eiou_ap75 = spearman(eious, ap75s);
  return table;
}

}  // namespace boxrot
