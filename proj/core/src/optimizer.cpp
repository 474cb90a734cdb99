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

// Gradient ascent on a polygon's vertices for the shape whose rotated
// bounding boxes have the highest expected IoU with the candidate boxes.
//
// The iterate lives in box-normalized coordinates u, v in [0, 1]. The box
// operator is smoothed with log-sum-exp at temperature tau so that every
// vertex near an extreme receives gradient; a step is accepted only if the
// unsmoothed objective does not decrease (backtracking on the step length).
// After each step the polygon is replaced by its convex hull resampled at
// equal arc length and rescaled so that its bounding box is the box again.

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "boxrot/eiou.hpp"
#include "boxrot/error.hpp"
#include "boxrot/parallel.hpp"

namespace boxrot {
namespace {

constexpr int kWindow = 50;
// tau decays geometrically over this fraction of the iteration budget, then
// stays at tau / 10; convergence is only tested once it has settled
constexpr double kAnnealFraction = 0.8;
constexpr double kMinStepFraction = 1e-4;

struct Vertex {
  double u;
  double v;
};

using Shape = std::vector<Vertex>;

// Geometry of the problem in centered coordinates scaled by sqrt(W * H).
struct Frame {
  AABox box;
  double w;
  double h;
  double scale;

  double x(const Vertex& p) const { return (p.u - 0.5) * w / scale; }
  double y(const Vertex& p) const { return (p.v - 0.5) * h / scale; }
};

struct ScaledBox {
  double x0, y0, x1, y1;
};

// Soft extremes: value plus normalized weights over the inputs.
double soft_max(std::span<const double> vals, double tau, std::span<double> weights) {
  const double m = *std::max_element(vals.begin(), vals.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    weights[i] = std::exp((vals[i] - m) / tau);
    sum += weights[i];
  }
  for (double& w : weights) w /= sum;
  return m + tau * std::log(sum);
}

double soft_min(std::span<const double> vals, double tau, std::span<double> weights) {
  const double m = *std::min_element(vals.begin(), vals.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    weights[i] = std::exp((m - vals[i]) / tau);
    sum += weights[i];
  }
  for (double& w : weights) w /= sum;
  return m - tau * std::log(sum);
}

class Objective {
 public:
  Objective(const Frame& frame, const CandidateSet& candidates, int jobs)
      : frame_(frame), candidates_(candidates), jobs_(jobs) {
    const auto thetas = candidates.thetas();
    const Point2 c = frame.box.center();
    scaled_.resize(thetas.size() * candidates.samples());
    for (std::size_t t = 0; t < thetas.size(); ++t) {
      const auto boxes = candidates.at(t);
      for (std::size_t k = 0; k < boxes.size(); ++k) {
        const AABox& b = boxes[k];
        scaled_[t * candidates.samples() + k] = {(b.xmin() - c.x) / frame.scale,
                                                 (b.ymin() - c.y) / frame.scale,
                                                 (b.xmax() - c.x) / frame.scale,
                                                 (b.ymax() - c.y) / frame.scale};
      }
    }
  }

  // Unsmoothed EIoU (0-100) averaged over all candidate angles.
  double hard(const Shape& shape) const {
    const std::size_t n_theta = candidates_.thetas().size();
    std::vector<double> per_theta(n_theta);
    parallel_for(n_theta, jobs_, [&](std::size_t t) {
      const auto [c, s] = trig(t);
      ScaledBox lb{INFINITY, INFINITY, -INFINITY, -INFINITY};
      for (const Vertex& p : shape) {
        const double x = frame_.x(p);
        const double y = frame_.y(p);
        const double xr = c * x - s * y;
        const double yr = s * x + c * y;
        lb.x0 = std::min(lb.x0, xr);
        lb.x1 = std::max(lb.x1, xr);
        lb.y0 = std::min(lb.y0, yr);
        lb.y1 = std::max(lb.y1, yr);
      }
      double sum = 0.0;
      for (const ScaledBox& b : at(t)) sum += iou(lb, b);
      per_theta[t] = sum / static_cast<double>(candidates_.samples());
    });
    return 100.0 * reduce(per_theta);
  }

  // Smoothed EIoU (0-100) and its gradient with respect to (u, v).
  double smoothed(const Shape& shape, double tau, std::vector<Vertex>& grad) const {
    const std::size_t n_theta = candidates_.thetas().size();
    const std::size_t m = shape.size();
    std::vector<double> per_theta(n_theta);
    std::vector<std::vector<Vertex>> partial(n_theta, std::vector<Vertex>(m));
    parallel_for(n_theta, jobs_, [&](std::size_t t) {
      const auto [c, s] = trig(t);
      std::vector<double> xr(m), yr(m), wx0(m), wx1(m), wy0(m), wy1(m);
      for (std::size_t i = 0; i < m; ++i) {
        const double x = frame_.x(shape[i]);
        const double y = frame_.y(shape[i]);
        xr[i] = c * x - s * y;
        yr[i] = s * x + c * y;
      }
      const ScaledBox lb{soft_min(xr, tau, wx0), soft_min(yr, tau, wy0), soft_max(xr, tau, wx1),
                         soft_max(yr, tau, wy1)};
      const double lw = lb.x1 - lb.x0;
      const double lh = lb.y1 - lb.y0;
      const double area = lw * lh;
      double sum = 0.0, gx0 = 0.0, gy0 = 0.0, gx1 = 0.0, gy1 = 0.0;
      for (const ScaledBox& b : at(t)) {
        const double iw = std::min(lb.x1, b.x1) - std::max(lb.x0, b.x0);
        const double ih = std::min(lb.y1, b.y1) - std::max(lb.y0, b.y0);
        if (iw <= 0.0 || ih <= 0.0) continue;
        const double inter = iw * ih;
        const double uni = area + (b.x1 - b.x0) * (b.y1 - b.y0) - inter;
        sum += inter / uni;
        const double d_inter = (uni + inter) / (uni * uni);
        const double d_area = -inter / (uni * uni);
        gx1 += d_inter * ih * (lb.x1 < b.x1 ? 1.0 : 0.0) + d_area * lh;
        gx0 += -d_inter * ih * (lb.x0 > b.x0 ? 1.0 : 0.0) - d_area * lh;
        gy1 += d_inter * iw * (lb.y1 < b.y1 ? 1.0 : 0.0) + d_area * lw;
        gy0 += -d_inter * iw * (lb.y0 > b.y0 ? 1.0 : 0.0) - d_area * lw;
      }
      const double inv_k = 1.0 / static_cast<double>(candidates_.samples());
      per_theta[t] = sum * inv_k;
      for (std::size_t i = 0; i < m; ++i) {
        const double g_xr = (gx0 * wx0[i] + gx1 * wx1[i]) * inv_k;
        const double g_yr = (gy0 * wy0[i] + gy1 * wy1[i]) * inv_k;
        const double g_x = g_xr * c + g_yr * s;
        const double g_y = -g_xr * s + g_yr * c;
        partial[t][i] = {g_x * frame_.w / frame_.scale, g_y * frame_.h / frame_.scale};
      }
    });
    grad.assign(m, {0.0, 0.0});
    for (std::size_t t = 0; t < n_theta; ++t) {
      for (std::size_t i = 0; i < m; ++i) {
        grad[i].u += partial[t][i].u;
        grad[i].v += partial[t][i].v;
      }
    }
    const double norm = 100.0 / static_cast<double>(n_theta);
    for (Vertex& g : grad) {
      g.u *= norm;
      g.v *= norm;
    }
    return 100.0 * reduce(per_theta);
  }

 private:
  std::pair<double, double> trig(std::size_t t) const {
    const Rotation rot(candidates_.thetas()[t], {});
    return {rot.cos_theta(), rot.sin_theta()};
  }

  std::span<const ScaledBox> at(std::size_t t) const {
    return std::span<const ScaledBox>(scaled_).subspan(t * candidates_.samples(),
                                                       candidates_.samples());
  }

  static double iou(const ScaledBox& a, const ScaledBox& b) {
    const double iw = std::min(a.x1, b.x1) - std::max(a.x0, b.x0);
    const double ih = std::min(a.y1, b.y1) - std::max(a.y0, b.y0);
    if (iw <= 0.0 || ih <= 0.0) return 0.0;
    const double inter = iw * ih;
    return inter / ((a.x1 - a.x0) * (a.y1 - a.y0) + (b.x1 - b.x0) * (b.y1 - b.y0) - inter);
  }

  static double reduce(const std::vector<double>& per_theta) {
    double sum = 0.0;
    for (double v : per_theta) sum += v;
    return sum / static_cast<double>(per_theta.size());
  }

  const Frame& frame_;
  const CandidateSet& candidates_;
  int jobs_;
  std::vector<ScaledBox> scaled_;
};

// Convex hull resampled to `m` points at equal arc length (pixel metric).
Shape resample_hull(const Shape& shape, const Frame& frame, std::size_t m) {
  std::vector<Point2> pts;
  pts.reserve(shape.size());
  for (const Vertex& p : shape) pts.push_back({p.u, p.v});
  const std::vector<Point2> hull = convex_hull(std::move(pts));
  if (hull.size() < 3) throw Error("optimizer iterate collapsed to a degenerate shape");

  const std::size_t n = hull.size();
  std::vector<double> cum(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = hull[i];
    const Point2 b = hull[(i + 1) % n];
    cum[i + 1] = cum[i] + std::hypot((b.x - a.x) * frame.w, (b.y - a.y) * frame.h);
  }
  Shape out;
  out.reserve(m);
  std::size_t seg = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const double target = cum[n] * static_cast<double>(j) / static_cast<double>(m);
    while (seg + 1 < n && cum[seg + 1] <= target) ++seg;
    const double len = cum[seg + 1] - cum[seg];
    const double f = len > 0.0 ? (target - cum[seg]) / len : 0.0;
    const Point2 a = hull[seg];
    const Point2 b = hull[(seg + 1) % n];
    out.push_back({a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)});
  }
  return out;
}

// The box itself as m points: every corner plus points spread over each side
// in proportion to its length.
Shape box_perimeter(const Frame& frame, std::size_t m) {
  const double lengths[4] = {frame.w, frame.h, frame.w, frame.h};
  const Vertex corners[4] = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
  const double perimeter = 2.0 * (frame.w + frame.h);
  std::size_t counts[4];
  std::size_t used = 0;
  for (int i = 0; i < 4; ++i) {
    counts[i] = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(static_cast<double>(m) * lengths[i] / perimeter)));
    used += counts[i];
  }
  // rounding leaves at most +-2 points; settle them on a longest side
  const int longest = frame.w >= frame.h ? 0 : 1;
  counts[longest] += m;
  counts[longest] -= used;
  Shape out;
  out.reserve(m);
  for (int i = 0; i < 4; ++i) {
    const Vertex a = corners[i];
    const Vertex b = corners[(i + 1) % 4];
    for (std::size_t j = 0; j < counts[i]; ++j) {
      const double f = static_cast<double>(j) / static_cast<double>(counts[i]);
      out.push_back({a.u + f * (b.u - a.u), a.v + f * (b.v - a.v)});
    }
  }
  return out;
}

// Affine rescale per axis so the bounding box is the unit square.
void project_to_box(Shape& shape) {
  double u0 = INFINITY, u1 = -INFINITY, v0 = INFINITY, v1 = -INFINITY;
  for (const Vertex& p : shape) {
    u0 = std::min(u0, p.u);
    u1 = std::max(u1, p.u);
    v0 = std::min(v0, p.v);
    v1 = std::max(v1, p.v);
  }
  if (!(u1 > u0) || !(v1 > v0)) throw Error("optimizer iterate has zero extent");
  for (Vertex& p : shape) {
    p.u = (p.u - u0) / (u1 - u0);
    p.v = (p.v - v0) / (v1 - v0);
  }
}

Polygon to_polygon(const Shape& shape, const AABox& box) {
  std::vector<Point2> pts;
  pts.reserve(shape.size());
  for (const Vertex& p : shape) {
    // endpoints land exactly on the box sides
    pts.push_back({(1.0 - p.u) * box.xmin() + p.u * box.xmax(),
                   (1.0 - p.v) * box.ymin() + p.v * box.ymax()});
  }
  return Polygon::from_trusted(std::move(pts));
}

}  // namespace

void OptimizerConfig::validate() const {
  if (vertices < 8) throw InvalidArgument("optimizer needs at least 8 vertices");
  if (!(tau > 0.0)) throw InvalidArgument("smoothing temperature must be > 0");
  if (!(step > 0.0)) throw InvalidArgument("step size must be > 0");
  if (max_iterations < 0) throw InvalidArgument("max_iterations must be >= 0");
  if (!(tolerance >= 0.0)) throw InvalidArgument("tolerance must be >= 0");
}

EiouTrace optimize_canonical_shape(const AABox& box, const OptimizerConfig& ocfg,
                                   const EiouConfig& ecfg) {
  ocfg.validate();
  ecfg.validate();

  const CandidateSet one_sided(box, ecfg);
  const CandidateSet candidates = ocfg.mirror_angles ? one_sided.mirrored() : one_sided;
  const Frame frame{box, box.width(), box.height(), std::sqrt(box.width() * box.height())};
  const Objective objective(frame, candidates, ecfg.jobs);
  const std::size_t m = static_cast<std::size_t>(ocfg.vertices);

  Shape shape = box_perimeter(frame, m);

  EiouTrace trace;
  double current = objective.hard(shape);
  trace.objective.push_back(current);
  trace.tau.push_back(ocfg.tau);
  trace.step.push_back(0.0);

  std::vector<Vertex> grad;
  int decreasing = 0;
  const int anneal_iters = std::max(1, static_cast<int>(kAnnealFraction * ocfg.max_iterations));
  for (int it = 0; it < ocfg.max_iterations; ++it) {
    const double progress = std::min(1.0, static_cast<double>(it) / anneal_iters);
    const double tau = ocfg.tau * std::pow(0.1, progress);
    objective.smoothed(shape, tau, grad);

    double lr = ocfg.step;
    double accepted_lr = 0.0;
    double next_value = current;
    Shape next = shape;
    while (lr >= ocfg.step * kMinStepFraction) {
      Shape trial = shape;
      for (std::size_t i = 0; i < m; ++i) {
        trial[i].u += lr * grad[i].u;
        trial[i].v += lr * grad[i].v;
      }
      trial = resample_hull(trial, frame, m);
      project_to_box(trial);
      const double value = objective.hard(trial);
      if (value >= current) {
        next = std::move(trial);
        next_value = value;
        accepted_lr = lr;
        break;
      }
      lr *= 0.5;
    }

    decreasing = next_value < current - ocfg.tolerance ? decreasing + 1 : 0;
    if (decreasing >= kWindow) {
      throw Error(fmt::format("gradient ascent diverged at iteration {}", it));
    }
    shape = std::move(next);
    current = next_value;
    trace.objective.push_back(current);
    trace.tau.push_back(tau);
    trace.step.push_back(accepted_lr);
    trace.iterations = it + 1;

    const std::size_t n = trace.objective.size();
    if (it >= anneal_iters + kWindow &&
        trace.objective[n - 1] - trace.objective[n - 1 - kWindow] < ocfg.tolerance) {
      trace.converged = true;
      break;
    }
  }

  trace.final_shape = to_polygon(shape, box);
  const EiouEstimate final_est = estimate_eiou_for_shape(trace.final_shape, one_sided, ecfg.jobs);
  trace.final_eiou = final_est.mean;
  trace.final_per_theta = final_est.per_theta;
  return trace;
}

}  // namespace boxrot
