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

#ifndef BOXROT_EIOU_HPP
#define BOXROT_EIOU_HPP

// Expected IoU of a rotated label against labels induced by random shapes,
// and the gradient ascent that searches for the shape maximizing it.
//
// All EIoU values are reported on a 0-100 scale.

#include <cstddef>
#include <vector>

#include "boxrot/geometry.hpp"
#include "boxrot/rotators.hpp"
#include "boxrot/shape_sampler.hpp"

namespace boxrot {

// 1..45 degrees in 1 degree steps, in radians.
std::vector<double> default_theta_grid();

struct EiouConfig {
  std::vector<double> thetas = default_theta_grid();  // radians, each in (0, pi/2)
  int samples_per_angle = 1000;                       // K
  ShapeDistConfig shapes;
  int jobs = 1;

  void validate() const;
};

struct EiouEstimate {
  double mean = 0.0;               // average over the theta grid
  std::vector<double> per_theta;   // one entry per grid angle
};

// Boxes B(R_theta(S_k)) of the K reference shapes, rotated about the source
// box center, for every grid angle. Built once and shared by every estimate
// and optimizer iteration on the same box (common random numbers).
class CandidateSet {
 public:
  CandidateSet(const AABox& box, const EiouConfig& cfg);

  // The same set extended with -theta for every angle, using the reference
  // shapes reflected about the box's vertical center line. Candidates for
  // -theta are then exact mirror images of those for theta, so a shape with
  // that mirror symmetry scores the same on both halves.
  CandidateSet mirrored() const;

  const AABox& box() const { return box_; }
  std::span<const double> thetas() const { return thetas_; }
  std::size_t samples() const { return samples_; }
  // The K candidate boxes for angle index t.
  std::span<const AABox> at(std::size_t t) const {
    return std::span<const AABox>(boxes_).subspan(t * samples_, samples_);
  }

 private:
  AABox box_;
  std::vector<double> thetas_;
  std::size_t samples_;
  std::vector<AABox> boxes_;  // theta-major

  CandidateSet(const AABox& box, std::vector<double> thetas, std::size_t samples,
               std::vector<AABox> boxes);
};

// Mean IoU of `label` against the candidates at angle index t.
double mean_iou_at(const CandidateSet& candidates, std::size_t t, const AABox& label);

// EIoU when the rotated label is B(R_theta(shape)). `shape` must have the
// candidate box as its bounding box (1e-6 tolerance).
EiouEstimate estimate_eiou_for_shape(const Polygon& shape, const CandidateSet& candidates,
                                     int jobs = 1);
EiouEstimate estimate_eiou_for_shape(const Polygon& shape, const AABox& box, const EiouConfig& cfg);

// EIoU when the rotated label comes from a label method. The perfect method is
// rejected: it needs a per-sample shape and scores 100 by definition. The
// random method labels angle index t with draw K + t of `label_shapes`, so it
// never reuses a reference shape.
EiouEstimate estimate_eiou_for_method(const MethodId& method, const CandidateSet& candidates,
                                      const ShapeDistConfig& label_shapes, int jobs = 1);
EiouEstimate estimate_eiou_for_method(const MethodId& method, const AABox& box, const EiouConfig& cfg);

struct OptimizerConfig {
  int vertices = 64;         // M
  double step = 1e-2;        // initial step, box-normalized units
  double tau = 0.01;         // log-sum-exp temperature, annealed to tau / 10 over 80% of the run
  int max_iterations = 500;
  double tolerance = 1e-5;   // gain over 50 iterations at the final temperature that counts as converged
  bool mirror_angles = true; // also optimize over -theta for every grid angle

  void validate() const;
};

struct EiouTrace {
  std::vector<double> objective;  // hard EIoU of the iterate, entry 0 is the start shape
  std::vector<double> tau;        // temperature used to produce each entry
  std::vector<double> step;       // accepted step length (0 when no step was accepted)
  Polygon final_shape{std::vector<Point2>{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}};
  std::vector<double> final_per_theta;
  double final_eiou = 0.0;        // estimate_eiou_for_shape(final_shape) on the one-sided grid
  int iterations = 0;
  bool converged = false;
};

// Gradient ascent for the shape maximizing EIoU over the grid angles,
// starting from the box itself.
EiouTrace optimize_canonical_shape(const AABox& box, const OptimizerConfig& ocfg,
                                   const EiouConfig& ecfg);

}  // namespace boxrot

#endif  // BOXROT_EIOU_HPP
