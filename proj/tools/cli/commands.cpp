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

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "boxrot/boxrot.hpp"
#include "boxrot/parallel.hpp"

namespace boxrot::cli {
namespace {

namespace fs = std::filesystem;

struct Globals {
  std::uint64_t seed = 0;
  int jobs = 1;
};

// "WxH" -> box with its top-left corner at the origin.
AABox parse_box(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw CLI::ValidationError("--box", "expected WxH, got '" + text + "'");
  try {
    const double w = std::stod(text.substr(0, x));
    const double h = std::stod(text.substr(x + 1));
    return AABox(0.0, 0.0, w, h);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--box", "expected positive WxH, got '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

double parse_real(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError(flag, "not a number: '" + text + "'");
}

std::vector<MethodId> parse_methods(const std::string& text, double octagon_s) {
  std::vector<MethodId> methods;
  for (const std::string& name : split(text, ',')) {
    try {
      methods.push_back(MethodId::parse(name, octagon_s));
    } catch (const InvalidArgument& e) {
      throw CLI::ValidationError("--methods", e.what());
    }
  }
  if (methods.empty()) throw CLI::ValidationError("--methods", "no methods given");
  return methods;
}

// "start:stop:step" in degrees, inclusive of stop, or a comma list.
std::vector<double> parse_degrees(const std::string& text, const std::string& flag) {
  std::vector<double> deg;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw CLI::ValidationError(flag, "expected start:stop:step");
    const double start = parse_real(parts[0], flag);
    const double stop = parse_real(parts[1], flag);
    const double step = parse_real(parts[2], flag);
    if (!(step > 0.0) || stop < start) throw CLI::ValidationError(flag, "empty or invalid range");
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= n; ++i) deg.push_back(start + static_cast<double>(i) * step);
  } else {
    for (const std::string& p : split(text, ',')) deg.push_back(parse_real(p, flag));
  }
  if (deg.empty()) throw CLI::ValidationError(flag, "no angles given");
  return deg;
}

std::vector<double> to_radians(const std::vector<double>& deg) {
  std::vector<double> rad;
  rad.reserve(deg.size());
  for (double d : deg) rad.push_back(deg_to_rad(d));
  return rad;
}

CanvasMode parse_mode(const std::string& text) {
  if (text == "expand") return CanvasMode::kExpand;
  if (text == "keep") return CanvasMode::kKeep;
  throw CLI::ValidationError("--mode", "expected expand or keep");
}

void write_or_print(const CsvTable& table, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    table.write(out);
  } else {
    table.save(path);
  }
}

// ---------------------------------------------------------------- rotate

struct RotateOptions {
  std::string in;
  std::string out;
  std::string method = "ellipse";
  double octagon_s = 0.5;
  std::optional<double> theta_deg;
  std::string theta_dist = "normal:0,15";
  std::string mode = "expand";
  double min_visibility = 0.25;
  int interior_points = 0;
  std::string images;
  std::string images_out;
};

struct NormalDist {
  double mean;
  double stddev;
};

NormalDist parse_theta_dist(const std::string& text) {
  const std::string prefix = "normal:";
  if (text.rfind(prefix, 0) != 0) {
    throw CLI::ValidationError("--theta-dist", "expected normal:MEAN,STD");
  }
  const auto parts = split(text.substr(prefix.size()), ',');
  if (parts.size() != 2) throw CLI::ValidationError("--theta-dist", "expected normal:MEAN,STD");
  const NormalDist d{parse_real(parts[0], "--theta-dist"), parse_real(parts[1], "--theta-dist")};
  if (d.stddev < 0.0) throw CLI::ValidationError("--theta-dist", "standard deviation must be >= 0");
  return d;
}

struct RotatedImage {
  ImageInfo info;
  double theta_deg = 0.0;
  std::vector<Annotation> kept;
  std::vector<std::string> dropped;
};

int cmd_rotate(const RotateOptions& opt, const Globals& g, std::ostream& out, std::ostream& err) {
  const MethodId method = MethodId::parse(opt.method, opt.octagon_s);
  const CanvasMode mode = parse_mode(opt.mode);
  const NormalDist dist = parse_theta_dist(opt.theta_dist);
  if (!(opt.min_visibility >= 0.0 && opt.min_visibility <= 1.0)) {
    throw InvalidArgument("--min-visibility must be in [0, 1]");
  }
  if (!opt.images.empty() && opt.images_out.empty()) {
    throw InvalidArgument("--images needs --images-out");
  }

  LoadWarnings warnings;
  const AnnotationSet input = load_annotations(opt.in, &warnings);
  for (const std::string& w : warnings) err << "warning: " << w << '\n';

  if (method.kind() == MethodKind::kPerfect) {
    std::vector<std::int64_t> missing;
    for (const Annotation& a : input.annotations) {
      if (!a.segmentation &&
          std::find(missing.begin(), missing.end(), a.image_id) == missing.end()) {
        missing.push_back(a.image_id);
      }
    }
    if (!missing.empty()) {
      std::string ids;
      for (std::int64_t id : missing) ids += (ids.empty() ? "" : ", ") + std::to_string(id);
      throw InvalidArgument("method 'perfect' needs segmentations; missing in image(s) " + ids);
    }
  }

  std::map<std::int64_t, std::vector<std::size_t>> by_image;
  for (std::size_t i = 0; i < input.annotations.size(); ++i) {
    by_image[input.annotations[i].image_id].push_back(i);
  }
  ShapeDistConfig shapes;
  shapes.interior_points = opt.interior_points;
  shapes.seed = g.seed;

  if (!opt.images_out.empty()) fs::create_directories(opt.images_out);
  std::vector<RotatedImage> results(input.images.size());
  parallel_for(input.images.size(), g.jobs, [&](std::size_t idx) {
    const ImageInfo& img = input.images[idx];
    RotatedImage& res = results[idx];
    res.theta_deg = opt.theta_deg
                        ? *opt.theta_deg
                        : DrawStream(g.seed, Stream::kImageAngles, static_cast<std::uint64_t>(img.id))
                              .normal(dist.mean, dist.stddev);
    const FrameSpec frame{static_cast<double>(img.width), static_cast<double>(img.height), mode, {}};
    const FrameMap map = pixel_frame_transform(frame, deg_to_rad(res.theta_deg));
    res.info = img;
    res.info.width = static_cast<int>(map.output.width);
    res.info.height = static_cast<int>(map.output.height);

    const Polygon canvas = box_polygon(AABox(0.0, 0.0, map.output.width, map.output.height));
    for (std::size_t ai : by_image[img.id]) {
      const Annotation& ann = input.annotations[ai];
      LabelInputs inputs;
      if (method.kind() == MethodKind::kPerfect) inputs.shape = &*ann.segmentation;
      inputs.rng = {shapes, static_cast<std::uint64_t>(ann.id)};
      const AABox label = rotate_label(method, ann.box, map, inputs);

      Annotation rotated = ann;
      rotated.box = label;
      rotated.segmentation.reset();
      if (ann.segmentation) {
        std::vector<Point2> pts;
        for (const Point2& p : ann.segmentation->vertices()) pts.push_back(map.apply(p));
        rotated.segmentation = Polygon::from_trusted(std::move(pts));
      }
      if (mode == CanvasMode::kKeep) {
        const auto clipped = clip_to_canvas(label, map.output, opt.min_visibility);
        if (!clipped) {
          res.dropped.push_back(fmt::format("annotation {} (image {}) dropped: visible fraction below {}",
                                            ann.id, img.id, opt.min_visibility));
          continue;
        }
        rotated.box = *clipped;
        if (rotated.segmentation) rotated.segmentation = clip_polygon_to_convex(*rotated.segmentation, canvas);
      }
      res.kept.push_back(std::move(rotated));
    }

    if (!opt.images.empty()) {
      const RasterImage src = read_ppm(fs::path(opt.images) / img.file_name);
      if (src.width != img.width || src.height != img.height) {
        throw ParseError(fmt::format("image {} is {}x{}, annotations say {}x{}", img.file_name,
                                     src.width, src.height, img.width, img.height));
      }
      write_ppm(rotate_raster(src, deg_to_rad(res.theta_deg), frame),
                fs::path(opt.images_out) / img.file_name);
    }
  });

  AnnotationSet output;
  output.categories = input.categories;
  std::size_t kept = 0;
  std::size_t dropped = 0;
  for (RotatedImage& r : results) {
    output.images.push_back(r.info);
    for (Annotation& a : r.kept) output.annotations.push_back(std::move(a));
    for (const std::string& d : r.dropped) err << "warning: " << d << '\n';
    kept += r.kept.size();
    dropped += r.dropped.size();
  }
  save_annotations(output, opt.out);
  out << fmt::format("rotated {} image(s) with method {}: {} annotation(s) written, {} dropped\n",
                     output.images.size(), method.name(), kept, dropped);
  return 0;
}

// ---------------------------------------------------------------- eiou

struct EiouOptions {
  std::string box = "100x100";
  std::string methods = "largest,ellipse";
  double octagon_s = 0.5;
  int k = 1000;
  std::string theta_grid = "1:45:1";
  int interior_points = 0;
  std::string csv;
};

int cmd_eiou(const EiouOptions& opt, const Globals& g, std::ostream& out, std::ostream& err) {
  const AABox box = parse_box(opt.box);
  const std::vector<MethodId> methods = parse_methods(opt.methods, opt.octagon_s);
  const std::vector<double> grid_deg = parse_degrees(opt.theta_grid, "--theta-grid");
  EiouConfig cfg;
  cfg.thetas = to_radians(grid_deg);
  cfg.samples_per_angle = opt.k;
  cfg.shapes.interior_points = opt.interior_points;
  cfg.shapes.seed = g.seed;
  cfg.jobs = g.jobs;
  if (opt.k < 10) {
    err << fmt::format("warning: K = {} reference shapes per angle; the estimate has high variance\n",
                       opt.k);
  }
  const CandidateSet candidates(box, cfg);

  CsvTable table({"method", "theta_deg", "eiou"});
  out << fmt::format("box {}x{}, K = {}, {} angle(s), seed {}\n", box.width(), box.height(), opt.k,
                     grid_deg.size(), g.seed);
  out << fmt::format("{:<14} {:>10}\n", "method", "eiou");
  for (const MethodId& m : methods) {
    const EiouEstimate est = estimate_eiou_for_method(m, candidates, cfg.shapes, cfg.jobs);
    for (std::size_t t = 0; t < grid_deg.size(); ++t) {
      table.add_row({m.name(), format_real(grid_deg[t]), format_real(est.per_theta[t])});
    }
    table.add_row({m.name(), "mean", format_real(est.mean)});
    out << fmt::format("{:<14} {:>10.3f}\n", m.name(), est.mean);
  }
  if (!opt.csv.empty()) table.save(opt.csv);
  return 0;
}

// ---------------------------------------------------------------- optimize

struct OptimizeOptions {
  std::string box = "100x100";
  int m = 64;
  int iters = 500;
  double step = 1e-2;
  double tau = 0.01;
  int k = 1000;
  std::string theta_grid = "1:45:1";
  int interior_points = 0;
  std::string out_shape;
  std::string out_trace;
};

int cmd_optimize(const OptimizeOptions& opt, const Globals& g, std::ostream& out, std::ostream&) {
  const AABox box = parse_box(opt.box);
  EiouConfig ecfg;
  ecfg.thetas = to_radians(parse_degrees(opt.theta_grid, "--theta-grid"));
  ecfg.samples_per_angle = opt.k;
  ecfg.shapes.interior_points = opt.interior_points;
  ecfg.shapes.seed = g.seed;
  ecfg.jobs = g.jobs;
  OptimizerConfig ocfg;
  ocfg.vertices = opt.m;
  ocfg.max_iterations = opt.iters;
  ocfg.step = opt.step;
  ocfg.tau = opt.tau;

  const EiouTrace trace = optimize_canonical_shape(box, ocfg, ecfg);
  const CandidateSet candidates(box, ecfg);
  const double ellipse = estimate_eiou_for_shape(inscribed_ellipse(box, 4096), candidates, g.jobs).mean;
  const double largest = estimate_eiou_for_shape(box_polygon(box), candidates, g.jobs).mean;
  const EllipseFit fit = ellipse_fit(trace.final_shape, box);

  out << fmt::format("box {}x{}, M = {}, K = {}, seed {}\n", box.width(), box.height(), opt.m, opt.k,
                     g.seed);
  out << fmt::format("iterations        {}{}\n", trace.iterations, trace.converged ? " (converged)" : "");
  out << fmt::format("objective start   {:.3f}\n", trace.objective.front());
  out << fmt::format("objective final   {:.3f}\n", trace.objective.back());
  out << fmt::format("eiou final shape  {:.3f}\n", trace.final_eiou);
  out << fmt::format("eiou largest box  {:.3f}\n", largest);
  out << fmt::format("eiou ellipse      {:.3f}\n", ellipse);
  out << fmt::format("ellipse fit       mean {:.2f}% max {:.2f}% (semi-axes {} x {})\n",
                     100.0 * fit.mean_deviation, 100.0 * fit.max_deviation, 0.5 * box.width(),
                     0.5 * box.height());

  if (!opt.out_trace.empty()) {
    CsvTable table({"iter", "objective", "tau"});
    for (std::size_t i = 0; i < trace.objective.size(); ++i) {
      table.add_row({std::to_string(i), format_real(trace.objective[i]), format_real(trace.tau[i])});
    }
    table.save(opt.out_trace);
  }
  if (!opt.out_shape.empty()) {
    CsvTable table({"x", "y"});
    for (const Point2& p : trace.final_shape.vertices()) {
      table.add_row({format_real(p.x), format_real(p.y)});
    }
    table.save(opt.out_shape);
  }
  return 0;
}

// ---------------------------------------------------------------- certainty

struct CertaintyOptions {
  double delta = 10.0;
  double grid = 1.0;
  double max = 90.0;
  std::string out;
};

int cmd_certainty(const CertaintyOptions& opt, const Globals&, std::ostream& out, std::ostream&) {
  if (!(opt.grid > 0.0)) throw InvalidArgument("--grid must be > 0");
  if (!(opt.max >= 0.0)) throw InvalidArgument("--max must be >= 0");
  RuParams params;
  params.delta = deg_to_rad(opt.delta);
  params.validate();
  CsvTable table({"theta_deg", "C"});
  const auto n = static_cast<long>(std::floor(opt.max / opt.grid + 1e-9));
  for (long i = 0; i <= n; ++i) {
    const double deg = static_cast<double>(i) * opt.grid;
    table.add_row({format_real(deg), format_real(certainty(deg_to_rad(deg), params))});
  }
  write_or_print(table, opt.out, out);
  return 0;
}

// ---------------------------------------------------------------- eval

struct EvalOptions {
  std::string in;
  std::string methods = "largest,ellipse";
  double octagon_s = 0.5;
  std::string thetas = "10,20,30,40";
  bool pool = false;
  int interior_points = 0;
  std::string csv;
};

int cmd_eval(const EvalOptions& opt, const Globals& g, std::ostream& out, std::ostream& err) {
  const std::vector<MethodId> methods = parse_methods(opt.methods, opt.octagon_s);
  const std::vector<double> thetas = to_radians(parse_degrees(opt.thetas, "--thetas"));
  LoadWarnings warnings;
  const AnnotationSet set = load_annotations(opt.in, &warnings);
  for (const std::string& w : warnings) err << "warning: " << w << '\n';

  EvalConfig cfg;
  cfg.pool = opt.pool;
  cfg.random_shapes.interior_points = opt.interior_points;
  cfg.random_shapes.seed = g.seed;
  cfg.jobs = g.jobs;
  const std::vector<AnnotatedInstance> instances = instances_from(set);
  const LabelQualityReport report = evaluate_labels(instances, methods, thetas, cfg);
  for (std::int64_t id : report.rederived) {
    err << fmt::format("warning: annotation {} box differs from its segmentation by more than 1 px; "
                       "used the segmentation's box\n", id);
  }
  out << fmt::format("{} instance(s)\n", report.instances);
  out << report.to_pretty();
  if (!opt.csv.empty()) report.to_csv().save(opt.csv);
  return 0;
}

// ---------------------------------------------------------------- synth

struct SynthOptions {
  std::string out;
  std::size_t n = 1000;
  std::string kind = "convex";
  int image_size = 512;
  int interior_points = 0;
};

int cmd_synth(const SynthOptions& opt, const Globals& g, std::ostream& out, std::ostream&) {
  CorpusConfig cfg;
  cfg.count = opt.n;
  cfg.seed = g.seed;
  cfg.image_size = opt.image_size;
  cfg.shapes.interior_points = opt.interior_points;
  if (opt.kind == "convex") {
    cfg.kind = CorpusKind::kConvex;
  } else if (opt.kind == "ellipse") {
    cfg.kind = CorpusKind::kEllipse;
  } else if (opt.kind == "circle") {
    cfg.kind = CorpusKind::kCircle;
  } else {
    throw CLI::ValidationError("--kind", "expected convex, ellipse or circle");
  }
  const AnnotationSet set = synthetic_corpus(cfg);
  save_annotations(set, opt.out);
  out << fmt::format("wrote {} {} instance(s) to {}\n", set.annotations.size(), opt.kind, opt.out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Label rotation for axis-aligned bounding boxes", "boxrot"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed (default 0)");
  app.add_option("--jobs", g.jobs, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);

  RotateOptions ro;
  auto* rotate = app.add_subcommand("rotate", "Rotate the box labels of an annotation file");
  rotate->add_option("--in", ro.in, "Input annotation JSON")->required();
  rotate->add_option("--out", ro.out, "Output annotation JSON")->required();
  rotate->add_option("--method", ro.method, "largest|ellipse|octagon|random|rotiou|perfect")
      ->check(CLI::IsMember({"largest", "ellipse", "octagon", "random", "rotiou", "perfect"}));
  rotate->add_option("--octagon-s", ro.octagon_s, "Octagon corner cut in [0, 0.5]");
  rotate->add_option("--theta", ro.theta_deg, "Fixed rotation in degrees");
  auto* dist_opt = rotate->add_option("--theta-dist", ro.theta_dist,
                                      "Per-image angle distribution, normal:MEAN,STD in degrees");
  rotate->get_option("--theta")->excludes(dist_opt);
  rotate->add_option("--mode", ro.mode, "expand|keep")->check(CLI::IsMember({"expand", "keep"}));
  rotate->add_option("--min-visibility", ro.min_visibility, "Keep mode: minimum visible area fraction");
  rotate->add_option("--interior-points", ro.interior_points, "Random method: interior hull points");
  rotate->add_option("--images", ro.images, "Directory with the input PPM images");
  rotate->add_option("--images-out", ro.images_out, "Directory for the rotated PPM images");

  EiouOptions eo;
  auto* eiou = app.add_subcommand("eiou", "Expected IoU of label methods");
  eiou->add_option("--box", eo.box, "Box size WxH");
  eiou->add_option("--methods", eo.methods, "Comma-separated methods");
  eiou->add_option("--octagon-s", eo.octagon_s, "Scale for a bare 'octagon'");
  eiou->add_option("--k", eo.k, "Reference shapes per angle")->check(CLI::PositiveNumber);
  eiou->add_option("--theta-grid", eo.theta_grid, "Angles in degrees, start:stop:step or a list");
  eiou->add_option("--interior-points", eo.interior_points, "Interior points of the shape family");
  eiou->add_option("--csv", eo.csv, "Write per-angle values to this CSV");

  OptimizeOptions oo;
  auto* optimize = app.add_subcommand("optimize", "Gradient ascent for the EIoU-optimal shape");
  optimize->add_option("--box", oo.box, "Box size WxH");
  optimize->add_option("--m", oo.m, "Polygon vertex count");
  optimize->add_option("--iters", oo.iters, "Maximum iterations");
  optimize->add_option("--step", oo.step, "Initial step size (box-normalized)");
  optimize->add_option("--tau", oo.tau, "Initial smoothing temperature");
  optimize->add_option("--k", oo.k, "Reference shapes per angle")->check(CLI::PositiveNumber);
  optimize->add_option("--theta-grid", oo.theta_grid, "Angles in degrees, start:stop:step or a list");
  optimize->add_option("--interior-points", oo.interior_points, "Interior points of the shape family");
  optimize->add_option("--out-shape", oo.out_shape, "Write the final polygon (x,y) CSV");
  optimize->add_option("--out-trace", oo.out_trace, "Write the (iter,objective,tau) CSV");

  CertaintyOptions co;
  auto* cert = app.add_subcommand("certainty", "Rotation certainty curve as CSV");
  cert->add_option("--delta", co.delta, "Angle in degrees where C reaches 0.5");
  cert->add_option("--grid", co.grid, "Grid step in degrees");
  cert->add_option("--max", co.max, "Last angle in degrees");
  cert->add_option("--out", co.out, "Output CSV (default stdout)");

  EvalOptions vo;
  auto* eval = app.add_subcommand("eval", "Label quality against segmentation-derived labels");
  eval->add_option("--in", vo.in, "Annotation JSON with polygon segmentations")->required();
  eval->add_option("--methods", vo.methods, "Comma-separated methods");
  eval->add_option("--octagon-s", vo.octagon_s, "Scale for a bare 'octagon'");
  eval->add_option("--thetas", vo.thetas, "Angles in degrees, list or start:stop:step");
  eval->add_flag("--pool", vo.pool, "Add a row pooling all angles per method");
  eval->add_option("--interior-points", vo.interior_points, "Random method: interior hull points");
  eval->add_option("--csv", vo.csv, "Write the report CSV");

  SynthOptions so;
  auto* synth = app.add_subcommand("synth", "Write a synthetic annotation set with segmentations");
  synth->add_option("--out", so.out, "Output annotation JSON")->required();
  synth->add_option("--n", so.n, "Number of instances");
  synth->add_option("--kind", so.kind, "convex|ellipse|circle");
  synth->add_option("--image-size", so.image_size, "Square image side in pixels");
  synth->add_option("--interior-points", so.interior_points, "Interior points of convex shapes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*rotate) return cmd_rotate(ro, g, out, err);
    if (*eiou) return cmd_eiou(eo, g, out, err);
    if (*optimize) return cmd_optimize(oo, g, out, err);
    if (*cert) return cmd_certainty(co, g, out, err);
    if (*eval) return cmd_eval(vo, g, out, err);
    if (*synth) return cmd_synth(so, g, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace boxrot::cli
