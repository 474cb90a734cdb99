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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "boxrot/boxrot.hpp"
#include "cli/commands.hpp"

using namespace boxrot;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path tmp(const std::string& name) {
  const fs::path dir = fs::path(BOXROT_TEST_TMP) / "cli";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

const char* kTwoImages = R"({
  "images": [{"id": 1, "width": 100, "height": 80, "file_name": "one.ppm"},
             {"id": 2, "width": 50, "height": 50, "file_name": "two.ppm"}],
  "annotations": [
    {"id": 10, "image_id": 1, "category_id": 1, "bbox": [10, 20, 30, 15]},
    {"id": 11, "image_id": 1, "category_id": 1, "bbox": [60, 5, 39, 70]},
    {"id": 12, "image_id": 2, "category_id": 1, "bbox": [0, 0, 12.5, 12.5],
     "segmentation": [[0, 0, 12.5, 3, 6, 12.5]]}],
  "categories": [{"id": 1, "name": "thing"}]
})";

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  const Result r = run({"eiou", "--methods", "largest,bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error: "), std::string::npos);
  EXPECT_EQ(run({"rotate", "--out", "x.json"}).code, 2);
  EXPECT_EQ(run({"eiou", "--box", "3by4"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, RuntimeErrorsExitOne) {
  const Result r = run({"rotate", "--in", tmp("nope.json").string(), "--out", tmp("o.json").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: ", 0), 0u);
  EXPECT_EQ(run({"certainty", "--delta", "0"}).code, 1);
}

TEST(Cli, Certainty) {
  const Result r = run({"certainty", "--delta", "45", "--grid", "22.5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "theta_deg,C\n0.000000,1.000000\n22.500000,0.750000\n45.000000,0.500000\n"
            "67.500000,0.750000\n90.000000,1.000000\n");
}

TEST(Cli, RotateZeroAngleKeepsBoxes) {
  write(tmp("in.json"), kTwoImages);
  const Result r = run({"rotate", "--in", tmp("in.json").string(), "--out", tmp("zero.json").string(),
                        "--method", "ellipse", "--theta", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const AnnotationSet in = load_annotations(tmp("in.json"));
  const AnnotationSet out = load_annotations(tmp("zero.json"));
  EXPECT_EQ(in, out);
}

TEST(Cli, RotateIsDeterministic) {
  write(tmp("in.json"), kTwoImages);
  std::vector<std::string> outputs;
  for (const char* jobs : {"1", "4", "1"}) {
    const fs::path o = tmp(std::string("det_") + jobs + ".json");
    const Result r = run({"--seed", "9", "--jobs", jobs, "rotate", "--in", tmp("in.json").string(), "--out",
                          o.string(), "--method", "random"});
    ASSERT_EQ(r.code, 0) << r.err;
    outputs.push_back(slurp(o));
  }
  EXPECT_EQ(outputs[0], outputs[1]);
  EXPECT_EQ(outputs[0], outputs[2]);
  const Result other = run({"--seed", "10", "rotate", "--in", tmp("in.json").string(), "--out",
                            tmp("det_other.json").string(), "--method", "random"});
  ASSERT_EQ(other.code, 0);
  EXPECT_NE(slurp(tmp("det_other.json")), outputs[0]);
}

TEST(Cli, RotateExpandMatchesCore) {
  write(tmp("in.json"), kTwoImages);
  const Result r = run({"rotate", "--in", tmp("in.json").string(), "--out", tmp("r30.json").string(),
                        "--method", "largest", "--theta", "30"});
  ASSERT_EQ(r.code, 0) << r.err;
  const AnnotationSet out = load_annotations(tmp("r30.json"));
  const FrameMap m = pixel_frame_transform(FrameSpec{100, 80, CanvasMode::kExpand, {}}, deg_to_rad(30.0));
  EXPECT_EQ(out.images[0].width, static_cast<int>(m.output.width));
  EXPECT_EQ(out.images[0].height, static_cast<int>(m.output.height));
  const AABox want = rotate_label(MethodId::largest(), AABox(10, 20, 40, 35), m);
  EXPECT_TRUE(out.annotations[0].box.approx_equal(want, 2e-6));
  ASSERT_TRUE(out.annotations[2].segmentation);
}

TEST(Cli, PerfectNeedsSegmentations) {
  write(tmp("in.json"), kTwoImages);
  const Result r = run({"rotate", "--in", tmp("in.json").string(), "--out", tmp("p.json").string(),
                        "--method", "perfect", "--theta", "10"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("image(s) 1"), std::string::npos);
}

TEST(Cli, KeepModeDropsInvisible) {
  write(tmp("in.json"), kTwoImages);
  const Result r = run({"rotate", "--in", tmp("in.json").string(), "--out", tmp("keep.json").string(),
                        "--method", "largest", "--theta", "45", "--mode", "keep", "--min-visibility", "0.9"});
  ASSERT_EQ(r.code, 0) << r.err;
  const AnnotationSet out = load_annotations(tmp("keep.json"));
  EXPECT_LT(out.annotations.size(), 3u);
  EXPECT_NE(r.err.find("dropped"), std::string::npos);
  for (const Annotation& a : out.annotations) {
    const ImageInfo* img = out.find_image(a.image_id);
    EXPECT_GE(a.box.xmin(), 0.0);
    EXPECT_LE(a.box.xmax(), img->width);
  }
}

TEST(Cli, RotateImages) {
  const fs::path in_dir = tmp("img_in");
  const fs::path out_dir = tmp("img_out");
  fs::create_directories(in_dir);
  write_ppm(RasterImage(100, 80, {200, 10, 10}), in_dir / "one.ppm");
  write_ppm(RasterImage(50, 50, {10, 200, 10}), in_dir / "two.ppm");
  write(tmp("in.json"), kTwoImages);
  const Result r = run({"rotate", "--in", tmp("in.json").string(), "--out", tmp("img.json").string(),
                        "--theta", "20", "--images", in_dir.string(), "--images-out", out_dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const AnnotationSet out = load_annotations(tmp("img.json"));
  const RasterImage one = read_ppm(out_dir / "one.ppm");
  EXPECT_EQ(one.width, out.images[0].width);
  EXPECT_EQ(one.height, out.images[0].height);
  EXPECT_EQ(one.at(one.width / 2, one.height / 2), (Rgb{200, 10, 10}));
}

TEST(Cli, EiouCsvAndWarning) {
  const Result r = run({"eiou", "--k", "1", "--theta-grid", "10,20", "--methods", "largest,octagon:0.25",
                        "--csv", tmp("e.csv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  const std::string csv = slurp(tmp("e.csv"));
  EXPECT_EQ(csv.rfind("method,theta_deg,eiou\nlargest,10.000000,", 0), 0u);
  EXPECT_NE(csv.find("\noctagon:0.25,mean,"), std::string::npos);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  EXPECT_EQ(lines, 7u);
}

TEST(Cli, OptimizeWritesTraceAndShape) {
  const Result r = run({"optimize", "--box", "40x20", "--m", "16", "--iters", "20", "--k", "50", "--theta-grid",
                        "10:40:10", "--out-trace", tmp("trace.csv").string(), "--out-shape",
                        tmp("shape.csv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ellipse fit"), std::string::npos);
  const std::string trace = slurp(tmp("trace.csv"));
  EXPECT_EQ(trace.rfind("iter,objective,tau\n0,", 0), 0u);
  const std::string shape = slurp(tmp("shape.csv"));
  std::size_t rows = 0;
  for (char c : shape) rows += c == '\n';
  EXPECT_EQ(rows, 17u);
}

TEST(Cli, SynthThenEval) {
  ASSERT_EQ(run({"synth", "--out", tmp("synth.json").string(), "--n", "40"}).code, 0);
  const Result r = run({"eval", "--in", tmp("synth.json").string(), "--methods", "largest,ellipse", "--thetas",
                        "10,20", "--pool", "--csv", tmp("eval.csv").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("pooled"), std::string::npos);
  const std::string csv = slurp(tmp("eval.csv"));
  EXPECT_EQ(csv.rfind("method,theta_deg,mean_iou,ap50,ap75,n\n", 0), 0u);

  write(tmp("noseg.json"), kTwoImages);
  const Result bad = run({"eval", "--in", tmp("noseg.json").string()});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("annotation 10"), std::string::npos);
}
