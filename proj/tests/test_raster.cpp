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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>

#include <gtest/gtest.h>

#include "boxrot/error.hpp"
#include "boxrot/raster.hpp"

using namespace boxrot;

namespace {

RasterImage checkerboard(int w, int h) {
  RasterImage img(w, h, {0, 0, 0});
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto v = static_cast<std::uint8_t>((x + y) % 2 ? 255 : 0);
      img.set(x, y, {v, static_cast<std::uint8_t>(x * 40), static_cast<std::uint8_t>(y * 40)});
    }
  }
  return img;
}

// Inverse map written out: output pixel center -> source position.
Point2 source_of(int i, int j, double theta, double w, double h, double ow, double oh) {
  const double ox = i + 0.5 - 0.5 * ow;
  const double oy = j + 0.5 - 0.5 * oh;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {0.5 * w + c * ox + s * oy, 0.5 * h - s * ox + c * oy};
}

double bilinear(const RasterImage& img, Point2 p, int ch) {
  const double sx = p.x - 0.5;
  const double sy = p.y - 0.5;
  const int x0 = static_cast<int>(std::floor(sx));
  const int y0 = static_cast<int>(std::floor(sy));
  auto px = [&](int x, int y) {
    return static_cast<double>(img.at(std::clamp(x, 0, img.width - 1), std::clamp(y, 0, img.height - 1))[ch]);
  };
  const double fx = sx - x0;
  const double fy = sy - y0;
  return (px(x0, y0) * (1 - fx) + px(x0 + 1, y0) * fx) * (1 - fy) +
         (px(x0, y0 + 1) * (1 - fx) + px(x0 + 1, y0 + 1) * fx) * fy;
}

}  // namespace

TEST(Raster, ZeroAngleIsIdentical) {
  const RasterImage img = checkerboard(7, 4);
  for (CanvasMode mode : {CanvasMode::kExpand, CanvasMode::kKeep}) {
    const RasterImage out = rotate_raster(img, 0.0, FrameSpec{7, 4, mode, {}});
    EXPECT_EQ(out.width, 7);
    EXPECT_EQ(out.height, 4);
    EXPECT_EQ(out.pixels, img.pixels);
  }
}

TEST(Raster, QuarterTurnIsLossless) {
  const int w = 5;
  const int h = 3;
  const RasterImage img = checkerboard(w, h);
  const RasterImage out = rotate_raster(img, deg_to_rad(90.0), FrameSpec{w, h, CanvasMode::kExpand, {}});
  ASSERT_EQ(out.width, h);
  ASSERT_EQ(out.height, w);
  for (int j = 0; j < out.height; ++j) {
    for (int i = 0; i < out.width; ++i) EXPECT_EQ(out.at(i, j), img.at(j, h - 1 - i)) << i << "," << j;
  }
}

TEST(Raster, FortyFiveDegreesMatchesInverseMapOracle) {
  for (int n : {2, 5}) {
    const RasterImage img = checkerboard(n, n);
    const double t = deg_to_rad(45.0);
    const RasterImage out = rotate_raster(img, t, FrameSpec{double(n), double(n), CanvasMode::kExpand, {}});
    const int side = static_cast<int>(std::lround(n * std::sqrt(2.0)));
    ASSERT_EQ(out.width, side);
    ASSERT_EQ(out.height, side);
    int coincident = 0;
    for (int j = 0; j < side; ++j) {
      for (int i = 0; i < side; ++i) {
        const Point2 p = source_of(i, j, t, n, n, side, side);
        if (p.x < 0 || p.y < 0 || p.x > n || p.y > n) {
          EXPECT_EQ(out.at(i, j), (Rgb{0, 0, 0}));
          continue;
        }
        for (int ch = 0; ch < 3; ++ch) EXPECT_LE(std::abs(out.at(i, j)[ch] - bilinear(img, p, ch)), 1.0);
        const double cx = p.x - 0.5;
        const double cy = p.y - 0.5;
        if (std::abs(cx - std::round(cx)) < 1e-9 && std::abs(cy - std::round(cy)) < 1e-9) {
          ++coincident;
          EXPECT_EQ(out.at(i, j), img.at(static_cast<int>(std::round(cx)), static_cast<int>(std::round(cy))));
        }
      }
    }
    if (n == 2) EXPECT_EQ(out.at(1, 1)[0], 128);  // average of two black and two white
    if (n == 5) EXPECT_EQ(coincident, 1);          // the center pixel
  }
}

TEST(Raster, PpmRoundTripAndErrors) {
  const std::filesystem::path dir = BOXROT_TEST_TMP;
  std::filesystem::create_directories(dir);
  const RasterImage img = checkerboard(6, 3);
  write_ppm(img, dir / "cb.ppm");
  const RasterImage back = read_ppm(dir / "cb.ppm");
  EXPECT_EQ(back.width, 6);
  EXPECT_EQ(back.height, 3);
  EXPECT_EQ(back.pixels, img.pixels);
  EXPECT_THROW(read_ppm(dir / "missing.ppm"), Error);
  EXPECT_THROW(rotate_raster(img, 0.1, FrameSpec{5, 3, CanvasMode::kKeep, {}}), InvalidArgument);
}

TEST(Raster, PixelFrameKeepsLabelsOnPixels) {
  const FrameSpec f{64, 48, CanvasMode::kExpand, {}};
  const FrameMap m = pixel_frame_transform(f, deg_to_rad(30.0));
  EXPECT_EQ(m.output.width, std::round(64 * std::cos(deg_to_rad(30.0)) + 48 * 0.5));
  EXPECT_EQ(m.output.height, std::round(64 * 0.5 + 48 * std::cos(deg_to_rad(30.0))));
  const Point2 c = m.apply({32, 24});
  EXPECT_NEAR(c.x, 0.5 * m.output.width, 1e-12);
  EXPECT_NEAR(c.y, 0.5 * m.output.height, 1e-12);
}
