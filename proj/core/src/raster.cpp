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

#include "boxrot/raster.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <string>

#include "boxrot/error.hpp"

namespace boxrot {
namespace {

constexpr double kSnap = 1e-6;

double snap(double v) {
  const double r = std::round(v);
  return std::abs(v - r) < kSnap ? r : v;
}

// Next header token of a PNM file, skipping whitespace and comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int ch;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(ch));
  }
  return tok;
}

int parse_dim(const std::string& tok, const std::filesystem::path& path) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used == tok.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(path.string() + ": bad PPM header value '" + tok + "'");
}

}  // namespace

RasterImage::RasterImage(int w, int h, Rgb fill) : width(w), height(h) {
  if (w <= 0 || h <= 0) throw InvalidArgument("image dimensions must be positive");
  pixels.resize(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 3);
  for (std::size_t i = 0; i < pixels.size(); i += 3) {
    pixels[i] = fill[0];
    pixels[i + 1] = fill[1];
    pixels[i + 2] = fill[2];
  }
}

Rgb RasterImage::at(int x, int y) const {
  const std::size_t i = (static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + x) * 3;
  return {pixels[i], pixels[i + 1], pixels[i + 2]};
}

void RasterImage::set(int x, int y, Rgb c) {
  const std::size_t i = (static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + x) * 3;
  pixels[i] = c[0];
  pixels[i + 1] = c[1];
  pixels[i + 2] = c[2];
}

RasterImage read_ppm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open image " + path.string());
  if (next_token(in) != "P6") throw ParseError(path.string() + ": not a binary PPM (P6) file");
  const int w = parse_dim(next_token(in), path);
  const int h = parse_dim(next_token(in), path);
  if (parse_dim(next_token(in), path) != 255) {
    throw ParseError(path.string() + ": only maxval 255 is supported");
  }
  RasterImage img(w, h);
  in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.pixels.size())) {
    throw ParseError(path.string() + ": truncated pixel data");
  }
  return img;
}

void write_ppm(const RasterImage& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write image " + path.string());
  out << "P6\n" << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
  if (!out) throw Error("failed writing image " + path.string());
}

FrameMap pixel_frame_transform(const FrameSpec& frame, double theta) {
  FrameMap map = frame_transform(frame, theta);
  if (frame.mode == CanvasMode::kExpand) {
    map.output.width = std::max(1.0, std::round(map.output.width - kSnap));
    map.output.height = std::max(1.0, std::round(map.output.height - kSnap));
    map.output_pivot = map.output.center();
  }
  return map;
}

RasterImage rotate_raster(const RasterImage& img, double theta, const FrameSpec& frame, Rgb fill) {
  if (frame.width != img.width || frame.height != img.height) {
    throw InvalidArgument("frame size does not match the image");
  }
  const FrameMap map = pixel_frame_transform(frame, theta);
  if (map.rotation.is_identity() && frame.mode == CanvasMode::kExpand) return img;
  const int out_w = static_cast<int>(map.output.width);
  const int out_h = static_cast<int>(map.output.height);
  RasterImage out(out_w, out_h, fill);

  const Rotation inverse(-map.rotation.theta(), {0.0, 0.0});
  const Point2 c = map.rotation.pivot();
  const Point2 co = map.output_pivot;
  for (int j = 0; j < out_h; ++j) {
    for (int i = 0; i < out_w; ++i) {
      const Point2 d = inverse.apply({i + 0.5 - co.x, j + 0.5 - co.y});
      const double px = d.x + c.x;
      const double py = d.y + c.y;
      if (px < 0.0 || py < 0.0 || px > img.width || py > img.height) continue;
      const double sx = snap(px - 0.5);
      const double sy = snap(py - 0.5);
      const int x0 = static_cast<int>(std::floor(sx));
      const int y0 = static_cast<int>(std::floor(sy));
      const double fx = sx - x0;
      const double fy = sy - y0;
      auto clamp_x = [&](int x) { return std::clamp(x, 0, img.width - 1); };
      auto clamp_y = [&](int y) { return std::clamp(y, 0, img.height - 1); };
      const Rgb p00 = img.at(clamp_x(x0), clamp_y(y0));
      const Rgb p10 = img.at(clamp_x(x0 + 1), clamp_y(y0));
      const Rgb p01 = img.at(clamp_x(x0), clamp_y(y0 + 1));
      const Rgb p11 = img.at(clamp_x(x0 + 1), clamp_y(y0 + 1));
      Rgb v;
      for (int ch = 0; ch < 3; ++ch) {
        const double top = p00[ch] * (1.0 - fx) + p10[ch] * fx;
        const double bottom = p01[ch] * (1.0 - fx) + p11[ch] * fx;
        const double value = top * (1.0 - fy) + bottom * fy;
        v[ch] = static_cast<std::uint8_t>(std::clamp(std::lround(value), 0L, 255L));
      }
      out.set(i, j, v);
    }
  }
  return out;
}

}  // namespace boxrot
