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

#ifndef BOXROT_RASTER_HPP
#define BOXROT_RASTER_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "boxrot/rotators.hpp"

namespace boxrot {

using Rgb = std::array<std::uint8_t, 3>;

// 8-bit RGB image, rows top to bottom, 3 bytes per pixel.
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  RasterImage() = default;
  RasterImage(int w, int h, Rgb fill = {0, 0, 0});

  Rgb at(int x, int y) const;
  void set(int x, int y, Rgb c);

  friend bool operator==(const RasterImage&, const RasterImage&) = default;
};

// Binary PPM (P6, maxval 255).
RasterImage read_ppm(const std::filesystem::path& path);
void write_ppm(const RasterImage& img, const std::filesystem::path& path);

// frame_transform with the expanded canvas rounded to whole pixels and the
// output pivot moved to the center of that canvas. Use this map for boxes
// whenever the image itself is resampled, so labels and pixels agree.
FrameMap pixel_frame_transform(const FrameSpec& frame, double theta);

// Inverse-mapped bilinear resampling; `frame` must match the image size.
// Samples outside the source are `fill`. Right-angle rotations reproduce
// source pixels exactly.
RasterImage rotate_raster(const RasterImage& img, double theta, const FrameSpec& frame,
                          Rgb fill = {0, 0, 0});

}  // namespace boxrot

#endif  // BOXROT_RASTER_HPP
