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

#include "boxrot/annotations.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "boxrot/error.hpp"

namespace boxrot {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, fmt::format("missing required key '{}'", key));
  return *it;
}

std::int64_t require_int(const Json& obj, const char* key, const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_number_integer()) fail(where, fmt::format("'{}' must be an integer", key));
  return v.get<std::int64_t>();
}

double as_real(const Json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(where, "number is not finite");
  return d;
}

std::optional<Polygon> parse_segmentation(const Json& seg, const std::string& where,
                                          LoadWarnings* warnings) {
  if (seg.is_null()) return std::nullopt;
  if (seg.is_object()) fail(where, "RLE segmentation masks are not supported (use polygons)");
  if (!seg.is_array()) fail(where, "segmentation must be a list of polygons");
  if (seg.empty()) return std::nullopt;

  std::optional<Polygon> best;
  double best_area = -1.0;
  for (std::size_t p = 0; p < seg.size(); ++p) {
    const Json& flat = seg[p];
    const std::string pw = fmt::format("{}.segmentation[{}]", where, p);
    if (!flat.is_array() || flat.size() % 2 != 0) fail(pw, "polygon must be a flat [x, y, ...] list");
    if (flat.size() < 6) fail(pw, "polygon needs at least 3 points");
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < flat.size(); i += 2) {
      pts.push_back({round6(as_real(flat[i], pw)), round6(as_real(flat[i + 1], pw))});
    }
    std::optional<Polygon> poly;
    try {
      poly.emplace(pts);
    } catch (const InvalidArgument& e) {
      // only the hull matters for rotated boxes
      std::vector<Point2> hull = convex_hull(pts);
      if (hull.size() < 3) fail(pw, std::string("degenerate polygon: ") + e.what());
      poly.emplace(Polygon::from_trusted(std::move(hull)));
      if (warnings) warnings->push_back(pw + ": " + e.what() + "; replaced by its convex hull");
    }
    const double area = polygon_area(*poly);
    if (area > best_area) {
      best_area = area;
      best = std::move(poly);
    }
  }
  if (seg.size() > 1 && warnings) {
    warnings->push_back(fmt::format("{}: {} polygons, kept the largest as the object shape", where,
                                    seg.size()));
  }
  return best;
}

}  // namespace

double round6(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

const ImageInfo* AnnotationSet::find_image(std::int64_t id) const {
  for (const ImageInfo& img : images) {
    if (img.id == id) return &img;
  }
  return nullptr;
}

AnnotationSet parse_annotations(const std::string& json_text, LoadWarnings* warnings) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("top level must be a JSON object");

  AnnotationSet set;
  std::set<std::int64_t> image_ids;
  const Json& images = require(root, "images", "root");
  if (!images.is_array()) throw ParseError("root: 'images' must be a list");
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::string where = fmt::format("images[{}]", i);
    const Json& rec = images[i];
    ImageInfo img;
    img.id = require_int(rec, "id", where);
    const std::int64_t w = require_int(rec, "width", where);
    const std::int64_t h = require_int(rec, "height", where);
    if (w <= 0 || h <= 0) fail(where, "width and height must be positive");
    img.width = static_cast<int>(w);
    img.height = static_cast<int>(h);
    if (const auto it = rec.find("file_name"); it != rec.end()) {
      if (!it->is_string()) fail(where, "'file_name' must be a string");
      img.file_name = it->get<std::string>();
    }
    if (!image_ids.insert(img.id).second) fail(where, fmt::format("duplicate image id {}", img.id));
    set.images.push_back(std::move(img));
  }

  const Json& anns = require(root, "annotations", "root");
  if (!anns.is_array()) throw ParseError("root: 'annotations' must be a list");
  for (std::size_t i = 0; i < anns.size(); ++i) {
    const std::string where = fmt::format("annotations[{}]", i);
    const Json& rec = anns[i];
    Annotation ann;
    ann.id = require_int(rec, "id", where);
    ann.image_id = require_int(rec, "image_id", where);
    if (!image_ids.count(ann.image_id)) {
      fail(where, fmt::format("image_id {} does not match any image", ann.image_id));
    }
    if (const auto it = rec.find("category_id"); it != rec.end()) {
      if (!it->is_number_integer()) fail(where, "'category_id' must be an integer");
      ann.category_id = it->get<std::int64_t>();
    }
    const Json& bbox = require(rec, "bbox", where);
    if (!bbox.is_array() || bbox.size() != 4) fail(where, "bbox must be [x, y, w, h]");
    const double x = round6(as_real(bbox[0], where));
    const double y = round6(as_real(bbox[1], where));
    const double w = as_real(bbox[2], where);
    const double h = as_real(bbox[3], where);
    if (!(round6(w) > 0.0) || !(round6(h) > 0.0)) fail(where, "bbox width and height must be positive");
    ann.box = AABox(x, y, round6(x + w), round6(y + h));
    if (const auto it = rec.find("segmentation"); it != rec.end()) {
      ann.segmentation = parse_segmentation(*it, where, warnings);
    }
    set.annotations.push_back(std::move(ann));
  }

  if (const auto it = root.find("categories"); it != root.end()) {
    if (!it->is_array()) throw ParseError("root: 'categories' must be a list");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = fmt::format("categories[{}]", i);
      const Json& rec = (*it)[i];
      Category cat;
      cat.id = require_int(rec, "id", where);
      if (const auto name = rec.find("name"); name != rec.end() && name->is_string()) {
        cat.name = name->get<std::string>();
      }
      set.categories.push_back(std::move(cat));
    }
  }
  return set;
}

AnnotationSet load_annotations(const std::filesystem::path& path, LoadWarnings* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open annotation file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_annotations(buf.str(), warnings);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string serialize_annotations(const AnnotationSet& set) {
  OrderedJson root = OrderedJson::object();
  OrderedJson images = OrderedJson::array();
  for (const ImageInfo& img : set.images) {
    OrderedJson rec = OrderedJson::object();
    rec["id"] = img.id;
    rec["width"] = img.width;
    rec["height"] = img.height;
    rec["file_name"] = img.file_name;
    images.push_back(std::move(rec));
  }
  OrderedJson anns = OrderedJson::array();
  for (const Annotation& ann : set.annotations) {
    OrderedJson rec = OrderedJson::object();
    rec["id"] = ann.id;
    rec["image_id"] = ann.image_id;
    rec["category_id"] = ann.category_id;
    rec["bbox"] = {round6(ann.box.xmin()), round6(ann.box.ymin()), round6(ann.box.width()),
                   round6(ann.box.height())};
    if (ann.segmentation) {
      OrderedJson flat = OrderedJson::array();
      for (const Point2& p : ann.segmentation->vertices()) {
        flat.push_back(round6(p.x));
        flat.push_back(round6(p.y));
      }
      rec["segmentation"] = OrderedJson::array({flat});
    }
    anns.push_back(std::move(rec));
  }
  OrderedJson cats = OrderedJson::array();
  for (const Category& cat : set.categories) {
    OrderedJson rec = OrderedJson::object();
    rec["id"] = cat.id;
    rec["name"] = cat.name;
    cats.push_back(std::move(rec));
  }
  root["images"] = std::move(images);
  root["annotations"] = std::move(anns);
  root["categories"] = std::move(cats);
  return root.dump(1) + "\n";
}

void save_annotations(const AnnotationSet& set, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write annotation file " + path.string());
  out << serialize_annotations(set);
  if (!out) throw Error("failed writing annotation file " + path.string());
}

}  // namespace boxrot
