// Copyright 2026 The rectimesh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rectimesh/scene.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "rectimesh/error.hpp"

namespace rectimesh {

using nlohmann::json;

bool BoundingBox::contains(const BoundingBox& other) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (other.min[i] < min[i] || other.max[i] > max[i]) return false;
  }
  return true;
}

Shape Shape::make_box(std::string id, const Point3& a, const Point3& b,
                      Material material) {
  Shape s;
  s.id = std::move(id);
  s.kind = ShapeKind::box;
  for (std::size_t i = 0; i < 3; ++i) {
    s.box_min[i] = std::min(a[i], b[i]);
    s.box_max[i] = std::max(a[i], b[i]);
  }
  s.material = material;
  return s;
}

Shape Shape::make_vertex_set(std::string id, std::vector<Point3> vertices,
                             Material material) {
  if (vertices.empty()) {
    throw Error(ErrorCode::degenerate_shape,
                "vertex-set shape '" + id + "' has no vertices");
  }
  Shape s;
  s.id = std::move(id);
  s.kind = ShapeKind::vertex_set;
  s.vertices = std::move(vertices);
  s.material = material;
  return s;
}

std::vector<Point3> Shape::points() const {
  if (kind == ShapeKind::vertex_set) return vertices;
  std::vector<Point3> corners;
  corners.reserve(8);
  for (int i = 0; i < 8; ++i) {
    corners.push_back({(i & 1) ? box_max[0] : box_min[0],
                       (i & 2) ? box_max[1] : box_min[1],
                       (i & 4) ? box_max[2] : box_min[2]});
  }
  return corners;
}

namespace {

struct Parser {
  std::unordered_set<std::string> ids;

  [[noreturn]] static void fail(const std::string& msg) {
    throw Error(ErrorCode::parse_error, "scene: " + msg);
  }

  static double number(const json& j, const char* what) {
    if (!j.is_number()) fail(std::string(what) + " must be a number");
    double v = j.get<double>();
    if (!std::isfinite(v)) fail(std::string(what) + " must be finite");
    return v;
  }

  static Point3 point(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) {
      fail(std::string(what) + " must be an array of 3 numbers");
    }
    return {number(j[0], what), number(j[1], what), number(j[2], what)};
  }

  static Material material(const json& j, const std::string& id) {
    if (!j.is_object()) fail("shape '" + id + "' needs a material object");
    Material m;
    if (auto it = j.find("pec"); it != j.end()) {
      if (!it->is_boolean()) fail("material.pec must be a boolean");
      m.pec = it->get<bool>();
    }
    if (auto it = j.find("eps_r"); it != j.end()) m.eps_r = number(*it, "eps_r");
    if (auto it = j.find("mu_r"); it != j.end()) m.mu_r = number(*it, "mu_r");
    if (!m.pec && (m.eps_r <= 0.0 || m.mu_r <= 0.0)) {
      throw Error(ErrorCode::invalid_argument,
                  "scene: shape '" + id + "' has non-positive eps_r or mu_r");
    }
    return m;
  }

  Shape shape(const json& j) {
    if (!j.is_object()) fail("\"shape\" must be an object");
    auto id_it = j.find("id");
    if (id_it == j.end() || !id_it->is_string()) fail("shape without string id");
    std::string id = id_it->get<std::string>();
    if (!ids.insert(id).second) {
      throw Error(ErrorCode::duplicate_id, "scene: duplicate shape id '" + id + "'");
    }
    auto kind_it = j.find("kind");
    if (kind_it == j.end() || !kind_it->is_string()) {
      fail("shape '" + id + "' without string kind");
    }
    const std::string kind = kind_it->get<std::string>();
    const auto mat_it = j.find("material");
    if (mat_it == j.end()) fail("shape '" + id + "' without material");
    Material mat = material(*mat_it, id);

    if (kind == "box") {
      if (!j.contains("min") || !j.contains("max")) {
        fail("box '" + id + "' needs min and max");
      }
      Shape s = Shape::make_box(id, point(j["min"], "min"), point(j["max"], "max"), mat);
      int flat = 0;
      for (std::size_t i = 0; i < 3; ++i) flat += s.box_min[i] == s.box_max[i];
      if (flat == 3) {
        throw Error(ErrorCode::degenerate_shape,
                    "scene: box '" + id + "' has zero extent on every axis");
      }
      return s;
    }
    if (kind == "vertex-set") {
      auto v = j.find("vertices");
      if (v == j.end() || !v->is_array()) fail("vertex-set '" + id + "' needs vertices");
      std::vector<Point3> pts;
      pts.reserve(v->size());
      for (const auto& p : *v) pts.push_back(point(p, "vertex"));
      return Shape::make_vertex_set(id, std::move(pts), mat);
    }
    throw Error(ErrorCode::unknown_kind,
                "scene: shape '" + id + "' has unknown kind '" + kind + "'");
  }

  SceneNode node(const json& j) {
    if (!j.is_object()) fail("node must be an object");
    if (auto s = j.find("shape"); s != j.end()) return leaf(shape(*s));
    auto c = j.find("children");
    if (c == j.end() || !c->is_array()) {
      fail("node is neither a shape nor a compound with children");
    }
    std::string name;
    if (auto n = j.find("name"); n != j.end()) {
      if (!n->is_string()) fail("compound name must be a string");
      name = n->get<std::string>();
    }
    std::vector<SceneNode> children;
    children.reserve(c->size());
    for (const auto& child : *c) children.push_back(node(child));
    return compound(std::move(name), std::move(children));
  }
};

}  // namespace

SceneNode parse_scene(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("scene: ") + e.what());
  }
  Parser p;
  return p.node(doc);
}

SceneNode load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot open scene file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

std::vector<Shape> dfs_shapes(const SceneNode& root) {
  std::vector<Shape> out;
  std::vector<const SceneNode*> stack{&root};
  while (!stack.empty()) {
    const SceneNode* n = stack.back();
    stack.pop_back();
    if (n->is_leaf()) {
      out.push_back(n->shape());
      continue;
    }
    const auto& children = n->compound().children;
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

std::size_t count_nodes(const SceneNode& root) {
  std::size_t n = 1;
  if (!root.is_leaf()) {
    for (const auto& c : root.compound().children) n += count_nodes(c);
  }
  return n;
}

BoundingBox shape_bbox(const Shape& shape) {
  if (shape.kind == ShapeKind::box) return {shape.box_min, shape.box_max};
  BoundingBox b{shape.vertices.front(), shape.vertices.front()};
  for (const auto& v : shape.vertices) {
    for (std::size_t i = 0; i < 3; ++i) {
      b.min[i] = std::min(b.min[i], v[i]);
      b.max[i] = std::max(b.max[i], v[i]);
    }
  }
  return b;
}

BoundingBox scene_bbox(std::span<const Shape> shapes) {
  if (shapes.empty()) throw Error(ErrorCode::empty_scene, "scene contains no shapes");
  BoundingBox b = shape_bbox(shapes.front());
  for (const auto& s : shapes.subspan(1)) {
    const BoundingBox sb = shape_bbox(s);
    for (std::size_t i = 0; i < 3; ++i) {
      b.min[i] = std::min(b.min[i], sb.min[i]);
      b.max[i] = std::max(b.max[i], sb.max[i]);
    }
  }
  return b;
}

std::vector<double> axis_vertex_coords(std::span<const Shape> shapes, Axis axis) {
  const std::size_t i = index(axis);
  std::vector<double> coords;
  for (const auto& s : shapes) {
    if (s.kind == ShapeKind::box) {
      coords.push_back(s.box_min[i]);
      coords.push_back(s.box_max[i]);
    } else {
      for (const auto& v : s.vertices) coords.push_back(v[i]);
    }
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  return coords;
}

}  // namespace rectimesh
