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

#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rectimesh {

using Point3 = std::array<double, 3>;

enum class Axis { x = 0, y = 1, z = 2 };

inline constexpr std::array<Axis, 3> kAxes = {Axis::x, Axis::y, Axis::z};

constexpr std::size_t index(Axis a) { return static_cast<std::size_t>(a); }

struct Material {
  double eps_r = 1.0;
  double mu_r = 1.0;
  bool pec = false;
};

struct BoundingBox {
  Point3 min{};
  Point3 max{};

  bool contains(const BoundingBox& other) const;
};

enum class ShapeKind { box, vertex_set };

/// A material-bearing leaf of the scene tree.
///
/// Boxes are stored as two opposite corners with min <= max componentwise;
/// use make_box() which normalizes the corner order. Vertex sets hold at
/// least one point.
struct Shape {
  std::string id;
  ShapeKind kind = ShapeKind::box;
  Point3 box_min{};
  Point3 box_max{};
  std::vector<Point3> vertices;
  Material material;

  static Shape make_box(std::string id, const Point3& a, const Point3& b,
                        Material material = {});
  static Shape make_vertex_set(std::string id, std::vector<Point3> vertices,
                               Material material = {});

  // Box corners (all eight) or the vertex set.
  std::vector<Point3> points() const;
};

struct SceneNode;

struct Compound {
  std::string name;
  std::vector<SceneNode> children;
};

struct SceneNode {
  std::variant<Compound, Shape> node;

  bool is_leaf() const { return std::holds_alternative<Shape>(node); }
  const Shape& shape() const { return std::get<Shape>(node); }
  const Compound& compound() const { return std::get<Compound>(node); }
};

inline SceneNode leaf(Shape s) { return SceneNode{std::move(s)}; }
inline SceneNode compound(std::string name, std::vector<SceneNode> children) {
  return SceneNode{Compound{std::move(name), std::move(children)}};
}

// Parses a JSON scene document. Throws Error on malformed input, duplicate
// shape ids, unknown shape kinds, non-positive eps_r/mu_r on non-PEC
// materials, and boxes with zero extent on all three axes.
SceneNode parse_scene(std::string_view text);
SceneNode load_scene(const std::string& path);

// Leaf shapes in depth-first pre-order, children in document order.
std::vector<Shape> dfs_shapes(const SceneNode& root);

std::size_t count_nodes(const SceneNode& root);

BoundingBox shape_bbox(const Shape& shape);
BoundingBox scene_bbox(std::span<const Shape> shapes);

// Exact-dedup ascending projection of every shape vertex onto `axis`.
std::vector<double> axis_vertex_coords(std::span<const Shape> shapes, Axis axis);

}  // namespace rectimesh
