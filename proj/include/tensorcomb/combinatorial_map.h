// Copyright 2026 The tensorcomb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TENSORCOMB_COMBINATORIAL_MAP_H_
#define TENSORCOMB_COMBINATORIAL_MAP_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tensorcomb/colored_graph.h"

namespace tensorcomb {

// Bit c is set when color c belongs to the set.
using ColorSet = std::uint32_t;

inline constexpr ColorSet color_bit(int c) { return ColorSet{1} << c; }
inline bool has_color(ColorSet s, int c) { return (s >> c) & 1u; }
ColorSet make_color_set(std::initializer_list<int> colors);
std::vector<int> colors_of(ColorSet s);

enum class VertexKind : std::uint8_t { kPlain, kBlue, kBox, kBlack };

struct MapVertex {
  VertexKind kind = VertexKind::kPlain;
  int box_color = 0;  // box vertices only

  auto operator<=>(const MapVertex&) const = default;
};

std::string kind_name(const MapVertex& v);
MapVertex parse_kind(std::string_view name);

// Map on darts 0..2E-1. sigma gives the next dart counter-clockwise around
// the same vertex, alpha the other half of the edge. Faces are the orbits
// of phi = sigma o alpha; a vertex without darts counts as one face.
class CombinatorialMap {
 public:
  CombinatorialMap() = default;
  CombinatorialMap(std::vector<MapVertex> vertices, std::vector<std::vector<int>> rotations,
                   std::vector<int> alpha, std::vector<ColorSet> dart_colors, int root = -1);

  int num_darts() const { return static_cast<int>(alpha_.size()); }
  int num_edges() const { return num_darts() / 2; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }

  int sigma(int dart) const { return sigma_[dart]; }
  int alpha(int dart) const { return alpha_[dart]; }
  int phi(int dart) const { return sigma_[alpha_[dart]]; }
  int vertex_of(int dart) const { return vertex_of_[dart]; }
  ColorSet colors(int dart) const { return colors_[dart]; }
  const MapVertex& vertex(int v) const { return vertices_[v]; }
  const std::vector<int>& rotation(int v) const { return rotations_[v]; }
  int degree(int v) const { return static_cast<int>(rotations_[v].size()); }
  int root() const { return root_; }
  CombinatorialMap with_root(int dart) const;

  std::vector<std::vector<int>> face_orbits() const;
  int face_count() const;
  int component_count() const;
  // Component of every vertex.
  std::vector<int> components() const;
  // Sum of the genera of the connected components.
  int genus() const;
  // E - V + number of components.
  int cyclomatic() const;

  // Same vertices, only the edges whose color set satisfies `keep`; the
  // cyclic order of the kept darts is inherited.
  CombinatorialMap submap(const std::function<bool(ColorSet)>& keep) const;
  CombinatorialMap submap_with_color(int c) const;
  // dart_origin()[i] is the dart of the parent map that dart i came from.
  const std::vector<int>& dart_origin() const { return origin_; }

  std::vector<std::pair<int, int>> edge_endpoints() const;

 private:
  std::vector<MapVertex> vertices_;
  std::vector<std::vector<int>> rotations_;
  std::vector<int> sigma_;
  std::vector<int> alpha_;
  std::vector<int> vertex_of_;
  std::vector<ColorSet> colors_;
  std::vector<int> origin_;
  int root_ = -1;
};

// Incremental construction. Darts are numbered in edge order: the edge
// created by the k-th add_edge call owns darts 2k (at `u`) and 2k+1 (at
// `v`). Rotations default to insertion order.
class MapBuilder {
 public:
  int add_vertex(MapVertex v = {});
  std::pair<int, int> add_edge(int u, int v, ColorSet colors);
  void set_rotation(int v, std::vector<int> darts);
  CombinatorialMap build(int root = -1) const;

 private:
  std::vector<MapVertex> vertices_;
  std::vector<std::vector<int>> rotations_;
  std::vector<int> alpha_;
  std::vector<ColorSet> colors_;
};

// Rooted keys use only the root dart as a start; unrooted keys minimize
// over all darts. Vertex kinds and color sets are part of the key.
CanonicalKey map_canonical_key(const CombinatorialMap& m, bool rooted = false);

// {"darts": 2E, "sigma": [...], "alpha": [...], "colors": [[c, ...], ...],
//  "kinds": ["blue", "box:1", "black", "plain", ...], "vertex_of": [...],
//  "root": dart | null}
std::string map_to_json(const CombinatorialMap& m, int indent = -1);
CombinatorialMap map_from_json(std::string_view text);

}  // namespace tensorcomb

#endif  // TENSORCOMB_COMBINATORIAL_MAP_H_
