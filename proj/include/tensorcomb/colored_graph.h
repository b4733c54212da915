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

#ifndef TENSORCOMB_COLORED_GRAPH_H_
#define TENSORCOMB_COLORED_GRAPH_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tensorcomb/rational.h"

namespace tensorcomb {

enum class Shade : std::uint8_t { kWhite = 0, kBlack = 1 };

struct ColoredEdge {
  int color = 0;
  int white = 0;
  int black = 0;

  auto operator<=>(const ColoredEdge&) const = default;
};

// Bipartite edge-colored graph. Bubbles use colors 1..d only; gluings add
// color 0. Vertices without a color-0 edge in a graph with
// `has_color_zero()` are free vertices.
//
// Edges are accepted permissively so that validate() can report every
// violation; the adjacency table keeps the first edge seen per
// (vertex, color) slot.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(int d, bool has_color_zero);

  int add_vertex(Shade shade);
  void add_edge(int color, int white, int black);

  int d() const { return d_; }
  bool has_color_zero() const { return has_color_zero_; }
  int lowest_color() const { return has_color_zero_ ? 0 : 1; }
  int num_vertices() const { return static_cast<int>(shades_.size()); }
  Shade shade(int v) const { return shades_[v]; }
  bool is_white(int v) const { return shades_[v] == Shade::kWhite; }
  std::span<const ColoredEdge> edges() const { return edges_; }
  int num_edges_of_color(int color) const;

  // Neighbor of `v` along `color`, or -1.
  int neighbor(int v, int color) const {
    return adjacency_[static_cast<std::size_t>(v) * (d_ + 1) + color];
  }
  bool is_free(int v) const { return neighbor(v, 0) < 0; }

  std::vector<int> whites() const;
  std::vector<int> blacks() const;

  // Copy with the color-0 flag set, so color-0 edges can be added.
  ColoredGraph with_color_zero() const;

  // Edges sorted by (color, white, black).
  std::vector<ColoredEdge> sorted_edges() const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b);

 private:
  int d_ = 0;
  bool has_color_zero_ = false;
  std::vector<Shade> shades_;
  std::vector<ColoredEdge> edges_;
  std::vector<int> adjacency_;
};

struct ValidationReport {
  bool ok = true;
  bool is_bubble = false;
  bool is_closed = false;
  bool is_open = false;
  std::vector<std::string> violations;
};

ValidationReport validate(const ColoredGraph& g);

// Throws Error("invalid_graph") listing the violations.
void require_valid(const ColoredGraph& g);

struct OpenPath {
  int color = 0;
  int white_end = 0;
  int black_end = 0;

  auto operator<=>(const OpenPath&) const = default;
};

struct FaceCensus {
  int d = 0;
  // per_color[c] = F_0c for c in 1..d; per_color[0] is unused.
  std::vector<int> per_color;
  int total = 0;
  std::vector<OpenPath> open_paths;
};

FaceCensus faces(const ColoredGraph& g);

struct BubblePartition {
  std::vector<int> label;  // component of each vertex in colors 1..d
  int count = 0;
  std::vector<int> sizes;  // vertices per component
};

BubblePartition bubble_partition(const ColoredGraph& g);

// Connected components over all colors present.
int count_components(const ColoredGraph& g);

// d - F + (d-1)(E - b) for a closed connected graph.
int gurau_degree(const ColoredGraph& g);
int gurau_degree(const ColoredGraph& g, const BubblePartition& partition);

struct BoundaryBubble {
  ColoredGraph bubble;
  // Vertex i of `bubble` is free vertex source_vertex[i] of the open graph.
  std::vector<int> source_vertex;
  int internal_faces = 0;
};

BoundaryBubble boundary_bubble(const ColoredGraph& h);

// Power F - (d-1)E + sum_i b_i s_i, which equals F - [(d-1)p - s] b for a
// single bubble type.
struct GraphPower {
  int faces = 0;
  int edges = 0;
  int bubbles = 0;
  std::vector<int> bubbles_per_type;
  std::vector<Rational> enhancement_per_type;
  Rational delta;
};

GraphPower graph_power(int d, int faces, int edges,
                       std::vector<int> bubbles_per_type,
                       std::vector<Rational> enhancement_per_type);

class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::vector<int> code) : code_(std::move(code)) {}

  const std::vector<int>& code() const { return code_; }
  bool empty() const { return code_.empty(); }
  // Short stable hex digest (64-bit FNV-1a of the code).
  std::string digest() const;

  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::vector<int> code_;
};

CanonicalKey canonical_form(const ColoredGraph& g);

// Order of the color- and shade-preserving automorphism group.
long automorphism_count(const ColoredGraph& g);

// All isomorphisms `from` -> `to` of connected graphs, as vertex maps.
std::vector<std::vector<int>> find_isomorphisms(const ColoredGraph& from,
                                                const ColoredGraph& to);

// Vertex v of g becomes vertex perm[v].
ColoredGraph relabel(const ColoredGraph& g, std::span<const int> perm);

// Vertex-induced subgraph; vertex i of the result is vertices[i].
ColoredGraph induced_subgraph(const ColoredGraph& g, std::span<const int> vertices);

// Replaces the open subgraph induced by `region` with its boundary bubble.
// Color-0 edges of g with both ends in `region` are internal to H; the
// free vertices of H are the region's vertices whose color-0 partner is
// outside it.
ColoredGraph substitute_boundary(const ColoredGraph& g, std::span<const int> region);

}  // namespace tensorcomb

#endif  // TENSORCOMB_COLORED_GRAPH_H_
