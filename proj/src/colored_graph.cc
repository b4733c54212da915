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

#include "tensorcomb/colored_graph.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "tensorcomb/error.h"

namespace tensorcomb {

ColoredGraph::ColoredGraph(int d, bool has_color_zero)
    : d_(d), has_color_zero_(has_color_zero) {
  if (d < 1) throw Error("invalid_graph", "dimension must be positive");
}

int ColoredGraph::add_vertex(Shade shade) {
  shades_.push_back(shade);
  adjacency_.resize(adjacency_.size() + d_ + 1, -1);
  return num_vertices() - 1;
}

void ColoredGraph::add_edge(int color, int white, int black) {
  edges_.push_back({color, white, black});
  if (color < 0 || color > d_) return;
  if (white < 0 || white >= num_vertices() || black < 0 || black >= num_vertices()) return;
  int& a = adjacency_[static_cast<std::size_t>(white) * (d_ + 1) + color];
  int& b = adjacency_[static_cast<std::size_t>(black) * (d_ + 1) + color];
  if (a < 0 && b < 0) {
    a = black;
    b = white;
  }
}

int ColoredGraph::num_edges_of_color(int color) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [color](const ColoredEdge& e) { return e.color == color; }));
}

std::vector<int> ColoredGraph::whites() const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices(); ++v) {
    if (is_white(v)) out.push_back(v);
  }
  return out;
}

std::vector<int> ColoredGraph::blacks() const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices(); ++v) {
    if (!is_white(v)) out.push_back(v);
  }
  return out;
}

ColoredGraph ColoredGraph::with_color_zero() const {
  ColoredGraph g = *this;
  g.has_color_zero_ = true;
  return g;
}

std::vector<ColoredEdge> ColoredGraph::sorted_edges() const {
  std::vector<ColoredEdge> out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
  return a.d_ == b.d_ && a.has_color_zero_ == b.has_color_zero_ && a.shades_ == b.shades_ &&
         a.sorted_edges() == b.sorted_edges();
}

namespace {

std::string vertex_name(int v) { return "vertex " + std::to_string(v); }

// Union-find over vertices, used for component bookkeeping.
class Components {
 public:
  explicit Components(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

ValidationReport validate(const ColoredGraph& g) {
  ValidationReport report;
  auto fail = [&report](std::string message) {
    report.ok = false;
    report.violations.push_back(std::move(message));
  };
  const int n = g.num_vertices();
  const int d = g.d();
  if (d < 2) fail("dimension d=" + std::to_string(d) + " is below 2");

  std::vector<int> slot_count(static_cast<std::size_t>(n) * (d + 1), 0);
  for (const ColoredEdge& e : g.edges()) {
    std::string label = "edge (color " + std::to_string(e.color) + ", " +
                        std::to_string(e.white) + ", " + std::to_string(e.black) + ")";
    if (e.color < 0 || e.color > d) {
      fail(label + " has a color outside 0.." + std::to_string(d));
      continue;
    }
    if (e.color == 0 && !g.has_color_zero()) {
      fail(label + " has color 0 in a graph without color 0");
    }
    if (e.white < 0 || e.white >= n || e.black < 0 || e.black >= n) {
      fail(label + " references a missing vertex");
      continue;
    }
    if (!g.is_white(e.white)) fail(label + ": white endpoint " + vertex_name(e.white) + " is black");
    if (g.is_white(e.black)) fail(label + ": black endpoint " + vertex_name(e.black) + " is white");
    ++slot_count[static_cast<std::size_t>(e.white) * (d + 1) + e.color];
    if (e.white != e.black) ++slot_count[static_cast<std::size_t>(e.black) * (d + 1) + e.color];
  }
  bool any_free = false;
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c <= d; ++c) {
      int count = slot_count[static_cast<std::size_t>(v) * (d + 1) + c];
      if (count > 1) {
        fail(vertex_name(v) + " has " + std::to_string(count) + " edges of color " + std::to_string(c));
      }
      if (count == 0 && c >= 1) fail(vertex_name(v) + " is missing color " + std::to_string(c));
      if (count == 0 && c == 0 && g.has_color_zero()) any_free = true;
    }
  }
  Components comps(n);
  for (const ColoredEdge& e : g.edges()) {
    if (e.white >= 0 && e.white < n && e.black >= 0 && e.black < n) comps.unite(e.white, e.black);
  }
  std::map<int, int> balance;
  for (int v = 0; v < n; ++v) balance[comps.find(v)] += g.is_white(v) ? 1 : -1;
  for (const auto& [root, diff] : balance) {
    if (diff != 0) {
      fail("component of " + vertex_name(root) + " has unequal numbers of black and white vertices");
    }
  }
  if (report.ok) {
    report.is_bubble = !g.has_color_zero();
    report.is_closed = g.has_color_zero() && !any_free;
    report.is_open = g.has_color_zero() && any_free;
  }
  return report;
}

void require_valid(const ColoredGraph& g) {
  ValidationReport report = validate(g);
  if (report.ok) return;
  std::string message = "invalid colored graph:";
  for (const std::string& v : report.violations) message += " " + v + ";";
  message.pop_back();
  throw Error("invalid_graph", message);
}

FaceCensus faces(const ColoredGraph& g) {
  if (!g.has_color_zero() && g.num_edges_of_color(0) > 0) {
    throw Error("invalid_graph", "graph has color-0 edges but is flagged as a bubble");
  }
  require_valid(g);
  FaceCensus census;
  census.d = g.d();
  census.per_color.assign(g.d() + 1, 0);
  const int n = g.num_vertices();
  std::vector<char> seen(n);
  for (int c = 1; c <= g.d(); ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    // Open paths start at free white vertices and end at free black ones.
    for (int w = 0; w < n; ++w) {
      if (!g.is_white(w) || !g.is_free(w)) continue;
      int x = w;
      int b = g.neighbor(x, c);
      seen[x] = 1;
      while (!g.is_free(b)) {
        x = g.neighbor(b, 0);
        seen[x] = 1;
        b = g.neighbor(x, c);
      }
      census.open_paths.push_back({c, w, b});
    }
    for (int w = 0; w < n; ++w) {
      if (!g.is_white(w) || seen[w]) continue;
      int x = w;
      do {
        seen[x] = 1;
        x = g.neighbor(g.neighbor(x, c), 0);
      } while (x != w);
      ++census.per_color[c];
    }
    census.total += census.per_color[c];
  }
  return census;
}

BubblePartition bubble_partition(const ColoredGraph& g) {
  const int n = g.num_vertices();
  BubblePartition out;
  out.label.assign(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (out.label[s] >= 0) continue;
    int id = out.count++;
    out.sizes.push_back(0);
    out.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++out.sizes[id];
      for (int c = 1; c <= g.d(); ++c) {
        int y = g.neighbor(x, c);
        if (y >= 0 && out.label[y] < 0) {
          out.label[y] = id;
          stack.push_back(y);
        }
      }
    }
  }
  return out;
}

int count_components(const ColoredGraph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen(n);
  std::vector<int> stack;
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int c = g.lowest_color(); c <= g.d(); ++c) {
        int y = g.neighbor(x, c);
        if (y >= 0 && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

int gurau_degree(const ColoredGraph& g) { return gurau_degree(g, bubble_partition(g)); }

int gurau_degree(const ColoredGraph& g, const BubblePartition& partition) {
  ValidationReport report = validate(g);
  if (!report.ok) require_valid(g);
  if (!report.is_closed) throw Error("not_closed", "Gurau degree needs a closed graph");
  if (count_components(g) != 1) throw Error("disconnected", "Gurau degree needs a connected graph");
  const int d = g.d();
  const int edges = g.num_edges_of_color(0);
  return d - faces(g).total + (d - 1) * (edges - partition.count);
}

BoundaryBubble boundary_bubble(const ColoredGraph& h) {
  ValidationReport report = validate(h);
  if (!report.ok) require_valid(h);
  BoundaryBubble out;
  if (report.is_closed) throw Error("closed_graph", "boundary bubble needs free vertices");
  const int n = h.num_vertices();
  std::vector<int> new_id(n, -1);
  out.bubble = ColoredGraph(h.d(), false);
  for (int v = 0; v < n; ++v) {
    if (h.is_free(v)) {
      new_id[v] = out.bubble.add_vertex(h.shade(v));
      out.source_vertex.push_back(v);
    }
  }
  FaceCensus census = faces(h);
  for (const OpenPath& path : census.open_paths) {
    out.bubble.add_edge(path.color, new_id[path.white_end], new_id[path.black_end]);
  }
  out.internal_faces = census.total;
  return out;
}

GraphPower graph_power(int d, int faces, int edges, std::vector<int> bubbles_per_type,
                       std::vector<Rational> enhancement_per_type) {
  if (bubbles_per_type.size() != enhancement_per_type.size()) {
    throw Error("invalid_argument", "one enhancement per bubble type is required");
  }
  GraphPower p;
  p.faces = faces;
  p.edges = edges;
  p.bubbles = std::accumulate(bubbles_per_type.begin(), bubbles_per_type.end(), 0);
  p.delta = Rational(faces - (d - 1) * edges);
  for (std::size_t i = 0; i < bubbles_per_type.size(); ++i) {
    p.delta += bubbles_per_type[i] * enhancement_per_type[i];
  }
  p.bubbles_per_type = std::move(bubbles_per_type);
  p.enhancement_per_type = std::move(enhancement_per_type);
  return p;
}

std::string CanonicalKey::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  for (int x : code_) {
    auto u = static_cast<std::uint32_t>(x);
    for (int i = 0; i < 4; ++i) {
      h ^= (u >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// Traversal code of the component of `start`: vertices numbered in BFS
// order (neighbors visited by increasing color), then for each vertex its
// shade and the numbers of its neighbors per color.
std::vector<int> traversal_code(const ColoredGraph& g, int start, std::vector<int>& label,
                                std::vector<int>& order) {
  order.clear();
  order.push_back(start);
  label[start] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (int c = g.lowest_color(); c <= g.d(); ++c) {
      int y = g.neighbor(x, c);
      if (y >= 0 && label[y] < 0) {
        label[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  std::vector<int> code;
  code.reserve(1 + order.size() * (g.d() + 2));
  code.push_back(static_cast<int>(order.size()));
  for (int x : order) {
    code.push_back(static_cast<int>(g.shade(x)));
    for (int c = g.lowest_color(); c <= g.d(); ++c) {
      int y = g.neighbor(x, c);
      code.push_back(y < 0 ? -1 : label[y]);
    }
  }
  for (int x : order) label[x] = -1;
  return code;
}

struct ComponentCodes {
  std::vector<int> code;
  long minimal_starts = 0;
};

std::vector<ComponentCodes> component_codes(const ColoredGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> component(n, -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> stack{s};
    component[s] = id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members[id].push_back(x);
      for (int c = g.lowest_color(); c <= g.d(); ++c) {
        int y = g.neighbor(x, c);
        if (y >= 0 && component[y] < 0) {
          component[y] = id;
          stack.push_back(y);
        }
      }
    }
  }
  std::vector<int> label(n, -1);
  std::vector<int> order;
  std::vector<ComponentCodes> out;
  for (const auto& verts : members) {
    ComponentCodes best;
    for (int s : verts) {
      std::vector<int> code = traversal_code(g, s, label, order);
      if (best.minimal_starts == 0 || code < best.code) {
        best.code = std::move(code);
        best.minimal_starts = 1;
      } else if (code == best.code) {
        ++best.minimal_starts;
      }
    }
    out.push_back(std::move(best));
  }
  std::sort(out.begin(), out.end(),
            [](const ComponentCodes& a, const ComponentCodes& b) { return a.code < b.code; });
  return out;
}

}  // namespace

CanonicalKey canonical_form(const ColoredGraph& g) {
  require_valid(g);
  std::vector<int> key{g.d(), g.has_color_zero() ? 1 : 0};
  auto comps = component_codes(g);
  key.push_back(static_cast<int>(comps.size()));
  for (const auto& c : comps) key.insert(key.end(), c.code.begin(), c.code.end());
  return CanonicalKey(std::move(key));
}

long automorphism_count(const ColoredGraph& g) {
  require_valid(g);
  auto comps = component_codes(g);
  long total = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    total *= comps[i].minimal_starts;
    run = (i > 0 && comps[i].code == comps[i - 1].code) ? run + 1 : 1;
    total *= static_cast<long>(run);
  }
  return total;
}

std::vector<std::vector<int>> find_isomorphisms(const ColoredGraph& from, const ColoredGraph& to) {
  std::vector<std::vector<int>> out;
  const int n = from.num_vertices();
  if (n != to.num_vertices() || from.d() != to.d() ||
      from.has_color_zero() != to.has_color_zero() || from.edges().size() != to.edges().size()) {
    return out;
  }
  if (n == 0) return {{}};
  if (count_components(from) != 1 || count_components(to) != 1) {
    throw Error("disconnected", "isomorphism search needs connected graphs");
  }
  std::vector<int> map(n);
  std::vector<char> used(n);
  std::vector<int> queue;
  for (int t = 0; t < n; ++t) {
    if (to.shade(t) != from.shade(0)) continue;
    std::fill(map.begin(), map.end(), -1);
    std::fill(used.begin(), used.end(), 0);
    map[0] = t;
    used[t] = 1;
    queue.assign(1, 0);
    bool ok = true;
    for (std::size_t i = 0; ok && i < queue.size(); ++i) {
      int x = queue[i];
      for (int c = from.lowest_color(); ok && c <= from.d(); ++c) {
        int y = from.neighbor(x, c);
        int z = to.neighbor(map[x], c);
        if ((y < 0) != (z < 0)) {
          ok = false;
        } else if (y >= 0) {
          if (map[y] < 0) {
            if (used[z] || to.shade(z) != from.shade(y)) {
              ok = false;
            } else {
              map[y] = z;
              used[z] = 1;
              queue.push_back(y);
            }
          } else if (map[y] != z) {
            ok = false;
          }
        }
      }
    }
    if (ok) out.push_back(map);
  }
  return out;
}

ColoredGraph relabel(const ColoredGraph& g, std::span<const int> perm) {
  const int n = g.num_vertices();
  if (static_cast<int>(perm.size()) != n) throw Error("invalid_argument", "permutation size mismatch");
  std::vector<int> inverse(n, -1);
  for (int v = 0; v < n; ++v) {
    if (perm[v] < 0 || perm[v] >= n || inverse[perm[v]] >= 0) {
      throw Error("invalid_argument", "not a permutation");
    }
    inverse[perm[v]] = v;
  }
  ColoredGraph out(g.d(), g.has_color_zero());
  for (int v = 0; v < n; ++v) out.add_vertex(g.shade(inverse[v]));
  for (const ColoredEdge& e : g.edges()) out.add_edge(e.color, perm[e.white], perm[e.black]);
  return out;
}

ColoredGraph induced_subgraph(const ColoredGraph& g, std::span<const int> vertices) {
  std::vector<int> new_id(g.num_vertices(), -1);
  ColoredGraph out(g.d(), g.has_color_zero());
  for (int v : vertices) new_id[v] = out.add_vertex(g.shade(v));
  for (const ColoredEdge& e : g.edges()) {
    if (new_id[e.white] >= 0 && new_id[e.black] >= 0) {
      out.add_edge(e.color, new_id[e.white], new_id[e.black]);
    }
  }
  return out;
}

ColoredGraph substitute_boundary(const ColoredGraph& g, std::span<const int> region) {
  require_valid(g);
  const int n = g.num_vertices();
  std::vector<char> inside(n);
  for (int v : region) inside[v] = 1;
  // H keeps the region's color-0 edges that stay inside it.
  ColoredGraph h(g.d(), true);
  std::vector<int> h_id(n, -1);
  std::vector<int> region_sorted(region.begin(), region.end());
  std::sort(region_sorted.begin(), region_sorted.end());
  for (int v : region_sorted) h_id[v] = h.add_vertex(g.shade(v));
  for (const ColoredEdge& e : g.edges()) {
    if (inside[e.white] && inside[e.black]) h.add_edge(e.color, h_id[e.white], h_id[e.black]);
    if (inside[e.white] != inside[e.black] && e.color != 0) {
      throw Error("invalid_argument", "region must be a union of bubbles");
    }
  }
  BoundaryBubble boundary = boundary_bubble(h);
  ColoredGraph out(g.d(), true);
  std::vector<int> out_id(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!inside[v]) out_id[v] = out.add_vertex(g.shade(v));
  }
  for (std::size_t i = 0; i < boundary.source_vertex.size(); ++i) {
    int original = region_sorted[boundary.source_vertex[i]];
    out_id[original] = out.add_vertex(g.shade(original));
  }
  for (const ColoredEdge& e : g.edges()) {
    if (out_id[e.white] < 0 || out_id[e.black] < 0) continue;
    if (inside[e.white] && inside[e.black]) continue;
    out.add_edge(e.color, out_id[e.white], out_id[e.black]);
  }
  for (const ColoredEdge& e : boundary.bubble.edges()) {
    int w = region_sorted[boundary.source_vertex[e.white]];
    int b = region_sorted[boundary.source_vertex[e.black]];
    out.add_edge(e.color, out_id[w], out_id[b]);
  }
  return out;
}

}  // namespace tensorcomb
