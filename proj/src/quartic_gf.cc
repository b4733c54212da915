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

#include "tensorcomb/quartic_gf.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "tensorcomb/error.h"

namespace tensorcomb {

PowerSeries nonseparable_series(int order) {
  PowerSeries h(std::max(order, 3), "x");
  h[1] = 1;
  h[2] = -2;
  h[3] = 1;
  PowerSeries u = PowerSeries::revert(h.truncated(std::max(order, 1))).truncated(order);
  return PowerSeries::constant(1, order, "x") + u * Rational(2) - u * u * Rational(3);
}

PowerSeries quartic_series(const Rational& k, const Rational& lambda, int order) {
  if (order < 0) throw Error("invalid_argument", "series order must be nonnegative");
  PowerSeries p = nonseparable_series(order);
  PowerSeries t = PowerSeries::identity(order, "t");
  PowerSeries f = PowerSeries::constant(1, order, "t");
  for (int step = 0; step <= order; ++step) {
    PowerSeries x = t * f * f;
    PowerSeries px = p.compose(x);
    px = PowerSeries(px.coefficients(), "t");
    f = (x * lambda + px * k) + (1 - k);
  }
  return f;
}

PowerSeries planar_map_series(int order) {
  PowerSeries a(order, "t");
  for (int n = 0; n <= order; ++n) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
    Integer three;
    mpz_ui_pow_ui(three.get_mpz_t(), 3, n);
    a[n] = Rational(Integer(2 * three * binom), Integer((n + 1) * (n + 2)));
    a[n].canonicalize();
  }
  return a;
}

PowerSeries quartic_polynomial_residual(const PowerSeries& f, const Rational& k,
                                        const Rational& lambda) {
  const int n = f.order();
  const Rational& l = lambda;
  PowerSeries t = PowerSeries::identity(n, "t");
  PowerSeries one = PowerSeries::constant(1, n, "t");
  Rational a = 2 * k * k * k + k * k * (l - 18) + 3 * l - 4 * l * k;
  Rational b = 18 * k * k - 6 * l + 4 * l * k;
  // Coefficient of f^2: 3 lambda (1 + t lambda) - 27 k^3 t - 18 k^2 t lambda - 2 k t lambda^2.
  PowerSeries c = one * Rational(3 * l) +
                  t * Rational(3 * l * l - 27 * k * k * k - 18 * k * k * l - 2 * k * l * l);
  PowerSeries f2 = f * f;
  PowerSeries f3 = f2 * f;
  PowerSeries f4 = f3 * f;
  PowerSeries inner = one * a + f * b + c * f2 - t * f3 * Rational(3 * l * l) +
                      t * t * f4 * Rational(l * l * l);
  PowerSeries shifted = f + (k - 1);
  return t * f2 * inner - (f - one) * shifted * shifted;
}

std::vector<std::vector<Rational>> quartic_series_table(const Rational& k, int order) {
  std::vector<PowerSeries> samples;
  for (int j = 0; j <= order; ++j) samples.push_back(quartic_series(k, Rational(j), order));
  std::vector<std::vector<Rational>> table(order + 1);
  for (int e = 0; e <= order; ++e) {
    // Newton divided differences at lambda = 0..e, then expand.
    std::vector<Rational> dd(e + 1);
    for (int j = 0; j <= e; ++j) dd[j] = samples[j][e];
    for (int level = 1; level <= e; ++level) {
      for (int j = e; j >= level; --j) dd[j] = (dd[j] - dd[j - 1]) / level;
    }
    std::vector<Rational> poly(e + 1);
    for (int j = e; j >= 0; --j) {
      // poly = poly * (lambda - j) + dd[j]
      for (int i = e; i >= 1; --i) poly[i] = poly[i - 1] - poly[i] * j;
      poly[0] = poly[0] * (-j) + dd[j];
    }
    table[e] = std::move(poly);
  }
  return table;
}

namespace {

struct TypedEdge {
  int u;
  int v;
  ColorSet colors;
};

std::vector<TypedEdge> typed_edges(const CombinatorialMap& m) {
  std::vector<TypedEdge> out;
  for (int x = 0; x < m.num_darts(); ++x) {
    if (x < m.alpha(x)) out.push_back({m.vertex_of(x), m.vertex_of(m.alpha(x)), m.colors(x)});
  }
  return out;
}

bool reachable_without(const CombinatorialMap& m, const std::vector<TypedEdge>& edges,
                       int skip, int from, int to) {
  std::vector<std::vector<int>> adj(m.num_vertices());
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (e == skip) continue;
    adj[edges[e].u].push_back(edges[e].v);
    adj[edges[e].v].push_back(edges[e].u);
  }
  std::vector<char> seen(m.num_vertices());
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return false;
}

// Biconnected blocks (as edge lists) of a multigraph; loops are their own
// blocks.
class Blocks {
 public:
  Blocks(int vertices, const std::vector<TypedEdge>& edges)
      : edges_(edges), adj_(vertices), disc_(vertices, -1), low_(vertices, 0) {
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (edges[e].u == edges[e].v) {
        blocks_.push_back({e});
        continue;
      }
      adj_[edges[e].u].emplace_back(edges[e].v, e);
      adj_[edges[e].v].emplace_back(edges[e].u, e);
    }
    for (int v = 0; v < vertices; ++v) {
      if (disc_[v] < 0) visit(v, -1);
    }
  }

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

 private:
  void visit(int v, int parent_edge) {
    disc_[v] = low_[v] = timer_++;
    for (auto [w, e] : adj_[v]) {
      if (e == parent_edge) continue;
      if (disc_[w] < 0) {
        stack_.push_back(e);
        visit(w, e);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) {
          std::vector<int> block;
          int top;
          do {
            top = stack_.back();
            stack_.pop_back();
            block.push_back(top);
          } while (top != e);
          blocks_.push_back(std::move(block));
        }
      } else if (disc_[w] < disc_[v]) {
        stack_.push_back(e);
        low_[v] = std::min(low_[v], disc_[w]);
      }
    }
  }

  const std::vector<TypedEdge>& edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<int> disc_, low_;
  std::vector<int> stack_;
  std::vector<std::vector<int>> blocks_;
  int timer_ = 0;
};

void require_quartic_colors(const CombinatorialMap& m, bool allow_mono) {
  for (int x = 0; x < m.num_darts(); ++x) {
    ColorSet s = m.colors(x);
    bool mono = s == color_bit(1);
    bool bicolored = false;
    for (int c = 2; c <= 4; ++c) bicolored = bicolored || s == (color_bit(1) | color_bit(c));
    if (!(bicolored || (allow_mono && mono))) {
      throw Error("malformed_colors", "edge color sets must be " +
                                          std::string(allow_mono ? "{1} or " : "") +
                                          "{1,c} with c in 2..4");
    }
  }
}

}  // namespace

DominantMapCheck is_dominant(const CombinatorialMap& m) {
  require_quartic_colors(m, true);
  DominantMapCheck check;
  std::vector<TypedEdge> edges = typed_edges(m);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (edges[e].colors != color_bit(1)) continue;
    if (edges[e].u == edges[e].v || reachable_without(m, edges, e, edges[e].u, edges[e].v)) {
      check.mono_edges_are_bridges = false;
    }
  }
  check.cyclomatic = m.cyclomatic();
  check.submap_cyclomatic.assign(5, 0);
  check.submap_genus.assign(5, 0);
  for (int c = 1; c <= 4; ++c) {
    CombinatorialMap sub = m.submap_with_color(c);
    check.submap_cyclomatic[c] = sub.cyclomatic();
    check.submap_genus[c] = sub.genus();
    if (check.submap_genus[c] != 0) check.submaps_planar = false;
  }
  Blocks blocks(m.num_vertices(), edges);
  for (const auto& block : blocks.blocks()) {
    for (int e : block) {
      if (edges[e].colors != edges[block.front()].colors) check.cycles_single_type = false;
    }
  }
  check.passes = check.mono_edges_are_bridges && check.submaps_planar && check.cycles_single_type;
  return check;
}

int face_difference(const CombinatorialMap& m) {
  require_quartic_colors(m, false);
  if (m.component_count() != 1) throw Error("disconnected", "face difference needs a connected map");
  const int l = m.cyclomatic();
  int sum_l = 0;
  int sum_g = 0;
  int disjoint = 0;
  for (int c = 1; c <= 4; ++c) {
    CombinatorialMap sub = m.submap_with_color(c);
    sum_l += sub.cyclomatic();
    sum_g += sub.genus();
    if (c >= 2) disjoint += sub.cyclomatic();
  }
  int result = -4 * l + 2 * sum_l - 2 * sum_g;
  if (disjoint > l || result > 0) {
    throw Error("internal", "cyclomatic bound violated on an edge-disjoint decomposition");
  }
  return result;
}

int quartic_face_count(const CombinatorialMap& m) {
  int total = 0;
  for (int c = 1; c <= 4; ++c) total += m.submap_with_color(c).face_count();
  return total;
}

std::vector<CombinatorialMap> rooted_maps(int edges) {
  if (edges < 0) throw Error("invalid_argument", "edge count must be nonnegative");
  if (edges == 0) {
    MapBuilder single;
    single.add_vertex();
    return {single.build()};
  }
  const int n = 2 * edges;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::set<std::vector<int>> seen;
  std::vector<CombinatorialMap> out;
  std::vector<int> label(n), order;
  order.reserve(n);
  do {
    std::fill(label.begin(), label.end(), -1);
    order.assign(1, 0);
    label[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      int x = order[i];
      for (int y : {sigma[x], x ^ 1}) {
        if (label[y] < 0) {
          label[y] = static_cast<int>(order.size());
          order.push_back(y);
        }
      }
    }
    if (static_cast<int>(order.size()) != n) continue;
    std::vector<int> code(2 * n);
    for (int i = 0; i < n; ++i) {
      code[i] = label[sigma[order[i]]];
      code[n + i] = label[order[i] ^ 1];
    }
    if (!seen.insert(code).second) continue;
    std::vector<std::vector<int>> rotations;
    std::vector<char> done(n);
    for (int s = 0; s < n; ++s) {
      if (done[s]) continue;
      rotations.emplace_back();
      for (int x = s; !done[x]; x = sigma[x]) {
        done[x] = 1;
        rotations.back().push_back(x);
      }
    }
    std::vector<int> alpha(n);
    for (int x = 0; x < n; ++x) alpha[x] = x ^ 1;
    std::vector<MapVertex> vertices(rotations.size());
    out.emplace_back(std::move(vertices), std::move(rotations), std::move(alpha),
                     std::vector<ColorSet>(n, 0), 0);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

CombinatorialMap with_edge_types(const CombinatorialMap& m, const std::vector<int>& types) {
  std::vector<ColorSet> colors(m.num_darts());
  std::vector<int> alpha(m.num_darts());
  int e = 0;
  for (int x = 0; x < m.num_darts(); ++x) {
    alpha[x] = m.alpha(x);
    if (x > m.alpha(x)) continue;
    if (e >= static_cast<int>(types.size()) || types[e] < 0 || types[e] > 3) {
      throw Error("invalid_argument", "one edge type in 0..3 per edge is required");
    }
    ColorSet s = types[e] == 0 ? color_bit(1) : (color_bit(1) | color_bit(types[e] + 1));
    colors[x] = colors[m.alpha(x)] = s;
    ++e;
  }
  std::vector<MapVertex> vertices;
  std::vector<std::vector<int>> rotations;
  for (int v = 0; v < m.num_vertices(); ++v) {
    vertices.push_back(m.vertex(v));
    rotations.push_back(m.rotation(v));
  }
  return CombinatorialMap(std::move(vertices), std::move(rotations), std::move(alpha),
                          std::move(colors), m.root());
}

void for_each_dominant_rooted_map(int k, int e_max,
                                  const std::function<void(const CombinatorialMap&)>& visit,
                                  int cap) {
  if (k < 1 || k > 3) throw Error("invalid_argument", "k must lie in 1..3");
  if (e_max > cap) {
    throw Error("cap_exceeded", "rooted-map enumeration is capped at " + std::to_string(cap) +
                                    " edges");
  }
  for (int edges = 1; edges <= e_max; ++edges) {
    for (const CombinatorialMap& m : rooted_maps(edges)) {
      if (m.genus() != 0) continue;
      std::vector<int> types(edges, 0);
      while (true) {
        CombinatorialMap typed = with_edge_types(m, types);
        if (is_dominant(typed).passes) visit(typed);
        int i = 0;
        while (i < edges && types[i] == k) types[i++] = 0;
        if (i == edges) break;
        ++types[i];
      }
    }
  }
}

std::vector<std::vector<std::uint64_t>> enumerate_dominant_rooted_maps(int k, int e_max,
                                                                       int cap) {
  std::vector<std::vector<std::uint64_t>> counts(e_max + 1);
  for (int e = 0; e <= e_max; ++e) counts[e].assign(e + 1, 0);
  counts[0][0] = 1;
  for_each_dominant_rooted_map(
      k, e_max,
      [&counts](const CombinatorialMap& m) {
        int mono = 0;
        for (int x = 0; x < m.num_darts(); ++x) {
          if (x < m.alpha(x) && m.colors(x) == color_bit(1)) ++mono;
        }
        ++counts[m.num_edges()][mono];
      },
      cap);
  return counts;
}

ColoredGraph quartic_map_to_graph(const CombinatorialMap& m) {
  require_quartic_colors(m, true);
  ColoredGraph g(4, true);
  for (int x = 0; x < m.num_darts(); ++x) {
    g.add_vertex(Shade::kWhite);
    g.add_vertex(Shade::kBlack);
  }
  for (int x = 0; x < m.num_darts(); ++x) {
    int y = m.alpha(x);
    if (x > y) continue;
    for (int c = 1; c <= 4; ++c) {
      if (has_color(m.colors(x), c)) {
        g.add_edge(c, 2 * x, 2 * y + 1);
        g.add_edge(c, 2 * y, 2 * x + 1);
      } else {
        g.add_edge(c, 2 * x, 2 * x + 1);
        g.add_edge(c, 2 * y, 2 * y + 1);
      }
    }
  }
  for (int v = 0; v < m.num_vertices(); ++v) {
    const auto& rot = m.rotation(v);
    for (std::size_t i = 0; i < rot.size(); ++i) {
      g.add_edge(0, 2 * rot[(i + 1) % rot.size()], 2 * rot[i] + 1);
    }
  }
  return g;
}

Rational quartic_graph_delta(const CombinatorialMap& m) {
  ColoredGraph g = quartic_map_to_graph(m);
  int mono = 0;
  for (int x = 0; x < m.num_darts(); ++x) {
    if (x < m.alpha(x) && m.colors(x) == color_bit(1)) ++mono;
  }
  const int bicolored = m.num_edges() - mono;
  return graph_power(4, faces(g).total, g.num_edges_of_color(0), {mono, bicolored},
                     {Rational(3), Rational(4)})
      .delta;
}

}  // namespace tensorcomb
