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

#include "tensorcomb/stuffed_maps.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "tensorcomb/error.h"

namespace tensorcomb {
namespace {

// Pair structure of (B, pi): internal colors per pair and the cycles of
// every color of B_pi.
struct PairStructure {
  int d = 0;
  int pairs = 0;
  std::vector<ColorSet> internal;
  // cycles[c] lists the cycles of color c, each a sequence of pair indices.
  std::vector<std::vector<std::vector<int>>> cycles;
};

PairStructure pair_structure(const ColoredGraph& b, const Pairing& pairing) {
  ValidationReport report = validate(b);
  if (!report.ok) require_valid(b);
  if (!report.is_bubble) throw Error("invalid_argument", "M(B, pi) needs a bubble");
  std::vector<int> index = pair_index(b, pairing);
  PairStructure s;
  s.d = b.d();
  s.pairs = static_cast<int>(pairing.pairs.size());
  s.internal.assign(s.pairs, 0);
  for (int i = 0; i < s.pairs; ++i) {
    auto [w, k] = pairing.pairs[i];
    for (int c = 1; c <= s.d; ++c) {
      if (b.neighbor(w, c) == k) s.internal[i] |= color_bit(c);
    }
  }
  s.cycles.resize(s.d + 1);
  for (int c = 1; c <= s.d; ++c) {
    std::vector<char> seen(s.pairs);
    for (int i = 0; i < s.pairs; ++i) {
      if (seen[i] || has_color(s.internal[i], c)) continue;
      std::vector<int> cycle;
      for (int x = i; !seen[x]; x = index[b.neighbor(pairing.pairs[x].first, c)]) {
        seen[x] = 1;
        cycle.push_back(x);
      }
      s.cycles[c].push_back(std::move(cycle));
    }
  }
  return s;
}

ColorSet all_colors(int d) {
  ColorSet s = 0;
  for (int c = 1; c <= d; ++c) s |= color_bit(c);
  return s;
}

// Adds one copy of M(B, pi) to the builder. Returns the blue vertices and
// records, per blue vertex, the box darts in increasing color order.
std::vector<int> add_bubble_copy(MapBuilder& builder, const PairStructure& s,
                                 std::vector<std::vector<int>>& box_darts_of_blue,
                                 std::vector<int>& copy_of_vertex,
                                 std::vector<int>& pair_of_vertex, int copy) {
  std::vector<int> blue(s.pairs);
  for (int i = 0; i < s.pairs; ++i) {
    blue[i] = builder.add_vertex({VertexKind::kBlue, 0});
    copy_of_vertex.push_back(copy);
    pair_of_vertex.push_back(i);
    box_darts_of_blue.emplace_back();
  }
  for (int c = 1; c <= s.d; ++c) {
    for (const auto& cycle : s.cycles[c]) {
      int box = builder.add_vertex({VertexKind::kBox, c});
      copy_of_vertex.push_back(copy);
      pair_of_vertex.push_back(-1);
      box_darts_of_blue.emplace_back();
      for (int i : cycle) {
        auto [at_box, at_blue] = builder.add_edge(box, blue[i], color_bit(c));
        (void)at_box;
        box_darts_of_blue[blue[i]].push_back(at_blue);
      }
    }
  }
  return blue;
}

}  // namespace

CombinatorialMap bubble_map(const ColoredGraph& b, const Pairing& pairing) {
  PairStructure s = pair_structure(b, pairing);
  MapBuilder builder;
  std::vector<std::vector<int>> box_darts;
  std::vector<int> copy_of, pair_of;
  add_bubble_copy(builder, s, box_darts, copy_of, pair_of, 0);
  return builder.build();
}

StuffedWalshMap assemble_walsh_map(const ColoredGraph& b, const Pairing& pairing, int copies,
                                   const std::vector<std::vector<PairSlot>>& black_cycles) {
  PairStructure s = pair_structure(b, pairing);
  StuffedWalshMap w;
  w.d = s.d;
  w.copies = copies;
  w.pairs_per_copy = s.pairs;
  w.black_cycles = black_cycles;
  std::vector<char> used(static_cast<std::size_t>(copies) * s.pairs);
  for (const auto& cycle : black_cycles) {
    if (cycle.empty()) throw Error("invalid_map", "black vertices need at least one edge");
    for (auto [copy, pair] : cycle) {
      if (copy < 0 || copy >= copies || pair < 0 || pair >= s.pairs ||
          used[static_cast<std::size_t>(copy) * s.pairs + pair]) {
        throw Error("invalid_map", "every slot must appear in exactly one black cycle");
      }
      used[static_cast<std::size_t>(copy) * s.pairs + pair] = 1;
    }
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) {
    throw Error("invalid_map", "every slot must appear in exactly one black cycle");
  }
  MapBuilder builder;
  std::vector<std::vector<int>> box_darts;
  std::vector<std::vector<int>> blue_of_copy;
  for (int j = 0; j < copies; ++j) {
    blue_of_copy.push_back(
        add_bubble_copy(builder, s, box_darts, w.copy_of_vertex, w.pair_of_vertex, j));
  }
  const ColorSet full = all_colors(s.d);
  std::vector<int> black_dart_of_blue(w.copy_of_vertex.size(), -1);
  for (const auto& cycle : black_cycles) {
    int black = builder.add_vertex({VertexKind::kBlack, 0});
    w.copy_of_vertex.push_back(-1);
    w.pair_of_vertex.push_back(-1);
    w.black_vertex.push_back(black);
    for (auto [copy, pair] : cycle) {
      int blue = blue_of_copy[copy][pair];
      auto [at_black, at_blue] = builder.add_edge(black, blue, full & ~s.internal[pair]);
      (void)at_black;
      black_dart_of_blue[blue] = at_blue;
    }
  }
  for (int j = 0; j < copies; ++j) {
    for (int blue : blue_of_copy[j]) {
      std::vector<int> rotation{black_dart_of_blue[blue]};
      rotation.insert(rotation.end(), box_darts[blue].begin(), box_darts[blue].end());
      builder.set_rotation(blue, std::move(rotation));
    }
  }
  w.map = builder.build();
  return w;
}

StuffedWalshMap to_stuffed_map(const ColoredGraph& g, const ColoredGraph& b,
                               const Pairing& pairing) {
  ValidationReport report = validate(g);
  if (!report.ok) require_valid(g);
  if (!report.is_closed) throw Error("not_closed", "the bijection needs a closed graph");
  if (g.d() != b.d()) throw Error("bubble_mismatch", "graph and bubble differ in dimension");
  require_valid_pairing(b, pairing);
  BubblePartition parts = bubble_partition(g);
  std::vector<std::vector<int>> members(parts.count);
  for (int v = 0; v < g.num_vertices(); ++v) members[parts.label[v]].push_back(v);

  const int p = static_cast<int>(pairing.pairs.size());
  std::vector<PairSlot> slot_of(g.num_vertices());
  std::vector<std::vector<std::pair<int, int>>> source(parts.count);
  int choices_max = 1;
  for (int j = 0; j < parts.count; ++j) {
    ColoredGraph sub(g.d(), false);
    for (int v : members[j]) sub.add_vertex(g.shade(v));
    std::vector<int> local(g.num_vertices(), -1);
    for (std::size_t i = 0; i < members[j].size(); ++i) local[members[j][i]] = static_cast<int>(i);
    for (const ColoredEdge& e : g.edges()) {
      if (e.color != 0 && local[e.white] >= 0) sub.add_edge(e.color, local[e.white], local[e.black]);
    }
    auto isos = find_isomorphisms(b, sub);
    if (isos.empty()) {
      throw Error("bubble_mismatch", "bubble " + std::to_string(j) + " of the graph (vertex " +
                                         std::to_string(members[j].front()) +
                                         ") is not isomorphic to B");
    }
    // Among the transports of pi, keep the lexicographically smallest list
    // of graph vertex pairs.
    std::map<std::vector<std::pair<int, int>>, int> transports;
    for (const auto& iso : isos) {
      std::vector<std::pair<int, int>> t;
      for (auto [wv, bv] : pairing.pairs) t.emplace_back(members[j][iso[wv]], members[j][iso[bv]]);
      transports.emplace(t, 0);
    }
    choices_max = std::max(choices_max, static_cast<int>(transports.size()));
    source[j] = transports.begin()->first;
    for (int i = 0; i < p; ++i) {
      slot_of[source[j][i].first] = {j, i};
      slot_of[source[j][i].second] = {j, i};
    }
  }
  std::vector<std::vector<PairSlot>> cycles;
  std::vector<char> seen(static_cast<std::size_t>(parts.count) * p);
  for (int j = 0; j < parts.count; ++j) {
    for (int i = 0; i < p; ++i) {
      if (seen[static_cast<std::size_t>(j) * p + i]) continue;
      std::vector<PairSlot> cycle;
      PairSlot cur{j, i};
      while (!seen[static_cast<std::size_t>(cur.first) * p + cur.second]) {
        seen[static_cast<std::size_t>(cur.first) * p + cur.second] = 1;
        cycle.push_back(cur);
        int black = source[cur.first][cur.second].second;
        cur = slot_of[g.neighbor(black, 0)];
      }
      cycles.push_back(std::move(cycle));
    }
  }
  StuffedWalshMap w = assemble_walsh_map(b, pairing, parts.count, cycles);
  w.source = std::move(source);
  w.transport_choices = choices_max;
  return w;
}

ColoredGraph from_stuffed_map(const StuffedWalshMap& w, const ColoredGraph& b,
                              const Pairing& pairing) {
  const CombinatorialMap& m = w.map;
  const int d = b.d();
  const int nv = m.num_vertices();
  std::vector<int> blue_index(nv, -1);
  int blues = 0;
  for (int v = 0; v < nv; ++v) {
    if (m.vertex(v).kind == VertexKind::kBlue) blue_index[v] = blues++;
  }
  ColoredGraph g(d, true);
  for (int k = 0; k < blues; ++k) {
    g.add_vertex(Shade::kWhite);
    g.add_vertex(Shade::kBlack);
  }
  const ColorSet full = all_colors(d);
  auto other_blue = [&](int dart) {
    int v = m.vertex_of(m.alpha(dart));
    if (blue_index[v] < 0) throw Error("invalid_map", "box and black vertices must meet blue ones");
    return blue_index[v];
  };
  for (int v = 0; v < nv; ++v) {
    const MapVertex& kind = m.vertex(v);
    const auto& rot = m.rotation(v);
    if (kind.kind == VertexKind::kBlue) {
      int blacks = 0;
      ColorSet decoration = 0;
      for (int x : rot) {
        if (m.vertex(m.vertex_of(m.alpha(x))).kind == VertexKind::kBlack) {
          ++blacks;
          decoration = m.colors(x);
        }
      }
      if (blacks != 1) {
        throw Error("invalid_map", "blue vertex " + std::to_string(v) + " needs one black edge");
      }
      if ((decoration & ~full) != 0) throw Error("invalid_map", "color set outside 1..d");
      int k = blue_index[v];
      for (int c = 1; c <= d; ++c) {
        if (!has_color(decoration, c)) g.add_edge(c, 2 * k, 2 * k + 1);
      }
    } else if (kind.kind == VertexKind::kBox) {
      const int c = kind.box_color;
      if (c < 1 || c > d) throw Error("invalid_map", "box color outside 1..d");
      for (std::size_t i = 0; i < rot.size(); ++i) {
        if (m.colors(rot[i]) != color_bit(c)) {
          throw Error("invalid_map", "box edges must carry exactly the box color");
        }
        int from = other_blue(rot[i]);
        int to = other_blue(rot[(i + 1) % rot.size()]);
        g.add_edge(c, 2 * from, 2 * to + 1);
      }
    } else if (kind.kind == VertexKind::kBlack) {
      for (std::size_t i = 0; i < rot.size(); ++i) {
        int from = other_blue(rot[i]);
        int to = other_blue(rot[(i + 1) % rot.size()]);
        g.add_edge(0, 2 * to, 2 * from + 1);
      }
    } else {
      throw Error("invalid_map", "plain vertices do not occur in stuffed maps");
    }
  }
  ValidationReport report = validate(g);
  if (!report.ok) {
    std::string message = "map does not encode a colored graph:";
    for (const auto& v : report.violations) message += " " + v + ";";
    throw Error("invalid_map", message);
  }
  if (!report.is_closed) throw Error("invalid_map", "map leaves free vertices");
  // Every bubble of the result must be a copy of B whose pairs (2k, 2k+1)
  // are a transport of pi.
  BubblePartition parts = bubble_partition(g);
  std::vector<std::vector<int>> members(parts.count);
  for (int v = 0; v < g.num_vertices(); ++v) members[parts.label[v]].push_back(v);
  for (const auto& verts : members) {
    ColoredGraph sub(d, false);
    for (int v : verts) sub.add_vertex(g.shade(v));
    std::vector<int> local(g.num_vertices(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    for (const ColoredEdge& e : g.edges()) {
      if (e.color != 0 && local[e.white] >= 0) sub.add_edge(e.color, local[e.white], local[e.black]);
    }
    bool matched = false;
    for (const auto& iso : find_isomorphisms(b, sub)) {
      bool ok = true;
      for (auto [wv, bv] : pairing.pairs) {
        int gw = verts[iso[wv]];
        int gb = verts[iso[bv]];
        ok = ok && gb == gw + 1;
      }
      if (ok) {
        matched = true;
        break;
      }
    }
    if (!matched) throw Error("invalid_map", "a bubble copy does not match (B, pi)");
  }
  return g;
}

int walsh_face_count(const StuffedWalshMap& w, int color) {
  CombinatorialMap sub = w.map.submap_with_color(color);
  int isolated_black = 0;
  for (int v = 0; v < sub.num_vertices(); ++v) {
    if (sub.vertex(v).kind == VertexKind::kBlack && sub.degree(v) == 0) ++isolated_black;
  }
  return static_cast<int>(sub.face_orbits().size()) + isolated_black;
}

int walsh_face_count(const StuffedWalshMap& w) {
  int total = 0;
  for (int c = 1; c <= w.d; ++c) total += walsh_face_count(w, c);
  return total;
}

CombinatorialMap projected_map(const StuffedWalshMap& w) {
  const CombinatorialMap& m = w.map;
  MapBuilder builder;
  for (int j = 0; j < w.copies; ++j) builder.add_vertex({VertexKind::kPlain, 0});
  std::vector<std::vector<std::pair<int, int>>> at_copy(w.copies);  // (blue vertex, dart)
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (m.vertex(v).kind != VertexKind::kBlack) continue;
    int black = builder.add_vertex({VertexKind::kBlack, 0});
    for (int x : m.rotation(v)) {
      int blue = m.vertex_of(m.alpha(x));
      int copy = w.copy_of_vertex[blue];
      auto [at_black, at_plain] = builder.add_edge(black, copy, m.colors(x));
      (void)at_black;
      at_copy[copy].emplace_back(blue, at_plain);
    }
  }
  for (int j = 0; j < w.copies; ++j) {
    std::sort(at_copy[j].begin(), at_copy[j].end());
    std::vector<int> rotation;
    for (auto [blue, dart] : at_copy[j]) rotation.push_back(dart);
    builder.set_rotation(j, std::move(rotation));
  }
  return builder.build();
}

bool is_tree(const CombinatorialMap& m) {
  return m.component_count() == 1 && m.num_edges() == m.num_vertices() - 1;
}

int tree_face_count(const ColoredGraph& b, const Pairing& pairing, int copies) {
  int closed = faces(close_with_pairing(b, pairing)).total;
  return (closed - b.d()) * copies + b.d();
}

StuffedWalshMap tree_walsh_map(const ColoredGraph& b, const Pairing& pairing, int copies,
                               std::uint64_t seed) {
  if (copies < 1) throw Error("invalid_argument", "at least one copy is required");
  const int p = static_cast<int>(pairing.pairs.size());
  std::mt19937_64 rng(seed);
  auto pick = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  std::vector<std::vector<PairSlot>> cycles;
  for (int i = 0; i < p; ++i) cycles.push_back({{0, i}});
  for (int j = 1; j < copies; ++j) {
    int entry = pick(p);
    auto& cycle = cycles[pick(static_cast<int>(cycles.size()))];
    cycle.insert(cycle.begin() + pick(static_cast<int>(cycle.size()) + 1), PairSlot{j, entry});
    for (int i = 0; i < p; ++i) {
      if (i != entry) cycles.push_back({{j, i}});
    }
  }
  return assemble_walsh_map(b, pairing, copies, cycles);
}

CombinatorialMap bubble_contraction_map(const ColoredGraph& g) {
  ValidationReport report = validate(g);
  if (!report.ok) require_valid(g);
  if (g.d() != 2 || !report.is_closed) {
    throw Error("invalid_argument", "bubble contraction needs a closed graph at d=2");
  }
  BubblePartition parts = bubble_partition(g);
  MapBuilder builder;
  for (int j = 0; j < parts.count; ++j) builder.add_vertex({VertexKind::kPlain, 0});
  std::vector<int> dart_at(g.num_vertices(), -1);
  for (const ColoredEdge& e : g.edges()) {
    if (e.color != 0) continue;
    auto [at_white, at_black] =
        builder.add_edge(parts.label[e.white], parts.label[e.black], 0);
    dart_at[e.white] = at_white;
    dart_at[e.black] = at_black;
  }
  std::vector<char> done(parts.count);
  for (int v = 0; v < g.num_vertices(); ++v) {
    int j = parts.label[v];
    if (done[j] || !g.is_white(v)) continue;
    done[j] = 1;
    std::vector<int> rotation;
    int x = v;
    do {
      int k = g.neighbor(x, 1);
      rotation.push_back(dart_at[x]);
      rotation.push_back(dart_at[k]);
      x = g.neighbor(k, 2);
    } while (x != v);
    builder.set_rotation(j, std::move(rotation));
  }
  return builder.build();
}

}  // namespace tensorcomb
