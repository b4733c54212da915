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

#include "tensorcomb/enhancement.h"

#include <algorithm>
#include <set>

#include "tensorcomb/error.h"

namespace tensorcomb {

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kDegreeTheorem:
      return "degree-theorem";
    case Provenance::kInherited:
      return "inherited";
    case Provenance::kSlice:
      return "slice";
    case Provenance::kEmpirical:
      return "empirical";
    case Provenance::kPairingFormula:
      return "pairing-formula";
  }
  return "degree-theorem";
}

std::string status_name(EnhancementStatus s) {
  switch (s) {
    case EnhancementStatus::kProved:
      return "proved";
    case EnhancementStatus::kCandidate:
      return "candidate";
    case EnhancementStatus::kVerified:
      return "verified";
  }
  return "proved";
}

namespace {

EnhancementRecord base_record(const ColoredGraph& bubble) {
  ValidationReport report = validate(bubble);
  if (!report.ok) require_valid(bubble);
  if (!report.is_bubble) throw Error("invalid_argument", "enhancements are defined for bubbles");
  EnhancementRecord r;
  r.bubble = bubble;
  r.bubble_key = canonical_form(bubble);
  r.d = bubble.d();
  r.p = static_cast<int>(bubble.whites().size());
  return r;
}

}  // namespace

EnhancementRecord melonic_enhancement(const ColoredGraph& bubble) {
  EnhancementRecord r = base_record(bubble);
  if (!is_melonic(bubble)) throw Error("not_melonic", "bubble is not melonic");
  r.s = r.d - 1;
  r.provenance = Provenance::kDegreeTheorem;
  r.status = EnhancementStatus::kProved;
  return r;
}

EnhancementRecord inherited_enhancement(const ColoredGraph& h, int parent_p,
                                        const Rational& parent_s, int internal_faces,
                                        int copies) {
  ValidationReport report = validate(h);
  if (!report.ok) require_valid(h);
  if (report.is_closed) throw Error("closed_graph", "inherited enhancement needs an open gluing");
  if (count_components(h) != 1) throw Error("disconnected", "the open gluing must be connected");
  BoundaryBubble boundary = boundary_bubble(h);
  EnhancementRecord r = base_record(boundary.bubble);
  const int d = h.d();
  r.s = Rational((d - 1) * (r.p - parent_p * copies)) + parent_s * copies + internal_faces;
  r.provenance = Provenance::kInherited;
  r.status = EnhancementStatus::kProved;
  r.inherited = InheritedData{h, internal_faces, copies, parent_p, parent_s};
  return r;
}

EnhancementRecord inherited_enhancement(const ColoredGraph& h, int parent_p,
                                        const Rational& parent_s) {
  ValidationReport report = validate(h);
  if (!report.ok) require_valid(h);
  if (report.is_closed) throw Error("closed_graph", "inherited enhancement needs an open gluing");
  int internal_faces = faces(h).total;
  int copies = bubble_partition(h).count;
  return inherited_enhancement(h, parent_p, parent_s, internal_faces, copies);
}

EnhancementRecord slice_enhancement(const ColoredGraph& bubble,
                                    const std::vector<std::vector<int>>& partition,
                                    const std::vector<Rational>& slice_enhancements) {
  EnhancementRecord r = base_record(bubble);
  const int d = r.d;
  std::set<int> covered;
  for (const auto& slice : partition) {
    if (slice.size() < 2) throw Error("invalid_partition", "every slice needs at least two colors");
    for (int c : slice) {
      if (c < 1 || c > d || !covered.insert(c).second) {
        throw Error("invalid_partition", "slices must partition the colors 1.." + std::to_string(d));
      }
    }
  }
  if (static_cast<int>(covered.size()) != d) {
    throw Error("invalid_partition", "slices must partition the colors 1.." + std::to_string(d));
  }
  if (!slice_enhancements.empty() && slice_enhancements.size() != partition.size()) {
    throw Error("invalid_argument", "one enhancement per slice is required");
  }
  SliceData data;
  data.partition = partition;
  const int slices = static_cast<int>(partition.size());
  r.s = Rational((slices - 1) * r.p);
  for (int k = 0; k < slices; ++k) {
    const auto& slice = partition[k];
    std::vector<int> sorted = slice;
    std::sort(sorted.begin(), sorted.end());
    ColoredGraph sub(static_cast<int>(sorted.size()), false);
    for (int v = 0; v < bubble.num_vertices(); ++v) sub.add_vertex(bubble.shade(v));
    for (const ColoredEdge& e : bubble.edges()) {
      auto it = std::find(sorted.begin(), sorted.end(), e.color);
      if (it != sorted.end()) sub.add_edge(static_cast<int>(it - sorted.begin()) + 1, e.white, e.black);
    }
    if (count_components(sub) != 1) {
      throw Error("disconnected_slice",
                  "slice " + std::to_string(k) +
                      " spans a disconnected sub-bubble; the relaxed analysis is not supported");
    }
    Rational sk = slice_enhancements.empty() ? Rational(static_cast<int>(slice.size()) - 1)
                                             : slice_enhancements[k];
    data.slice_enhancements.push_back(sk);
    r.s += sk;
  }
  r.provenance = Provenance::kSlice;
  r.status = EnhancementStatus::kProved;
  r.slice = std::move(data);
  return r;
}

EnhancementRecord pairing_enhancement(const ColoredGraph& bubble, const Pairing& pairing) {
  EnhancementRecord r = base_record(bubble);
  int closed_faces = faces(close_with_pairing(bubble, pairing)).total;
  r.s = Rational(r.d + (r.d - 1) * r.p - closed_faces);
  r.provenance = Provenance::kPairingFormula;
  r.status = EnhancementStatus::kCandidate;
  r.pairing = PairingData{pairing, closed_faces, std::nullopt};
  return r;
}

EnhancementRecord verify_enhancement(EnhancementRecord record, int b_max, int edge_cap) {
  EmpiricalEnhancement e = empirical_enhancement(record.bubble, b_max, edge_cap);
  if (record.status == EnhancementStatus::kCandidate && e.exact_fit && e.enhancement == record.s) {
    record.status = EnhancementStatus::kVerified;
  }
  if (record.pairing) record.pairing->check = e;
  record.empirical = std::move(e);
  return record;
}

EnhancementRecord empirical_record(const ColoredGraph& bubble, int b_max, int edge_cap) {
  EnhancementRecord r = base_record(bubble);
  EmpiricalEnhancement e = empirical_enhancement(bubble, b_max, edge_cap);
  r.s = e.enhancement;
  r.provenance = Provenance::kEmpirical;
  r.status = EnhancementStatus::kCandidate;
  r.empirical = std::move(e);
  return r;
}

ColoredGraph chain_gluing(const ColoredGraph& bubble, int count, int from_black, int to_white,
                          bool close_ring) {
  require_valid(bubble);
  const int n = bubble.num_vertices();
  if (count < 1) throw Error("invalid_argument", "a chain needs at least one copy");
  if (from_black < 0 || from_black >= n || bubble.is_white(from_black) || to_white < 0 ||
      to_white >= n || !bubble.is_white(to_white)) {
    throw Error("invalid_argument", "chain endpoints must be a black and a white vertex");
  }
  ColoredGraph h(bubble.d(), true);
  for (int i = 0; i < count; ++i) {
    for (int v = 0; v < n; ++v) h.add_vertex(bubble.shade(v));
    for (const ColoredEdge& e : bubble.edges()) h.add_edge(e.color, i * n + e.white, i * n + e.black);
  }
  const int links = close_ring ? count : count - 1;
  for (int i = 0; i < links; ++i) {
    h.add_edge(0, ((i + 1) % count) * n + to_white, i * n + from_black);
  }
  return h;
}

ColoredGraph tree_gluing(const ColoredGraph& bubble, int count) {
  require_valid(bubble);
  const int n = bubble.num_vertices();
  if (count < 1) throw Error("invalid_argument", "a tree needs at least one copy");
  ColoredGraph h(bubble.d(), true);
  for (int i = 0; i < count; ++i) {
    for (int v = 0; v < n; ++v) h.add_vertex(bubble.shade(v));
    for (const ColoredEdge& e : bubble.edges()) h.add_edge(e.color, i * n + e.white, i * n + e.black);
  }
  std::vector<char> used(static_cast<std::size_t>(count) * n);
  auto first_free = [&](int copy, Shade shade) {
    for (int v = 0; v < n; ++v) {
      int x = copy * n + v;
      if (bubble.shade(v) == shade && !used[x]) return x;
    }
    throw Error("invalid_argument", "bubble has too few vertices for a binary tree gluing");
  };
  for (int i = 1; i < count; ++i) {
    int parent = (i - 1) / 2;
    int b = first_free(parent, Shade::kBlack);
    int w = first_free(i, Shade::kWhite);
    used[b] = used[w] = 1;
    h.add_edge(0, w, b);
  }
  return h;
}

ColoredGraph slice_example_d5() {
  ColoredGraph g(5, false);
  for (int i = 0; i < 2; ++i) {
    g.add_vertex(Shade::kWhite);
    g.add_vertex(Shade::kBlack);
  }
  for (int c : {2, 3, 4}) {
    g.add_edge(c, 0, 1);
    g.add_edge(c, 2, 3);
  }
  for (int c : {1, 5}) {
    g.add_edge(c, 0, 3);
    g.add_edge(c, 2, 1);
  }
  return g;
}

ColoredGraph superpose_slices(const ColoredGraph& low, const ColoredGraph& high) {
  require_valid(low);
  require_valid(high);
  if (low.d() != 3 || high.d() != 3 || low.num_vertices() != high.num_vertices()) {
    throw Error("invalid_argument", "slices must be d=3 bubbles on the same vertex count");
  }
  for (int v = 0; v < low.num_vertices(); ++v) {
    if (low.shade(v) != high.shade(v)) throw Error("invalid_argument", "slice shades disagree");
  }
  ColoredGraph g(6, false);
  for (int v = 0; v < low.num_vertices(); ++v) g.add_vertex(low.shade(v));
  for (const ColoredEdge& e : low.edges()) g.add_edge(e.color, e.white, e.black);
  for (const ColoredEdge& e : high.edges()) g.add_edge(e.color + 3, e.white, e.black);
  return g;
}

}  // namespace tensorcomb
