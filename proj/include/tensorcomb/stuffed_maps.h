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

#ifndef TENSORCOMB_STUFFED_MAPS_H_
#define TENSORCOMB_STUFFED_MAPS_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "tensorcomb/bubble_catalog.h"
#include "tensorcomb/colored_graph.h"
#include "tensorcomb/combinatorial_map.h"

namespace tensorcomb {

// A slot is one pair of one copy: (copy, pair index in the pairing).
using PairSlot = std::pair<int, int>;

struct StuffedWalshMap {
  CombinatorialMap map;
  int d = 0;
  int copies = 0;
  int pairs_per_copy = 0;
  std::vector<int> copy_of_vertex;  // blue and box vertices; -1 for black
  std::vector<int> pair_of_vertex;  // blue vertices; -1 otherwise
  // Cyclic sequence of slots around each black vertex.
  std::vector<std::vector<PairSlot>> black_cycles;
  std::vector<int> black_vertex;    // map vertex of black_cycles[i]
  // Set by to_stuffed_map: graph vertices (white, black) of every slot.
  std::vector<std::vector<std::pair<int, int>>> source;
  // Distinct transports of the pairing onto some copy (1 = unambiguous).
  int transport_choices = 1;
};

// M(B, pi): one blue vertex per pair (vertex i is pair i) and one box
// vertex per cycle of each color of B_pi, its darts in cycle order.
CombinatorialMap bubble_map(const ColoredGraph& b, const Pairing& pairing);

// Copies of M(B, pi) joined by black vertices. Each slot must appear in
// exactly one cycle. Around a blue vertex the black edge comes first,
// then box edges by increasing color.
StuffedWalshMap assemble_walsh_map(const ColoredGraph& b, const Pairing& pairing, int copies,
                                   const std::vector<std::vector<PairSlot>>& black_cycles);

StuffedWalshMap to_stuffed_map(const ColoredGraph& g, const ColoredGraph& b,
                               const Pairing& pairing);

// Inverse construction; vertices 2k and 2k+1 of the result are the white
// and black vertex of the k-th blue vertex (in map vertex order).
ColoredGraph from_stuffed_map(const StuffedWalshMap& w, const ColoredGraph& b,
                              const Pairing& pairing);

// Faces of W^(c): orbits of the submap plus its isolated black vertices.
int walsh_face_count(const StuffedWalshMap& w, int color);
int walsh_face_count(const StuffedWalshMap& w);

// Each copy of M(B, pi) collapsed to one plain vertex (vertex i is copy i,
// followed by the black vertices).
CombinatorialMap projected_map(const StuffedWalshMap& w);

bool is_tree(const CombinatorialMap& m);

// (F(B^pi) - d) * copies + d.
int tree_face_count(const ColoredGraph& b, const Pairing& pairing, int copies);

// Random W over (B, pi) whose projected map is a tree: copy j >= 1 enters
// an existing black cycle with one of its pairs, its other pairs get
// univalent black vertices.
StuffedWalshMap tree_walsh_map(const ColoredGraph& b, const Pairing& pairing, int copies,
                               std::uint64_t seed);

// d = 2: bubbles shrunk to vertices, color-0 edges kept, darts around a
// bubble in the order of its cycle (white -1-> black -2-> white ...).
CombinatorialMap bubble_contraction_map(const ColoredGraph& g);

}  // namespace tensorcomb

#endif  // TENSORCOMB_STUFFED_MAPS_H_
