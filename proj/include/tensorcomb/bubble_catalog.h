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

#ifndef TENSORCOMB_BUBBLE_CATALOG_H_
#define TENSORCOMB_BUBBLE_CATALOG_H_

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tensorcomb/colored_graph.h"

namespace tensorcomb {

// Perfect matching of a bubble's white vertices with its black vertices.
struct Pairing {
  std::vector<std::pair<int, int>> pairs;  // (white, black)

  auto operator<=>(const Pairing&) const = default;
};

// Throws Error("invalid_pairing") unless every vertex of `b` lies in
// exactly one pair of opposite shades.
void require_valid_pairing(const ColoredGraph& b, const Pairing& pairing);

// Pair index of every vertex.
std::vector<int> pair_index(const ColoredGraph& b, const Pairing& pairing);

// B^pi: the bubble closed by a color-0 edge inside every pair.
ColoredGraph close_with_pairing(const ColoredGraph& b, const Pairing& pairing);

// Inserts a (d-1)-dipole on the color-`color` edge at white vertex `white`.
struct DipoleInsertion {
  int white = 0;
  int color = 1;
};

enum class BubbleFamily { kMelonic, kNecklace, kQuarticMelonic, kQuarticNecklace, kCustom };

std::string family_name(BubbleFamily family);

struct BubbleSpec {
  BubbleFamily family = BubbleFamily::kCustom;
  int d = 0;
  std::vector<DipoleInsertion> insertions;  // melonic families
  int necklace_length = 0;                  // necklace families
  std::vector<int> first_half;              // necklace families
  ColoredGraph graph;
};

// 2-vertex bubble: vertices 0 (white) and 1 (black) joined by every color.
ColoredGraph two_vertex_bubble(int d);

// The new white and black vertices of an insertion get the next two ids.
BubbleSpec melonic_bubble(int d, const std::vector<DipoleInsertion>& insertions);

// White w_i = 2i and black b_i = 2i + 1; w_i - b_i carry `first_half`,
// b_i - w_{i+1} carry the complementary colors.
BubbleSpec necklace_bubble(int d, int length, const std::vector<int>& first_half);

// B_c at dimension d: vertices 0,1 and 2,3 joined by every color except c.
BubbleSpec quartic_melonic(int d, int color);

// Quartic necklace at d = 4 with the given two colors on w_i - b_i.
BubbleSpec quartic_necklace(const std::vector<int>& first_half = {1, 3});

bool is_melonic(const ColoredGraph& g);

// For melonic bubbles: pairs the two vertices of every removed dipole.
Pairing melonic_pairing(const ColoredGraph& b);

// Pairs each black b_i with w_{i+1}, i.e. vertices joined by the second
// half of the colors.
Pairing necklace_pairing(const BubbleSpec& necklace);

struct BestPairing {
  Pairing pairing;
  int max_faces = 0;
  std::uint64_t pairings_examined = 0;
};

inline constexpr int kDefaultPairingCap = 8;

BestPairing best_pairing(const ColoredGraph& b, int cap = kDefaultPairingCap);

// Calls `visit` with every pairing of `b` in lexicographic order.
template <typename Visit>
void for_each_pairing(const ColoredGraph& b, Visit&& visit);

template <typename Visit>
void for_each_pairing(const ColoredGraph& b, Visit&& visit) {
  std::vector<int> whites = b.whites();
  std::vector<int> blacks = b.blacks();
  std::sort(blacks.begin(), blacks.end());
  Pairing pairing;
  pairing.pairs.resize(whites.size());
  do {
    for (std::size_t i = 0; i < whites.size(); ++i) pairing.pairs[i] = {whites[i], blacks[i]};
    visit(static_cast<const Pairing&>(pairing));
  } while (std::next_permutation(blacks.begin(), blacks.end()));
}

}  // namespace tensorcomb

#endif  // TENSORCOMB_BUBBLE_CATALOG_H_
