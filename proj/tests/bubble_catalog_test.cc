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

#include "tensorcomb/bubble_catalog.h"

#include <gtest/gtest.h>

#include "tensorcomb/error.h"

namespace tensorcomb {
namespace {

TEST(TwoVertex, AllColorsBetweenOnePair) {
  ColoredGraph g = two_vertex_bubble(4);
  EXPECT_EQ(g.num_vertices(), 2);
  for (int c = 1; c <= 4; ++c) EXPECT_EQ(g.neighbor(0, c), 1);
  EXPECT_TRUE(is_melonic(g));
}

TEST(Melonic, DipoleInsertionLayout) {
  BubbleSpec b1 = quartic_melonic(3, 1);
  const ColoredGraph& g = b1.graph;
  EXPECT_TRUE(validate(g).is_bubble);
  EXPECT_EQ(g.neighbor(0, 1), 3);
  EXPECT_EQ(g.neighbor(2, 1), 1);
  EXPECT_EQ(g.neighbor(0, 2), 1);
  EXPECT_EQ(g.neighbor(2, 3), 3);
  EXPECT_TRUE(is_melonic(g));
  EXPECT_EQ(b1.family, BubbleFamily::kQuarticMelonic);
}

TEST(Melonic, RepeatedInsertionsStayMelonic) {
  BubbleSpec spec = melonic_bubble(4, {{0, 1}, {2, 3}, {0, 2}, {4, 4}});
  EXPECT_EQ(spec.graph.num_vertices(), 10);
  EXPECT_TRUE(validate(spec.graph).is_bubble);
  EXPECT_TRUE(is_melonic(spec.graph));
}

TEST(Melonic, MissingEdgeThrows) {
  EXPECT_THROW(melonic_bubble(3, {{1, 1}}), Error);
  EXPECT_THROW(melonic_bubble(3, {{0, 4}}), Error);
  EXPECT_THROW(melonic_bubble(3, {{6, 1}}), Error);
}

TEST(Necklace, Structure) {
  BubbleSpec n = quartic_necklace();
  const ColoredGraph& g = n.graph;
  EXPECT_EQ(g.d(), 4);
  EXPECT_TRUE(validate(g).is_bubble);
  EXPECT_EQ(g.neighbor(0, 1), 1);
  EXPECT_EQ(g.neighbor(0, 3), 1);
  EXPECT_EQ(g.neighbor(0, 2), 3);
  EXPECT_EQ(g.neighbor(2, 4), 1);
  EXPECT_FALSE(is_melonic(g));
  EXPECT_THROW(necklace_bubble(3, 2, {1}), Error);
  EXPECT_THROW(necklace_bubble(4, 2, {1, 1}), Error);
}

TEST(Melonicity, BacktrackingFindsHiddenDipoles) {
  // A melonic bubble relabeled so that the first dipoles found are not the
  // inserted ones.
  BubbleSpec spec = melonic_bubble(3, {{0, 1}, {0, 2}, {2, 3}, {4, 1}});
  EXPECT_TRUE(is_melonic(spec.graph));
  EXPECT_FALSE(is_melonic(necklace_bubble(4, 3, {1, 2}).graph));
}

TEST(Melonicity, ClosedGraphs) {
  ColoredGraph g = quartic_melonic(3, 1).graph.with_color_zero();
  g.add_edge(0, 0, 1);
  g.add_edge(0, 2, 3);
  EXPECT_TRUE(is_melonic(g));
  ColoredGraph h = quartic_melonic(3, 1).graph.with_color_zero();
  h.add_edge(0, 0, 3);
  h.add_edge(0, 2, 1);
  EXPECT_FALSE(is_melonic(h));
}

TEST(Pairing, MelonicPairingMaximizesFaces) {
  ColoredGraph b = quartic_melonic(3, 1).graph;
  Pairing pi = melonic_pairing(b);
  EXPECT_EQ(faces(close_with_pairing(b, pi)).total, 5);
  BestPairing best = best_pairing(b);
  EXPECT_EQ(best.max_faces, 5);
  EXPECT_EQ(best.pairings_examined, 2u);
}

TEST(Pairing, NecklacePairing) {
  BubbleSpec n = quartic_necklace();
  Pairing pi = necklace_pairing(n);
  EXPECT_EQ(pi.pairs, (std::vector<std::pair<int, int>>{{0, 3}, {2, 1}}));
  EXPECT_EQ(faces(close_with_pairing(n.graph, pi)).total, 6);
  EXPECT_EQ(best_pairing(n.graph).max_faces, 6);
}

TEST(Pairing, Validation) {
  ColoredGraph b = quartic_melonic(3, 1).graph;
  EXPECT_THROW(require_valid_pairing(b, Pairing{{{0, 1}}}), Error);
  EXPECT_THROW(require_valid_pairing(b, Pairing{{{0, 1}, {0, 3}}}), Error);
  EXPECT_THROW(require_valid_pairing(b, Pairing{{{1, 0}, {2, 3}}}), Error);
  EXPECT_NO_THROW(require_valid_pairing(b, Pairing{{{0, 3}, {2, 1}}}));
  std::vector<int> index = pair_index(b, Pairing{{{0, 3}, {2, 1}}});
  EXPECT_EQ(index, (std::vector<int>{0, 1, 1, 0}));
}

TEST(Pairing, CapExceeded) {
  BubbleSpec big = melonic_bubble(3, {{0, 1}, {0, 2}, {0, 3}, {2, 1}});
  EXPECT_THROW(best_pairing(big.graph, 4), Error);
  // A melonic bubble has s = d - 1, so F = d + (d - 1) p - (d - 1).
  EXPECT_EQ(best_pairing(big.graph, 5).max_faces, 3 + 2 * 5 - 2);
}

TEST(Pairing, EnumeratesAllBijections) {
  int count = 0;
  for_each_pairing(necklace_bubble(4, 3, {1, 3}).graph, [&count](const Pairing&) { ++count; });
  EXPECT_EQ(count, 6);
}

}  // namespace
}  // namespace tensorcomb
