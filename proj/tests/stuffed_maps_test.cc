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

#include <set>

#include <gtest/gtest.h>

#include "tensorcomb/bubble_catalog.h"
#include "tensorcomb/error.h"
#include "tensorcomb/gluing_space.h"

namespace tensorcomb {
namespace {

struct Case {
  ColoredGraph bubble;
  Pairing pairing;
};

std::vector<Case> quartic_cases() {
  ColoredGraph b1 = quartic_melonic(3, 1).graph;
  BubbleSpec n = quartic_necklace();
  return {{b1, melonic_pairing(b1)}, {n.graph, necklace_pairing(n)}};
}

TEST(BubbleMap, BoxAndBlueVertices) {
  ColoredGraph b1 = quartic_melonic(3, 1).graph;
  CombinatorialMap m = bubble_map(b1, melonic_pairing(b1));
  int blue = 0, box = 0;
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (m.vertex(v).kind == VertexKind::kBlue) ++blue;
    if (m.vertex(v).kind == VertexKind::kBox) ++box;
  }
  EXPECT_EQ(blue, 2);
  // Colors 2 and 3 are internal to both pairs.
  EXPECT_EQ(box, 1);
  EXPECT_EQ(m.component_count(), 1);
}

TEST(Bijection, FacesAndRoundTrip) {
  for (const Case& c : quartic_cases()) {
    for (int b = 1; b <= 3; ++b) {
      GluingEnumeration e = enumerate_gluings(c.bubble, b);
      for (const GluingRecord& r : e.records) {
        ColoredGraph g = build_gluing(e.layout, r.matching);
        StuffedWalshMap w = to_stuffed_map(g, c.bubble, c.pairing);
        EXPECT_EQ(w.copies, b);
        for (int color = 1; color <= c.bubble.d(); ++color) {
          EXPECT_EQ(walsh_face_count(w, color), r.face_per_color[color]);
        }
        ColoredGraph back = from_stuffed_map(w, c.bubble, c.pairing);
        EXPECT_EQ(canonical_form(back), canonical_form(g));
        EXPECT_EQ(faces(back).total, r.faces);
      }
    }
  }
}

TEST(Bijection, DistinctGraphsGiveDistinctMaps) {
  for (const Case& c : quartic_cases()) {
    GluingEnumeration e = enumerate_gluings(c.bubble, 2, GluingMode::kUnlabeled);
    std::set<CanonicalKey> keys;
    for (const GluingRecord& r : e.records) {
      StuffedWalshMap w = to_stuffed_map(build_gluing(e.layout, r.matching), c.bubble, c.pairing);
      keys.insert(map_canonical_key(w.map));
    }
    EXPECT_EQ(keys.size(), e.records.size());
  }
}

TEST(Projected, ClosureWithPairingIsATree) {
  for (const Case& c : quartic_cases()) {
    ColoredGraph closed = close_with_pairing(c.bubble, c.pairing);
    StuffedWalshMap w = to_stuffed_map(closed, c.bubble, c.pairing);
    CombinatorialMap pm = projected_map(w);
    EXPECT_TRUE(is_tree(pm));
    EXPECT_EQ(walsh_face_count(w), faces(closed).total);
  }
}

TEST(Tree, FaceFormula) {
  for (const Case& c : quartic_cases()) {
    const int f_closed = faces(close_with_pairing(c.bubble, c.pairing)).total;
    const int d = c.bubble.d();
    for (int copies = 1; copies <= 4; ++copies) {
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        StuffedWalshMap w = tree_walsh_map(c.bubble, c.pairing, copies, seed);
        EXPECT_TRUE(is_tree(projected_map(w)));
        const int expected = (f_closed - d) * copies + d;
        EXPECT_EQ(tree_face_count(c.bubble, c.pairing, copies), expected);
        EXPECT_EQ(walsh_face_count(w), expected);
        ColoredGraph g = from_stuffed_map(w, c.bubble, c.pairing);
        EXPECT_EQ(faces(g).total, expected);
      }
    }
  }
}

TEST(Tree, MaximalGluingsOfMelonicBubblesAreTrees) {
  ColoredGraph b1 = quartic_melonic(3, 1).graph;
  Pairing pi = melonic_pairing(b1);
  GluingEnumeration e = enumerate_gluings(b1, 3);
  for (const GluingRecord& r : e.records) {
    if (r.faces != e.max_faces) continue;
    StuffedWalshMap w = to_stuffed_map(build_gluing(e.layout, r.matching), b1, pi);
    EXPECT_TRUE(is_tree(projected_map(w)));
  }
}

TEST(FromMap, RejectsWrongBubble) {
  ColoredGraph b1 = quartic_melonic(3, 1).graph;
  ColoredGraph b2 = quartic_melonic(3, 2).graph;
  StuffedWalshMap w = tree_walsh_map(b1, melonic_pairing(b1), 2, 7);
  EXPECT_THROW(from_stuffed_map(w, b2, melonic_pairing(b2)), Error);
  GluingEnumeration e = enumerate_gluings(b2, 1);
  EXPECT_THROW(to_stuffed_map(build_gluing(e.layout, e.records[0].matching), b1, melonic_pairing(b1)),
               Error);
}

TEST(Contraction, TwoDimensionalDegreeIsTwiceGenus) {
  ColoredGraph cycle = necklace_bubble(2, 2, {1}).graph;
  for (int b = 1; b <= 3; ++b) {
    GluingEnumeration e = enumerate_gluings(cycle, b);
    for (const GluingRecord& r : e.records) {
      ColoredGraph g = build_gluing(e.layout, r.matching);
      CombinatorialMap m = bubble_contraction_map(g);
      EXPECT_EQ(m.num_vertices(), b);
      EXPECT_EQ(r.omega, 2 * m.genus());
    }
  }
}

}  // namespace
}  // namespace tensorcomb
