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

#include <gtest/gtest.h>

#include "tensorcomb/bubble_catalog.h"
#include "tensorcomb/error.h"

namespace tensorcomb {
namespace {

TEST(Melonic, DegreeTheorem) {
  EnhancementRecord r = melonic_enhancement(quartic_melonic(4, 2).graph);
  EXPECT_EQ(r.s, 3);
  EXPECT_EQ(r.p, 2);
  EXPECT_EQ(r.provenance, Provenance::kDegreeTheorem);
  EXPECT_EQ(r.status, EnhancementStatus::kProved);
  EXPECT_THROW(melonic_enhancement(quartic_necklace().graph), Error);
}

TEST(Inherited, MelonicTrees) {
  ColoredGraph b1 = quartic_melonic(3, 1).graph;
  for (int copies = 2; copies <= 5; ++copies) {
    ColoredGraph h = tree_gluing(b1, copies);
    EnhancementRecord r = inherited_enhancement(h, 2, Rational(2));
    EXPECT_EQ(r.s, 2) << copies;
    EXPECT_EQ(r.provenance, Provenance::kInherited);
    EXPECT_TRUE(is_melonic(r.bubble));
    ASSERT_TRUE(r.inherited.has_value());
    EXPECT_EQ(r.inherited->copies, copies);
  }
}

TEST(Inherited, NecklaceRings) {
  ColoredGraph n = quartic_necklace().graph;
  for (int p = 1; p <= 4; ++p) {
    ColoredGraph h = chain_gluing(n, p, 1, 0, true);
    EXPECT_EQ(faces(h).total, 2);
    EnhancementRecord r = inherited_enhancement(h, 2, Rational(4));
    EXPECT_EQ(r.s, p + 2) << p;
    EXPECT_EQ(r.p, p);
    EXPECT_EQ(r.inherited->internal_faces, 2);
  }
}

TEST(Inherited, RingBoundaryIsALongerNecklace) {
  ColoredGraph n = quartic_necklace().graph;
  for (int p = 2; p <= 4; ++p) {
    ColoredGraph boundary = boundary_bubble(chain_gluing(n, p, 1, 0, true)).bubble;
    EXPECT_EQ(canonical_form(boundary), canonical_form(necklace_bubble(4, p, {1, 3}).graph));
  }
}

TEST(Inherited, Errors) {
  ColoredGraph b1 = quartic_melonic(3, 1).graph;
  ColoredGraph closed = b1.with_color_zero();
  closed.add_edge(0, 0, 1);
  closed.add_edge(0, 2, 3);
  EXPECT_THROW(inherited_enhancement(closed, 2, Rational(2)), Error);
  ColoredGraph two(3, true);
  for (int copy = 0; copy < 2; ++copy) {
    for (int v = 0; v < 4; ++v) two.add_vertex(b1.shade(v));
    for (const ColoredEdge& e : b1.edges()) two.add_edge(e.color, 4 * copy + e.white, 4 * copy + e.black);
  }
  EXPECT_THROW(inherited_enhancement(two, 2, Rational(2)), Error);
}

TEST(Slice, FiveDimensionalExample) {
  ColoredGraph b = slice_example_d5();
  EXPECT_TRUE(validate(b).is_bubble);
  EnhancementRecord r = slice_enhancement(b, {{1, 2, 3}, {4, 5}});
  EXPECT_EQ(r.s, 5);
  EXPECT_EQ(r.slice->slice_enhancements, (std::vector<Rational>{2, 1}));
  EnhancementRecord pairing = pairing_enhancement(b, best_pairing(b).pairing);
  EXPECT_EQ(pairing.pairing->closed_faces, 8);
  EXPECT_EQ(pairing.s, 5);
}

TEST(Slice, SuperposedSlices) {
  ColoredGraph low = quartic_melonic(3, 1).graph;
  ColoredGraph high = quartic_melonic(3, 2).graph;
  ColoredGraph g = superpose_slices(low, high);
  EXPECT_EQ(g.d(), 6);
  EnhancementRecord r = slice_enhancement(g, {{1, 2, 3}, {4, 5, 6}}, {Rational(2), Rational(2)});
  EXPECT_EQ(r.s, 2 + 2 + 2);
}

TEST(Slice, Errors) {
  ColoredGraph b = slice_example_d5();
  EXPECT_THROW(slice_enhancement(b, {{1, 2, 3}, {4}}), Error);
  EXPECT_THROW(slice_enhancement(b, {{1, 2}, {2, 3, 4, 5}}), Error);
  try {
    slice_enhancement(b, {{2, 3, 4}, {1, 5}});
    FAIL() << "disconnected slice accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "disconnected_slice");
  }
}

TEST(Pairing, CandidateThenVerified) {
  ColoredGraph n = quartic_necklace().graph;
  EnhancementRecord r = pairing_enhancement(n, necklace_pairing(quartic_necklace()));
  EXPECT_EQ(r.s, 4);
  EXPECT_EQ(r.status, EnhancementStatus::kCandidate);
  EnhancementRecord v = verify_enhancement(r, 3);
  EXPECT_EQ(v.status, EnhancementStatus::kVerified);
  ASSERT_TRUE(v.pairing->check.has_value());
  EXPECT_EQ(v.pairing->check->enhancement, 4);

  // The crossed pairing of B_1 closes with 4 faces; its candidate s = 3 fails
  // verification.
  ColoredGraph b1 = quartic_melonic(3, 1).graph;
  EnhancementRecord crossed = pairing_enhancement(b1, Pairing{{{0, 3}, {2, 1}}});
  EXPECT_EQ(crossed.s, 3);
  EXPECT_EQ(verify_enhancement(crossed, 3).status, EnhancementStatus::kCandidate);
}

TEST(Empirical, Record) {
  EnhancementRecord r = empirical_record(quartic_necklace().graph, 3);
  EXPECT_EQ(r.s, 4);
  EXPECT_EQ(r.provenance, Provenance::kEmpirical);
  EXPECT_EQ(provenance_name(r.provenance), "empirical");
}

}  // namespace
}  // namespace tensorcomb
