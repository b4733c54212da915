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

#include "tensorcomb/gluing_space.h"

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "tensorcomb/bubble_catalog.h"
#include "tensorcomb/error.h"

namespace tensorcomb {
namespace {

using Histogram = std::map<int, int>;

Histogram face_histogram(const GluingEnumeration& e) {
  Histogram h;
  for (const GluingRecord& r : e.records) h[r.faces] += static_cast<int>(r.labeled_count);
  return h;
}

Histogram omega_histogram(const GluingEnumeration& e) {
  Histogram h;
  for (const GluingRecord& r : e.records) h[r.omega] += static_cast<int>(r.labeled_count);
  return h;
}

// Values below come from tests/oracles/gluing_oracle.py.

TEST(Labeled, QuarticMelonicD3) {
  ColoredGraph b1 = quartic_melonic(3, 1).graph;
  GluingEnumeration one = enumerate_gluings(b1, 1);
  EXPECT_EQ(one.labeled_total, 2u);
  EXPECT_EQ(face_histogram(one), (Histogram{{4, 1}, {5, 1}}));

  GluingEnumeration two = enumerate_gluings(b1, 2);
  EXPECT_EQ(two.labeled_total, 20u);
  EXPECT_EQ(face_histogram(two), (Histogram{{3, 2}, {5, 4}, {6, 10}, {7, 4}}));
  EXPECT_EQ(omega_histogram(two), (Histogram{{0, 4}, {1, 10}, {2, 4}, {4, 2}}));

  GluingEnumeration three = enumerate_gluings(b1, 3);
  EXPECT_EQ(three.labeled_total, 592u);
  EXPECT_EQ(three.max_faces, 9);
  EXPECT_EQ(face_histogram(three),
            (Histogram{{4, 80}, {5, 80}, {6, 40}, {7, 176}, {8, 176}, {9, 40}}));
  EXPECT_EQ(omega_histogram(three),
            (Histogram{{0, 40}, {1, 176}, {2, 176}, {3, 40}, {4, 80}, {5, 80}}));
}

TEST(Labeled, QuarticNecklaceD4) {
  ColoredGraph n = quartic_necklace().graph;
  EXPECT_EQ(face_histogram(enumerate_gluings(n, 1)), (Histogram{{6, 2}}));
  GluingEnumeration two = enumerate_gluings(n, 2);
  EXPECT_EQ(two.labeled_total, 20u);
  EXPECT_EQ(face_histogram(two), (Histogram{{4, 2}, {8, 18}}));
  GluingEnumeration three = enumerate_gluings(n, 3);
  EXPECT_EQ(three.labeled_total, 592u);
  EXPECT_EQ(face_histogram(three), (Histogram{{6, 160}, {10, 432}}));
}

TEST(Labeled, TwoVertexBubble) {
  std::vector<std::uint64_t> expected{1, 1, 2, 6};
  for (int b = 1; b <= 4; ++b) {
    GluingEnumeration e = enumerate_gluings(two_vertex_bubble(3), b);
    EXPECT_EQ(e.labeled_total, expected[b - 1]);
    EXPECT_EQ(face_histogram(e), (Histogram{{3, static_cast<int>(expected[b - 1])}}));
  }
}

TEST(Labeled, RecordsMatchBuiltGraphs) {
  GluingEnumeration e = enumerate_gluings(quartic_melonic(3, 2).graph, 2);
  std::set<std::vector<int>> matchings;
  for (const GluingRecord& r : e.records) {
    ColoredGraph g = build_gluing(e.layout, r.matching);
    EXPECT_TRUE(validate(g).is_closed);
    FaceCensus c = faces(g);
    EXPECT_EQ(c.per_color, r.face_per_color);
    EXPECT_EQ(c.total, r.faces);
    EXPECT_EQ(gurau_degree(g), r.omega);
    EXPECT_EQ(r.delta, Rational(r.faces - 2 * e.edges + 2 * 2));
    EXPECT_TRUE(matchings.insert(r.matching).second);
  }
}

TEST(Modes, UnlabeledAndRootedTotals) {
  ColoredGraph b1 = quartic_melonic(3, 1).graph;
  for (int b = 1; b <= 3; ++b) {
    GluingEnumeration labeled = enumerate_gluings(b1, b, GluingMode::kLabeled);
    GluingEnumeration unlabeled = enumerate_gluings(b1, b, GluingMode::kUnlabeled);
    GluingEnumeration rooted = enumerate_gluings(b1, b, GluingMode::kRooted);
    EXPECT_EQ(unlabeled.labeled_total, labeled.labeled_total);
    EXPECT_EQ(unlabeled.total_weight, Rational(static_cast<unsigned long>(labeled.labeled_total)));
    std::set<CanonicalKey> keys;
    for (const GluingRecord& r : labeled.records) keys.insert(r.key);
    EXPECT_EQ(unlabeled.records.size(), keys.size());
    // labeled * E / b!
    int factorial = 1;
    for (int i = 2; i <= b; ++i) factorial *= i;
    Rational expected(static_cast<long>(labeled.labeled_total) * 2 * b, factorial);
    expected.canonicalize();
    EXPECT_EQ(rooted.total_weight, expected);
  }
}

TEST(Modes, RootedCountsForTwoCopies) {
  GluingEnumeration e = enumerate_gluings(quartic_melonic(3, 1).graph, 2, GluingMode::kRooted);
  std::map<int, Rational> by_faces;
  for (const GluingRecord& r : e.records) by_faces[r.faces] += r.weight;
  EXPECT_EQ(by_faces[7], 8);
  EXPECT_EQ(by_faces[6], 20);
  EXPECT_EQ(by_faces[5], 8);
  EXPECT_EQ(by_faces[3], 4);
  EXPECT_EQ(e.max_faces, 7);
}

TEST(Threads, SameOutputAsSerial) {
  GluingRequest request;
  request.bubble_types = {quartic_necklace().graph};
  request.copies = {3};
  GluingEnumeration serial = enumerate_gluings(request);
  request.threads = 4;
  GluingEnumeration parallel = enumerate_gluings(request);
  ASSERT_EQ(serial.records.size(), parallel.records.size());
  for (std::size_t i = 0; i < serial.records.size(); ++i) {
    EXPECT_EQ(serial.records[i].matching, parallel.records[i].matching);
    EXPECT_EQ(serial.records[i].key, parallel.records[i].key);
  }
  EXPECT_EQ(serial.matchings_visited, parallel.matchings_visited);
}

TEST(MixedTypes, TwoBubbleTypes) {
  GluingRequest request;
  request.bubble_types = {quartic_melonic(3, 1).graph, two_vertex_bubble(3)};
  request.copies = {1, 1};
  request.enhancements = {Rational(2), Rational(2)};
  GluingEnumeration e = enumerate_gluings(request);
  // The single white of the 2-vertex bubble must meet the melonic bubble.
  EXPECT_EQ(e.edges, 3);
  EXPECT_EQ(e.labeled_total, 4u);
  for (const GluingRecord& r : e.records) {
    EXPECT_EQ(r.omega, 3 - r.faces + 2 * (3 - 2));
  }
}

TEST(Caps, EdgeCapIsEnforced) {
  GluingRequest request;
  request.bubble_types = {quartic_melonic(3, 1).graph};
  request.copies = {6};
  EXPECT_THROW(enumerate_gluings(request), Error);
  request.edge_cap = 2;
  request.copies = {2};
  EXPECT_THROW(enumerate_gluings(request), Error);
}

TEST(Empirical, Slopes) {
  EmpiricalEnhancement melonic = empirical_enhancement(quartic_melonic(3, 1).graph, 3);
  EXPECT_EQ(melonic.max_faces, (std::vector<int>{5, 7, 9}));
  EXPECT_TRUE(melonic.exact_fit);
  EXPECT_EQ(melonic.enhancement, 2);
  EXPECT_EQ(melonic.delta_max, 3);

  EmpiricalEnhancement necklace = empirical_enhancement(quartic_necklace().graph, 3);
  EXPECT_EQ(necklace.max_faces, (std::vector<int>{6, 8, 10}));
  EXPECT_TRUE(necklace.exact_fit);
  EXPECT_EQ(necklace.enhancement, 4);

  EmpiricalEnhancement two = empirical_enhancement(two_vertex_bubble(3), 4);
  EXPECT_EQ(two.max_faces, (std::vector<int>{3, 3, 3, 3}));
  EXPECT_EQ(two.slope, 0);
  EXPECT_EQ(two.enhancement, 2);
  EXPECT_THROW(empirical_enhancement(two_vertex_bubble(3), 1), Error);
}

TEST(NecklaceSplit, GenusAndExcess) {
  GluingEnumeration one = enumerate_gluings(quartic_necklace().graph, 1);
  for (const GluingRecord& r : one.records) {
    NecklaceSplit s = necklace_degree_split(build_gluing(one.layout, r.matching));
    EXPECT_EQ(s.genus, 0);
    EXPECT_EQ(s.excess, 1);
    EXPECT_EQ(s.omega, 1);
  }
  GluingEnumeration two = enumerate_gluings(quartic_necklace().graph, 2);
  std::map<std::pair<int, int>, int> split;
  for (const GluingRecord& r : two.records) {
    ColoredGraph g = build_gluing(two.layout, r.matching);
    NecklaceSplit s = necklace_degree_split(g);
    EXPECT_EQ(s.omega, 4 * s.genus + s.excess);
    EXPECT_EQ(s.omega, gurau_degree(g));
    ++split[{s.genus, s.omega}];
  }
  EXPECT_EQ(split, (std::map<std::pair<int, int>, int>{{{0, 2}, 18}, {{1, 6}, 2}}));
}

TEST(MelonicSeries, QuarticCoefficients) {
  MelonicSeries s = melonic_g2_series({2}, {Rational(1)}, 4);
  std::vector<int> expected{1, -2, 8, -40, 224};
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(s.g2[n], expected[n]);
  EXPECT_EQ(s.g2.variable(), "lambda");
}

TEST(MelonicSeries, SatisfiesEquation) {
  // G = 1 - lambda * sum p t G^p for two couplings.
  MelonicSeries s = melonic_g2_series({2, 3}, {Rational(1, 2), Rational(-1, 3)}, 8);
  PowerSeries lambda = PowerSeries::identity(8, "lambda");
  PowerSeries rhs = lambda * (s.g2.pow(2) * Rational(1) + s.g2.pow(3) * Rational(-1));
  PowerSeries residual = s.g2 + rhs + Rational(-1);
  EXPECT_TRUE(residual.is_zero());
}

}  // namespace
}  // namespace tensorcomb
