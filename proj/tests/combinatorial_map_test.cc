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

#include "tensorcomb/combinatorial_map.h"

#include <gtest/gtest.h>

#include "tensorcomb/error.h"

namespace tensorcomb {
namespace {

CombinatorialMap bouquet(bool crossed) {
  MapBuilder b;
  int v = b.add_vertex();
  auto [a0, a1] = b.add_edge(v, v, color_bit(1));
  auto [c0, c1] = b.add_edge(v, v, color_bit(2));
  if (crossed) {
    b.set_rotation(v, {a0, c0, a1, c1});
  } else {
    b.set_rotation(v, {a0, a1, c0, c1});
  }
  return b.build(0);
}

TEST(Map, PlanarAndToroidalBouquets) {
  CombinatorialMap planar = bouquet(false);
  EXPECT_EQ(planar.num_vertices(), 1);
  EXPECT_EQ(planar.num_edges(), 2);
  EXPECT_EQ(planar.face_count(), 3);
  EXPECT_EQ(planar.genus(), 0);
  CombinatorialMap torus = bouquet(true);
  EXPECT_EQ(torus.face_count(), 1);
  EXPECT_EQ(torus.genus(), 1);
  EXPECT_EQ(torus.cyclomatic(), 2);
}

TEST(Map, PermutationsAreConsistent) {
  CombinatorialMap m = bouquet(true);
  for (int x = 0; x < m.num_darts(); ++x) {
    EXPECT_EQ(m.alpha(m.alpha(x)), x);
    EXPECT_NE(m.alpha(x), x);
    EXPECT_EQ(m.phi(x), m.sigma(m.alpha(x)));
  }
}

TEST(Map, IsolatedVerticesCountAsFaces) {
  MapBuilder b;
  b.add_vertex();
  b.add_vertex();
  CombinatorialMap m = b.build();
  EXPECT_EQ(m.face_count(), 2);
  EXPECT_EQ(m.component_count(), 2);
  EXPECT_EQ(m.genus(), 0);
}

TEST(Map, SubmapByColor) {
  CombinatorialMap torus = bouquet(true);
  CombinatorialMap one = torus.submap_with_color(1);
  EXPECT_EQ(one.num_edges(), 1);
  EXPECT_EQ(one.num_vertices(), 1);
  EXPECT_EQ(one.face_count(), 2);
  EXPECT_EQ(one.genus(), 0);
  EXPECT_EQ(torus.submap_with_color(3).num_edges(), 0);
  EXPECT_EQ(torus.submap_with_color(3).face_count(), 1);
}

TEST(Map, TreeFaces) {
  MapBuilder b;
  int c = b.add_vertex();
  for (int i = 0; i < 3; ++i) b.add_edge(c, b.add_vertex(), 0);
  CombinatorialMap star = b.build(0);
  EXPECT_EQ(star.face_count(), 1);
  EXPECT_EQ(star.genus(), 0);
  EXPECT_EQ(star.cyclomatic(), 0);
  EXPECT_EQ(star.edge_endpoints().size(), 3u);
}

TEST(Map, RejectsMalformedInput) {
  EXPECT_THROW(CombinatorialMap({MapVertex{}}, {{0, 1}}, {0, 1}, {0, 0}, 0), Error);
  EXPECT_THROW(CombinatorialMap({MapVertex{}}, {{0}}, {1, 0}, {0, 0}, 0), Error);
  EXPECT_THROW(CombinatorialMap({MapVertex{}}, {{0, 1}}, {1, 0}, {1, 2}, 0), Error);
}

TEST(Map, JsonRoundTrip) {
  CombinatorialMap m = bouquet(true);
  std::string text = map_to_json(m);
  CombinatorialMap back = map_from_json(text);
  EXPECT_EQ(map_to_json(back), text);
  EXPECT_EQ(back.genus(), 1);
  EXPECT_THROW(map_from_json(R"({"darts":2,"sigma":[5,0]})"), Error);
}

TEST(Map, RootedKeys) {
  CombinatorialMap m = bouquet(false);
  // Rooting at a color-1 dart versus a color-2 dart gives different keys.
  EXPECT_NE(map_canonical_key(m.with_root(0), true), map_canonical_key(m.with_root(2), true));
  EXPECT_EQ(map_canonical_key(m.with_root(0), false), map_canonical_key(m.with_root(2), false));
}

TEST(Kinds, NamesRoundTrip) {
  for (MapVertex v : {MapVertex{VertexKind::kPlain, 0}, MapVertex{VertexKind::kBlue, 0},
                      MapVertex{VertexKind::kBox, 3}, MapVertex{VertexKind::kBlack, 0}}) {
    EXPECT_EQ(parse_kind(kind_name(v)), v);
  }
  EXPECT_EQ(kind_name({VertexKind::kBox, 2}), "box:2");
  EXPECT_EQ(colors_of(make_color_set({3, 1})), (std::vector<int>{1, 3}));
}

}  // namespace
}  // namespace tensorcomb
