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

#include "tensorcomb/graph_io.h"

#include <functional>

#include <gtest/gtest.h>

#include "tensorcomb/bubble_catalog.h"
#include "tensorcomb/error.h"
#include "tensorcomb/gluing_space.h"

namespace tensorcomb {
namespace {

std::string expect_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

TEST(GraphJson, SchemaOfTwoVertexBubble) {
  EXPECT_EQ(graph_to_json(two_vertex_bubble(2)),
            R"({"d":2,"vertices":[{"id":0,"shade":"white"},{"id":1,"shade":"black"}],)"
            R"("edges":[{"color":1,"white":0,"black":1},{"color":2,"white":0,"black":1}]})");
}

TEST(GraphJson, RoundTripIsByteStable) {
  GluingEnumeration e = enumerate_gluings(quartic_necklace().graph, 2);
  for (const GluingRecord& r : e.records) {
    ColoredGraph g = build_gluing(e.layout, r.matching);
    std::string text = graph_to_json(g);
    ColoredGraph back = graph_from_json(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(graph_to_json(back), text);
    EXPECT_EQ(graph_to_json(graph_from_json(graph_to_json(g, 2))), text);
  }
}

TEST(GraphJson, EdgeOrderDoesNotMatter) {
  std::string shuffled =
      R"({"d":2,"vertices":[{"id":1,"shade":"black"},{"id":0,"shade":"white"}],)"
      R"("edges":[{"color":2,"white":0,"black":1},{"color":1,"white":0,"black":1}]})";
  EXPECT_EQ(graph_to_json(graph_from_json(shuffled)), graph_to_json(two_vertex_bubble(2)));
}

TEST(GraphJson, OpenGraphWithoutZeroEdgesKeepsFlag) {
  ColoredGraph g = two_vertex_bubble(3).with_color_zero();
  ColoredGraph back = graph_from_json(graph_to_json(g));
  EXPECT_TRUE(back.has_color_zero());
  EXPECT_TRUE(validate(back).is_open);
}

TEST(GraphJson, Errors) {
  EXPECT_EQ(expect_kind([] { graph_from_json("{"); }), "invalid_json");
  EXPECT_EQ(expect_kind([] { graph_from_json(R"({"d":2})"); }), "invalid_graph");
  EXPECT_EQ(expect_kind([] {
              graph_from_json(R"({"d":2,"vertices":[{"id":0,"shade":"grey"}],"edges":[]})");
            }),
            "invalid_graph");
  EXPECT_EQ(expect_kind([] {
              graph_from_json(R"({"d":2,"vertices":[{"id":3,"shade":"white"}],"edges":[]})");
            }),
            "invalid_graph");
}

TEST(PairingJson, RoundTrip) {
  Pairing p{{{0, 3}, {2, 1}}};
  EXPECT_EQ(pairing_to_json(p), R"({"pairs":[[0,3],[2,1]]})");
  EXPECT_EQ(pairing_from_json(pairing_to_json(p)), p);
  EXPECT_EQ(expect_kind([] { pairing_from_json(R"({"pairs":[[0]]})"); }), "invalid_pairing");
}

TEST(Document, GraphWithPairingBlock) {
  BubbleSpec n = quartic_necklace();
  GraphDocument doc{n.graph, true, necklace_pairing(n)};
  std::string text = graph_document_to_json(doc);
  GraphDocument back = graph_document_from_json(text);
  EXPECT_TRUE(back.has_pairing);
  EXPECT_EQ(back.pairing, doc.pairing);
  EXPECT_EQ(back.graph, doc.graph);
  EXPECT_EQ(graph_document_to_json(back), text);
  EXPECT_FALSE(graph_document_from_json(graph_to_json(n.graph)).has_pairing);
}

}  // namespace
}  // namespace tensorcomb
