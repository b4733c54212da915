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

#include <algorithm>
#include <string>

#include "json.hpp"
#include "tensorcomb/error.h"

namespace tensorcomb {
namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw Error("invalid_json", e.what());
  }
}

Json graph_fields(const ColoredGraph& g) {
  Json j;
  j["d"] = g.d();
  Json vertices = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v) {
    vertices.push_back({{"id", v}, {"shade", g.is_white(v) ? "white" : "black"}});
  }
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const ColoredEdge& e : g.sorted_edges()) {
    edges.push_back({{"color", e.color}, {"white", e.white}, {"black", e.black}});
  }
  j["edges"] = std::move(edges);
  if (g.has_color_zero() && g.num_edges_of_color(0) == 0) j["has_color_zero"] = true;
  return j;
}

ColoredGraph graph_from(const Json& j) {
  try {
    int d = j.at("d").get<int>();
    const Json& vertices = j.at("vertices");
    const Json& edges = j.at("edges");
    bool zero = false;
    for (const Json& e : edges) zero = zero || e.at("color").get<int>() == 0;
    if (j.contains("has_color_zero")) zero = zero || j.at("has_color_zero").get<bool>();
    std::vector<std::pair<int, Shade>> verts;
    for (const Json& v : vertices) {
      std::string shade = v.at("shade").get<std::string>();
      if (shade != "white" && shade != "black") {
        throw Error("invalid_graph", "unknown shade '" + shade + "'");
      }
      verts.emplace_back(v.at("id").get<int>(), shade == "white" ? Shade::kWhite : Shade::kBlack);
    }
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (verts[i].first != static_cast<int>(i)) {
        throw Error("invalid_graph", "vertex ids must be dense 0..n-1");
      }
    }
    ColoredGraph g(d, zero);
    for (const auto& v : verts) g.add_vertex(v.second);
    for (const Json& e : edges) {
      g.add_edge(e.at("color").get<int>(), e.at("white").get<int>(), e.at("black").get<int>());
    }
    return g;
  } catch (const Json::exception& e) {
    throw Error("invalid_graph", std::string("malformed graph JSON: ") + e.what());
  }
}

Json pairing_field(const Pairing& pairing) {
  Json pairs = Json::array();
  for (const auto& [w, b] : pairing.pairs) pairs.push_back(Json::array({w, b}));
  return pairs;
}

Pairing pairing_from(const Json& j) {
  try {
    Pairing p;
    for (const Json& pair : j.at("pairs")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error("invalid_pairing", "each pair must be [white, black]");
      }
      p.pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return p;
  } catch (const Json::exception& e) {
    throw Error("invalid_pairing", std::string("malformed pairing JSON: ") + e.what());
  }
}

}  // namespace

std::string graph_to_json(const ColoredGraph& g, int indent) {
  return graph_fields(g).dump(indent);
}

ColoredGraph graph_from_json(std::string_view text) { return graph_from(parse(text)); }

std::string pairing_to_json(const Pairing& pairing, int indent) {
  Json j;
  j["pairs"] = pairing_field(pairing);
  return j.dump(indent);
}

Pairing pairing_from_json(std::string_view text) { return pairing_from(parse(text)); }

GraphDocument graph_document_from_json(std::string_view text) {
  Json j = parse(text);
  GraphDocument doc;
  doc.graph = graph_from(j);
  if (j.contains("pairs")) {
    doc.has_pairing = true;
    doc.pairing = pairing_from(j);
  }
  return doc;
}

std::string graph_document_to_json(const GraphDocument& doc, int indent) {
  Json j = graph_fields(doc.graph);
  if (doc.has_pairing) j["pairs"] = pairing_field(doc.pairing);
  return j.dump(indent);
}

}  // namespace tensorcomb
