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

#ifndef TENSORCOMB_GRAPH_IO_H_
#define TENSORCOMB_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "tensorcomb/bubble_catalog.h"
#include "tensorcomb/colored_graph.h"

namespace tensorcomb {

// {"d": 3, "vertices": [{"id": 0, "shade": "white"}, ...],
//  "edges": [{"color": 1, "white": 0, "black": 1}, ...]}
// Edges are written sorted. "has_color_zero" is written only when it cannot
// be inferred, i.e. for a gluing without any color-0 edge.
std::string graph_to_json(const ColoredGraph& g, int indent = -1);
ColoredGraph graph_from_json(std::string_view text);

// {"pairs": [[w, b], ...]}
std::string pairing_to_json(const Pairing& pairing, int indent = -1);
Pairing pairing_from_json(std::string_view text);

// A graph document may carry a pairing block next to the graph fields.
struct GraphDocument {
  ColoredGraph graph;
  bool has_pairing = false;
  Pairing pairing;
};

GraphDocument graph_document_from_json(std::string_view text);
std::string graph_document_to_json(const GraphDocument& doc, int indent = -1);

}  // namespace tensorcomb

#endif  // TENSORCOMB_GRAPH_IO_H_
