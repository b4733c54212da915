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

#ifndef TENSORCOMB_GLUING_SPACE_H_
#define TENSORCOMB_GLUING_SPACE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tensorcomb/colored_graph.h"
#include "tensorcomb/power_series.h"
#include "tensorcomb/rational.h"

namespace tensorcomb {

enum class GluingMode { kLabeled, kRooted, kUnlabeled };

std::string mode_name(GluingMode mode);
GluingMode parse_mode(const std::string& name);

inline constexpr int kDefaultGluingEdgeCap = 10;

struct GluingRequest {
  std::vector<ColoredGraph> bubble_types;
  std::vector<int> copies;              // copies of each type
  std::vector<Rational> enhancements;   // per type; defaults to d-1
  GluingMode mode = GluingMode::kLabeled;
  int edge_cap = kDefaultGluingEdgeCap;
  int threads = 1;
  bool compute_keys = true;             // labeled mode only
};

// Vertex layout of the disjoint union of all copies: copy j of the
// request occupies a contiguous block, whites and blacks listed in
// increasing vertex order.
struct GluingLayout {
  ColoredGraph base;                    // all copies, colors 1..d only
  std::vector<int> whites;
  std::vector<int> blacks;
  std::vector<int> copy_of_vertex;
  std::vector<int> type_of_copy;
  int d = 0;
};

GluingLayout make_layout(const std::vector<ColoredGraph>& bubble_types,
                         const std::vector<int>& copies);

// matching[i] is the index (into layout.blacks) joined to layout.whites[i].
ColoredGraph build_gluing(const GluingLayout& layout, const std::vector<int>& matching);

struct GluingRecord {
  std::vector<int> matching;  // lexicographically first in its class
  std::vector<int> face_per_color;
  int faces = 0;
  int omega = 0;
  Rational delta;
  CanonicalKey key;
  std::uint64_t labeled_count = 1;  // labeled matchings in the class
  Rational weight;                  // 1, rooted weight or labeled count
};

struct GluingEnumeration {
  std::vector<int> copies;
  GluingMode mode = GluingMode::kLabeled;
  int d = 0;
  int edges = 0;
  std::vector<GluingRecord> records;
  std::uint64_t labeled_total = 0;  // connected labeled matchings
  std::uint64_t matchings_visited = 0;
  int max_faces = -1;
  Rational total_weight;
  GluingLayout layout;
};

// Iterates all connected color-0 matchings. Labeled mode keeps every
// matching; unlabeled mode keeps one record per isomorphism class with its
// labeled multiplicity; rooted mode weights each class by
// (labeled multiplicity) * E / prod_i b_i!, the number of classes of
// (graph, marked color-0 edge).
GluingEnumeration enumerate_gluings(const GluingRequest& request);

GluingEnumeration enumerate_gluings(const ColoredGraph& bubble, int count,
                                    GluingMode mode = GluingMode::kLabeled);

// Streams connected labeled matchings in lexicographic order together with
// the per-color face counts. No records are stored.
using MatchingVisitor = std::function<void(const std::vector<int>& matching,
                                           const std::vector<int>& face_per_color)>;
std::uint64_t for_each_connected_matching(const GluingLayout& layout, int threads,
                                          const MatchingVisitor& visit);

struct EmpiricalEnhancement {
  std::vector<int> max_faces;  // F_max(b) for b = 1..b_max
  Rational slope;
  Rational intercept;
  bool exact_fit = false;
  Rational enhancement;        // (d-1)p - slope
  Rational delta_max;          // intercept
};

EmpiricalEnhancement empirical_enhancement(const ColoredGraph& bubble, int b_max,
                                           int edge_cap = kDefaultGluingEdgeCap);

struct NecklaceSplit {
  int genus = 0;
  int excess = 0;  // sum over bubbles of (p - 1)
  int omega = 0;
};

// d = 4 graphs whose bubbles are all necklaces.
NecklaceSplit necklace_degree_split(const ColoredGraph& g);

struct MelonicSeries {
  std::vector<int> exponents;
  std::vector<Rational> couplings;
  int order = 0;
  PowerSeries g2;
};

// Solves 1 - G2 - lambda * sum_i p_i t_i G2^{p_i} = 0 with G2(0) = 1.
MelonicSeries melonic_g2_series(const std::vector<int>& exponents,
                                const std::vector<Rational>& couplings, int order);

}  // namespace tensorcomb

#endif  // TENSORCOMB_GLUING_SPACE_H_
