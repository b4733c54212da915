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

#ifndef TENSORCOMB_ENHANCEMENT_H_
#define TENSORCOMB_ENHANCEMENT_H_

#include <optional>
#include <string>
#include <vector>

#include "tensorcomb/bubble_catalog.h"
#include "tensorcomb/colored_graph.h"
#include "tensorcomb/gluing_space.h"
#include "tensorcomb/rational.h"

namespace tensorcomb {

enum class Provenance { kDegreeTheorem, kInherited, kSlice, kEmpirical, kPairingFormula };
enum class EnhancementStatus { kProved, kCandidate, kVerified };

std::string provenance_name(Provenance p);
std::string status_name(EnhancementStatus s);

struct InheritedData {
  ColoredGraph open_graph;
  int internal_faces = 0;
  int copies = 0;
  int parent_p = 0;
  Rational parent_enhancement;
};

struct SliceData {
  std::vector<std::vector<int>> partition;
  std::vector<Rational> slice_enhancements;
};

struct PairingData {
  Pairing pairing;
  int closed_faces = 0;
  std::optional<EmpiricalEnhancement> check;
};

struct EnhancementRecord {
  ColoredGraph bubble;
  CanonicalKey bubble_key;
  int d = 0;
  int p = 0;
  Rational s;
  Provenance provenance = Provenance::kDegreeTheorem;
  EnhancementStatus status = EnhancementStatus::kProved;
  std::optional<InheritedData> inherited;
  std::optional<SliceData> slice;
  std::optional<PairingData> pairing;
  std::optional<EmpiricalEnhancement> empirical;
};

// s = d - 1 for melonic bubbles.
EnhancementRecord melonic_enhancement(const ColoredGraph& bubble);

// Enhancement of the boundary bubble of an open gluing H of copies of a
// bubble with p(B) = parent_p and enhancement parent_s:
//   s = (d-1)(p(dH) - p(B) b(H)) + s_B b(H) + F(H).
EnhancementRecord inherited_enhancement(const ColoredGraph& h, int parent_p,
                                        const Rational& parent_s, int internal_faces,
                                        int copies);
// Same, with F(H) and b(H) computed from h.
EnhancementRecord inherited_enhancement(const ColoredGraph& h, int parent_p,
                                        const Rational& parent_s);

// s = (L-1) p + sum_k s_k over a partition of the colors into slices of at
// least two colors, each spanning a connected sub-bubble. Empty
// `slice_enhancements` means s_k = |slice_k| - 1.
EnhancementRecord slice_enhancement(const ColoredGraph& bubble,
                                    const std::vector<std::vector<int>>& partition,
                                    const std::vector<Rational>& slice_enhancements = {});

// s = d + (d-1)p - F(B^pi), flagged as a candidate.
EnhancementRecord pairing_enhancement(const ColoredGraph& bubble, const Pairing& pairing);

// Upgrades a pairing candidate to verified when the empirical slope over
// b = 1..b_max gives the same s.
EnhancementRecord verify_enhancement(EnhancementRecord record, int b_max,
                                     int edge_cap = kDefaultGluingEdgeCap);

EnhancementRecord empirical_record(const ColoredGraph& bubble, int b_max,
                                   int edge_cap = kDefaultGluingEdgeCap);

// Open gluing of `count` copies of `bubble`: copy i's black `from_black`
// is joined to copy i+1's white `to_white`; the last copy closes the ring
// when `close_ring` is set.
ColoredGraph chain_gluing(const ColoredGraph& bubble, int count, int from_black, int to_white,
                          bool close_ring);

// Open tree gluing of `count` copies: copy i (i >= 1) is attached to copy
// (i-1)/2 through one color-0 edge, using the first free black of the
// parent and the first free white of the child.
ColoredGraph tree_gluing(const ColoredGraph& bubble, int count);

// Bubble at d = 5 with slices {1,2,3}, {4,5}: w0-b0 and w1-b1 carry
// colors 2,3,4; w0-b1 and w1-b0 carry colors 1,5.
ColoredGraph slice_example_d5();

// Bubble at d = 6 whose slices {1,2,3} and {4,5,6} are the given melonic
// bubbles on a shared vertex set (both must have the same vertex count).
ColoredGraph superpose_slices(const ColoredGraph& low, const ColoredGraph& high);

}  // namespace tensorcomb

#endif  // TENSORCOMB_ENHANCEMENT_H_
