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

#ifndef TENSORCOMB_QUARTIC_GF_H_
#define TENSORCOMB_QUARTIC_GF_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "tensorcomb/colored_graph.h"
#include "tensorcomb/combinatorial_map.h"
#include "tensorcomb/power_series.h"
#include "tensorcomb/rational.h"

namespace tensorcomb {

// ---- Series ---------------------------------------------------------------

// Non-separable rooted planar maps: x = u(1-u)^2, P = (1-u)(1+3u).
PowerSeries nonseparable_series(int order);

// f_k(t, lambda) from f = 1 - k + t lambda f^2 + k P(t f^2).
PowerSeries quartic_series(const Rational& k, const Rational& lambda, int order);

// Rooted planar maps by edges, 2 3^n binom(2n, n) / ((n+1)(n+2)).
PowerSeries planar_map_series(int order);

// Left-hand side of the degree-6 equation for f_k evaluated on `f`; it
// vanishes through the order of `f` when f solves the system.
PowerSeries quartic_polynomial_residual(const PowerSeries& f, const Rational& k,
                                        const Rational& lambda);

// table[E][m] = coefficient of t^E lambda^m in f_k(t, lambda), E <= order.
std::vector<std::vector<Rational>> quartic_series_table(const Rational& k, int order);

// ---- Quartic maps ---------------------------------------------------------

// Quartic maps carry color sets {1} (monocolored) or {1, c}, c in 2..4.
struct DominantMapCheck {
  bool mono_edges_are_bridges = true;
  bool submaps_planar = true;
  bool cycles_single_type = true;
  bool passes = true;
  int cyclomatic = 0;                     // l(M)
  std::vector<int> submap_cyclomatic;     // l(M^(i)), i = 1..4 at index i
  std::vector<int> submap_genus;          // g(M^(i)), i = 1..4 at index i
};

DominantMapCheck is_dominant(const CombinatorialMap& m);

// -4 l(M) + 2 sum_i l(M^(i)) - 2 sum_i g(M^(i)) for a connected map whose
// edges are all bicolored.
int face_difference(const CombinatorialMap& m);

// sum_{c=1..4} F(M^(c)), with isolated vertices counted as faces.
int quartic_face_count(const CombinatorialMap& m);

inline constexpr int kDefaultMapEdgeCap = 5;

// Connected rooted maps with `edges` edges, root dart 0, edge e on darts
// 2e and 2e+1; one representative per rooted isomorphism class.
std::vector<CombinatorialMap> rooted_maps(int edges);

// Edge type 0 is monocolored {1}; type c in 1..k is {1, c+1}.
CombinatorialMap with_edge_types(const CombinatorialMap& m, const std::vector<int>& types);

// counts[E][m]: dominant rooted maps with E edges, m of them monocolored.
std::vector<std::vector<std::uint64_t>> enumerate_dominant_rooted_maps(
    int k, int e_max, int cap = kDefaultMapEdgeCap);

// Calls `visit` on every dominant typed rooted map with 1..e_max edges.
void for_each_dominant_rooted_map(int k, int e_max,
                                  const std::function<void(const CombinatorialMap&)>& visit,
                                  int cap = kDefaultMapEdgeCap);

// d = 4 colored graph of a quartic map: every edge becomes a quartic
// bubble whose two pairs are connected by the edge's colors, every vertex
// a cycle of color-0 edges. Vertices 2x, 2x+1 are the pair of dart x.
ColoredGraph quartic_map_to_graph(const CombinatorialMap& m);

// F - 3 E_m - 2 E_b: the power with s = 3 for melonic and s = 4 for
// necklace bubbles.
Rational quartic_graph_delta(const CombinatorialMap& m);

// ---- Critical points ------------------------------------------------------

using Real = boost::multiprecision::mpfr_float;

// Working precision for critical solving: TENSOR_PRECISION_DIGITS when
// set (at least 30), 50 otherwise.
int precision_digits();
void set_precision_digits(int digits);

enum class Regime { kPlanar, kTree, kBabyUniverse, kUnclassified };

std::string regime_name(Regime r);
// 3/2, 1/2, 2/3 for the three regimes.
double regime_exponent(Regime r);

struct CriticalPoint {
  Rational k;
  Rational lambda;
  Real t;
  Real f;
  Real u;
  bool on_planar_line = false;  // u = 1/3
  bool coalescent = false;      // both branches meet at u = 1/3
  bool dominant = false;
  Regime regime = Regime::kPlanar;
  Real residual;
};

// Solutions of the critical system with t, f > 0 and 0 < u < 1, sorted by
// u. The dominant point is the first one met along the physical branch
// from u = 0 (smallest u with f > 0 on [0, u]).
std::vector<CriticalPoint> critical_points(const Rational& k, const Rational& lambda);
CriticalPoint dominant_critical_point(const Rational& k, const Rational& lambda);

struct ExponentEstimate {
  CriticalPoint point;
  double estimate = 0;
  std::vector<double> ladder;  // successive slope estimates
  Regime regime = Regime::kUnclassified;
  bool classified = false;
};

// Fits the leading non-analytic exponent of f_c - f(t) on the ladder
// t_c - t = 1e-3 * 2^-j down to about 1e-8, cancelling the linear term
// with second differences and extrapolating with Aitken's method.
ExponentEstimate singular_exponent(const Rational& k, const Rational& lambda);

struct PhaseCell {
  Rational k;
  Rational lambda;
  CriticalPoint point;
  bool conjectural = false;  // off the k = 1 and lambda = 0 lines
};

std::vector<PhaseCell> phase_diagram(const Rational& k_min, const Rational& k_max, int k_steps,
                                     const Rational& lambda_min, const Rational& lambda_max,
                                     int lambda_steps);

}  // namespace tensorcomb

#endif  // TENSORCOMB_QUARTIC_GF_H_
