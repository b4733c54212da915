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

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "tensorcomb/error.h"

namespace tensorcomb {

std::string mode_name(GluingMode mode) {
  switch (mode) {
    case GluingMode::kLabeled:
      return "labeled";
    case GluingMode::kRooted:
      return "rooted";
    case GluingMode::kUnlabeled:
      return "unlabeled";
  }
  return "labeled";
}

GluingMode parse_mode(const std::string& name) {
  if (name == "labeled") return GluingMode::kLabeled;
  if (name == "rooted") return GluingMode::kRooted;
  if (name == "unlabeled") return GluingMode::kUnlabeled;
  throw Error("invalid_argument", "unknown gluing mode '" + name + "'");
}

GluingLayout make_layout(const std::vector<ColoredGraph>& bubble_types,
                         const std::vector<int>& copies) {
  if (bubble_types.empty() || bubble_types.size() != copies.size()) {
    throw Error("invalid_argument", "one copy count per bubble type is required");
  }
  GluingLayout layout;
  layout.d = bubble_types.front().d();
  for (const ColoredGraph& b : bubble_types) {
    ValidationReport report = validate(b);
    if (!report.ok) require_valid(b);
    if (!report.is_bubble) throw Error("invalid_argument", "gluings are built from bubbles");
    if (b.d() != layout.d) throw Error("invalid_argument", "bubble types differ in dimension");
    if (count_components(b) != 1) throw Error("invalid_argument", "bubbles must be connected");
  }
  layout.base = ColoredGraph(layout.d, true);
  for (std::size_t t = 0; t < bubble_types.size(); ++t) {
    if (copies[t] < 0) throw Error("invalid_argument", "negative copy count");
    const ColoredGraph& b = bubble_types[t];
    for (int j = 0; j < copies[t]; ++j) {
      int copy = static_cast<int>(layout.type_of_copy.size());
      layout.type_of_copy.push_back(static_cast<int>(t));
      int offset = layout.base.num_vertices();
      for (int v = 0; v < b.num_vertices(); ++v) {
        layout.base.add_vertex(b.shade(v));
        layout.copy_of_vertex.push_back(copy);
        (b.is_white(v) ? layout.whites : layout.blacks).push_back(offset + v);
      }
      for (const ColoredEdge& e : b.edges()) {
        layout.base.add_edge(e.color, offset + e.white, offset + e.black);
      }
    }
  }
  return layout;
}

ColoredGraph build_gluing(const GluingLayout& layout, const std::vector<int>& matching) {
  ColoredGraph g = layout.base;
  for (std::size_t i = 0; i < matching.size(); ++i) {
    g.add_edge(0, layout.whites[i], layout.blacks[matching[i]]);
  }
  return g;
}

namespace {

// Depth-first matching search with a rollback union-find over copies. A
// component whose whites are all matched can no longer grow, so it must
// already contain every copy.
class MatchingSearch {
 public:
  MatchingSearch(const GluingLayout& layout, const MatchingVisitor& visit)
      : layout_(layout), visit_(visit) {
    n_ = static_cast<int>(layout.whites.size());
    copies_ = static_cast<int>(layout.type_of_copy.size());
    const int d = layout.d;
    std::vector<int> black_index(layout.base.num_vertices(), -1);
    for (int j = 0; j < n_; ++j) black_index[layout.blacks[j]] = j;
    color_black_.assign(static_cast<std::size_t>(d + 1) * n_, -1);
    for (int c = 1; c <= d; ++c) {
      for (int i = 0; i < n_; ++i) {
        color_black_[static_cast<std::size_t>(c) * n_ + i] =
            black_index[layout.base.neighbor(layout.whites[i], c)];
      }
    }
    white_copy_.resize(n_);
    black_copy_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      white_copy_[i] = layout.copy_of_vertex[layout.whites[i]];
      black_copy_[i] = layout.copy_of_vertex[layout.blacks[i]];
    }
    parent_.resize(copies_);
    size_.assign(copies_, 1);
    open_.assign(copies_, 0);
    for (int c = 0; c < copies_; ++c) parent_[c] = c;
    for (int i = 0; i < n_; ++i) ++open_[white_copy_[i]];
    matching_.assign(n_, -1);
    inverse_.assign(n_, -1);
    faces_.assign(d + 1, 0);
    seen_.assign(n_, 0);
  }

  // Runs the search with the first white fixed to `first_black`, or over
  // all choices when it is negative.
  std::uint64_t run(int first_black) {
    count_ = 0;
    if (n_ == 0) return 0;
    if (first_black < 0) {
      descend(0);
    } else {
      try_assign(0, first_black);
    }
    return count_;
  }

 private:
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  void descend(int i) {
    if (i == n_) {
      emit();
      return;
    }
    for (int j = 0; j < n_; ++j) {
      if (inverse_[j] < 0) try_assign(i, j);
    }
  }

  void try_assign(int i, int j) {
    int a = find(white_copy_[i]);
    int b = find(black_copy_[j]);
    int merged_child = -1;
    int root = a;
    if (a != b) {
      if (size_[a] < size_[b]) std::swap(a, b);
      parent_[b] = a;
      size_[a] += size_[b];
      open_[a] += open_[b];
      merged_child = b;
      root = a;
    }
    --open_[root];
    matching_[i] = j;
    inverse_[j] = i;
    if (open_[root] > 0 || size_[root] == copies_) descend(i + 1);
    matching_[i] = -1;
    inverse_[j] = -1;
    ++open_[root];
    if (merged_child >= 0) {
      parent_[merged_child] = merged_child;
      size_[root] -= size_[merged_child];
      open_[root] -= open_[merged_child];
    }
  }

  void emit() {
    ++count_;
    for (int c = 1; c <= layout_.d; ++c) {
      const int* cb = &color_black_[static_cast<std::size_t>(c) * n_];
      std::fill(seen_.begin(), seen_.end(), 0);
      int cycles = 0;
      for (int s = 0; s < n_; ++s) {
        if (seen_[s]) continue;
        ++cycles;
        for (int x = s; !seen_[x]; x = inverse_[cb[x]]) seen_[x] = 1;
      }
      faces_[c] = cycles;
    }
    visit_(matching_, faces_);
  }

  const GluingLayout& layout_;
  const MatchingVisitor& visit_;
  int n_ = 0;
  int copies_ = 0;
  std::vector<int> color_black_;
  std::vector<int> white_copy_, black_copy_;
  std::vector<int> parent_, size_, open_;
  std::vector<int> matching_, inverse_;
  std::vector<int> faces_;
  std::vector<char> seen_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t for_each_connected_matching(const GluingLayout& layout, int threads,
                                          const MatchingVisitor& visit) {
  const int n = static_cast<int>(layout.whites.size());
  if (threads <= 1 || n < 2) {
    MatchingSearch search(layout, visit);
    return search.run(-1);
  }
  // One task per choice for the first white; results are replayed in task
  // order so the stream is identical to the sequential one.
  struct Buffered {
    std::vector<std::vector<int>> matchings;
    std::vector<std::vector<int>> faces;
  };
  std::vector<Buffered> results(n);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int task = next++; task < n; task = next++) {
      Buffered& out = results[task];
      MatchingVisitor collect = [&out](const std::vector<int>& m, const std::vector<int>& f) {
        out.matchings.push_back(m);
        out.faces.push_back(f);
      };
      MatchingSearch search(layout, collect);
      search.run(task);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  std::uint64_t total = 0;
  for (const Buffered& r : results) {
    for (std::size_t k = 0; k < r.matchings.size(); ++k) visit(r.matchings[k], r.faces[k]);
    total += r.matchings.size();
  }
  return total;
}

GluingEnumeration enumerate_gluings(const GluingRequest& request) {
  GluingEnumeration out;
  out.layout = make_layout(request.bubble_types, request.copies);
  const GluingLayout& layout = out.layout;
  out.copies = request.copies;
  out.mode = request.mode;
  out.d = layout.d;
  out.edges = static_cast<int>(layout.whites.size());
  if (out.edges > request.edge_cap) {
    throw Error("cap_exceeded", "gluing needs " + std::to_string(out.edges) +
                                    " color-0 edges, above the cap of " +
                                    std::to_string(request.edge_cap));
  }
  const int d = layout.d;
  std::vector<Rational> enhancements = request.enhancements;
  if (enhancements.empty()) enhancements.assign(request.bubble_types.size(), Rational(d - 1));
  if (enhancements.size() != request.bubble_types.size()) {
    throw Error("invalid_argument", "one enhancement per bubble type is required");
  }
  const int bubbles = static_cast<int>(layout.type_of_copy.size());
  Rational enhancement_sum = 0;
  Integer symmetry = 1;
  for (std::size_t t = 0; t < request.copies.size(); ++t) {
    enhancement_sum += request.copies[t] * enhancements[t];
    for (int k = 2; k <= request.copies[t]; ++k) symmetry *= k;
  }
  const bool dedupe = request.mode != GluingMode::kLabeled;
  std::map<CanonicalKey, std::size_t> index;

  auto visit = [&](const std::vector<int>& matching, const std::vector<int>& per_color) {
    int f = 0;
    for (int c = 1; c <= d; ++c) f += per_color[c];
    out.max_faces = std::max(out.max_faces, f);
    ++out.labeled_total;
    CanonicalKey key;
    if (dedupe || request.compute_keys) key = canonical_form(build_gluing(layout, matching));
    if (dedupe) {
      auto [it, inserted] = index.emplace(key, out.records.size());
      if (!inserted) {
        ++out.records[it->second].labeled_count;
        return;
      }
    }
    GluingRecord r;
    r.matching = matching;
    r.face_per_color = per_color;
    r.faces = f;
    r.omega = d - f + (d - 1) * (out.edges - bubbles);
    r.delta = Rational(f - (d - 1) * out.edges) + enhancement_sum;
    r.key = std::move(key);
    out.records.push_back(std::move(r));
  };
  out.matchings_visited = for_each_connected_matching(layout, request.threads, visit);

  out.total_weight = 0;
  for (GluingRecord& r : out.records) {
    switch (request.mode) {
      case GluingMode::kLabeled:
        r.weight = 1;
        break;
      case GluingMode::kUnlabeled:
        r.weight = Rational(Integer(static_cast<unsigned long>(r.labeled_count)));
        break;
      case GluingMode::kRooted:
        r.weight = Rational(Integer(static_cast<unsigned long>(r.labeled_count)) * out.edges,
                            symmetry);
        r.weight.canonicalize();
        break;
    }
    out.total_weight += r.weight;
  }
  return out;
}

GluingEnumeration enumerate_gluings(const ColoredGraph& bubble, int count, GluingMode mode) {
  GluingRequest request;
  request.bubble_types = {bubble};
  request.copies = {count};
  request.mode = mode;
  return enumerate_gluings(request);
}

EmpiricalEnhancement empirical_enhancement(const ColoredGraph& bubble, int b_max, int edge_cap) {
  if (b_max < 2) throw Error("invalid_argument", "a linear fit needs b_max >= 2");
  EmpiricalEnhancement out;
  const int d = bubble.d();
  const int p = static_cast<int>(bubble.whites().size());
  for (int b = 1; b <= b_max; ++b) {
    if (p * b > edge_cap) {
      throw Error("cap_exceeded", "b=" + std::to_string(b) + " needs " + std::to_string(p * b) +
                                      " color-0 edges, above the cap of " +
                                      std::to_string(edge_cap));
    }
    GluingLayout layout = make_layout({bubble}, {b});
    int best = -1;
    for_each_connected_matching(layout, 1, [&](const std::vector<int>&, const std::vector<int>& f) {
      int total = 0;
      for (int c = 1; c <= d; ++c) total += f[c];
      best = std::max(best, total);
    });
    out.max_faces.push_back(best);
  }
  out.slope = out.max_faces[1] - out.max_faces[0];
  out.intercept = out.max_faces[0] - out.slope;
  out.exact_fit = true;
  for (int b = 1; b <= b_max; ++b) {
    if (out.slope * b + out.intercept != out.max_faces[b - 1]) out.exact_fit = false;
  }
  out.enhancement = Rational((d - 1) * p) - out.slope;
  out.delta_max = out.intercept;
  return out;
}

NecklaceSplit necklace_degree_split(const ColoredGraph& g) {
  ValidationReport report = validate(g);
  if (!report.ok) require_valid(g);
  if (g.d() != 4 || !report.is_closed) {
    throw Error("invalid_argument", "necklace split needs a closed graph at d=4");
  }
  BubblePartition parts = bubble_partition(g);
  // Color classes at each vertex: colors grouped by the neighbor they reach.
  std::set<int> first_half;
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::map<int, std::set<int>> by_neighbor;
    for (int c = 1; c <= 4; ++c) by_neighbor[g.neighbor(v, c)].insert(c);
    if (by_neighbor.size() == 1) continue;
    if (by_neighbor.size() != 2 || by_neighbor.begin()->second.size() != 2) {
      throw Error("not_necklace", "bubble of vertex " + std::to_string(v) + " is not a necklace");
    }
    std::set<int> cls = by_neighbor.begin()->second.count(1) ? by_neighbor.begin()->second
                                                              : std::next(by_neighbor.begin())->second;
    if (first_half.empty()) {
      first_half = cls;
    } else if (first_half != cls) {
      throw Error("not_necklace", "necklaces with different color splits are present");
    }
  }
  if (first_half.empty()) first_half = {1, 2};
  int a = *first_half.begin();
  int b = 1;
  while (first_half.count(b)) ++b;
  const FaceCensus census = faces(g);
  const int reduced_faces = census.per_color[a] + census.per_color[b];
  const int edges = g.num_edges_of_color(0);
  NecklaceSplit out;
  out.excess = edges - parts.count;
  int twice_genus = 2 - reduced_faces + out.excess;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw Error("internal", "reduced graph has non-integral genus");
  }
  out.genus = twice_genus / 2;
  out.omega = 4 * out.genus + out.excess;
  if (out.omega != gurau_degree(g, parts)) {
    throw Error("internal", "necklace split disagrees with the Gurau degree");
  }
  return out;
}

MelonicSeries melonic_g2_series(const std::vector<int>& exponents,
                                const std::vector<Rational>& couplings, int order) {
  if (exponents.size() != couplings.size()) {
    throw Error("invalid_argument", "one coupling per exponent is required");
  }
  for (int p : exponents) {
    if (p < 1) throw Error("invalid_argument", "coupling exponents must be positive");
  }
  MelonicSeries out{exponents, couplings, order, PowerSeries::constant(1, order, "lambda")};
  PowerSeries lambda = PowerSeries::identity(order, "lambda");
  for (int step = 0; step <= order; ++step) {
    PowerSeries sum(order, "lambda");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      sum += out.g2.pow(exponents[i]) * Rational(exponents[i] * couplings[i]);
    }
    out.g2 = PowerSeries::constant(1, order, "lambda") - lambda * sum;
  }
  return out;
}

}  // namespace tensorcomb
