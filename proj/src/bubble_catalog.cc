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

#include "tensorcomb/bubble_catalog.h"

#include <algorithm>
#include <set>
#include <string>

#include "tensorcomb/error.h"

namespace tensorcomb {

void require_valid_pairing(const ColoredGraph& b, const Pairing& pairing) {
  const int n = b.num_vertices();
  std::vector<int> hits(n, 0);
  for (const auto& [w, k] : pairing.pairs) {
    if (w < 0 || w >= n || k < 0 || k >= n) {
      throw Error("invalid_pairing", "pair (" + std::to_string(w) + ", " + std::to_string(k) +
                                         ") references a missing vertex");
    }
    if (!b.is_white(w) || b.is_white(k)) {
      throw Error("invalid_pairing", "pair (" + std::to_string(w) + ", " + std::to_string(k) +
                                         ") must be (white, black)");
    }
    ++hits[w];
    ++hits[k];
  }
  for (int v = 0; v < n; ++v) {
    if (hits[v] != 1) {
      throw Error("invalid_pairing", "vertex " + std::to_string(v) + " lies in " +
                                         std::to_string(hits[v]) + " pairs");
    }
  }
}

std::vector<int> pair_index(const ColoredGraph& b, const Pairing& pairing) {
  require_valid_pairing(b, pairing);
  std::vector<int> index(b.num_vertices(), -1);
  for (std::size_t i = 0; i < pairing.pairs.size(); ++i) {
    index[pairing.pairs[i].first] = static_cast<int>(i);
    index[pairing.pairs[i].second] = static_cast<int>(i);
  }
  return index;
}

ColoredGraph close_with_pairing(const ColoredGraph& b, const Pairing& pairing) {
  require_valid_pairing(b, pairing);
  ColoredGraph closed = b.with_color_zero();
  for (const auto& [w, k] : pairing.pairs) closed.add_edge(0, w, k);
  return closed;
}

std::string family_name(BubbleFamily family) {
  switch (family) {
    case BubbleFamily::kMelonic:
      return "melonic";
    case BubbleFamily::kNecklace:
      return "necklace";
    case BubbleFamily::kQuarticMelonic:
      return "quartic-melonic";
    case BubbleFamily::kQuarticNecklace:
      return "quartic-necklace";
    case BubbleFamily::kCustom:
      return "custom";
  }
  return "custom";
}

ColoredGraph two_vertex_bubble(int d) {
  ColoredGraph g(d, false);
  g.add_vertex(Shade::kWhite);
  g.add_vertex(Shade::kBlack);
  for (int c = 1; c <= d; ++c) g.add_edge(c, 0, 1);
  return g;
}

namespace {

// Mutable neighbor table over the colors 1..d, used while building bubbles.
struct Table {
  int d;
  std::vector<Shade> shades;
  std::vector<int> nbr;  // n * (d + 1)

  int& at(int v, int c) { return nbr[static_cast<std::size_t>(v) * (d + 1) + c]; }
  int add(Shade s) {
    shades.push_back(s);
    nbr.resize(nbr.size() + d + 1, -1);
    return static_cast<int>(shades.size()) - 1;
  }
  ColoredGraph build() {
    ColoredGraph g(d, false);
    for (Shade s : shades) g.add_vertex(s);
    for (int v = 0; v < static_cast<int>(shades.size()); ++v) {
      if (shades[v] != Shade::kWhite) continue;
      for (int c = 1; c <= d; ++c) g.add_edge(c, v, at(v, c));
    }
    return g;
  }
};

}  // namespace

BubbleSpec melonic_bubble(int d, const std::vector<DipoleInsertion>& insertions) {
  if (d < 2) throw Error("invalid_argument", "melonic bubbles need d >= 2");
  Table t{d, {}, {}};
  int w0 = t.add(Shade::kWhite);
  int b0 = t.add(Shade::kBlack);
  for (int c = 1; c <= d; ++c) {
    t.at(w0, c) = b0;
    t.at(b0, c) = w0;
  }
  for (const DipoleInsertion& ins : insertions) {
    int n = static_cast<int>(t.shades.size());
    if (ins.white < 0 || ins.white >= n || t.shades[ins.white] != Shade::kWhite ||
        ins.color < 1 || ins.color > d) {
      throw Error("edge_absent", "no edge of color " + std::to_string(ins.color) +
                                     " at white vertex " + std::to_string(ins.white));
    }
    int b = t.at(ins.white, ins.color);
    int nw = t.add(Shade::kWhite);
    int nb = t.add(Shade::kBlack);
    t.at(ins.white, ins.color) = nb;
    t.at(nb, ins.color) = ins.white;
    t.at(nw, ins.color) = b;
    t.at(b, ins.color) = nw;
    for (int c = 1; c <= d; ++c) {
      if (c == ins.color) continue;
      t.at(nw, c) = nb;
      t.at(nb, c) = nw;
    }
  }
  BubbleSpec spec;
  spec.family = BubbleFamily::kMelonic;
  spec.d = d;
  spec.insertions = insertions;
  spec.graph = t.build();
  return spec;
}

BubbleSpec necklace_bubble(int d, int length, const std::vector<int>& first_half) {
  if (d % 2 != 0 || d < 2) throw Error("invalid_argument", "necklaces need an even d");
  if (length < 1) throw Error("invalid_argument", "necklace length must be at least 1");
  std::set<int> half(first_half.begin(), first_half.end());
  if (static_cast<int>(half.size()) != d / 2 || static_cast<int>(first_half.size()) != d / 2 ||
      *half.begin() < 1 || *half.rbegin() > d) {
    throw Error("invalid_argument", "color split must be two halves of 1.." + std::to_string(d));
  }
  ColoredGraph g(d, false);
  for (int i = 0; i < length; ++i) {
    g.add_vertex(Shade::kWhite);
    g.add_vertex(Shade::kBlack);
  }
  for (int i = 0; i < length; ++i) {
    int w = 2 * i;
    int b = 2 * i + 1;
    int next_w = 2 * ((i + 1) % length);
    for (int c = 1; c <= d; ++c) {
      if (half.count(c)) {
        g.add_edge(c, w, b);
      } else {
        g.add_edge(c, next_w, b);
      }
    }
  }
  BubbleSpec spec;
  spec.family = BubbleFamily::kNecklace;
  spec.d = d;
  spec.necklace_length = length;
  spec.first_half = std::vector<int>(half.begin(), half.end());
  spec.graph = std::move(g);
  return spec;
}

BubbleSpec quartic_melonic(int d, int color) {
  BubbleSpec spec = melonic_bubble(d, {{0, color}});
  spec.family = BubbleFamily::kQuarticMelonic;
  return spec;
}

BubbleSpec quartic_necklace(const std::vector<int>& first_half) {
  BubbleSpec spec = necklace_bubble(4, 2, first_half);
  spec.family = BubbleFamily::kQuarticNecklace;
  return spec;
}

namespace {

// Dipole elimination state over the active colors of a bubble or a closed
// graph.
class Reducer {
 public:
  explicit Reducer(const ColoredGraph& g) : d_(g.d()), low_(g.lowest_color()) {
    const int n = g.num_vertices();
    shades_.resize(n);
    alive_.assign(n, 1);
    nbr_.assign(static_cast<std::size_t>(n) * (d_ + 1), -1);
    for (int v = 0; v < n; ++v) {
      shades_[v] = g.shade(v);
      for (int c = low_; c <= d_; ++c) at(v, c) = g.neighbor(v, c);
    }
    remaining_ = n;
  }

  int remaining() const { return remaining_; }

  struct Dipole {
    int white;
    int black;
    int missing;
  };

  std::vector<Dipole> dipoles() const {
    std::vector<Dipole> out;
    const int colors = d_ + 1 - low_;
    for (int w = 0; w < static_cast<int>(shades_.size()); ++w) {
      if (!alive_[w] || shades_[w] != Shade::kWhite) continue;
      for (int c = low_; c <= d_; ++c) {
        int b = at(w, c);
        int shared = 0;
        int missing = -1;
        for (int c2 = low_; c2 <= d_; ++c2) {
          if (at(w, c2) == b) {
            ++shared;
          } else {
            missing = c2;
          }
        }
        // Count each candidate once, at its smallest shared color.
        bool first = true;
        for (int c2 = low_; c2 < c; ++c2) first = first && at(w, c2) != b;
        if (first && shared == colors - 1) out.push_back({w, b, missing});
      }
    }
    return out;
  }

  void remove(const Dipole& dp) {
    int other_white = at(dp.black, dp.missing);
    int other_black = at(dp.white, dp.missing);
    at(other_white, dp.missing) = other_black;
    at(other_black, dp.missing) = other_white;
    alive_[dp.white] = alive_[dp.black] = 0;
    remaining_ -= 2;
  }

  ColoredGraph snapshot() const {
    ColoredGraph g(d_, low_ == 0);
    std::vector<int> id(shades_.size(), -1);
    for (std::size_t v = 0; v < shades_.size(); ++v) {
      if (alive_[v]) id[v] = g.add_vertex(shades_[v]);
    }
    for (std::size_t v = 0; v < shades_.size(); ++v) {
      if (!alive_[v] || shades_[v] != Shade::kWhite) continue;
      for (int c = low_; c <= d_; ++c) g.add_edge(c, id[v], id[at(static_cast<int>(v), c)]);
    }
    return g;
  }

 private:
  int& at(int v, int c) { return nbr_[static_cast<std::size_t>(v) * (d_ + 1) + c]; }
  int at(int v, int c) const { return nbr_[static_cast<std::size_t>(v) * (d_ + 1) + c]; }

  int d_;
  int low_;
  std::vector<Shade> shades_;
  std::vector<char> alive_;
  std::vector<int> nbr_;
  int remaining_ = 0;
};

bool greedy_reduce(Reducer& r, std::vector<Reducer::Dipole>* removed) {
  while (r.remaining() > 2) {
    auto candidates = r.dipoles();
    if (candidates.empty()) return false;
    if (removed) removed->push_back(candidates.front());
    r.remove(candidates.front());
  }
  return true;
}

bool backtrack_reduce(const Reducer& r, std::set<CanonicalKey>& failed) {
  if (r.remaining() <= 2) return true;
  CanonicalKey key = canonical_form(r.snapshot());
  if (failed.count(key)) return false;
  for (const auto& dp : r.dipoles()) {
    Reducer next = r;
    next.remove(dp);
    if (backtrack_reduce(next, failed)) return true;
  }
  failed.insert(std::move(key));
  return false;
}

void require_regular(const ColoredGraph& g) {
  ValidationReport report = validate(g);
  if (!report.ok) require_valid(g);
  if (report.is_open) throw Error("open_graph", "melonicity needs a bubble or a closed graph");
}

}  // namespace

bool is_melonic(const ColoredGraph& g) {
  require_regular(g);
  if (g.num_vertices() == 0 || count_components(g) != 1) return false;
  Reducer greedy(g);
  if (greedy_reduce(greedy, nullptr)) return true;
  std::set<CanonicalKey> failed;
  return backtrack_reduce(Reducer(g), failed);
}

Pairing melonic_pairing(const ColoredGraph& b) {
  require_regular(b);
  if (b.has_color_zero()) throw Error("invalid_argument", "pairings are defined on bubbles");
  Reducer r(b);
  std::vector<Reducer::Dipole> removed;
  if (count_components(b) != 1 || !greedy_reduce(r, &removed)) {
    throw Error("not_melonic", "bubble is not melonic");
  }
  Pairing pairing;
  for (const auto& dp : removed) pairing.pairs.emplace_back(dp.white, dp.black);
  std::vector<char> used(b.num_vertices());
  for (const auto& [w, k] : pairing.pairs) used[w] = used[k] = 1;
  int w = -1, k = -1;
  for (int v = 0; v < b.num_vertices(); ++v) {
    if (used[v]) continue;
    (b.is_white(v) ? w : k) = v;
  }
  pairing.pairs.emplace_back(w, k);
  std::sort(pairing.pairs.begin(), pairing.pairs.end());
  return pairing;
}

Pairing necklace_pairing(const BubbleSpec& necklace) {
  if (necklace.family != BubbleFamily::kNecklace &&
      necklace.family != BubbleFamily::kQuarticNecklace) {
    throw Error("invalid_argument", "necklace pairing needs a necklace bubble");
  }
  const int p = necklace.necklace_length;
  Pairing pairing;
  for (int i = 0; i < p; ++i) pairing.pairs.emplace_back(2 * ((i + 1) % p), 2 * i + 1);
  std::sort(pairing.pairs.begin(), pairing.pairs.end());
  return pairing;
}

BestPairing best_pairing(const ColoredGraph& b, int cap) {
  require_valid(b);
  if (b.has_color_zero()) throw Error("invalid_argument", "pairings are defined on bubbles");
  const int p = static_cast<int>(b.whites().size());
  if (p > cap) {
    throw Error("cap_exceeded", "bubble has p=" + std::to_string(p) + " > cap " +
                                    std::to_string(cap) +
                                    "; exhaustive pairing search is disabled, use a heuristic");
  }
  BestPairing best;
  best.max_faces = -1;
  CanonicalKey best_key;
  for_each_pairing(b, [&](const Pairing& pairing) {
    ++best.pairings_examined;
    ColoredGraph closed = close_with_pairing(b, pairing);
    int f = faces(closed).total;
    if (f < best.max_faces) return;
    CanonicalKey key = canonical_form(closed);
    if (f > best.max_faces || key < best_key) {
      best.max_faces = f;
      best.pairing = pairing;
      best_key = std::move(key);
    }
  });
  return best;
}

}  // namespace tensorcomb
