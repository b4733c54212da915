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

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "tensorcomb/error.h"

namespace tensorcomb {

ColorSet make_color_set(std::initializer_list<int> colors) {
  ColorSet s = 0;
  for (int c : colors) s |= color_bit(c);
  return s;
}

std::vector<int> colors_of(ColorSet s) {
  std::vector<int> out;
  for (int c = 0; c < 32; ++c) {
    if (has_color(s, c)) out.push_back(c);
  }
  return out;
}

std::string kind_name(const MapVertex& v) {
  switch (v.kind) {
    case VertexKind::kPlain:
      return "plain";
    case VertexKind::kBlue:
      return "blue";
    case VertexKind::kBox:
      return "box:" + std::to_string(v.box_color);
    case VertexKind::kBlack:
      return "black";
  }
  return "plain";
}

MapVertex parse_kind(std::string_view name) {
  if (name == "plain") return {VertexKind::kPlain, 0};
  if (name == "blue") return {VertexKind::kBlue, 0};
  if (name == "black") return {VertexKind::kBlack, 0};
  if (name.substr(0, 4) == "box:") {
    try {
      return {VertexKind::kBox, std::stoi(std::string(name.substr(4)))};
    } catch (const std::exception&) {
    }
  }
  throw Error("invalid_map", "unknown vertex kind '" + std::string(name) + "'");
}

CombinatorialMap::CombinatorialMap(std::vector<MapVertex> vertices,
                                   std::vector<std::vector<int>> rotations,
                                   std::vector<int> alpha, std::vector<ColorSet> dart_colors,
                                   int root)
    : vertices_(std::move(vertices)),
      rotations_(std::move(rotations)),
      alpha_(std::move(alpha)),
      colors_(std::move(dart_colors)),
      root_(root) {
  const int n = num_darts();
  if (n % 2 != 0) throw Error("invalid_map", "odd number of darts");
  if (rotations_.size() != vertices_.size()) {
    throw Error("invalid_map", "one rotation per vertex is required");
  }
  if (static_cast<int>(colors_.size()) != n) throw Error("invalid_map", "one color set per dart");
  for (int x = 0; x < n; ++x) {
    int y = alpha_[x];
    if (y < 0 || y >= n || y == x || alpha_[y] != x) {
      throw Error("invalid_map", "alpha must be a fixed-point-free involution");
    }
    if (colors_[x] != colors_[y]) throw Error("invalid_map", "both darts of an edge share colors");
  }
  sigma_.assign(n, -1);
  vertex_of_.assign(n, -1);
  for (int v = 0; v < num_vertices(); ++v) {
    const auto& rot = rotations_[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      int x = rot[i];
      if (x < 0 || x >= n || vertex_of_[x] >= 0) {
        throw Error("invalid_map", "every dart must appear in exactly one rotation");
      }
      vertex_of_[x] = v;
      sigma_[x] = rot[(i + 1) % rot.size()];
    }
  }
  for (int x = 0; x < n; ++x) {
    if (vertex_of_[x] < 0) throw Error("invalid_map", "dart " + std::to_string(x) + " has no vertex");
  }
  if (root_ < -1 || root_ >= n) throw Error("invalid_map", "root dart out of range");
  origin_.resize(n);
  std::iota(origin_.begin(), origin_.end(), 0);
}

CombinatorialMap CombinatorialMap::with_root(int dart) const {
  if (dart < -1 || dart >= num_darts()) throw Error("invalid_map", "root dart out of range");
  CombinatorialMap m = *this;
  m.root_ = dart;
  return m;
}

std::vector<std::vector<int>> CombinatorialMap::face_orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(num_darts());
  for (int s = 0; s < num_darts(); ++s) {
    if (seen[s]) continue;
    out.emplace_back();
    for (int x = s; !seen[x]; x = phi(x)) {
      seen[x] = 1;
      out.back().push_back(x);
    }
  }
  return out;
}

int CombinatorialMap::face_count() const {
  int isolated = 0;
  for (const auto& rot : rotations_) isolated += rot.empty() ? 1 : 0;
  return static_cast<int>(face_orbits().size()) + isolated;
}

std::vector<int> CombinatorialMap::components() const {
  std::vector<int> parent(num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 0; x < num_darts(); ++x) parent[find(vertex_of_[x])] = find(vertex_of_[alpha_[x]]);
  std::vector<int> label(num_vertices(), -1);
  std::vector<int> out(num_vertices());
  int next = 0;
  for (int v = 0; v < num_vertices(); ++v) {
    int r = find(v);
    if (label[r] < 0) label[r] = next++;
    out[v] = label[r];
  }
  return out;
}

int CombinatorialMap::component_count() const {
  auto comp = components();
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

int CombinatorialMap::genus() const {
  auto comp = components();
  const int count = component_count();
  std::vector<int> euler(count, 0);
  for (int v = 0; v < num_vertices(); ++v) euler[comp[v]] += rotations_[v].empty() ? 2 : 1;
  for (int x = 0; x < num_darts(); x += 1) {
    if (x < alpha_[x]) euler[comp[vertex_of_[x]]] -= 1;
  }
  for (const auto& orbit : face_orbits()) euler[comp[vertex_of_[orbit.front()]]] += 1;
  int total = 0;
  for (int chi : euler) {
    if (chi > 2 || (2 - chi) % 2 != 0) throw Error("internal", "inconsistent Euler characteristic");
    total += (2 - chi) / 2;
  }
  return total;
}

int CombinatorialMap::cyclomatic() const {
  return num_edges() - num_vertices() + component_count();
}

CombinatorialMap CombinatorialMap::submap(const std::function<bool(ColorSet)>& keep) const {
  std::vector<int> new_id(num_darts(), -1);
  std::vector<int> origin;
  for (int x = 0; x < num_darts(); ++x) {
    if (keep(colors_[x])) {
      new_id[x] = static_cast<int>(origin.size());
      origin.push_back(x);
    }
  }
  std::vector<int> alpha(origin.size());
  std::vector<ColorSet> colors(origin.size());
  for (std::size_t i = 0; i < origin.size(); ++i) {
    alpha[i] = new_id[alpha_[origin[i]]];
    colors[i] = colors_[origin[i]];
  }
  std::vector<std::vector<int>> rotations(num_vertices());
  for (int v = 0; v < num_vertices(); ++v) {
    for (int x : rotations_[v]) {
      if (new_id[x] >= 0) rotations[v].push_back(new_id[x]);
    }
  }
  int root = root_ >= 0 ? new_id[root_] : -1;
  CombinatorialMap m(vertices_, std::move(rotations), std::move(alpha), std::move(colors), root);
  for (int& o : origin) o = origin_[o];
  m.origin_ = std::move(origin);
  return m;
}

CombinatorialMap CombinatorialMap::submap_with_color(int c) const {
  return submap([c](ColorSet s) { return has_color(s, c); });
}

std::vector<std::pair<int, int>> CombinatorialMap::edge_endpoints() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < num_darts(); ++x) {
    if (x < alpha_[x]) out.emplace_back(vertex_of_[x], vertex_of_[alpha_[x]]);
  }
  return out;
}

int MapBuilder::add_vertex(MapVertex v) {
  vertices_.push_back(v);
  rotations_.emplace_back();
  return static_cast<int>(vertices_.size()) - 1;
}

std::pair<int, int> MapBuilder::add_edge(int u, int v, ColorSet colors) {
  if (u < 0 || v < 0 || u >= static_cast<int>(vertices_.size()) ||
      v >= static_cast<int>(vertices_.size())) {
    throw Error("invalid_map", "edge references a missing vertex");
  }
  int a = static_cast<int>(alpha_.size());
  int b = a + 1;
  alpha_.push_back(b);
  alpha_.push_back(a);
  colors_.push_back(colors);
  colors_.push_back(colors);
  rotations_[u].push_back(a);
  rotations_[v].push_back(b);
  return {a, b};
}

void MapBuilder::set_rotation(int v, std::vector<int> darts) {
  std::vector<int> expected = rotations_.at(v);
  std::vector<int> given = darts;
  std::sort(expected.begin(), expected.end());
  std::sort(given.begin(), given.end());
  if (expected != given) throw Error("invalid_map", "rotation must permute the vertex's darts");
  rotations_[v] = std::move(darts);
}

CombinatorialMap MapBuilder::build(int root) const {
  return CombinatorialMap(vertices_, rotations_, alpha_, colors_, root);
}

namespace {

std::vector<int> dart_code(const CombinatorialMap& m, int start, std::vector<int>& label,
                           std::vector<int>& order) {
  order.assign(1, start);
  label[start] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (int y : {m.sigma(x), m.alpha(x)}) {
      if (label[y] < 0) {
        label[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  std::vector<int> code{static_cast<int>(order.size())};
  for (int x : order) {
    const MapVertex& v = m.vertex(m.vertex_of(x));
    code.push_back(label[m.sigma(x)]);
    code.push_back(label[m.alpha(x)]);
    code.push_back(static_cast<int>(m.colors(x)));
    code.push_back(static_cast<int>(v.kind));
    code.push_back(v.box_color);
  }
  for (int x : order) label[x] = -1;
  return code;
}

}  // namespace

CanonicalKey map_canonical_key(const CombinatorialMap& m, bool rooted) {
  std::vector<int> comp = m.components();
  const int count = m.component_count();
  std::vector<std::vector<int>> codes(count);
  std::vector<char> has_code(count);
  std::vector<int> label(m.num_darts(), -1);
  std::vector<int> order;
  std::vector<int> rooted_code;
  if (rooted && m.root() >= 0) rooted_code = dart_code(m, m.root(), label, order);
  int root_comp = (rooted && m.root() >= 0) ? comp[m.vertex_of(m.root())] : -1;
  for (int x = 0; x < m.num_darts(); ++x) {
    int c = comp[m.vertex_of(x)];
    if (c == root_comp) continue;
    std::vector<int> code = dart_code(m, x, label, order);
    if (!has_code[c] || code < codes[c]) {
      codes[c] = std::move(code);
      has_code[c] = 1;
    }
  }
  std::vector<std::vector<int>> sorted;
  std::vector<int> isolated;
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (m.degree(v) == 0) {
      isolated.push_back(static_cast<int>(m.vertex(v).kind) * 64 + m.vertex(v).box_color);
    }
  }
  for (int c = 0; c < count; ++c) {
    if (has_code[c]) sorted.push_back(std::move(codes[c]));
  }
  std::sort(sorted.begin(), sorted.end());
  std::sort(isolated.begin(), isolated.end());
  std::vector<int> key{rooted ? 1 : 0, static_cast<int>(rooted_code.size())};
  key.insert(key.end(), rooted_code.begin(), rooted_code.end());
  key.push_back(static_cast<int>(sorted.size()));
  for (const auto& code : sorted) key.insert(key.end(), code.begin(), code.end());
  key.push_back(static_cast<int>(isolated.size()));
  key.insert(key.end(), isolated.begin(), isolated.end());
  return CanonicalKey(std::move(key));
}

std::string map_to_json(const CombinatorialMap& m, int indent) {
  using Json = nlohmann::ordered_json;
  Json j;
  j["darts"] = m.num_darts();
  Json sigma = Json::array(), alpha = Json::array(), colors = Json::array(),
       vertex_of = Json::array(), kinds = Json::array();
  for (int x = 0; x < m.num_darts(); ++x) {
    sigma.push_back(m.sigma(x));
    alpha.push_back(m.alpha(x));
    colors.push_back(colors_of(m.colors(x)));
    vertex_of.push_back(m.vertex_of(x));
  }
  for (int v = 0; v < m.num_vertices(); ++v) kinds.push_back(kind_name(m.vertex(v)));
  j["sigma"] = std::move(sigma);
  j["alpha"] = std::move(alpha);
  j["colors"] = std::move(colors);
  j["kinds"] = std::move(kinds);
  j["vertex_of"] = std::move(vertex_of);
  j["root"] = m.root() >= 0 ? Json(m.root()) : Json(nullptr);
  return j.dump(indent);
}

CombinatorialMap map_from_json(std::string_view text) {
  using Json = nlohmann::json;
  try {
    Json j = Json::parse(text.begin(), text.end());
    const int n = j.at("darts").get<int>();
    auto sigma = j.at("sigma").get<std::vector<int>>();
    auto alpha = j.at("alpha").get<std::vector<int>>();
    auto vertex_of = j.at("vertex_of").get<std::vector<int>>();
    std::vector<MapVertex> vertices;
    for (const Json& k : j.at("kinds")) vertices.push_back(parse_kind(k.get<std::string>()));
    std::vector<ColorSet> colors;
    for (const Json& cs : j.at("colors")) {
      ColorSet s = 0;
      for (const Json& c : cs) {
        int color = c.get<int>();
        if (color < 0 || color > 31) throw Error("invalid_map", "color out of range");
        s |= color_bit(color);
      }
      colors.push_back(s);
    }
    if (static_cast<int>(sigma.size()) != n || static_cast<int>(alpha.size()) != n ||
        static_cast<int>(vertex_of.size()) != n) {
      throw Error("invalid_map", "dart arrays must have length 'darts'");
    }
    for (int x = 0; x < n; ++x) {
      if (sigma[x] < 0 || sigma[x] >= n) throw Error("invalid_map", "sigma out of range");
    }
    std::vector<std::vector<int>> rotations(vertices.size());
    std::vector<char> seen(n);
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      int v = vertex_of[s];
      if (v < 0 || v >= static_cast<int>(vertices.size()) || !rotations[v].empty()) {
        throw Error("invalid_map", "sigma cycles must match vertex_of");
      }
      for (int x = s; !seen[x]; x = sigma[x]) {
        if (vertex_of[x] != v) {
          throw Error("invalid_map", "sigma cycles must match vertex_of");
        }
        seen[x] = 1;
        rotations[v].push_back(x);
      }
    }
    int root = j.at("root").is_null() ? -1 : j.at("root").get<int>();
    CombinatorialMap m(std::move(vertices), std::move(rotations), std::move(alpha),
                       std::move(colors), root);
    for (int x = 0; x < n; ++x) {
      if (m.sigma(x) != sigma[x]) throw Error("invalid_map", "sigma cycles must match vertex_of");
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error("invalid_map", std::string("malformed map JSON: ") + e.what());
  }
}

}  // namespace tensorcomb
