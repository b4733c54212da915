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

#include "tensorcomb/cli.h"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tensorcomb/bubble_catalog.h"
#include "tensorcomb/colored_graph.h"
#include "tensorcomb/combinatorial_map.h"
#include "tensorcomb/enhancement.h"
#include "tensorcomb/error.h"
#include "tensorcomb/gluing_space.h"
#include "tensorcomb/graph_io.h"
#include "tensorcomb/quartic_gf.h"
#include "tensorcomb/rational.h"
#include "tensorcomb/stuffed_maps.h"

namespace tensorcomb {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// What a command produced. `csv` is empty for commands without a table.
struct Output {
  Json doc;
  std::string csv;
  bool prefer_csv = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GraphDocument load_document(const std::string& path) {
  GraphDocument doc = graph_document_from_json(read_file(path));
  require_valid(doc.graph);
  return doc;
}

Json embed(const std::string& text) { return Json::parse(text); }

Json real_json(const Real& x) { return static_cast<double>(x); }

std::string real_digits(const Real& x) { return x.str(precision_digits()); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const std::string& s : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
      throw UsageError("expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

Rational parse_number(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw UsageError("expected a rational number, got '" + text + "'");
  }
}

std::vector<Rational> parse_numbers(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& s : split(text, ',')) out.push_back(parse_number(s));
  return out;
}

// "e<white>:<color>"
DipoleInsertion parse_insertion(const std::string& text) {
  const auto colon = text.find(':');
  if (text.size() < 4 || text[0] != 'e' || colon == std::string::npos) {
    throw UsageError("insertion must look like e<white>:<color>, got '" + text + "'");
  }
  std::vector<int> pair = parse_ints(text.substr(1, colon - 1) + "," + text.substr(colon + 1));
  return {pair[0], pair[1]};
}

// "min:max:steps"
struct Range {
  Rational lo;
  Rational hi;
  int steps = 1;
};

Range parse_range(const std::string& text) {
  std::vector<std::string> parts = split(text, ':');
  if (parts.size() == 1) return {parse_number(parts[0]), parse_number(parts[0]), 1};
  if (parts.size() != 3) throw UsageError("range must look like min:max:steps");
  return {parse_number(parts[0]), parse_number(parts[1]), parse_ints(parts[2]).at(0)};
}

Json record_json(const EnhancementRecord& r) {
  Json j;
  j["bubble_key"] = r.bubble_key.digest();
  j["d"] = r.d;
  j["p"] = r.p;
  j["s"] = to_string(r.s);
  j["provenance"] = provenance_name(r.provenance);
  j["status"] = status_name(r.status);
  if (r.inherited) {
    j["inherited"] = {{"internal_faces", r.inherited->internal_faces},
                      {"copies", r.inherited->copies},
                      {"parent_p", r.inherited->parent_p},
                      {"parent_s", to_string(r.inherited->parent_enhancement)}};
  }
  if (r.slice) {
    Json s;
    s["partition"] = r.slice->partition;
    Json parts = Json::array();
    for (const Rational& q : r.slice->slice_enhancements) parts.push_back(to_string(q));
    s["slice_s"] = std::move(parts);
    j["slice"] = std::move(s);
  }
  if (r.pairing) {
    j["pairing"] = {{"pairs", r.pairing->pairing.pairs},
                    {"closed_faces", r.pairing->closed_faces}};
  }
  auto empirical = [](const EmpiricalEnhancement& e) {
    return Json{{"max_faces", e.max_faces},
                {"slope", to_string(e.slope)},
                {"intercept", to_string(e.intercept)},
                {"exact_fit", e.exact_fit},
                {"s", to_string(e.enhancement)}};
  };
  if (r.pairing && r.pairing->check) j["check"] = empirical(*r.pairing->check);
  if (r.empirical) j["empirical"] = empirical(*r.empirical);
  return j;
}

Json point_json(const CriticalPoint& p) {
  Json j;
  j["k"] = to_string(p.k);
  j["lambda"] = to_string(p.lambda);
  j["t"] = real_json(p.t);
  j["f"] = real_json(p.f);
  j["u"] = real_json(p.u);
  j["regime"] = regime_name(p.regime);
  j["dominant"] = p.dominant;
  j["coalescent"] = p.coalescent;
  j["t_digits"] = real_digits(p.t);
  j["f_digits"] = real_digits(p.f);
  j["u_digits"] = real_digits(p.u);
  j["residual"] = real_json(p.residual);
  return j;
}

std::string render_human(const Json& j) {
  std::ostringstream out;
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  } else if (j.is_array()) {
    for (const Json& item : j) out << item.dump() << '\n';
  } else {
    out << j.dump() << '\n';
  }
  return out.str();
}

class Cli {
 public:
  Cli() : app_("Colored tensor graph combinatorics") {
    app_.fallthrough();
    app_.require_subcommand(1);
    app_.add_option("--out", out_path_, "Write output to FILE instead of stdout");
    app_.add_option("--format", format_, "Output format")
        ->check(CLI::IsMember({"json", "csv", "human"}));
    app_.add_option("--precision", precision_, "Significant digits for critical solving");
    add_graph_commands();
    add_bubble_commands();
    add_glue_commands();
    add_enhance_commands();
    add_map_commands();
    add_gf_commands();
  }

  int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
      app_.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int code = app_.exit(e, out, err);
      return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (const Error& e) {
      err << Json{{"error", e.kind()}, {"message", e.what()}}.dump() << '\n';
      return 1;
    } catch (const std::exception& e) {
      err << Json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
      return 1;
    }
    if (!result_) return 0;
    std::string text;
    std::string format = format_;
    if (format.empty()) format = result_->prefer_csv && !result_->csv.empty() ? "csv" : "json";
    if (format == "csv") {
      if (result_->csv.empty()) {
        err << "error: this command has no CSV output\n";
        return 2;
      }
      text = result_->csv;
    } else if (format == "human") {
      text = render_human(result_->doc);
    } else {
      text = result_->doc.dump(2) + "\n";
    }
    if (out_path_.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path_, std::ios::binary);
      file << text;
      if (!file) {
        err << Json{{"error", "io"}, {"message", "cannot write '" + out_path_ + "'"}}.dump()
            << '\n';
        return 1;
      }
    }
    return 0;
  }

 private:
  // Registers `handler` as the action of `sub`.
  void on(CLI::App* sub, std::function<Output()> handler) {
    sub->callback([this, handler] {
      if (precision_ > 0) set_precision_digits(precision_);
      result_ = handler();
    });
  }

  void add_graph_commands() {
    auto* validate_cmd = app_.add_subcommand("validate", "Check a graph against the coloring rules");
    validate_cmd->add_option("--graph", graph_path_)->required();
    on(validate_cmd, [this] {
      ColoredGraph g = graph_document_from_json(read_file(graph_path_)).graph;
      ValidationReport r = validate(g);
      Output o;
      o.doc = {{"ok", r.ok},
               {"is_bubble", r.is_bubble},
               {"is_closed", r.is_closed},
               {"is_open", r.is_open},
               {"violations", r.violations}};
      return o;
    });

    auto* faces_cmd = app_.add_subcommand("faces", "Count faces per color pair");
    faces_cmd->add_option("--graph", graph_path_)->required();
    on(faces_cmd, [this] {
      FaceCensus census = faces(load_document(graph_path_).graph);
      Output o;
      o.doc["d"] = census.d;
      Json per = Json::object();
      for (int c = 1; c <= census.d; ++c) per["0" + std::to_string(c)] = census.per_color[c];
      o.doc["per_color"] = std::move(per);
      o.doc["total"] = census.total;
      Json paths = Json::array();
      for (const OpenPath& p : census.open_paths) {
        paths.push_back({{"color", p.color}, {"white", p.white_end}, {"black", p.black_end}});
      }
      o.doc["open_paths"] = std::move(paths);
      return o;
    });

    auto* degree_cmd = app_.add_subcommand("degree", "Degree and melonicity of a closed graph");
    degree_cmd->add_option("--graph", graph_path_)->required();
    on(degree_cmd, [this] {
      ColoredGraph g = load_document(graph_path_).graph;
      BubblePartition parts = bubble_partition(g);
      Output o;
      o.doc = {{"d", g.d()},
               {"faces", faces(g).total},
               {"edges", g.num_edges_of_color(0)},
               {"bubbles", parts.count},
               {"omega", gurau_degree(g, parts)},
               {"melonic", is_melonic(g)}};
      return o;
    });

    auto* boundary_cmd = app_.add_subcommand("boundary", "Boundary bubble of an open graph");
    boundary_cmd->add_option("--graph", graph_path_)->required();
    on(boundary_cmd, [this] {
      BoundaryBubble b = boundary_bubble(load_document(graph_path_).graph);
      Output o;
      o.doc["bubble"] = embed(graph_to_json(b.bubble));
      o.doc["source_vertex"] = b.source_vertex;
      o.doc["internal_faces"] = b.internal_faces;
      return o;
    });

    auto* canon_cmd = app_.add_subcommand("canon", "Canonical key and automorphism count");
    canon_cmd->add_option("--graph", graph_path_)->required();
    on(canon_cmd, [this] {
      ColoredGraph g = load_document(graph_path_).graph;
      Output o;
      o.doc = {{"key", canonical_form(g).digest()}, {"automorphisms", automorphism_count(g)}};
      return o;
    });
  }

  void add_bubble_commands() {
    auto* bubble = app_.add_subcommand("bubble", "Build bubbles and pairings");
    bubble->require_subcommand(1);

    auto* melonic = bubble->add_subcommand("melonic", "Melonic bubble from dipole insertions");
    melonic->add_option("--d", d_)->required();
    melonic->add_option("--insert", insertions_, "Dipole insertion e<white>:<color>");
    on(melonic, [this] {
      std::vector<DipoleInsertion> steps;
      for (const std::string& s : insertions_) steps.push_back(parse_insertion(s));
      BubbleSpec spec = melonic_bubble(d_, steps);
      return bubble_output(spec.graph, melonic_pairing(spec.graph));
    });

    auto* necklace = bubble->add_subcommand("necklace", "Necklace bubble");
    necklace->add_option("--d", d_)->required();
    necklace->add_option("--length", length_, "Number of white vertices")->required();
    necklace->add_option("--first-half", first_half_, "Colors on w_i-b_i, e.g. 1,3")->required();
    on(necklace, [this] {
      BubbleSpec spec = necklace_bubble(d_, length_, parse_ints(first_half_));
      return bubble_output(spec.graph, necklace_pairing(spec));
    });

    auto* pairing = bubble->add_subcommand("pairing", "Face-maximizing pairing of a bubble");
    pairing->add_option("--bubble", bubble_path_)->required();
    pairing->add_option("--cap", cap_, "Largest white count searched");
    on(pairing, [this] {
      ColoredGraph b = load_document(bubble_path_).graph;
      BestPairing best = best_pairing(b, cap_ > 0 ? cap_ : kDefaultPairingCap);
      Output o = bubble_output(b, best.pairing);
      o.doc["closed_faces"] = best.max_faces;
      o.doc["pairings_examined"] = best.pairings_examined;
      return o;
    });
  }

  static Output bubble_output(const ColoredGraph& b, const Pairing& pairing) {
    GraphDocument doc{b, true, pairing};
    Output o;
    o.doc = embed(graph_document_to_json(doc));
    return o;
  }

  void add_glue_commands() {
    auto* glue = app_.add_subcommand("glue", "Enumerate gluings");
    glue->require_subcommand(1);

    auto* enumerate = glue->add_subcommand("enumerate", "Connected closed gluings of b copies");
    enumerate->add_option("--bubble", bubble_path_)->required();
    enumerate->add_option("--count", count_)->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--mode", mode_)->check(CLI::IsMember({"labeled", "rooted", "unlabeled"}));
    enumerate->add_option("--cap", cap_, "Largest number of color-0 edges");
    enumerate->add_option("--threads", threads_)->check(CLI::PositiveNumber);
    on(enumerate, [this] { return enumerate_output(); });

    auto* enhancement = glue->add_subcommand("enhancement", "Fit F_max(b) over b = 1..b_max");
    enhancement->add_option("--bubble", bubble_path_)->required();
    enhancement->add_option("--b-max", count_)->required();
    enhancement->add_option("--cap", cap_);
    on(enhancement, [this] {
      ColoredGraph b = load_document(bubble_path_).graph;
      EnhancementRecord r = empirical_record(b, count_, cap_ > 0 ? cap_ : kDefaultGluingEdgeCap);
      Output o;
      o.doc = record_json(r);
      return o;
    });

    auto* series = glue->add_subcommand("melonic-series", "Melonic two-point series");
    series->add_option("--exponents", exponents_)->required();
    series->add_option("--couplings", couplings_)->required();
    series->add_option("--order", order_)->required();
    on(series, [this] {
      MelonicSeries s = melonic_g2_series(parse_ints(exponents_), parse_numbers(couplings_), order_);
      return series_output(s.g2, "lambda");
    });
  }

  Output enumerate_output() {
    GluingRequest request;
    request.bubble_types = {load_document(bubble_path_).graph};
    request.copies = {count_};
    request.mode = parse_mode(mode_);
    if (cap_ > 0) request.edge_cap = cap_;
    request.threads = threads_;
    GluingEnumeration e = enumerate_gluings(request);
    Output o;
    o.prefer_csv = true;
    std::ostringstream csv;
    csv << "graph_key,count";
    for (int c = 1; c <= e.d; ++c) csv << ",F_0" << c;
    csv << ",F,E,omega,delta\n";
    Json rows = Json::array();
    for (const GluingRecord& r : e.records) {
      csv << r.key.digest() << ',' << to_string(r.weight);
      for (int c = 1; c <= e.d; ++c) csv << ',' << r.face_per_color[c];
      csv << ',' << r.faces << ',' << e.edges << ',' << r.omega << ',' << to_string(r.delta)
          << '\n';
      std::vector<int> per(r.face_per_color.begin() + 1, r.face_per_color.end());
      rows.push_back({{"graph_key", r.key.digest()},
                      {"count", to_string(r.weight)},
                      {"matching", r.matching},
                      {"faces_per_color", std::move(per)},
                      {"F", r.faces},
                      {"omega", r.omega},
                      {"delta", to_string(r.delta)}});
    }
    o.csv = csv.str();
    o.doc = {{"mode", mode_name(e.mode)},
             {"d", e.d},
             {"copies", e.copies},
             {"E", e.edges},
             {"labeled_total", e.labeled_total},
             {"total_weight", to_string(e.total_weight)},
             {"max_faces", e.max_faces},
             {"records", std::move(rows)}};
    return o;
  }

  static Output series_output(const PowerSeries& s, const std::string& variable) {
    Output o;
    Json coeffs = Json::array();
    std::ostringstream csv;
    csv << "n,coefficient\n";
    for (int n = 0; n <= s.order(); ++n) {
      coeffs.push_back(to_string(s[n]));
      csv << n << ',' << to_string(s[n]) << '\n';
    }
    o.doc = {{"variable", variable}, {"order", s.order()}, {"coefficients", std::move(coeffs)}};
    o.csv = csv.str();
    return o;
  }

  void add_enhance_commands() {
    auto* enhance = app_.add_subcommand("enhance", "Enhancement records");
    enhance->require_subcommand(1);

    auto* inherited = enhance->add_subcommand("inherited", "Enhancement inherited from an open graph");
    inherited->add_option("--bubble", bubble_path_, "Open graph H built from parent copies")
        ->required();
    inherited->add_option("--parent-p", parent_p_)->required();
    inherited->add_option("--parent-s", parent_s_)->required();
    on(inherited, [this] {
      Output o;
      o.doc = record_json(inherited_enhancement(load_document(bubble_path_).graph, parent_p_,
                                                parse_number(parent_s_)));
      return o;
    });

    auto* slice = enhance->add_subcommand("slice", "Enhancement from a color partition");
    slice->add_option("--bubble", bubble_path_)->required();
    slice->add_option("--partition", partition_, "Color classes, e.g. 1,2,3|4,5")->required();
    slice->add_option("--slice-s", slice_s_, "Known enhancement per slice");
    on(slice, [this] {
      std::vector<std::vector<int>> classes;
      for (const std::string& part : split(partition_, '|')) classes.push_back(parse_ints(part));
      std::vector<Rational> known;
      if (!slice_s_.empty()) known = parse_numbers(slice_s_);
      Output o;
      o.doc = record_json(slice_enhancement(load_document(bubble_path_).graph, classes, known));
      return o;
    });

    auto* pairing = enhance->add_subcommand("pairing", "Enhancement candidate from a pairing");
    pairing->add_option("--bubble", bubble_path_, "Bubble, optionally with a pairing block")
        ->required();
    pairing->add_option("--verify", count_, "Check against gluings up to this many copies");
    pairing->add_option("--cap", cap_);
    on(pairing, [this] {
      GraphDocument doc = load_document(bubble_path_);
      Pairing pi = pairing_for(doc);
      EnhancementRecord r = pairing_enhancement(doc.graph, pi);
      if (count_ > 0) r = verify_enhancement(r, count_, cap_ > 0 ? cap_ : kDefaultGluingEdgeCap);
      Output o;
      o.doc = record_json(r);
      return o;
    });
  }

  Pairing pairing_for(const GraphDocument& doc) const {
    if (doc.has_pairing) return doc.pairing;
    return best_pairing(doc.graph).pairing;
  }

  void add_map_commands() {
    auto* map = app_.add_subcommand("map", "Stuffed Walsh maps");
    map->require_subcommand(1);

    auto* stuffed = map->add_subcommand("stuffed", "Stuffed Walsh map of a closed gluing");
    stuffed->add_option("--graph", graph_path_)->required();
    stuffed->add_option("--bubble", bubble_path_, "Bubble, optionally with a pairing block")
        ->required();
    on(stuffed, [this] {
      GraphDocument bubble = load_document(bubble_path_);
      StuffedWalshMap w =
          to_stuffed_map(load_document(graph_path_).graph, bubble.graph, pairing_for(bubble));
      Output o;
      o.doc["map"] = embed(map_to_json(w.map));
      Json per = Json::array();
      for (int c = 1; c <= w.d; ++c) per.push_back(walsh_face_count(w, c));
      o.doc["faces_per_color"] = std::move(per);
      o.doc["faces"] = walsh_face_count(w);
      o.doc["transport_choices"] = w.transport_choices;
      return o;
    });

    auto* project = map->add_subcommand("project", "Projected map of a closed gluing");
    project->add_option("--graph", graph_path_)->required();
    project->add_option("--bubble", bubble_path_)->required();
    on(project, [this] {
      GraphDocument bubble = load_document(bubble_path_);
      StuffedWalshMap w =
          to_stuffed_map(load_document(graph_path_).graph, bubble.graph, pairing_for(bubble));
      CombinatorialMap pm = projected_map(w);
      Output o;
      o.doc["map"] = embed(map_to_json(pm));
      o.doc["is_tree"] = is_tree(pm);
      o.doc["genus"] = pm.genus();
      return o;
    });

    auto* tree = map->add_subcommand("tree", "Random tree-projected map and its face count");
    tree->add_option("--bubble", bubble_path_)->required();
    tree->add_option("--copies", count_)->required()->check(CLI::PositiveNumber);
    tree->add_option("--seed", seed_);
    on(tree, [this] {
      GraphDocument bubble = load_document(bubble_path_);
      Pairing pi = pairing_for(bubble);
      StuffedWalshMap w = tree_walsh_map(bubble.graph, pi, count_, seed_);
      Output o;
      o.doc["map"] = embed(map_to_json(w.map));
      o.doc["faces"] = walsh_face_count(w);
      o.doc["formula"] = tree_face_count(bubble.graph, pi, count_);
      o.doc["graph"] = embed(graph_to_json(from_stuffed_map(w, bubble.graph, pi)));
      return o;
    });

    auto* dominant = map->add_subcommand("dominant", "Dominance test for a quartic colored map");
    dominant->add_option("--map", map_path_)->required();
    on(dominant, [this] {
      CombinatorialMap m = map_from_json(read_file(map_path_));
      DominantMapCheck c = is_dominant(m);
      Output o;
      o.doc = {{"dominant", c.passes},
               {"mono_edges_are_bridges", c.mono_edges_are_bridges},
               {"submaps_planar", c.submaps_planar},
               {"cycles_single_type", c.cycles_single_type},
               {"faces", quartic_face_count(m)},
               {"delta", to_string(quartic_graph_delta(m))}};
      return o;
    });
  }

  void add_gf_commands() {
    auto* gf = app_.add_subcommand("gf", "Quartic generating function");
    gf->require_subcommand(1);

    auto* series = gf->add_subcommand("series", "Series coefficients of f(t)");
    series->add_option("--k", k_)->required();
    series->add_option("--lambda", lambda_, "Omit with --bivariate");
    series->add_option("--order", order_)->required();
    series->add_flag("--csv", csv_flag_);
    series->add_flag("--bivariate", bivariate_, "Coefficients as polynomials in lambda");
    on(series, [this] {
      Output o;
      if (bivariate_) {
        auto table = quartic_series_table(parse_number(k_), order_);
        std::ostringstream csv;
        csv << "E,lambda_power,coefficient\n";
        Json rows = Json::array();
        for (std::size_t e = 0; e < table.size(); ++e) {
          Json row = Json::array();
          for (std::size_t m = 0; m < table[e].size(); ++m) {
            row.push_back(to_string(table[e][m]));
            csv << e << ',' << m << ',' << to_string(table[e][m]) << '\n';
          }
          rows.push_back(std::move(row));
        }
        o.doc = {{"k", k_}, {"order", order_}, {"table", std::move(rows)}};
        o.csv = csv.str();
      } else {
        if (lambda_.empty()) throw UsageError("--lambda is required without --bivariate");
        o = series_output(quartic_series(parse_number(k_), parse_number(lambda_), order_), "t");
      }
      o.prefer_csv = csv_flag_;
      return o;
    });

    auto* critical = gf->add_subcommand("critical", "Dominant critical point");
    critical->add_option("--k", k_)->required();
    critical->add_option("--lambda", lambda_)->required();
    on(critical, [this] {
      std::vector<CriticalPoint> points = critical_points(parse_number(k_), parse_number(lambda_));
      Output o;
      for (const CriticalPoint& p : points) {
        if (p.dominant) o.doc = point_json(p);
      }
      if (o.doc.is_null()) throw Error("no_critical_point", "no dominant critical point");
      Json all = Json::array();
      for (const CriticalPoint& p : points) all.push_back(point_json(p));
      o.doc["digits"] = precision_digits();
      o.doc["points"] = std::move(all);
      return o;
    });

    auto* exponent = gf->add_subcommand("exponent", "Singular exponent at the dominant point");
    exponent->add_option("--k", k_)->required();
    exponent->add_option("--lambda", lambda_)->required();
    on(exponent, [this] {
      ExponentEstimate e = singular_exponent(parse_number(k_), parse_number(lambda_));
      Output o;
      o.doc = {{"k", k_},
               {"lambda", lambda_},
               {"estimate", e.estimate},
               {"regime", regime_name(e.regime)},
               {"classified", e.classified},
               {"critical_regime", regime_name(e.point.regime)},
               {"t", real_json(e.point.t)},
               {"f", real_json(e.point.f)},
               {"ladder", e.ladder}};
      return o;
    });

    auto* phase = gf->add_subcommand("phase-diagram", "Regime of the dominant point on a grid");
    phase->add_option("--k-range", k_, "min:max:steps")->required();
    phase->add_option("--lambda-range", lambda_, "min:max:steps")->required();
    on(phase, [this] {
      Range kr = parse_range(k_);
      Range lr = parse_range(lambda_);
      std::vector<PhaseCell> cells = phase_diagram(kr.lo, kr.hi, kr.steps, lr.lo, lr.hi, lr.steps);
      Output o;
      o.prefer_csv = true;
      std::ostringstream csv;
      csv << "k,lambda,regime,t,f,u,conjectural\n";
      Json rows = Json::array();
      csv.precision(17);
      for (const PhaseCell& c : cells) {
        csv << to_string(c.k) << ',' << to_string(c.lambda) << ',' << regime_name(c.point.regime)
            << ',' << static_cast<double>(c.point.t) << ',' << static_cast<double>(c.point.f)
            << ',' << static_cast<double>(c.point.u) << ',' << (c.conjectural ? 1 : 0) << '\n';
        Json row = point_json(c.point);
        row["conjectural"] = c.conjectural;
        rows.push_back(std::move(row));
      }
      o.csv = csv.str();
      o.doc = {{"cells", std::move(rows)}};
      return o;
    });
  }

  CLI::App app_;
  std::optional<Output> result_;
  std::string out_path_;
  std::string format_;
  int precision_ = 0;

  std::string graph_path_;
  std::string bubble_path_;
  std::string map_path_;
  int d_ = 0;
  std::vector<std::string> insertions_;
  int length_ = 0;
  std::string first_half_;
  int cap_ = 0;
  int count_ = 0;
  std::string mode_ = "labeled";
  int threads_ = 1;
  std::string exponents_;
  std::string couplings_;
  int order_ = 0;
  int parent_p_ = 0;
  std::string parent_s_;
  std::string partition_;
  std::string slice_s_;
  std::uint64_t seed_ = 1;
  std::string k_;
  std::string lambda_;
  bool csv_flag_ = false;
  bool bivariate_ = false;
};

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Cli cli;
  return cli.run(argc, argv, out, err);
}

}  // namespace tensorcomb
