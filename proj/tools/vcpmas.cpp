// Copyright 2026 The vcpmas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end: reads an edge-list graph and reports on its vertex
// cover game. Exit status is 0 for success or a true verdict, 1 for a false
// verdict and 2 for errors.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcpmas/allocation.hpp"
#include "vcpmas/errors.hpp"
#include "vcpmas/game.hpp"
#include "vcpmas/graph.hpp"
#include "vcpmas/io.hpp"
#include "vcpmas/pmas.hpp"
#include "vcpmas/preference.hpp"

namespace {

using vcpmas::Coalition;
using vcpmas::Graph;
using vcpmas::ordered_json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

enum class Format { kJson, kText };

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  std::optional<std::string> coalition;
  std::optional<std::string> prefs;
  std::optional<std::string> scheme;
  std::optional<std::string> format;
  bool materialize = false;
  std::size_t max_edges = 16;
  std::size_t max_enumerate = 10000;
};

const std::map<std::string, Format> kDefaultFormat = {
    {"classify", Format::kText},  {"game-info", Format::kText},
    {"construct", Format::kJson}, {"verify", Format::kText},
    {"enumerate", Format::kJson}, {"count", Format::kText},
    {"stable-match", Format::kJson},
};

struct Context {
  const RunConfig& config;
  Format format;
  std::shared_ptr<const Graph> graph;
  std::ostream& out;

  bool json() const { return format == Format::kJson; }

  vcpmas::GameLimits limits() const {
    vcpmas::GameLimits l;
    l.max_exhaustive_edges = config.max_edges;
    return l;
  }

  Coalition coalition() const {
    if (!config.coalition) return graph->players();
    Coalition s = Coalition::parse(*config.coalition);
    if (s.bound() > graph->edge_count()) {
      throw vcpmas::FormatError("--coalition names an edge beyond " +
                                std::to_string(graph->edge_count() - 1));
    }
    return s;
  }

  std::optional<vcpmas::PreferenceSystem> preferences() const {
    if (!config.prefs) return std::nullopt;
    return vcpmas::preferences_from_json(vcpmas::load_json(*config.prefs), graph);
  }
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::shared_ptr<const Graph> read_graph(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::make_shared<const Graph>(vcpmas::parse_graph(read_all(std::cin)));
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw vcpmas::Error("cannot open '" + path + "'");
  try {
    return std::make_shared<const Graph>(vcpmas::parse_graph(read_all(in)));
  } catch (const vcpmas::FormatError& e) {
    throw vcpmas::FormatError(path + ": " + e.what());
  }
}

std::string labels(const Graph& g, const std::vector<vcpmas::VertexId>& vs,
                   const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) out += sep;
    out += g.label(vs[k]);
  }
  return out;
}

ordered_json label_array(const Graph& g, const std::vector<vcpmas::VertexId>& vs) {
  ordered_json out = ordered_json::array();
  for (auto v : vs) out.push_back(g.label(v));
  return out;
}

std::string edge_list(const std::vector<vcpmas::EdgeId>& es) {
  std::string out;
  for (std::size_t k = 0; k < es.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(es[k]);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void emit(const Context& ctx, const ordered_json& doc) {
  ctx.out << doc.dump() << '\n';
}

// classify

std::string plural(vcpmas::ComponentKind kind, std::size_t n) {
  const std::string name(vcpmas::kind_name(kind));
  if (n == 1 || kind == vcpmas::ComponentKind::kPisces) return name;
  return name + "s";
}

int cmd_classify(const Context& ctx) {
  const Graph& g = *ctx.graph;
  const vcpmas::Recognition rec = vcpmas::recognize_population_monotonic(g);
  if (!rec.population_monotonic) {
    const std::string name(vcpmas::pattern_name(*rec.pattern));
    if (ctx.json()) {
      ordered_json doc;
      doc["population_monotonic"] = false;
      doc["witness"] = {{"pattern", name},
                        {"vertices", label_array(g, rec.witness)}};
      emit(ctx, doc);
    } else {
      ctx.out << "population monotonic: no; witness " << name << " on {"
              << labels(g, rec.witness, ",") << "}\n";
    }
    return kFalse;
  }

  const vcpmas::Classification cls = vcpmas::classify_components(ctx.graph);
  const auto& riders = cls.cover.free_riders();
  if (ctx.json()) {
    ordered_json doc;
    doc["population_monotonic"] = true;
    ordered_json parts = ordered_json::array();
    for (const auto& c : cls.components) {
      ordered_json part;
      part["kind"] = std::string(vcpmas::kind_name(c.kind));
      part["edges"] = c.edges.members();
      part["cover"] = label_array(g, c.cover);
      part["free_rider"] =
          c.free_rider ? ordered_json(*c.free_rider) : ordered_json(nullptr);
      ordered_json owned = ordered_json::object();
      for (std::size_t k = 0; k < c.cover.size(); ++k) {
        owned[g.label(c.cover[k])] = c.owned_edges[k];
      }
      part["owned_edges"] = owned;
      parts.push_back(part);
    }
    doc["components"] = parts;
    doc["cover"] = label_array(g, cls.cover.vertices());
    doc["free_riders"] = riders;
    emit(ctx, doc);
    return kOk;
  }

  std::map<vcpmas::ComponentKind, std::size_t> counts;
  for (const auto& c : cls.components) ++counts[c.kind];
  std::string summary;
  for (auto kind : {vcpmas::ComponentKind::kStar, vcpmas::ComponentKind::kPisces,
                    vcpmas::ComponentKind::kSingleEdge}) {
    if (!counts.count(kind)) continue;
    if (!summary.empty()) summary += ", ";
    summary += std::to_string(counts[kind]) + " " + plural(kind, counts[kind]);
  }
  ctx.out << "population monotonic: yes; " << summary;
  if (riders.size() == 1) {
    ctx.out << "; free rider = edge " << riders.front();
  } else if (riders.size() > 1) {
    ctx.out << "; free riders = edges " << edge_list(riders);
  }
  ctx.out << '\n';
  for (const auto& c : cls.components) {
    ctx.out << "  " << vcpmas::kind_name(c.kind) << " {" << c.edges.key() << "}: ";
    if (c.kind == vcpmas::ComponentKind::kPisces) {
      ctx.out << "bases " << labels(g, c.cover, ", ") << "; free rider edge "
              << *c.free_rider;
    } else {
      ctx.out << "center " << g.label(c.cover.front());
    }
    ctx.out << '\n';
  }
  return kOk;
}

// game-info

struct Field {
  std::string name;
  std::optional<ordered_json> value;
  std::string note;
};

int cmd_game_info(const Context& ctx) {
  const Graph& g = *ctx.graph;
  const vcpmas::VertexCoverGame game(ctx.graph, ctx.limits());
  const Coalition all = g.players();
  std::vector<Field> fields;
  std::vector<std::string> capped;

  auto guarded = [&](const std::string& name, auto&& compute) -> std::optional<ordered_json> {
    try {
      return ordered_json(compute());
    } catch (const vcpmas::CapExceeded& e) {
      capped.push_back(name);
      return std::nullopt;
    }
  };

  fields.push_back({"vertices", ordered_json(g.vertex_count()), ""});
  fields.push_back({"edges", ordered_json(g.edge_count()), ""});
  const std::size_t nu = vcpmas::matching_size(g, all);
  fields.push_back({"nu", ordered_json(nu), ""});
  const auto tau = guarded("tau", [&] { return game.gamma(all); });
  fields.push_back({"tau", tau, ""});
  const bool bipartite = vcpmas::is_bipartite(g);
  fields.push_back({"bipartite", ordered_json(bipartite), ""});
  std::optional<ordered_json> balanced;
  if (tau) balanced = ordered_json(nu == tau->get<std::size_t>());
  else capped.push_back("balanced");
  fields.push_back({"balanced", balanced,
                    balanced && balanced->get<bool>() ? "nu = tau" : "nu < tau"});
  fields.push_back({"totally_balanced", ordered_json(bipartite),
                    bipartite ? "bipartite" : "odd cycle"});

  std::string sub_note = "no K3 and no P4";
  for (auto p : {vcpmas::Pattern::kK3, vcpmas::Pattern::kP4}) {
    if (auto w = vcpmas::find_forbidden_subgraph(g, p)) {
      sub_note = "contains " + std::string(vcpmas::pattern_name(p)) + " on {" +
                 labels(g, *w, ",") + "}";
      break;
    }
  }
  fields.push_back({"submodular", ordered_json(vcpmas::is_submodular_graph(g)),
                    sub_note});
  const auto monotone = guarded("monotone", [&] {
    return vcpmas::is_monotone_game(game).holds;
  });
  fields.push_back({"monotone", monotone, "every covering pair"});
  const vcpmas::Recognition rec = vcpmas::recognize_population_monotonic(g);
  std::string pm_note = "every component is a tree of diameter at most 3";
  if (!rec.population_monotonic) {
    pm_note = "contains " + std::string(vcpmas::pattern_name(*rec.pattern)) +
              " on {" + labels(g, rec.witness, ",") + "}";
  }
  fields.push_back({"population_monotonic", ordered_json(rec.population_monotonic),
                    pm_note});

  if (ctx.json()) {
    ordered_json doc;
    for (const auto& f : fields) doc[f.name] = f.value ? *f.value : ordered_json(nullptr);
    doc["capped"] = capped;
    emit(ctx, doc);
    return kOk;
  }
  for (const auto& f : fields) {
    std::string name = f.name;
    for (auto& ch : name) if (ch == '_') ch = ' ';
    ctx.out << name << ": ";
    if (!f.value) {
      ctx.out << "n/a (cap exceeded)";
    } else if (f.value->is_boolean()) {
      ctx.out << yes_no(f.value->get<bool>());
    } else {
      ctx.out << f.value->dump();
    }
    if (f.value && !f.note.empty()) ctx.out << " (" << f.note << ")";
    ctx.out << '\n';
  }
  return kOk;
}

// construct

void write_allocation_text(const Context& ctx, const vcpmas::CostAllocation& a) {
  ctx.out << "{" << a.coalition().key() << "}:";
  for (std::size_t k = 0; k < a.members().size(); ++k) {
    ctx.out << ' ' << a.members()[k] << '=' << vcpmas::to_string(a.values()[k]);
  }
  ctx.out << '\n';
}

vcpmas::AllocationScheme scheme_for(const Context& ctx) {
  if (auto ps = ctx.preferences()) return vcpmas::scheme_from_preferences(*ps);
  return vcpmas::construct_pmas(ctx.graph);
}

int cmd_construct(const Context& ctx) {
  const vcpmas::AllocationScheme scheme = scheme_for(ctx);
  if (ctx.config.materialize) {
    if (ctx.config.coalition) {
      throw vcpmas::Error("--materialize and --coalition are exclusive");
    }
    const auto table = scheme.materialize(ctx.config.max_edges);
    if (ctx.json()) {
      emit(ctx, vcpmas::scheme_to_json(table, ctx.config.max_edges));
    } else {
      for (const auto& [s, a] : table.table()) write_allocation_text(ctx, a);
    }
    return kOk;
  }
  const vcpmas::CostAllocation a = scheme.at(ctx.coalition());
  if (ctx.json()) {
    emit(ctx, vcpmas::allocation_to_json(a));
  } else {
    write_allocation_text(ctx, a);
  }
  return kOk;
}

// verify

std::string kind_key(vcpmas::Violation::Kind kind) {
  return kind == vcpmas::Violation::Kind::kEfficiency ? "efficiency"
                                                      : "monotonicity";
}

int cmd_verify(const Context& ctx) {
  const vcpmas::VertexCoverGame game(ctx.graph, ctx.limits());
  game.require_players_at_most(ctx.config.max_edges, "verify");
  const vcpmas::AllocationScheme scheme =
      ctx.config.scheme
          ? vcpmas::scheme_from_json(vcpmas::load_json(*ctx.config.scheme),
                                     ctx.graph->edge_count())
          : scheme_for(ctx);
  const vcpmas::PmasReport report = vcpmas::verify_pmas(game, scheme);
  if (ctx.json()) {
    ordered_json doc;
    doc["pmas"] = report.ok;
    ordered_json vs = ordered_json::array();
    for (const auto& v : report.violations) {
      ordered_json item;
      item["kind"] = kind_key(v.kind);
      item["coalition"] = v.coalition.key();
      if (v.superset) item["superset"] = v.superset->key();
      if (v.edge) item["edge"] = *v.edge;
      item["lhs"] = vcpmas::to_string(v.lhs);
      item["rhs"] = vcpmas::to_string(v.rhs);
      vs.push_back(item);
    }
    doc["violations"] = vs;
    emit(ctx, doc);
  } else if (report.ok) {
    ctx.out << "pmas: yes\n";
  } else {
    ctx.out << "pmas: no; " << report.first()->describe() << '\n';
  }
  return report.ok ? kOk : kFalse;
}

// enumerate

int cmd_enumerate(const Context& ctx) {
  vcpmas::IntegralPmasEnumerator stream(ctx.graph, ctx.config.max_enumerate);
  const Coalition s = ctx.coalition();
  std::size_t index = 0;
  while (auto item = stream.next()) {
    if (ctx.json()) {
      ordered_json line;
      line["index"] = index;
      line["preferences"] = vcpmas::preferences_to_json(item->preferences);
      if (ctx.config.materialize) {
        line["scheme"] = vcpmas::scheme_to_json(item->scheme, ctx.config.max_edges);
      } else {
        line["allocation"] = vcpmas::allocation_to_json(item->scheme.at(s));
      }
      emit(ctx, line);
    } else {
      ctx.out << '#' << index;
      const ordered_json prefs = vcpmas::preferences_to_json(item->preferences);
      for (const auto& [label, order] : prefs.items()) {
        ctx.out << ' ' << label << ':' << order.dump();
      }
      ctx.out << '\n';
    }
    ++index;
  }
  if (stream.truncated()) {
    if (ctx.json()) {
      emit(ctx, ordered_json{{"truncated", true}});
    } else {
      ctx.out << "truncated after " << index << " schemes\n";
    }
  }
  return kOk;
}

// count

int cmd_count(const Context& ctx) {
  const std::string n = vcpmas::count_integral_pmas(*ctx.graph).str();
  if (ctx.json()) {
    ctx.out << "{\"count\":" << n << "}\n";
  } else {
    ctx.out << n << '\n';
  }
  return kOk;
}

// stable-match

int cmd_stable_match(const Context& ctx) {
  std::optional<vcpmas::PreferenceSystem> ps = ctx.preferences();
  if (!ps) {
    ps.emplace(vcpmas::canonical_preferences(vcpmas::classify_components(ctx.graph)));
  }
  const Coalition s = ctx.coalition();
  const Coalition m = vcpmas::gale_shapley(*ps, s);
  const bool stable = vcpmas::is_stable(*ps, s, m).holds;
  if (ctx.json()) {
    ordered_json doc;
    doc["coalition"] = s.members();
    doc["matching"] = m.members();
    doc["size"] = m.size();
    doc["stable"] = stable;
    emit(ctx, doc);
  } else {
    ctx.out << "stable matching on {" << s.key() << "}: {" << m.key() << "}\n";
  }
  return stable ? kOk : kFalse;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  using Handler = int (*)(const Context&);
  static const std::map<std::string, Handler> handlers = {
      {"classify", cmd_classify},   {"game-info", cmd_game_info},
      {"construct", cmd_construct}, {"verify", cmd_verify},
      {"enumerate", cmd_enumerate}, {"count", cmd_count},
      {"stable-match", cmd_stable_match},
  };
  Format format = kDefaultFormat.at(config.command);
  if (config.format) format = *config.format == "json" ? Format::kJson : Format::kText;
  const Context ctx{config, format, read_graph(config.input), out};
  return handlers.at(config.command)(ctx);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Population monotonic allocation schemes for vertex cover games"};
  app.set_version_flag("--version", "vcpmas 0.1.0");

  std::vector<std::string> commands;
  for (const auto& [name, f] : kDefaultFormat) commands.push_back(name);
  app.add_option("command", config.command,
                 "classify | game-info | construct | verify | enumerate | count | "
                 "stable-match")
      ->required()
      ->check(CLI::IsMember(commands));
  app.add_option("-i,--input", config.input, "Edge-list graph file ('-' for stdin)");
  app.add_option("-o,--output", config.output, "Write the result here instead of stdout");
  app.add_option("--coalition", config.coalition,
                 "Comma-separated edge indices; default is every edge");
  app.add_option("--prefs", config.prefs, "Preference system (JSON)");
  app.add_option("--scheme", config.scheme, "Scheme table to verify (JSON)");
  app.add_flag("--materialize", config.materialize, "Emit the whole scheme table");
  app.add_option("--max-edges", config.max_edges,
                 "Largest edge count for exhaustive work")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-enumerate", config.max_enumerate,
                 "Largest number of enumerated schemes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", config.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  }

  std::ostringstream buffer;
  int rc = kError;
  try {
    rc = dispatch(config, buffer);
  } catch (const std::exception& e) {
    std::cerr << "vcpmas " << config.command << ": " << e.what() << '\n';
    return kError;
  }
  if (config.output.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream out(config.output, std::ios::binary);
    out << buffer.str();
    if (!out) {
      std::cerr << "vcpmas: cannot write '" << config.output << "'\n";
      return kError;
    }
  }
  return rc;
}
