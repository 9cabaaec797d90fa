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


#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vcpmas/errors.hpp"
#include "vcpmas/game.hpp"
#include "vcpmas/graph.hpp"
#include "vcpmas/io.hpp"
#include "vcpmas/pmas.hpp"
#include "vcpmas/preference.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using vcpmas::Coalition;
using vcpmas::EdgeId;
using vcpmas::Graph;
using GraphPtr = std::shared_ptr<const Graph>;

py::object fraction(const vcpmas::Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.numerator(), r.denominator());
}

Coalition coalition_or_all(const Graph& g, const std::optional<std::vector<EdgeId>>& s) {
  if (!s) return g.players();
  Coalition c(*s);
  if (c.bound() > g.edge_count()) {
    throw vcpmas::ContractViolation("coalition names an edge beyond " +
                                    std::to_string(g.edge_count() - 1));
  }
  return c;
}

py::dict allocation_dict(const vcpmas::CostAllocation& a) {
  py::dict out;
  for (std::size_t k = 0; k < a.members().size(); ++k) {
    out[py::int_(a.members()[k])] = fraction(a.values()[k]);
  }
  return out;
}

std::vector<std::string> labels(const Graph& g, const std::vector<vcpmas::VertexId>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.label(v));
  return out;
}

nlohmann::json parse_doc(const py::object& doc) {
  const std::string text = py::isinstance<py::str>(doc)
                               ? doc.cast<std::string>()
                               : py::module_::import("json").attr("dumps")(doc).cast<std::string>();
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw vcpmas::FormatError(e.what());
  }
}

// Accepts None, a JSON string or a dict of label -> edge list.
std::optional<vcpmas::PreferenceSystem> prefs_from(const GraphPtr& g, const py::object& prefs) {
  if (prefs.is_none()) return std::nullopt;
  return vcpmas::preferences_from_json(parse_doc(prefs), g);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Population monotonic allocation schemes for vertex cover games";

  auto error = py::register_exception<vcpmas::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<vcpmas::FormatError>(m, "FormatError", error);
  py::register_exception<vcpmas::CapExceeded>(m, "CapExceeded", error);
  py::register_exception<vcpmas::ContractViolation>(m, "ContractViolation", error);
  py::register_exception<vcpmas::NotPopulationMonotonic>(m, "NotPopulationMonotonic", error);
  py::register_exception<vcpmas::NotBalanced>(m, "NotBalanced", error);
  py::register_exception<vcpmas::MalformedScheme>(m, "MalformedScheme", error);
  py::register_exception<vcpmas::UnsupportedInstance>(m, "UnsupportedInstance", error);

  py::class_<Graph, std::shared_ptr<Graph>>(m, "Graph")
      .def(py::init([](const std::vector<vcpmas::LabeledEdge>& edges) {
             return std::make_shared<Graph>(Graph::from_edges(edges));
           }),
           "edges"_a)
      .def_static("parse", [](const std::string& text) {
        return std::make_shared<Graph>(vcpmas::parse_graph(text));
      })
      .def_static("load", [](const std::string& path) {
        return std::make_shared<Graph>(vcpmas::load_graph(path));
      })
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("labels", &Graph::labels)
      .def_property_readonly("edges", [](const Graph& g) {
        std::vector<vcpmas::LabeledEdge> out;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
          out.emplace_back(g.label(g.endpoints(e).first), g.label(g.endpoints(e).second));
        }
        return out;
      })
      .def("__str__", &vcpmas::format_graph)
      .def("__repr__", [](const Graph& g) {
        return "<Graph with " + std::to_string(g.vertex_count()) + " vertices and " +
               std::to_string(g.edge_count()) + " edges>";
      });

  m.def("gamma", [](const GraphPtr& g, std::optional<std::vector<EdgeId>> s) {
    return vcpmas::vertex_cover_size(*g, coalition_or_all(*g, s));
  }, "graph"_a, "coalition"_a = py::none(), "Vertex cover number of G[S].");

  m.def("matching_number", [](const GraphPtr& g, std::optional<std::vector<EdgeId>> s) {
    return vcpmas::matching_size(*g, coalition_or_all(*g, s));
  }, "graph"_a, "coalition"_a = py::none());

  m.def("recognize", [](const GraphPtr& g) {
    const auto r = vcpmas::recognize_population_monotonic(*g);
    py::dict out("population_monotonic"_a = r.population_monotonic);
    out["pattern"] = r.pattern ? py::object(py::str(std::string(vcpmas::pattern_name(*r.pattern))))
                               : py::object(py::none());
    out["witness"] = labels(*g, r.witness);
    return out;
  }, "graph"_a);

  m.def("classify", [](const GraphPtr& g) {
    const auto cls = vcpmas::classify_components(g);
    py::list out;
    for (const auto& c : cls.components) {
      py::dict part("kind"_a = std::string(vcpmas::kind_name(c.kind)),
                    "edges"_a = c.edges.members(), "cover"_a = labels(*g, c.cover));
      part["free_rider"] = c.free_rider ? py::object(py::int_(*c.free_rider))
                                        : py::object(py::none());
      out.append(part);
    }
    return out;
  }, "graph"_a);

  m.def("construct", [](const GraphPtr& g, std::optional<std::vector<EdgeId>> s) {
    return allocation_dict(vcpmas::construct_pmas(g).at(coalition_or_all(*g, s)));
  }, "graph"_a, "coalition"_a = py::none(),
     "Payments of the constructed PMAS on one coalition (default: every edge).");

  m.def("scheme_json", [](const GraphPtr& g, const py::object& prefs,
                          std::size_t max_edges) {
    const auto ps = prefs_from(g, prefs);
    const auto scheme = ps ? vcpmas::scheme_from_preferences(*ps) : vcpmas::construct_pmas(g);
    return vcpmas::scheme_to_json(scheme, max_edges).dump();
  }, "graph"_a, "prefs"_a = py::none(), "max_edges"_a = 16,
     "Full scheme table as JSON, from the construction or from preferences.");

  m.def("verify", [](const GraphPtr& g, const py::object& scheme, std::size_t max_edges) {
    vcpmas::GameLimits limits;
    limits.max_exhaustive_edges = max_edges;
    const vcpmas::VertexCoverGame game(g, limits);
    game.require_players_at_most(max_edges, "verify");
    const auto parsed = vcpmas::scheme_from_json(parse_doc(scheme), g->edge_count());
    const auto report = vcpmas::verify_pmas(game, parsed);
    return py::make_tuple(report.ok, report.ok ? py::object(py::none())
                                               : py::object(py::str(report.first()->describe())));
  }, "graph"_a, "scheme"_a, "max_edges"_a = 16,
     "Checks a scheme table (JSON string or dict); returns (ok, first violation or None).");

  m.def("count_integral", [](const GraphPtr& g) {
    return py::int_(py::str(vcpmas::count_integral_pmas(*g).str()));
  }, "graph"_a);

  m.def("enumerate_integral", [](const GraphPtr& g, std::size_t max_schemes) {
    vcpmas::IntegralPmasEnumerator stream(g, max_schemes);
    py::list out;
    while (auto ps = stream.next_preferences()) {
      out.append(py::module_::import("json").attr("loads")(
          vcpmas::preferences_to_json(*ps).dump()));
    }
    return py::make_tuple(out, stream.truncated());
  }, "graph"_a, "max_schemes"_a = 10000,
     "Preference systems of every integral PMAS, and whether the cap cut the list.");

  m.def("stable_match", [](const GraphPtr& g, const py::object& prefs,
                           std::optional<std::vector<EdgeId>> s) {
    auto ps = prefs_from(g, prefs);
    if (!ps) ps.emplace(vcpmas::canonical_preferences(vcpmas::classify_components(g)));
    return vcpmas::gale_shapley(*ps, coalition_or_all(*g, s)).members();
  }, "graph"_a, "prefs"_a = py::none(), "coalition"_a = py::none());
}
