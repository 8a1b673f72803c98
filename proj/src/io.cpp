#include "mobius/io.hpp"

#include <sstream>

#include "json.hpp"

namespace mobius {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(path, std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

Vertex vertex(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
    throw ParseError(path, "expected a positive vertex number");
  }
  return static_cast<Vertex>(v.get<std::uint64_t>());
}

std::pair<Vertex, Vertex> vertex_pair(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) {
    throw ParseError(path, "expected a pair [u, v]");
  }
  return {vertex(v[0], path + "[0]"), vertex(v[1], path + "[1]")};
}

Graph read_graph(const json& spec) {
  const std::string path = "graph";
  if (spec.is_string()) {
    const auto name = spec.get<std::string>();
    try {
      if (auto builtin = builtin_graph(name)) return builtin->graph;
    } catch (const std::invalid_argument& e) {
      throw ParseError(path, e.what());
    }
    throw ParseError(path, "unknown built-in graph '" + name + "'");
  }
  if (!spec.is_object()) {
    throw ParseError(path, "expected a built-in name or an object");
  }
  const json& n = field(spec, "vertices", path);
  if (!n.is_number_unsigned() || n.get<std::uint64_t>() == 0) {
    throw ParseError(path + ".vertices", "expected a positive integer");
  }
  Graph g(n.get<std::size_t>());
  const json& edges = field(spec, "edges", path);
  if (!edges.is_array()) throw ParseError(path + ".edges", "expected a list");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = path + ".edges[" + std::to_string(i) + "]";
    auto [u, v] = vertex_pair(edges[i], at);
    try {
      g.add_edge(u, v);
    } catch (const std::invalid_argument& e) {
      throw ParseError(at, e.what());
    }
  }
  return g;
}

EdgeId lookup_edge(const Graph& g, std::pair<Vertex, Vertex> ends,
                   const std::string& path) {
  if (ends.first > g.vertex_count() || ends.second > g.vertex_count()) {
    throw ParseError(path, "vertex out of range");
  }
  auto ids = g.edges_between(ends.first, ends.second);
  if (ids.empty()) {
    throw ParseError(path, "no edge {" + std::to_string(ends.first) + "," +
                               std::to_string(ends.second) + "}");
  }
  return ids.front();
}

ordered pair_json(Vertex a, Vertex b) { return ordered::array({a, b}); }

}  // namespace

Decoration parse_decoration_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_column(text, e.byte == 0 ? 0 : e.byte - 1),
                     "invalid JSON");
  }
  if (!doc.is_object()) throw ParseError("document", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "graph" && key != "knots" && key != "knotted_around") {
      throw ParseError(key, "unknown field");
    }
  }

  Graph graph = read_graph(field(doc, "graph", "document"));
  if (!graph.is_simple()) {
    throw ParseError("graph", "decoration files need a simple graph");
  }
  Decoration d(std::move(graph));

  if (doc.contains("knots")) {
    const json& knots = doc.at("knots");
    if (!knots.is_array()) throw ParseError("knots", "expected a list");
    for (std::size_t i = 0; i < knots.size(); ++i) {
      const std::string at = "knots[" + std::to_string(i) + "]";
      const json& k = knots[i];
      if (!k.is_object()) throw ParseError(at, "expected an object");
      const EdgeId id =
          lookup_edge(d.graph(), vertex_pair(field(k, "edge", at), at + ".edge"),
                      at + ".edge");
      const json& label = field(k, "label", at);
      if (!label.is_string()) throw ParseError(at + ".label", "expected a string");
      const json& inv = field(k, "invertible", at);
      if (!inv.is_boolean()) {
        throw ParseError(at + ".invertible", "expected true or false");
      }
      std::optional<Orientation> orientation;
      if (k.contains("orientation") && !k.at("orientation").is_null()) {
        orientation = vertex_pair(k.at("orientation"), at + ".orientation");
      }
      try {
        d.add_knot(id, KnotLabel{label.get<std::string>(), inv.get<bool>()},
                   orientation);
      } catch (const std::invalid_argument& e) {
        throw ParseError(at, e.what());
      }
    }
  }

  if (doc.contains("knotted_around")) {
    const json& pairs = doc.at("knotted_around");
    if (!pairs.is_array()) throw ParseError("knotted_around", "expected a list");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string at = "knotted_around[" + std::to_string(i) + "]";
      const json& p = pairs[i];
      if (!p.is_object()) throw ParseError(at, "expected an object");
      EdgeId outer = lookup_edge(
          d.graph(), vertex_pair(field(p, "outer", at), at + ".outer"),
          at + ".outer");
      EdgeId around = lookup_edge(
          d.graph(), vertex_pair(field(p, "around", at), at + ".around"),
          at + ".around");
      d.add_knotted_around(outer, around);
    }
  }
  return d;
}

std::string decoration_to_json(const Decoration& d) {
  const Graph& g = d.graph();
  ordered edges = ordered::array();
  for (const auto& e : g.edges()) edges.push_back(pair_json(e.u, e.v));
  ordered knots = ordered::array();
  for (const auto& [id, knot] : d.knots()) {
    const Edge& e = g.edge(id);
    ordered k = {{"edge", pair_json(e.u, e.v)},
              {"label", knot.label.name},
              {"invertible", knot.label.invertible}};
    if (knot.orientation) {
      k["orientation"] =
          pair_json(knot.orientation->first, knot.orientation->second);
    }
    knots.push_back(std::move(k));
  }
  ordered around = ordered::array();
  for (const auto& pair : d.knotted_around()) {
    const Edge& a = g.edge(pair.outer);
    const Edge& b = g.edge(pair.around);
    around.push_back(
        {{"outer", pair_json(a.u, a.v)}, {"around", pair_json(b.u, b.v)}});
  }
  ordered doc = {{"graph", {{"vertices", g.vertex_count()}, {"edges", edges}}},
              {"knots", knots},
              {"knotted_around", around}};
  return doc.dump(2) + "\n";
}

std::string report_to_json(const RealizabilityReport& report) {
  ordered groups = ordered::array();
  for (const auto& g : report.groups) {
    ordered entry = {{"name", g.name.to_string()},
                  {"order", g.order},
                  {"witness", g.witness ? ordered(g.witness->name) : ordered(nullptr)}};
    groups.push_back(std::move(entry));
  }
  ordered doc = {{"n", report.n}, {"groups", groups}};
  return doc.dump(2) + "\n";
}

std::string report_to_text(const RealizabilityReport& report) {
  std::ostringstream out;
  out << "Realizable groups for M_" << report.n << " ("
      << report.groups.size() << " isomorphism classes)\n";
  for (const auto& g : report.groups) {
    out << "  " << g.name.display() << "  order " << g.order;
    if (g.witness) {
      out << "  witness " << g.witness->name << " [" << g.witness->anchor
          << "]";
    } else {
      out << "  no witness modeled";
    }
    out << "  (" << g.provenance << ")\n";
  }
  return out.str();
}

std::string group_to_json(const PermGroup& g, const GroupName& name) {
  ordered gens = ordered::array();
  for (const auto& s : g.generators()) gens.push_back(to_cycle_string(s));
  ordered doc = {{"order", g.order()},
              {"name", name.to_string()},
              {"degree", g.degree()},
              {"generators", gens}};
  if (name.fingerprint) doc["fingerprint"] = name.fingerprint->to_string();
  return doc.dump(2) + "\n";
}

}  // namespace mobius
