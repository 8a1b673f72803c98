#include "mobius/decoration.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "mobius/admissible.hpp"

namespace mobius {

namespace {

std::string edge_text(const Graph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  return "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

std::size_t shared_vertices(const Edge& a, const Edge& b) {
  std::size_t count = 0;
  if (a.u == b.u || a.u == b.v) ++count;
  if (a.v == b.u || a.v == b.v) ++count;
  return count;
}

}  // namespace

Decoration& Decoration::add_knot(EdgeId edge, KnotLabel label,
                                 std::optional<Orientation> orientation) {
  if (edge >= graph_.edges().size()) {
    throw std::invalid_argument("no edge with id " + std::to_string(edge));
  }
  if (knots_.count(edge)) {
    throw std::invalid_argument(edge_text(graph_, edge) +
                                " already carries a knot");
  }
  knots_.emplace(edge, EdgeKnot{std::move(label), orientation});
  return *this;
}

Decoration& Decoration::add_knot(Vertex u, Vertex v, KnotLabel label,
                                 std::optional<Orientation> orientation) {
  return add_knot(graph_.edge_between(u, v), std::move(label), orientation);
}

Decoration& Decoration::add_knotted_around(EdgeId outer, EdgeId around) {
  if (outer >= graph_.edges().size() || around >= graph_.edges().size()) {
    throw std::invalid_argument("knotted-around pair names an unknown edge");
  }
  knotted_around_.insert({outer, around});
  return *this;
}

Decoration& Decoration::add_knotted_around(std::pair<Vertex, Vertex> outer,
                                           std::pair<Vertex, Vertex> around) {
  return add_knotted_around(graph_.edge_between(outer.first, outer.second),
                            graph_.edge_between(around.first, around.second));
}

Decoration Decoration::relabeled(const Permutation& pi) const {
  Decoration out(graph_.relabeled(pi));
  for (const auto& [id, knot] : knots_) {
    EdgeKnot moved = knot;
    if (moved.orientation) {
      moved.orientation = Orientation{pi(moved.orientation->first),
                                      pi(moved.orientation->second)};
    }
    out.knots_.emplace(id, std::move(moved));
  }
  out.knotted_around_ = knotted_around_;
  return out;
}

std::vector<std::string> validate(const Decoration& d) {
  std::vector<std::string> problems;
  const Graph& g = d.graph();
  std::map<std::string, bool> invertibility;
  for (const auto& [id, knot] : d.knots()) {
    const Edge& e = g.edge(id);
    const std::string where = edge_text(g, id);
    auto [it, inserted] =
        invertibility.emplace(knot.label.name, knot.label.invertible);
    if (!inserted && it->second != knot.label.invertible) {
      problems.push_back(where + ": label '" + knot.label.name +
                         "' has inconsistent invertibility");
    }
    if (knot.label.invertible && knot.orientation) {
      problems.push_back(where + ": orientation on invertible knot");
    }
    if (!knot.label.invertible && !knot.orientation) {
      problems.push_back(where + ": missing orientation");
    }
    if (knot.orientation) {
      auto [tail, head] = *knot.orientation;
      if (!e.joins(tail, head)) {
        problems.push_back(where + ": orientation (" + std::to_string(tail) +
                           "," + std::to_string(head) +
                           ") does not match the edge endpoints");
      }
    }
  }
  for (const auto& pair : d.knotted_around()) {
    const std::string where =
        edge_text(g, pair.outer) + " around " + edge_text(g, pair.around);
    if (pair.outer == pair.around) {
      problems.push_back(where + ": edge knotted around itself");
      continue;
    }
    switch (shared_vertices(g.edge(pair.outer), g.edge(pair.around))) {
      case 0:
        problems.push_back(where + ": no shared vertex");
        break;
      case 1:
        break;
      default:
        problems.push_back(where + ": parallel edges share both endpoints");
    }
    for (EdgeId id : {pair.outer, pair.around}) {
      const Edge& e = g.edge(id);
      if (g.multiplicity(e.u, e.v) > 1) {
        problems.push_back(where + ": " + edge_text(g, id) +
                           " has a parallel twin");
      }
    }
  }
  return problems;
}

namespace {

// What an automorphism sees of an edge: its knot label and, for
// non-invertible knots, the orientation after mapping through `sigma`.
using Signature = std::tuple<bool, std::string, bool, Vertex, Vertex>;

Signature signature(const Decoration& d, EdgeId id, const Permutation& sigma) {
  auto it = d.knots().find(id);
  if (it == d.knots().end()) return {false, "", false, 0, 0};
  const EdgeKnot& knot = it->second;
  Vertex tail = 0, head = 0;
  if (knot.orientation) {
    tail = sigma(knot.orientation->first);
    head = sigma(knot.orientation->second);
  }
  return {true, knot.label.name, knot.label.invertible, tail, head};
}

bool respects(const Decoration& d, const Permutation& sigma) {
  const Graph& g = d.graph();
  const Permutation identity(g.vertex_count());
  // Knots, compared bundle by bundle so parallel edges are handled.
  std::set<std::pair<Vertex, Vertex>> bundles;
  for (const auto& e : g.edges()) {
    bundles.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  for (auto [u, v] : bundles) {
    std::vector<Signature> mapped, target;
    for (EdgeId id : g.edges_between(u, v)) {
      mapped.push_back(signature(d, id, sigma));
    }
    for (EdgeId id : g.edges_between(sigma(u), sigma(v))) {
      target.push_back(signature(d, id, identity));
    }
    std::sort(mapped.begin(), mapped.end());
    std::sort(target.begin(), target.end());
    if (mapped != target) return false;
  }
  // Knotted-around pairs involve simple edges only (validate enforces it).
  for (const auto& pair : d.knotted_around()) {
    const Edge& a = g.edge(pair.outer);
    const Edge& b = g.edge(pair.around);
    KnottedAround image{g.edge_between(sigma(a.u), sigma(a.v)),
                        g.edge_between(sigma(b.u), sigma(b.v))};
    if (!d.knotted_around().count(image)) return false;
  }
  return true;
}

void require_valid(const Decoration& d) {
  auto problems = validate(d);
  if (problems.empty()) return;
  std::string message = "invalid decoration:";
  for (const auto& p : problems) message += "\n  " + p;
  throw std::invalid_argument(message);
}

bool is_k33(const Graph& g) {
  if (g.vertex_count() != 6 || g.edges().size() != 9) return false;
  for (Vertex i = 1; i <= 3; ++i) {
    for (Vertex j = 4; j <= 6; ++j) {
      if (g.multiplicity(i, j) != 1) return false;
    }
  }
  return true;
}

}  // namespace

PermGroup stabilizer(const Decoration& d) {
  require_valid(d);
  const PermGroup full = automorphisms(d.graph());
  std::vector<Permutation> kept;
  for (const auto& sigma : full.elements()) {
    if (respects(d, sigma)) kept.push_back(sigma);
  }
  return PermGroup::from_closed_elements(std::move(kept));
}

PermGroup refined_upper_bound(const Decoration& d) {
  if (!is_k33(d.graph())) {
    throw std::invalid_argument(
        "refined_upper_bound is only defined for K_{3,3}");
  }
  return intersection(stabilizer(d), admissible_subgroup());
}

PermGroup evaluate(const CatalogEntry& entry) {
  return entry.evaluation == Evaluation::RefinedBound
             ? refined_upper_bound(entry.decoration)
             : stabilizer(entry.decoration);
}

namespace {

KnotLabel invertible(std::string name) { return {std::move(name), true}; }
KnotLabel non_invertible(std::string name) { return {std::move(name), false}; }

// Hexagon 1, 6, 2, 4, 3, 5 of K_{3,3}, edges listed in traversal order.
const std::vector<Orientation> kHexagon = {{1, 6}, {6, 2}, {2, 4},
                                           {4, 3}, {3, 5}, {5, 1}};
const std::vector<Orientation> kRungsInward = {{4, 1}, {5, 2}, {6, 3}};

Decoration bare_k33() { return Decoration(k33().graph); }

Decoration oriented_rungs() {
  Decoration d = bare_k33();
  for (auto [tail, head] : kRungsInward) {
    d.add_knot(tail, head, non_invertible("R"), Orientation{tail, head});
  }
  return d;
}

void add_inward_knots(Decoration& d) {
  for (Vertex a = 4; a <= 6; ++a) {
    for (Vertex x = 1; x <= 3; ++x) {
      d.add_knot(a, x, non_invertible("N"), Orientation{a, x});
    }
  }
}

void add_vertex_twists(Decoration& d) {
  for (Vertex x = 1; x <= 3; ++x) {
    d.add_knotted_around({x, 4}, {x, 5});
    d.add_knotted_around({x, 5}, {x, 6});
    d.add_knotted_around({x, 6}, {x, 4});
  }
  for (Vertex a = 4; a <= 6; ++a) {
    d.add_knotted_around({a, 1}, {a, 2});
    d.add_knotted_around({a, 2}, {a, 3});
    d.add_knotted_around({a, 3}, {a, 1});
  }
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  auto add = [&](std::string name, Decoration d, GroupName expected,
                 std::string anchor, Evaluation how = Evaluation::Stabilizer) {
    entries.push_back({std::move(name), std::move(d), std::move(expected),
                       std::move(anchor), how});
  };

  {
    Decoration d = bare_k33();
    for (auto [u, v] : kHexagon) d.add_knot(u, v, invertible("A"));
    add("hex-D6", std::move(d), GroupName::dihedral(6),
        "hexagon: same invertible knot on all six hexagon edges");
  }
  {
    Decoration d = bare_k33();
    for (auto [u, v] : kHexagon) {
      d.add_knot(u, v, non_invertible("A"), Orientation{u, v});
    }
    add("hex-Z6", std::move(d), GroupName::cyclic(6),
        "hexagon: same non-invertible knot on all six hexagon edges, "
        "oriented around the hexagon");
  }
  add("hex-D3", oriented_rungs(), GroupName::dihedral(3),
      "hexagon: non-invertible knots on the rungs, oriented 4->1, 5->2, 6->3");
  {
    Decoration d = oriented_rungs();
    for (std::size_t i = 0; i < kHexagon.size(); i += 2) {
      auto [u, v] = kHexagon[i];
      d.add_knot(u, v, non_invertible("H"), Orientation{u, v});
    }
    add("hex-Z3", std::move(d), GroupName::cyclic(3),
        "hexagon: oriented rung knots plus non-invertible knots on every "
        "other hexagon edge");
  }
  {
    Decoration d = bare_k33();
    for (auto [u, v] : kHexagon) {
      bool special = (u == 5 && v == 1) || (u == 2 && v == 4);
      d.add_knot(u, v, invertible(special ? "A" : "B"));
    }
    add("hex-D2", std::move(d), GroupName::dihedral(2),
        "hexagon: one invertible knot on edges 15 and 24, another on the "
        "remaining hexagon edges");
  }
  {
    Decoration d = bare_k33();
    const char* labels[] = {"A", "B", "C", "A", "B", "C"};
    for (std::size_t i = 0; i < kHexagon.size(); ++i) {
      d.add_knot(kHexagon[i].first, kHexagon[i].second, invertible(labels[i]));
    }
    add("hex-Z2", std::move(d), GroupName::cyclic(2),
        "hexagon: antipodal hexagon edges share an invertible knot, three "
        "knot types in all");
  }
  add("fan-D3xD3", bare_k33(),
      GroupName::direct_product({GroupName::dihedral(3), GroupName::dihedral(3)}),
      "three-blade fan, no knots", Evaluation::RefinedBound);
  {
    Decoration d = bare_k33();
    add_inward_knots(d);
    add("fan-Z3Z3-semidirect-Z2", std::move(d),
        GroupName::generalized_dihedral_z3xz3(),
        "three-blade fan: non-invertible knot on every edge, oriented from "
        "{4,5,6} to {1,2,3}",
        Evaluation::RefinedBound);
  }
  {
    Decoration d = bare_k33();
    add_vertex_twists(d);
    add("fan-D3xZ3", std::move(d),
        GroupName::direct_product({GroupName::dihedral(3), GroupName::cyclic(3)}),
        "three-blade fan: edges at each vertex knotted around one another "
        "in cyclic order");
  }
  {
    Decoration d = bare_k33();
    add_vertex_twists(d);
    add_inward_knots(d);
    add("fan-Z3xZ3", std::move(d),
        GroupName::direct_product({GroupName::cyclic(3), GroupName::cyclic(3)}),
        "three-blade fan: cyclic knotted-around pattern plus inward "
        "non-invertible knots",
        Evaluation::RefinedBound);
  }
  add("trivial", distinct_labels(k33().graph), GroupName::trivial(),
      "distinct knots on every edge");
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& entry : catalog()) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

Decoration ladder_decoration(std::size_t n, std::size_t k, bool invertible) {
  if (n < 4) throw std::invalid_argument("ladder_decoration needs n >= 4");
  if (k < 2 || (2 * n) % k != 0) {
    throw std::invalid_argument("ladder_decoration needs k >= 2 dividing " +
                                std::to_string(2 * n));
  }
  const std::size_t rim = 2 * n;
  const std::size_t step = rim / k;
  Decoration d(mobius_ladder(n).graph);
  KnotLabel label{"L", invertible};
  for (std::size_t j = 0; j < k; ++j) {
    // Edge id i - 1 is e_i = {i, i+1}.
    const std::size_t i = 1 + j * step;
    std::optional<Orientation> orientation;
    if (!invertible) {
      orientation = Orientation{static_cast<Vertex>(i),
                                static_cast<Vertex>(i % rim + 1)};
    }
    d.add_knot(i - 1, label, orientation);
  }
  return d;
}

Decoration distinct_labels(const Graph& g) {
  Decoration d(g);
  for (const auto& e : g.edges()) {
    d.add_knot(e.id, KnotLabel{"K" + std::to_string(e.id + 1), true});
  }
  return d;
}

}  // namespace mobius
