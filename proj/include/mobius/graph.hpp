#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mobius/perm_group.hpp"
#include "mobius/permutation.hpp"

namespace mobius {

using Vertex = Point;
using EdgeId = std::size_t;

struct Edge {
  EdgeId id;
  Vertex u;
  Vertex v;

  bool joins(Vertex a, Vertex b) const {
    return (u == a && v == b) || (u == b && v == a);
  }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite undirected multigraph on vertices 1..vertex_count. Parallel edges
/// are allowed and distinguished by id; self-loops are not.
class Graph {
 public:
  explicit Graph(std::size_t vertex_count);

  /// Returns the new edge's id (ids are assigned 0, 1, 2, ... in order).
  /// Throws std::invalid_argument on an out-of-range endpoint or a loop.
  EdgeId add_edge(Vertex u, Vertex v);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  std::size_t multiplicity(Vertex u, Vertex v) const {
    return adjacency_[(u - 1) * vertex_count_ + (v - 1)];
  }
  bool has_edge(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
  std::size_t degree(Vertex v) const;
  bool is_simple() const;

  /// Ids of all edges joining u and v, ascending.
  std::vector<EdgeId> edges_between(Vertex u, Vertex v) const;

  /// The single edge joining u and v; throws if there is none or several.
  EdgeId edge_between(Vertex u, Vertex v) const;

  /// Same edge list with every endpoint x replaced by pi(x).
  Graph relabeled(const Permutation& pi) const;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> adjacency_;  // multiplicity matrix
};

/// A cycle given by its cyclic vertex sequence.
struct CycleWitness {
  std::vector<Vertex> vertices;

  /// The cycle's edges as unordered vertex pairs (smaller endpoint first),
  /// in traversal order.
  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const;
};

/// A graph together with its distinguished cycle, when it has one.
struct GraphWithCycle {
  Graph graph;
  std::optional<CycleWitness> cycle;
};

/// M_n. For n >= 2: vertices 1..2n, cycle edges e_i = {i, i+1} (e_2n =
/// {2n, 1}) with ids 0..2n-1, then rungs {i, i+n} for i = 1..n. The cycle
/// witness is the 2n-gon 1, 2, ..., 2n. For n = 1: two vertices joined by
/// three parallel edges and no witness. Throws std::invalid_argument for 0.
GraphWithCycle mobius_ladder(std::size_t n);

/// K_{3,3} with sides {1,2,3} and {4,5,6}; edges {i,j} in lexicographic order.
/// The witness is the hexagon 1, 6, 2, 4, 3, 5, which makes {1,4}, {2,5},
/// {3,6} the rungs when the graph is read as M_3.
GraphWithCycle k33();

inline constexpr std::size_t kDefaultVertexBound = 16;

/// Vertex permutations that preserve the edge multiset. Backtracking over
/// vertices in a connectivity-first order; candidates must match degree and
/// the multiplicity to every already-mapped vertex. Throws std::length_error
/// when the graph has more than `vertex_bound` vertices.
PermGroup automorphisms(const Graph& g,
                        std::size_t vertex_bound = kDefaultVertexBound);

/// True iff `pi` maps the edge multiset onto itself.
bool is_automorphism(const Graph& g, const Permutation& pi);

/// True iff every element of `group` maps the cycle's edge set onto itself.
bool preserves_cycle(const PermGroup& group, const CycleWitness& cycle);

/// Checks the witness is a cycle of `g`: distinct vertices, consecutive ones
/// adjacent, at least three of them.
bool is_cycle_of(const Graph& g, const CycleWitness& cycle);

/// Reads the CLI graph text format: a "vertices N" line followed by one
/// "edge u v" line per edge. Blank lines and lines starting with '#' are
/// ignored. Throws std::invalid_argument with the offending line number.
Graph parse_graph_text(std::string_view text);
std::string to_graph_text(const Graph& g);

/// Resolves "mobius:<n>" and "k33". Returns nullopt for anything else.
std::optional<GraphWithCycle> builtin_graph(std::string_view spec);

}  // namespace mobius
