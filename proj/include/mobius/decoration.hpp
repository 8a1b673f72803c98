#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mobius/graph.hpp"
#include "mobius/group_name.hpp"
#include "mobius/perm_group.hpp"

namespace mobius {

/// An opaque knot type. Only its identity and invertibility matter.
struct KnotLabel {
  std::string name;
  bool invertible = true;

  friend bool operator==(const KnotLabel&, const KnotLabel&) = default;
};

using Orientation = std::pair<Vertex, Vertex>;  // tail, head

struct EdgeKnot {
  KnotLabel label;
  /// Present exactly when the label is non-invertible.
  std::optional<Orientation> orientation;
};

/// A local knot in `outer` links the edge `around`; the two share a vertex.
struct KnottedAround {
  EdgeId outer;
  EdgeId around;

  friend auto operator<=>(const KnottedAround&, const KnottedAround&) = default;
};

/// Combinatorial record of a decorated embedding: at most one knot per edge,
/// plus a directed knotted-around relation between edges at a common vertex.
class Decoration {
 public:
  explicit Decoration(Graph graph) : graph_(std::move(graph)) {}

  const Graph& graph() const { return graph_; }
  const std::map<EdgeId, EdgeKnot>& knots() const { return knots_; }
  const std::set<KnottedAround>& knotted_around() const {
    return knotted_around_;
  }

  /// Throws std::invalid_argument for an unknown edge or a second knot on the
  /// same edge. Everything else is left to validate().
  Decoration& add_knot(EdgeId edge, KnotLabel label,
                       std::optional<Orientation> orientation = std::nullopt);
  /// Same, addressing a simple edge by its endpoints.
  Decoration& add_knot(Vertex u, Vertex v, KnotLabel label,
                       std::optional<Orientation> orientation = std::nullopt);

  Decoration& add_knotted_around(EdgeId outer, EdgeId around);
  Decoration& add_knotted_around(std::pair<Vertex, Vertex> outer,
                                 std::pair<Vertex, Vertex> around);

  /// The decoration carried along a vertex relabeling: edge ids are kept,
  /// endpoints and orientations are mapped through `pi`.
  Decoration relabeled(const Permutation& pi) const;

 private:
  Graph graph_;
  std::map<EdgeId, EdgeKnot> knots_;
  std::set<KnottedAround> knotted_around_;
};

/// Empty when `d` is well formed; otherwise one message per problem.
std::vector<std::string> validate(const Decoration& d);

/// Automorphisms of the underlying graph that respect the decoration: knotted
/// edges go to edges with the same label, non-invertible knots keep their
/// orientation, and knotted-around pairs go to knotted-around pairs. This is
/// an upper bound for the orientation-preserving symmetry group of the
/// embedding it describes. Throws std::invalid_argument on an invalid
/// decoration.
PermGroup stabilizer(const Decoration& d);

/// stabilizer(d) intersected with the admissible subgroup of Aut(K_{3,3}).
/// Throws std::invalid_argument unless d's graph is k33().
PermGroup refined_upper_bound(const Decoration& d);

enum class Evaluation { Stabilizer, RefinedBound };

struct CatalogEntry {
  std::string name;
  Decoration decoration;
  GroupName expected;
  std::string anchor;  // which construction this entry models
  Evaluation evaluation = Evaluation::Stabilizer;
};

/// Computes the entry's group with its declared evaluation.
PermGroup evaluate(const CatalogEntry& entry);

/// The eleven K_{3,3} constructions, in a fixed order.
const std::vector<CatalogEntry>& catalog();

/// Looks up a catalog entry by name.
const CatalogEntry* find_catalog_entry(const std::string& name);

/// Knots every m-th edge of the 2n-gon of M_n, m = 2n/k, starting at e_1 =
/// {1, 2}: edges e_1, e_{1+m}, ..., e_{1+(k-1)m} share one label. The
/// non-invertible variant orients each knotted edge i -> i+1. Throws
/// std::invalid_argument unless n >= 4, k >= 2 and k divides 2n.
Decoration ladder_decoration(std::size_t n, std::size_t k, bool invertible);

/// A distinct invertible label on every edge.
Decoration distinct_labels(const Graph& g);

}  // namespace mobius
