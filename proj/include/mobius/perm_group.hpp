#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mobius/permutation.hpp"

namespace mobius {

/// Largest group order the subgroup, isomorphism and recognition routines
/// accept unless told otherwise. |S6| = 720.
inline constexpr std::size_t kDefaultOrderBound = 720;

/// A finite permutation group with every element materialized.
///
/// Elements are kept sorted lexicographically by image sequence, so two
/// groups with the same element set compare equal and print identically.
class PermGroup {
 public:
  /// Closure of `generators` under composition. Throws std::invalid_argument
  /// if the list is empty or the degrees differ.
  static PermGroup generate(std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);

  /// Checks that `elements` is closed under composition (quadratic) and
  /// throws std::invalid_argument if it is not a group.
  static PermGroup from_elements(std::vector<Permutation> elements);

  /// For callers that already know `elements` forms a group, e.g. the output
  /// of an automorphism search. A small generating set is chosen greedily
  /// when `generators` is empty.
  static PermGroup from_closed_elements(std::vector<Permutation> elements,
                                        std::vector<Permutation> generators = {});

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }

  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& other) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  PermGroup() = default;

  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Elements common to both groups.
PermGroup intersection(const PermGroup& a, const PermGroup& b);

/// `pi * G * pi^-1`, the group acting on relabeled points.
PermGroup conjugate_group(const PermGroup& g, const Permutation& pi);

/// Greedy generating set: elements are tried in order of decreasing element
/// order (ties lexicographic) and kept when they enlarge the span.
std::vector<Permutation> small_generating_set(
    const std::vector<Permutation>& elements);

/// Multiplication table of a group, indexed by the position of each element
/// in `PermGroup::elements()`.
class CayleyTable {
 public:
  using Index = std::uint16_t;

  /// Throws std::length_error when the order exceeds `bound`.
  explicit CayleyTable(const PermGroup& g,
                       std::size_t bound = kDefaultOrderBound);

  std::size_t size() const { return elements_.size(); }
  Index identity() const { return identity_; }

  /// Index of `element(i) * element(j)` (apply j first).
  Index product(Index i, Index j) const { return table_[i * size() + j]; }
  Index inverse(Index i) const { return inverse_[i]; }
  std::size_t element_order(Index i) const { return orders_[i]; }

  const Permutation& element(Index i) const { return elements_[i]; }
  std::optional<Index> find(const Permutation& p) const;

  /// Closure of the given elements, as a sorted list of indices.
  std::vector<Index> closure(const std::vector<Index>& generators) const;

 private:
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Index, PermutationHash> index_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<std::size_t> orders_;
  Index identity_ = 0;
};

/// Every subgroup of `g` exactly once, ordered by (order, element sequence).
///
/// Seeds with the cyclic subgroups and closes the list under joins with
/// cyclic subgroups, one layer at a time. Throws std::length_error when
/// |g| exceeds `bound`.
std::vector<PermGroup> all_subgroups(const PermGroup& g,
                                     std::size_t bound = kDefaultOrderBound);

/// Some `c` in `g` with `c a c^-1 == b`, the lexicographically smallest one.
/// Throws std::invalid_argument if `a` or `b` is not in `g`.
std::optional<Permutation> are_conjugate_in(const PermGroup& g,
                                            const Permutation& a,
                                            const Permutation& b);

}  // namespace mobius
