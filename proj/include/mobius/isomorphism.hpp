#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mobius/perm_group.hpp"

namespace mobius {

/// Isomorphism invariants used to rule out candidates before searching.
struct Fingerprint {
  std::size_t order = 1;
  std::map<std::size_t, std::size_t> order_spectrum;  // element order -> count
  bool abelian = true;
  std::size_t center_order = 1;
  std::vector<std::size_t> conj_class_sizes;  // sorted ascending
  std::size_t derived_subgroup_order = 1;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

  /// e.g. "order=18 spectrum={1:1,2:9,3:8} abelian=0 center=1 ..."
  std::string to_string() const;
};

Fingerprint fingerprint(const CayleyTable& table);
Fingerprint fingerprint(const PermGroup& g,
                        std::size_t bound = kDefaultOrderBound);

/// Fingerprint of `A x B` computed from the fingerprints of the factors.
Fingerprint direct_product_fingerprint(const Fingerprint& a,
                                       const Fingerprint& b);

/// Images of a generating set of the first group; the assignment extends to
/// an isomorphism.
struct Isomorphism {
  std::vector<std::pair<Permutation, Permutation>> generator_images;
};

/// Searches for an isomorphism g -> h. Fingerprints are compared first; on a
/// match, generator images are chosen by backtracking, pruned by element order
/// and conjugacy class size, and every partial assignment is checked along
/// the edges of the Cayley graph of the subgroup it generates. Throws
/// std::length_error when either order exceeds `bound`.
std::optional<Isomorphism> are_isomorphic(
    const PermGroup& g, const PermGroup& h,
    std::size_t bound = kDefaultOrderBound);

/// Independent check that the generator map extends to a bijective
/// homomorphism (every product of two elements is respected).
bool verify_isomorphism(const PermGroup& g, const PermGroup& h,
                        const Isomorphism& iso);

}  // namespace mobius
