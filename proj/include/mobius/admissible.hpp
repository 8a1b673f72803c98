#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mobius/perm_group.hpp"
#include "mobius/permutation.hpp"

namespace mobius {

/// Raised when the admissible elements turn out not to be closed.
class ClosureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A conjugacy class of Aut(K_{3,3}) whose elements can be induced by an
/// orientation-preserving homeomorphism of some embedding.
struct AdmissibleClass {
  Permutation representative;
  std::vector<std::size_t> cycle_type;
};

/// Aut(K_{3,3}) for the labeling of k33(), computed once.
const PermGroup& k33_automorphisms();

/// (123), (12)(45), (123)(456), (14)(25)(36), (142536).
std::vector<AdmissibleClass> admissible_representatives();

/// True iff `p` is the identity or conjugate in Aut(K_{3,3}) to one of the
/// representatives. Uses cycle types after a one-time exhaustive check that
/// cycle type and conjugacy agree on all 72 elements. Throws
/// std::invalid_argument when p is not in Aut(K_{3,3}).
bool is_admissible(const Permutation& p);

/// Same decision made by explicit conjugacy search, without the fast path.
bool is_admissible_by_conjugacy(const Permutation& p);

/// The admissible elements of Aut(K_{3,3}). Throws ClosureError if they are
/// not closed under composition.
PermGroup admissible_subgroup();

/// Subgroups of Aut(K_{3,3}) made only of admissible elements. Normally the
/// subgroups of admissible_subgroup(); with `element_wise_filter` (or if the
/// admissible set is not closed) every subgroup of Aut(K_{3,3}) is filtered
/// instead.
std::vector<PermGroup> admissible_subgroups(bool element_wise_filter = false);

/// True for a permutation that swaps two points and fixes the rest.
bool is_transposition(const Permutation& p);

}  // namespace mobius
