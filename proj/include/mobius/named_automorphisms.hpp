#pragma once

#include "mobius/permutation.hpp"

// The four automorphisms of K_{3,3} (sides {1,2,3} and {4,5,6}) used to build
// its symmetric embeddings.
namespace mobius::named {

inline Permutation f() { return perm_from_cycles({{1, 2, 3}, {4, 5, 6}}, 6); }
inline Permutation g() { return perm_from_cycles({{1, 2, 3}, {4, 6, 5}}, 6); }
inline Permutation psi() {
  return perm_from_cycles({{1, 4}, {2, 5}, {3, 6}}, 6);
}
inline Permutation phi() { return perm_from_cycles({{1, 2}, {4, 5}}, 6); }

}  // namespace mobius::named
