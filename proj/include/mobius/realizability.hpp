#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mobius/admissible.hpp"
#include "mobius/decoration.hpp"
#include "mobius/group_name.hpp"
#include "mobius/perm_group.hpp"

namespace mobius {

struct RealizableGroup {
  GroupName name;
  std::size_t order = 1;
  std::optional<CatalogEntry> witness;  // a decoration realizing the group
  std::string provenance;
};

/// Groups realizable as orientation-preserving symmetry groups of some
/// embedding of M_n, deduplicated up to isomorphism and sorted by
/// (order, name).
struct RealizabilityReport {
  std::size_t n = 0;
  std::vector<RealizableGroup> groups;
};

/// Throws std::invalid_argument for n == 0.
RealizabilityReport classify(std::size_t n);

struct LemmaReport {
  std::size_t subgroups_found = 0;
  bool all_contain_transposition = true;
  bool vacuous = true;  // no Z2 x Z2 x Z2 subgroups at all
  std::vector<PermGroup> subgroups;
};

/// Finds every subgroup of Aut(K_{3,3}) isomorphic to Z2 x Z2 x Z2 and checks
/// that each contains a transposition.
LemmaReport lemma_z2cubed();

struct ClassCount {
  GroupName name;
  std::size_t count = 0;
  bool realizable = false;  // isomorphic to a group in classify(3)
};

struct CorollaryReport {
  std::size_t total_subgroups = 0;
  std::size_t survivors = 0;
  bool full_group_filtered_out = false;
  std::vector<ClassCount> classes;   // survivors per isomorphism class
  std::vector<PermGroup> exceptions;  // survivors outside classify(3)

  bool all_survivors_realizable() const { return exceptions.empty(); }
};

/// Enumerates all subgroups of S6, keeps those with no transposition and no
/// element of order 4 or 5, and checks each against classify(3). Slow
/// (seconds); `progress` receives short status lines.
CorollaryReport corollary_scan_s6(
    const std::function<void(std::string_view)>& progress = {});

/// Deduplicates groups up to isomorphism, keeping the first of each class, and
/// returns their names sorted by (order, name).
std::vector<GroupName> isomorphism_classes(const std::vector<PermGroup>& groups);

}  // namespace mobius
