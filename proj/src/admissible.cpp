#include "mobius/admissible.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "mobius/graph.hpp"

namespace mobius {

const PermGroup& k33_automorphisms() {
  static const PermGroup group = automorphisms(k33().graph);
  return group;
}

std::vector<AdmissibleClass> admissible_representatives() {
  std::vector<AdmissibleClass> reps;
  for (const auto& cycles : std::vector<std::vector<std::vector<Point>>>{
           {{1, 2, 3}},
           {{1, 2}, {4, 5}},
           {{1, 2, 3}, {4, 5, 6}},
           {{1, 4}, {2, 5}, {3, 6}},
           {{1, 4, 2, 5, 3, 6}},
       }) {
    Permutation p = perm_from_cycles(cycles, 6);
    reps.push_back({p, p.cycle_type()});
  }
  return reps;
}

namespace {

void require_member(const Permutation& p) {
  if (!k33_automorphisms().contains(p)) {
    throw std::invalid_argument(to_cycle_string(p) +
                                " is not an automorphism of K_{3,3}");
  }
}

bool has_admissible_cycle_type(const Permutation& p) {
  if (p.is_identity()) return true;
  const auto type = p.cycle_type();
  for (const auto& rep : admissible_representatives()) {
    if (rep.cycle_type == type) return true;
  }
  return false;
}

// Runs once: the cycle-type shortcut must agree with conjugacy on every
// element of Aut(K_{3,3}).
void check_fast_path() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    for (const auto& p : k33_automorphisms().elements()) {
      if (has_admissible_cycle_type(p) != is_admissible_by_conjugacy(p)) {
        throw std::logic_error(
            "cycle-type admissibility disagrees with conjugacy at " +
            to_cycle_string(p));
      }
    }
  });
}

}  // namespace

bool is_admissible_by_conjugacy(const Permutation& p) {
  require_member(p);
  if (p.is_identity()) return true;
  for (const auto& rep : admissible_representatives()) {
    if (are_conjugate_in(k33_automorphisms(), rep.representative, p)) {
      return true;
    }
  }
  return false;
}

bool is_admissible(const Permutation& p) {
  require_member(p);
  check_fast_path();
  return has_admissible_cycle_type(p);
}

PermGroup admissible_subgroup() {
  std::vector<Permutation> members;
  for (const auto& p : k33_automorphisms().elements()) {
    if (is_admissible(p)) members.push_back(p);
  }
  try {
    return PermGroup::from_elements(std::move(members));
  } catch (const std::invalid_argument& e) {
    throw ClosureError(
        std::string("admissible automorphisms do not form a subgroup: ") +
        e.what());
  }
}

std::vector<PermGroup> admissible_subgroups(bool element_wise_filter) {
  if (!element_wise_filter) {
    try {
      return all_subgroups(admissible_subgroup());
    } catch (const ClosureError&) {
      // Not closed: fall through to filtering.
    }
  }
  std::vector<PermGroup> result;
  for (auto& h : all_subgroups(k33_automorphisms())) {
    if (std::all_of(h.elements().begin(), h.elements().end(),
                    [](const Permutation& p) { return is_admissible(p); })) {
      result.push_back(std::move(h));
    }
  }
  return result;
}

bool is_transposition(const Permutation& p) {
  const auto type = p.cycle_type();
  return !type.empty() && type.front() == 2 &&
         (type.size() < 2 || type[1] == 1);
}

}  // namespace mobius
