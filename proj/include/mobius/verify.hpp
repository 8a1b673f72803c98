#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mobius {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // what was observed
};

/// The golden checks behind `mobius verify`: automorphism orders, the six
/// relations among f, g, psi, phi, the generated-group table, catalog
/// stabilizers, ladder stabilizers, admissibility and the classify tables.
/// `deep` adds the S6 subgroup scan.
std::vector<CheckResult> run_checks(
    bool deep, const std::function<void(std::string_view)>& progress = {});

}  // namespace mobius
