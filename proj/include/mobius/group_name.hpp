#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mobius/isomorphism.hpp"
#include "mobius/perm_group.hpp"

namespace mobius {

enum class GroupFamily {
  Trivial,
  Cyclic,
  Dihedral,
  Symmetric,
  Alternating,
  DirectProduct,
  GeneralizedDihedralZ3xZ3,  // (Z3 x Z3) : Z2, the involution inverting both
  WreathS3Z2,
  Unrecognized,
};

/// Isomorphism type of a group, from a fixed vocabulary.
///
/// Dihedral(k) is the symmetry group of a k-gon, of order 2k. Direct products
/// list their factors in a canonical order (by family, then by parameter,
/// largest first), so "D3xZ3" rather than "Z3xD3".
struct GroupName {
  GroupFamily family = GroupFamily::Trivial;
  std::size_t parameter = 0;
  std::vector<GroupName> factors;
  std::optional<Fingerprint> fingerprint;  // Unrecognized only

  static GroupName trivial();
  static GroupName cyclic(std::size_t k);
  static GroupName dihedral(std::size_t k);
  static GroupName symmetric(std::size_t k);
  static GroupName alternating(std::size_t k);
  static GroupName generalized_dihedral_z3xz3();
  static GroupName wreath_s3_z2();
  /// Factors are sorted into canonical order.
  static GroupName direct_product(std::vector<GroupName> factors);
  static GroupName unrecognized(Fingerprint fp);

  std::size_t order() const;

  /// Compact form used in JSON: "1", "Z6", "D3xD3", "(Z3xZ3):Z2", "S3wrZ2".
  std::string to_string() const;
  /// Human form: "trivial", "Z_6", "D_3 x D_3", "(Z_3 x Z_3) : Z_2".
  std::string display() const;

  friend bool operator==(const GroupName&, const GroupName&) = default;
};

/// Canonical sort key for reports: order first, then the compact name.
bool report_order_less(const GroupName& a, const GroupName& b);

/// A concrete permutation group of the named type. Throws
/// std::invalid_argument for Unrecognized names or degenerate parameters.
PermGroup reference_group(const GroupName& name);

/// Names `g` by matching it against reference groups of the same order via
/// are_isomorphic. Candidates are tried in a fixed order (cyclic, dihedral,
/// symmetric, alternating, the two exceptional groups, then direct products
/// with two, three, ... factors) and the first match wins. Falls back to
/// Unrecognized with the group's fingerprint. Throws std::length_error when
/// |g| exceeds `bound`.
GroupName recognize(const PermGroup& g,
                    std::size_t bound = kDefaultOrderBound);

}  // namespace mobius
