#include "mobius/group_name.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace mobius {

namespace {

std::size_t factorial(std::size_t k) {
  std::size_t result = 1;
  for (std::size_t i = 2; i <= k; ++i) result *= i;
  return result;
}

int family_rank(GroupFamily f) {
  switch (f) {
    case GroupFamily::WreathS3Z2: return 6;
    case GroupFamily::GeneralizedDihedralZ3xZ3: return 5;
    case GroupFamily::Symmetric: return 4;
    case GroupFamily::Alternating: return 3;
    case GroupFamily::Dihedral: return 2;
    case GroupFamily::Cyclic: return 1;
    default: return 0;
  }
}

// Descending canonical order for direct-product factors.
bool factor_before(const GroupName& a, const GroupName& b) {
  int ra = family_rank(a.family), rb = family_rank(b.family);
  if (ra != rb) return ra > rb;
  return a.parameter > b.parameter;
}

GroupName simple(GroupFamily f, std::size_t k) {
  GroupName n;
  n.family = f;
  n.parameter = k;
  return n;
}

// Shifts a permutation of degree d to act on points offset+1..offset+d of a
// larger set of `total` points.
Permutation embed(const Permutation& p, std::size_t offset, std::size_t total) {
  std::vector<Point> images = Permutation(total).images();
  for (std::size_t i = 0; i < p.degree(); ++i) {
    images[offset + i] = static_cast<Point>(offset + p.images()[i]);
  }
  return Permutation::from_images(std::move(images));
}

std::vector<std::pair<std::size_t, std::size_t>> prime_powers(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> result;
  for (std::size_t p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    std::size_t q = 1;
    while (k % p == 0) {
      k /= p;
      q *= p;
    }
    result.emplace_back(p, q);
  }
  if (k > 1) result.emplace_back(k, k);
  return result;
}

std::vector<Point> iota_points(std::size_t from, std::size_t to) {
  std::vector<Point> pts;
  for (std::size_t i = from; i <= to; ++i) pts.push_back(static_cast<Point>(i));
  return pts;
}

}  // namespace

GroupName GroupName::trivial() { return simple(GroupFamily::Trivial, 0); }
GroupName GroupName::cyclic(std::size_t k) {
  return simple(GroupFamily::Cyclic, k);
}
GroupName GroupName::dihedral(std::size_t k) {
  return simple(GroupFamily::Dihedral, k);
}
GroupName GroupName::symmetric(std::size_t k) {
  return simple(GroupFamily::Symmetric, k);
}
GroupName GroupName::alternating(std::size_t k) {
  return simple(GroupFamily::Alternating, k);
}
GroupName GroupName::generalized_dihedral_z3xz3() {
  return simple(GroupFamily::GeneralizedDihedralZ3xZ3, 0);
}
GroupName GroupName::wreath_s3_z2() {
  return simple(GroupFamily::WreathS3Z2, 0);
}

GroupName GroupName::direct_product(std::vector<GroupName> factors) {
  std::vector<GroupName> flat;
  for (auto& f : factors) {
    if (f.family == GroupFamily::DirectProduct) {
      flat.insert(flat.end(), f.factors.begin(), f.factors.end());
    } else {
      flat.push_back(std::move(f));
    }
  }
  std::stable_sort(flat.begin(), flat.end(), factor_before);
  GroupName n = simple(GroupFamily::DirectProduct, 0);
  n.factors = std::move(flat);
  return n;
}

GroupName GroupName::unrecognized(Fingerprint fp) {
  GroupName n = simple(GroupFamily::Unrecognized, 0);
  n.fingerprint = std::move(fp);
  return n;
}

std::size_t GroupName::order() const {
  switch (family) {
    case GroupFamily::Trivial: return 1;
    case GroupFamily::Cyclic: return parameter;
    case GroupFamily::Dihedral: return 2 * parameter;
    case GroupFamily::Symmetric: return factorial(parameter);
    case GroupFamily::Alternating:
      return parameter < 2 ? 1 : factorial(parameter) / 2;
    case GroupFamily::GeneralizedDihedralZ3xZ3: return 18;
    case GroupFamily::WreathS3Z2: return 72;
    case GroupFamily::DirectProduct: {
      std::size_t result = 1;
      for (const auto& f : factors) result *= f.order();
      return result;
    }
    case GroupFamily::Unrecognized:
      return fingerprint ? fingerprint->order : 0;
  }
  return 0;
}

std::string GroupName::to_string() const {
  const std::string k = std::to_string(parameter);
  switch (family) {
    case GroupFamily::Trivial: return "1";
    case GroupFamily::Cyclic: return "Z" + k;
    case GroupFamily::Dihedral: return "D" + k;
    case GroupFamily::Symmetric: return "S" + k;
    case GroupFamily::Alternating: return "A" + k;
    case GroupFamily::GeneralizedDihedralZ3xZ3: return "(Z3xZ3):Z2";
    case GroupFamily::WreathS3Z2: return "S3wrZ2";
    case GroupFamily::DirectProduct: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        out += (i ? "x" : "") + factors[i].to_string();
      }
      return out;
    }
    case GroupFamily::Unrecognized:
      return "Unrecognized(" + std::to_string(order()) + ")";
  }
  return "?";
}

std::string GroupName::display() const {
  const std::string k = std::to_string(parameter);
  switch (family) {
    case GroupFamily::Trivial: return "trivial";
    case GroupFamily::Cyclic: return "Z_" + k;
    case GroupFamily::Dihedral: return "D_" + k;
    case GroupFamily::Symmetric: return "S_" + k;
    case GroupFamily::Alternating: return "A_" + k;
    case GroupFamily::GeneralizedDihedralZ3xZ3: return "(Z_3 x Z_3) : Z_2";
    case GroupFamily::WreathS3Z2: return "S_3 wr Z_2";
    case GroupFamily::DirectProduct: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        out += (i ? " x " : "") + factors[i].display();
      }
      return out;
    }
    case GroupFamily::Unrecognized:
      return "unrecognized group of order " + std::to_string(order());
  }
  return "?";
}

bool report_order_less(const GroupName& a, const GroupName& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.to_string() < b.to_string();
}

PermGroup reference_group(const GroupName& name) {
  const std::size_t k = name.parameter;
  switch (name.family) {
    case GroupFamily::Trivial:
      return PermGroup::trivial(1);
    case GroupFamily::Cyclic: {
      if (k == 0) break;
      if (k == 1) return PermGroup::trivial(1);
      // One cycle per prime power keeps the degree small.
      std::vector<std::vector<Point>> cycles;
      std::size_t next = 1;
      for (auto [p, q] : prime_powers(k)) {
        cycles.push_back(iota_points(next, next + q - 1));
        next += q;
      }
      return PermGroup::generate({perm_from_cycles(cycles, next - 1)});
    }
    case GroupFamily::Dihedral: {
      if (k == 0) break;
      if (k == 1) return PermGroup::generate({perm_from_cycles({{1, 2}}, 2)});
      if (k == 2) {
        return PermGroup::generate({perm_from_cycles({{1, 2}, {3, 4}}, 4),
                                    perm_from_cycles({{1, 3}, {2, 4}}, 4)});
      }
      std::vector<Point> flip(k);
      for (std::size_t i = 0; i < k; ++i) flip[i] = static_cast<Point>(k - i);
      return PermGroup::generate({perm_from_cycles({iota_points(1, k)}, k),
                                  Permutation::from_images(flip)});
    }
    case GroupFamily::Symmetric: {
      if (k == 0) break;
      if (k == 1) return PermGroup::trivial(1);
      return PermGroup::generate({perm_from_cycles({iota_points(1, k)}, k),
                                  perm_from_cycles({{1, 2}}, k)});
    }
    case GroupFamily::Alternating: {
      if (k == 0) break;
      if (k < 3) return PermGroup::trivial(k);
      std::vector<Permutation> gens;
      for (Point i = 3; i <= k; ++i) gens.push_back(perm_from_cycles({{1, 2, i}}, k));
      return PermGroup::generate(std::move(gens));
    }
    case GroupFamily::GeneralizedDihedralZ3xZ3:
      return PermGroup::generate({perm_from_cycles({{1, 2, 3}}, 6),
                                  perm_from_cycles({{4, 5, 6}}, 6),
                                  perm_from_cycles({{1, 2}, {4, 5}}, 6)});
    case GroupFamily::WreathS3Z2:
      return PermGroup::generate({perm_from_cycles({{1, 2, 3}}, 6),
                                  perm_from_cycles({{1, 2}}, 6),
                                  perm_from_cycles({{1, 4}, {2, 5}, {3, 6}}, 6)});
    case GroupFamily::DirectProduct: {
      std::vector<PermGroup> parts;
      std::size_t total = 0;
      for (const auto& f : name.factors) {
        parts.push_back(reference_group(f));
        total += parts.back().degree();
      }
      if (parts.empty()) return PermGroup::trivial(1);
      std::vector<Permutation> gens;
      std::size_t offset = 0;
      for (const auto& part : parts) {
        for (const auto& s : part.generators()) {
          gens.push_back(embed(s, offset, total));
        }
        offset += part.degree();
      }
      if (gens.empty()) return PermGroup::trivial(total);
      return PermGroup::generate(std::move(gens));
    }
    case GroupFamily::Unrecognized:
      break;
  }
  throw std::invalid_argument("no reference group for " + name.to_string());
}

namespace {

// Fingerprints of the non-product candidates, computed once per process.
const Fingerprint& atom_fingerprint(const GroupName& atom) {
  static std::mutex mutex;
  static std::map<std::string, Fingerprint> cache;
  std::lock_guard<std::mutex> lock(mutex);
  const std::string key = atom.to_string();
  auto it = cache.find(key);
  if (it == cache.end()) {
    const PermGroup g = reference_group(atom);
    it = cache.emplace(key, fingerprint(g, g.order())).first;
  }
  return it->second;
}

std::vector<GroupName> single_candidates(std::size_t n) {
  std::vector<GroupName> out;
  out.push_back(GroupName::cyclic(n));
  if (n % 2 == 0 && n / 2 >= 2) out.push_back(GroupName::dihedral(n / 2));
  for (std::size_t k = 4; factorial(k) <= n; ++k) {
    if (factorial(k) == n) out.push_back(GroupName::symmetric(k));
  }
  for (std::size_t k = 4; factorial(k) / 2 <= n; ++k) {
    if (factorial(k) / 2 == n) out.push_back(GroupName::alternating(k));
  }
  if (n == 18) out.push_back(GroupName::generalized_dihedral_z3xz3());
  if (n == 72) out.push_back(GroupName::wreath_s3_z2());
  return out;
}

// Nontrivial groups usable as direct-product factors for a group of order n,
// in canonical (descending) order. Dihedral(2) is omitted since Z2 x Z2
// covers it; Symmetric(3) and Alternating(3) duplicate D3 and Z3.
std::vector<GroupName> product_atoms(std::size_t n) {
  std::vector<GroupName> atoms;
  if (n % 72 == 0) atoms.push_back(GroupName::wreath_s3_z2());
  if (n % 18 == 0) atoms.push_back(GroupName::generalized_dihedral_z3xz3());
  for (std::size_t k = 4; factorial(k) <= n; ++k) {
    if (n % factorial(k) == 0) atoms.push_back(GroupName::symmetric(k));
  }
  for (std::size_t k = 4; factorial(k) / 2 <= n; ++k) {
    if (n % (factorial(k) / 2) == 0) atoms.push_back(GroupName::alternating(k));
  }
  for (std::size_t k = n / 2; k >= 3; --k) {
    if (n % (2 * k) == 0) atoms.push_back(GroupName::dihedral(k));
  }
  for (std::size_t k = n; k >= 2; --k) {
    if (n % k == 0) atoms.push_back(GroupName::cyclic(k));
  }
  std::stable_sort(atoms.begin(), atoms.end(), factor_before);
  return atoms;
}

// Non-increasing sequences of `count` atoms (indices into `atoms`) whose
// orders multiply to `n`.
void product_sequences(const std::vector<GroupName>& atoms, std::size_t n,
                       std::size_t count, std::size_t first,
                       std::vector<std::size_t>& current,
                       const std::function<bool(const std::vector<std::size_t>&)>& visit,
                       bool& stop) {
  if (stop) return;
  if (current.size() == count) {
    if (n == 1) stop = visit(current);
    return;
  }
  for (std::size_t i = first; i < atoms.size() && !stop; ++i) {
    const std::size_t o = atoms[i].order();
    if (n % o != 0 || n / o < 1) continue;
    if (current.size() + 1 < count && n / o < 2) continue;
    current.push_back(i);
    product_sequences(atoms, n / o, count, i, current, visit, stop);
    current.pop_back();
  }
}

}  // namespace

GroupName recognize(const PermGroup& g, std::size_t bound) {
  const std::size_t n = g.order();
  if (n > bound) {
    throw std::length_error("recognize: group order " + std::to_string(n) +
                            " exceeds bound " + std::to_string(bound));
  }
  if (n == 1) return GroupName::trivial();
  const Fingerprint fp = fingerprint(g, bound);

  auto matches = [&](const GroupName& candidate, const Fingerprint& cfp) {
    if (cfp != fp) return false;
    return are_isomorphic(g, reference_group(candidate), bound).has_value();
  };

  for (const auto& candidate : single_candidates(n)) {
    if (matches(candidate, atom_fingerprint(candidate))) return candidate;
  }

  const auto atoms = product_atoms(n);
  std::optional<GroupName> found;
  for (std::size_t count = 2; (std::size_t{1} << count) <= n && !found;
       ++count) {
    std::vector<std::size_t> current;
    bool stop = false;
    product_sequences(
        atoms, n, count, 0, current,
        [&](const std::vector<std::size_t>& seq) {
          Fingerprint pfp = atom_fingerprint(atoms[seq[0]]);
          std::vector<GroupName> factors{atoms[seq[0]]};
          for (std::size_t i = 1; i < seq.size(); ++i) {
            pfp = direct_product_fingerprint(pfp, atom_fingerprint(atoms[seq[i]]));
            factors.push_back(atoms[seq[i]]);
          }
          GroupName candidate = GroupName::direct_product(std::move(factors));
          if (matches(candidate, pfp)) {
            found = std::move(candidate);
            return true;
          }
          return false;
        },
        stop);
  }
  if (found) return *found;
  return GroupName::unrecognized(fp);
}

}  // namespace mobius
