#include "mobius/perm_group.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace mobius {

namespace {

using PermSet = std::unordered_set<Permutation, PermutationHash>;

void require_common_degree(const std::vector<Permutation>& perms) {
  for (const auto& p : perms) {
    if (p.degree() != perms.front().degree()) {
      throw std::invalid_argument("permutations have different degrees (" +
                                  std::to_string(perms.front().degree()) +
                                  " and " + std::to_string(p.degree()) + ")");
    }
  }
}

// Breadth-first closure; finite groups need no explicit inverses.
std::vector<Permutation> close(const std::vector<Permutation>& generators,
                               std::size_t degree) {
  PermSet seen;
  std::vector<Permutation> order{Permutation(degree)};
  seen.insert(order.front());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = compose(order[i], g);
      if (seen.insert(next).second) order.push_back(std::move(next));
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<Permutation> sorted_unique(std::vector<Permutation> perms) {
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  return perms;
}

}  // namespace

PermGroup PermGroup::generate(std::vector<Permutation> generators) {
  if (generators.empty()) {
    throw std::invalid_argument("generate needs at least one generator");
  }
  require_common_degree(generators);
  PermGroup g;
  g.degree_ = generators.front().degree();
  g.generators_ = sorted_unique(std::move(generators));
  g.elements_ = close(g.generators_, g.degree_);
  return g;
}

PermGroup PermGroup::trivial(std::size_t degree) {
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = {Permutation(degree)};
  return g;
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements) {
  if (elements.empty()) {
    throw std::invalid_argument("a group has at least one element");
  }
  require_common_degree(elements);
  elements = sorted_unique(std::move(elements));
  PermSet members(elements.begin(), elements.end());
  if (!members.count(Permutation(elements.front().degree()))) {
    throw std::invalid_argument("element set does not contain the identity");
  }
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      if (!members.count(compose(a, b))) {
        throw std::invalid_argument("element set is not closed: " +
                                    to_cycle_string(a) + " * " +
                                    to_cycle_string(b) + " is missing");
      }
    }
  }
  return from_closed_elements(std::move(elements));
}

PermGroup PermGroup::from_closed_elements(std::vector<Permutation> elements,
                                          std::vector<Permutation> generators) {
  if (elements.empty()) {
    throw std::invalid_argument("a group has at least one element");
  }
  PermGroup g;
  g.degree_ = elements.front().degree();
  g.elements_ = sorted_unique(std::move(elements));
  g.generators_ = generators.empty() ? small_generating_set(g.elements_)
                                     : sorted_unique(std::move(generators));
  return g;
}

bool PermGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ &&
         std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return degree_ == other.degree_ &&
         std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("cannot intersect groups of different degree");
  }
  std::vector<Permutation> common;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return PermGroup::from_closed_elements(std::move(common));
}

PermGroup conjugate_group(const PermGroup& g, const Permutation& pi) {
  std::vector<Permutation> elements;
  elements.reserve(g.order());
  for (const auto& e : g.elements()) elements.push_back(conjugate(e, pi));
  std::vector<Permutation> generators;
  for (const auto& s : g.generators()) generators.push_back(conjugate(s, pi));
  return PermGroup::from_closed_elements(std::move(elements),
                                         std::move(generators));
}

std::vector<Permutation> small_generating_set(
    const std::vector<Permutation>& elements) {
  std::vector<Permutation> candidates = elements;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Permutation& a, const Permutation& b) {
                     std::size_t oa = a.order(), ob = b.order();
                     return oa != ob ? oa > ob : a < b;
                   });
  std::vector<Permutation> generators;
  if (candidates.empty()) return generators;
  const std::size_t degree = candidates.front().degree();
  std::vector<Permutation> span{Permutation(degree)};
  for (const auto& c : candidates) {
    if (span.size() == elements.size()) break;
    if (std::binary_search(span.begin(), span.end(), c)) continue;
    generators.push_back(c);
    span = close(generators, degree);
  }
  std::sort(generators.begin(), generators.end());
  return generators;
}

CayleyTable::CayleyTable(const PermGroup& g, std::size_t bound)
    : elements_(g.elements()) {
  const std::size_t n = elements_.size();
  if (n > bound || n > 0xFFFF) {
    throw std::length_error("group order " + std::to_string(n) +
                            " exceeds bound " + std::to_string(bound));
  }
  index_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) {
    index_.emplace(elements_[i], static_cast<Index>(i));
  }
  identity_ = index_.at(Permutation(g.degree()));
  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table_[i * n + j] = index_.at(compose(elements_[i], elements_[j]));
    }
  }
  inverse_.resize(n);
  orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[i * n + j] == identity_) {
        inverse_[i] = static_cast<Index>(j);
        break;
      }
    }
    std::size_t k = 1;
    for (Index x = static_cast<Index>(i); x != identity_;
         x = product(x, static_cast<Index>(i))) {
      ++k;
    }
    orders_[i] = k;
  }
}

std::optional<CayleyTable::Index> CayleyTable::find(
    const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<CayleyTable::Index> CayleyTable::closure(
    const std::vector<Index>& generators) const {
  std::vector<char> seen(size(), 0);
  std::vector<Index> members{identity_};
  seen[identity_] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Index g : generators) {
      Index next = product(members[i], g);
      if (!seen[next]) {
        seen[next] = 1;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

struct Bits {
  std::vector<std::uint64_t> words;

  explicit Bits(std::size_t n) : words((n + 63) / 64, 0) {}
  void set(std::size_t i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const {
    return (words[i / 64] >> (i % 64)) & 1u;
  }
  friend bool operator==(const Bits&, const Bits&) = default;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : b.words) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct Candidate {
  Bits members;
  std::vector<CayleyTable::Index> generators;
  std::size_t order;
};

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& g, std::size_t bound) {
  const CayleyTable table(g, bound);
  const std::size_t n = table.size();
  using Index = CayleyTable::Index;

  std::unordered_set<Bits, BitsHash> seen;
  std::vector<Candidate> found;
  auto add = [&](std::vector<Index> gens) {
    auto members = table.closure(gens);
    Bits bits(n);
    for (Index m : members) bits.set(m);
    if (!seen.insert(bits).second) return false;
    found.push_back({std::move(bits), std::move(gens), members.size()});
    return true;
  };

  // Cyclic seeds.
  std::vector<Index> cyclic_generators;
  for (std::size_t i = 0; i < n; ++i) {
    if (add({static_cast<Index>(i)})) {
      cyclic_generators.push_back(static_cast<Index>(i));
    }
  }

  // Join layers: every subgroup is reached by adding cyclic subgroups one at
  // a time to a smaller one.
  std::size_t layer_begin = 0;
  while (layer_begin < found.size()) {
    const std::size_t layer_end = found.size();
    for (std::size_t s = layer_begin; s < layer_end; ++s) {
      for (Index c : cyclic_generators) {
        if (found[s].members.test(c)) continue;
        auto gens = found[s].generators;
        gens.push_back(c);
        add(std::move(gens));
      }
    }
    layer_begin = layer_end;
  }

  std::vector<PermGroup> result;
  result.reserve(found.size());
  for (const auto& cand : found) {
    std::vector<Permutation> elements;
    elements.reserve(cand.order);
    for (std::size_t i = 0; i < n; ++i) {
      if (cand.members.test(i)) elements.push_back(table.element(i));
    }
    std::vector<Permutation> gens;
    for (Index x : cand.generators) {
      if (x != table.identity()) gens.push_back(table.element(x));
    }
    result.push_back(
        PermGroup::from_closed_elements(std::move(elements), std::move(gens)));
  }
  std::sort(result.begin(), result.end(),
            [](const PermGroup& a, const PermGroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.elements() < b.elements();
            });
  return result;
}

std::optional<Permutation> are_conjugate_in(const PermGroup& g,
                                            const Permutation& a,
                                            const Permutation& b) {
  if (!g.contains(a) || !g.contains(b)) {
    throw std::invalid_argument("are_conjugate_in: element not in group");
  }
  if (a.cycle_type() != b.cycle_type()) return std::nullopt;
  for (const auto& c : g.elements()) {
    if (conjugate(a, c) == b) return c;
  }
  return std::nullopt;
}

}  // namespace mobius
