#include "mobius/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace mobius {

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "order=" << order << " spectrum={";
  bool first = true;
  for (const auto& [ord, count] : order_spectrum) {
    out << (first ? "" : ",") << ord << ':' << count;
    first = false;
  }
  out << "} abelian=" << (abelian ? 1 : 0) << " center=" << center_order
      << " classes=[";
  for (std::size_t i = 0; i < conj_class_sizes.size(); ++i) {
    out << (i ? "," : "") << conj_class_sizes[i];
  }
  out << "] derived=" << derived_subgroup_order;
  return out.str();
}

Fingerprint fingerprint(const CayleyTable& table) {
  using Index = CayleyTable::Index;
  const std::size_t n = table.size();
  Fingerprint fp;
  fp.order = n;

  for (std::size_t i = 0; i < n; ++i) {
    ++fp.order_spectrum[table.element_order(static_cast<Index>(i))];
  }

  std::size_t center = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool central = true;
    for (std::size_t j = 0; j < n && central; ++j) {
      auto a = static_cast<Index>(i), b = static_cast<Index>(j);
      central = table.product(a, b) == table.product(b, a);
    }
    if (central) ++center;
  }
  fp.center_order = center;
  fp.abelian = center == n;

  std::vector<char> visited(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    std::size_t size = 0;
    for (std::size_t j = 0; j < n; ++j) {
      auto g = static_cast<Index>(j);
      Index c = table.product(table.product(g, static_cast<Index>(i)),
                              table.inverse(g));
      if (!visited[c]) {
        visited[c] = 1;
        ++size;
      }
    }
    fp.conj_class_sizes.push_back(size);
  }
  std::sort(fp.conj_class_sizes.begin(), fp.conj_class_sizes.end());

  std::vector<char> is_commutator(n, 0);
  std::vector<Index> commutators;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto a = static_cast<Index>(i), b = static_cast<Index>(j);
      Index c = table.product(table.product(a, b),
                              table.product(table.inverse(a), table.inverse(b)));
      if (!is_commutator[c]) {
        is_commutator[c] = 1;
        commutators.push_back(c);
      }
    }
  }
  fp.derived_subgroup_order = table.closure(commutators).size();
  return fp;
}

Fingerprint fingerprint(const PermGroup& g, std::size_t bound) {
  return fingerprint(CayleyTable(g, bound));
}

Fingerprint direct_product_fingerprint(const Fingerprint& a,
                                       const Fingerprint& b) {
  Fingerprint fp;
  fp.order = a.order * b.order;
  for (const auto& [oa, ca] : a.order_spectrum) {
    for (const auto& [ob, cb] : b.order_spectrum) {
      fp.order_spectrum[std::lcm(oa, ob)] += ca * cb;
    }
  }
  fp.abelian = a.abelian && b.abelian;
  fp.center_order = a.center_order * b.center_order;
  for (std::size_t sa : a.conj_class_sizes) {
    for (std::size_t sb : b.conj_class_sizes) {
      fp.conj_class_sizes.push_back(sa * sb);
    }
  }
  std::sort(fp.conj_class_sizes.begin(), fp.conj_class_sizes.end());
  fp.derived_subgroup_order =
      a.derived_subgroup_order * b.derived_subgroup_order;
  return fp;
}

namespace {

using Index = CayleyTable::Index;
constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

// Size of the conjugacy class of every element.
std::vector<std::size_t> class_sizes(const CayleyTable& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> sizes(n, 0);
  std::vector<std::size_t> class_of(n, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of[i] != kUnset) continue;
    std::vector<Index> members;
    for (std::size_t j = 0; j < n; ++j) {
      auto g = static_cast<Index>(j);
      Index c = t.product(t.product(g, static_cast<Index>(i)), t.inverse(g));
      if (class_of[c] == kUnset) {
        class_of[c] = i;
        members.push_back(c);
      }
    }
    for (Index m : members) sizes[m] = members.size();
  }
  return sizes;
}

// Generators chosen greedily from high element order down, as indices.
std::vector<Index> greedy_generators(const CayleyTable& t) {
  std::vector<Index> order(t.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return t.element_order(a) > t.element_order(b);
  });
  std::vector<Index> gens;
  std::vector<Index> span{t.identity()};
  for (Index c : order) {
    if (span.size() == t.size()) break;
    if (std::binary_search(span.begin(), span.end(), c)) continue;
    gens.push_back(c);
    span = t.closure(gens);
  }
  return gens;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const CayleyTable& g, const CayleyTable& h)
      : g_(g), h_(h), image_(g.size(), kUnset), preimage_(h.size(), kUnset) {
    gens_ = greedy_generators(g_);
    auto g_sizes = class_sizes(g_);
    auto h_sizes = class_sizes(h_);
    for (Index s : gens_) {
      std::vector<Index> options;
      for (std::size_t j = 0; j < h_.size(); ++j) {
        auto y = static_cast<Index>(j);
        if (h_.element_order(y) == g_.element_order(s) &&
            h_sizes[y] == g_sizes[s]) {
          options.push_back(y);
        }
      }
      candidates_.push_back(std::move(options));
    }
    assigned_.resize(gens_.size());
  }

  bool run() { return assign(0); }

  Isomorphism result() const {
    Isomorphism iso;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      iso.generator_images.emplace_back(g_.element(gens_[i]),
                                        h_.element(assigned_[i]));
    }
    return iso;
  }

 private:
  bool assign(std::size_t level) {
    if (level == gens_.size()) return true;
    for (Index y : candidates_[level]) {
      assigned_[level] = y;
      if (consistent(level + 1) && assign(level + 1)) return true;
    }
    return false;
  }

  // Walks the Cayley graph of the subgroup generated by the first `count`
  // generators, propagating images; fails on a clash or a non-injective map.
  bool consistent(std::size_t count) {
    std::fill(image_.begin(), image_.end(), kUnset);
    std::fill(preimage_.begin(), preimage_.end(), kUnset);
    std::vector<Index> queue{g_.identity()};
    image_[g_.identity()] = h_.identity();
    preimage_[h_.identity()] = g_.identity();
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Index x = queue[q];
      auto fx = static_cast<Index>(image_[x]);
      for (std::size_t k = 0; k < count; ++k) {
        Index xn = g_.product(x, gens_[k]);
        Index yn = h_.product(fx, assigned_[k]);
        if (image_[xn] == kUnset) {
          if (preimage_[yn] != kUnset) return false;
          image_[xn] = yn;
          preimage_[yn] = xn;
          queue.push_back(xn);
        } else if (image_[xn] != yn) {
          return false;
        }
      }
    }
    return true;
  }

  const CayleyTable& g_;
  const CayleyTable& h_;
  std::vector<Index> gens_;
  std::vector<std::vector<Index>> candidates_;
  std::vector<Index> assigned_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> preimage_;
};

}  // namespace

std::optional<Isomorphism> are_isomorphic(const PermGroup& g,
                                          const PermGroup& h,
                                          std::size_t bound) {
  if (g.order() > bound || h.order() > bound) {
    throw std::length_error("are_isomorphic: group order exceeds bound " +
                            std::to_string(bound));
  }
  if (g.order() != h.order()) return std::nullopt;
  const CayleyTable gt(g, bound);
  const CayleyTable ht(h, bound);
  if (fingerprint(gt) != fingerprint(ht)) return std::nullopt;
  IsomorphismSearch search(gt, ht);
  if (!search.run()) return std::nullopt;
  return search.result();
}

bool verify_isomorphism(const PermGroup& g, const PermGroup& h,
                        const Isomorphism& iso) {
  if (g.order() != h.order()) return false;
  std::unordered_map<Permutation, Permutation, PermutationHash> map;
  std::vector<Permutation> queue{Permutation(g.degree())};
  map.emplace(queue.front(), Permutation(h.degree()));
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Permutation x = queue[q];
    const Permutation fx = map.at(x);
    for (const auto& [s, t] : iso.generator_images) {
      if (!g.contains(s) || !h.contains(t)) return false;
      Permutation xn = compose(x, s);
      Permutation yn = compose(fx, t);
      auto [it, inserted] = map.emplace(xn, yn);
      if (inserted) {
        queue.push_back(std::move(xn));
      } else if (it->second != yn) {
        return false;
      }
    }
  }
  if (map.size() != g.order()) return false;
  std::vector<Permutation> images;
  for (const auto& [x, y] : map) images.push_back(y);
  std::sort(images.begin(), images.end());
  if (images != h.elements()) return false;
  for (const auto& a : g.elements()) {
    for (const auto& b : g.elements()) {
      if (map.at(compose(a, b)) != compose(map.at(a), map.at(b))) return false;
    }
  }
  return true;
}

}  // namespace mobius
