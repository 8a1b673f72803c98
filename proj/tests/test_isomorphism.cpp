#include <gtest/gtest.h>

#include "mobius/admissible.hpp"
#include "mobius/group_name.hpp"
#include "mobius/isomorphism.hpp"
#include "mobius/named_automorphisms.hpp"
#include "oracles.hpp"

using namespace mobius;
using named::f;
using named::g;
using named::phi;
using named::psi;

namespace {

std::vector<PermGroup> pool() {
  return {
      PermGroup::trivial(6),
      PermGroup::generate({f() * psi()}),
      PermGroup::generate({f(), phi()}),
      PermGroup::generate({psi(), phi()}),
      PermGroup::generate({f(), g()}),
      PermGroup::generate({f(), g(), phi()}),
      PermGroup::generate({f(), g(), psi()}),
      PermGroup::generate({f() * psi(), phi()}),
      reference_group(GroupName::cyclic(6)),
      reference_group(GroupName::dihedral(3)),
      reference_group(GroupName::dihedral(6)),
      reference_group(GroupName::dihedral(2)),
      reference_group(GroupName::cyclic(4)),
  };
}

}  // namespace

TEST(Isomorphic, CyclicSix) {
  const PermGroup a = PermGroup::generate({f() * psi()});
  const PermGroup b = reference_group(GroupName::cyclic(6));
  const auto iso = are_isomorphic(a, b);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(verify_isomorphism(a, b, *iso));
}

TEST(Isomorphic, OrderEighteenPairDiffers) {
  const PermGroup a = PermGroup::generate({f(), g(), phi()});
  const PermGroup b = PermGroup::generate({f(), g(), psi()});
  ASSERT_EQ(a.order(), 18u);
  ASSERT_EQ(b.order(), 18u);
  // Brute-force invariant: involution counts differ.
  EXPECT_EQ(oracle::involutions(a.elements()), 9u);
  EXPECT_EQ(oracle::involutions(b.elements()), 3u);
  EXPECT_FALSE(are_isomorphic(a, b).has_value());
}

TEST(Isomorphic, TrivialGroups) {
  EXPECT_TRUE(are_isomorphic(PermGroup::trivial(1), PermGroup::trivial(6)));
}

TEST(Isomorphic, TwoEmbeddingsOfZ3xZ3) {
  const PermGroup a = PermGroup::generate({f(), g()});
  const PermGroup b = PermGroup::generate(
      {perm_from_cycles({{1, 2, 3}}, 6), perm_from_cycles({{4, 5, 6}}, 6)});
  const auto iso = are_isomorphic(a, b);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(verify_isomorphism(a, b, *iso));
}

TEST(Isomorphic, ReflexiveAndSymmetricOnPool) {
  const auto groups = pool();
  for (const auto& a : groups) {
    const auto self = are_isomorphic(a, a);
    ASSERT_TRUE(self.has_value());
    EXPECT_TRUE(verify_isomorphism(a, a, *self));
    for (const auto& b : groups) {
      const auto ab = are_isomorphic(a, b);
      const auto ba = are_isomorphic(b, a);
      EXPECT_EQ(ab.has_value(), ba.has_value());
      if (ab) {
        EXPECT_TRUE(verify_isomorphism(a, b, *ab));
        EXPECT_EQ(fingerprint(a), fingerprint(b));
      }
    }
  }
}

TEST(Isomorphic, Z4AndD2Differ) {
  EXPECT_FALSE(are_isomorphic(reference_group(GroupName::cyclic(4)),
                              reference_group(GroupName::dihedral(2))));
}

TEST(Isomorphic, BoundExceeded) {
  const PermGroup& aut = k33_automorphisms();
  EXPECT_THROW(are_isomorphic(aut, aut, 50), std::length_error);
}

TEST(VerifyIsomorphism, RejectsBadMaps) {
  const PermGroup a = PermGroup::generate({f() * psi()});
  const PermGroup b = reference_group(GroupName::cyclic(6));
  Isomorphism bad;
  // Sending a generator of order 6 to the identity is not injective.
  bad.generator_images = {{f() * psi(), Permutation(b.degree())}};
  EXPECT_FALSE(verify_isomorphism(a, b, bad));
}

TEST(Fingerprint, Fields) {
  const Fingerprint fp = fingerprint(PermGroup::generate({f(), g(), phi()}));
  EXPECT_EQ(fp.order, 18u);
  EXPECT_EQ(fp.order_spectrum.at(2), 9u);
  EXPECT_EQ(fp.order_spectrum.at(3), 8u);
  EXPECT_FALSE(fp.abelian);
  EXPECT_EQ(fp.center_order, 1u);
  EXPECT_EQ(fp.derived_subgroup_order, 9u);
  std::size_t total = 0;
  for (auto s : fp.conj_class_sizes) total += s;
  EXPECT_EQ(total, 18u);
}

TEST(Fingerprint, RecomputationIsIdempotent) {
  const PermGroup h = k33_automorphisms();
  EXPECT_EQ(fingerprint(h), fingerprint(h));
  EXPECT_EQ(fingerprint(h), fingerprint(CayleyTable(h)));
}

TEST(Fingerprint, DirectProductMatchesConcreteProduct) {
  const PermGroup d3xd3 = PermGroup::generate({f(), g(), phi(), psi()});
  const Fingerprint d3 = fingerprint(reference_group(GroupName::dihedral(3)));
  EXPECT_EQ(direct_product_fingerprint(d3, d3), fingerprint(d3xd3));
  const Fingerprint z3 = fingerprint(reference_group(GroupName::cyclic(3)));
  EXPECT_EQ(direct_product_fingerprint(d3, z3),
            fingerprint(PermGroup::generate({f(), g(), psi()})));
}
