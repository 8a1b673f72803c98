#include <gtest/gtest.h>

#include "mobius/admissible.hpp"
#include "mobius/golden.hpp"
#include "mobius/group_name.hpp"
#include "mobius/named_automorphisms.hpp"
#include "oracles.hpp"

using namespace mobius;

TEST(Admissible, Representatives) {
  const auto reps = admissible_representatives();
  ASSERT_EQ(reps.size(), 5u);
  for (const auto& r : reps) {
    EXPECT_TRUE(k33_automorphisms().contains(r.representative));
    EXPECT_EQ(r.cycle_type, r.representative.cycle_type());
  }
}

TEST(Admissible, FastPathAgreesWithConjugacy) {
  for (const auto& p : k33_automorphisms().elements()) {
    EXPECT_EQ(is_admissible(p), is_admissible_by_conjugacy(p))
        << to_cycle_string(p);
  }
}

TEST(Admissible, BruteForceCount) {
  // Oracle: conjugates of the representatives, by scanning all 72 elements.
  const auto& elements = k33_automorphisms().elements();
  oracle::PermSet admissible = {Permutation(6)};
  for (const auto& r : admissible_representatives()) {
    for (const auto& c : elements) {
      admissible.insert(c * r.representative * c.inverse());
    }
  }
  EXPECT_EQ(admissible.size(), 36u);
  const PermGroup adm = admissible_subgroup();
  EXPECT_EQ(adm.elements(), std::vector<Permutation>(admissible.begin(), admissible.end()));
}

TEST(Admissible, SubgroupIsD3xD3) {
  const PermGroup adm = admissible_subgroup();
  EXPECT_EQ(adm.order(), 36u);
  EXPECT_EQ(recognize(adm), GroupName::direct_product({GroupName::dihedral(3),
                                                       GroupName::dihedral(3)}));
  EXPECT_EQ(adm, PermGroup::generate({named::f(), named::g(), named::phi(),
                                      named::psi()}));
}

TEST(Admissible, TranspositionsAreExcluded) {
  EXPECT_FALSE(is_admissible(perm_from_cycles({{1, 2}}, 6)));
  EXPECT_TRUE(is_admissible(named::phi()));
  EXPECT_TRUE(is_admissible(named::psi()));
  EXPECT_THROW(is_admissible(perm_from_cycles({{1, 4}}, 6)), std::invalid_argument);
}

TEST(Admissible, ElementWiseFilterAgrees) {
  const auto direct = admissible_subgroups();
  EXPECT_EQ(direct.size(), golden::kSubgroupsOfAdmissible);
  EXPECT_EQ(admissible_subgroups(true), direct);
}

TEST(Transposition, Detection) {
  EXPECT_TRUE(is_transposition(perm_from_cycles({{2, 5}}, 6)));
  EXPECT_FALSE(is_transposition(Permutation(6)));
  EXPECT_FALSE(is_transposition(named::phi()));
  EXPECT_FALSE(is_transposition(perm_from_cycles({{1, 2, 3}}, 6)));
}
