#include <gtest/gtest.h>

#include "mobius/admissible.hpp"
#include "mobius/decoration.hpp"
#include "oracles.hpp"

using namespace mobius;

namespace {

// Independent stabilizer for simple graphs: every vertex permutation, edges
// matched by endpoints.
oracle::PermSet naive_stabilizer(const Decoration& d) {
  const Graph& g = d.graph();
  auto knot_on = [&](Vertex u, Vertex v) -> const EdgeKnot* {
    auto it = d.knots().find(g.edge_between(u, v));
    return it == d.knots().end() ? nullptr : &it->second;
  };
  oracle::PermSet out;
  for (const auto& p : oracle::naive_automorphisms(g)) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      const EdgeKnot* from = knot_on(e.u, e.v);
      const EdgeKnot* to = knot_on(p(e.u), p(e.v));
      if (!from || !to) {
        ok = !from && !to;
      } else {
        ok = from->label == to->label;
        if (ok && from->orientation) {
          ok = to->orientation ==
               Orientation{p(from->orientation->first), p(from->orientation->second)};
        }
      }
      if (!ok) break;
    }
    for (const auto& pair : d.knotted_around()) {
      if (!ok) break;
      const Edge& a = g.edge(pair.outer);
      const Edge& b = g.edge(pair.around);
      ok = d.knotted_around().count(
          {g.edge_between(p(a.u), p(a.v)), g.edge_between(p(b.u), p(b.v))});
    }
    if (ok) out.insert(p);
  }
  return out;
}

std::vector<Permutation> elements(const oracle::PermSet& s) {
  return {s.begin(), s.end()};
}

}  // namespace

TEST(Validate, WellFormedCatalog) {
  for (const auto& entry : catalog()) {
    EXPECT_TRUE(validate(entry.decoration).empty()) << entry.name;
  }
}

TEST(Validate, Problems) {
  Decoration d(k33().graph);
  d.add_knot(1, 4, KnotLabel{"A", false});
  d.add_knot(1, 5, KnotLabel{"B", true}, Orientation{1, 5});
  d.add_knot(1, 6, KnotLabel{"A", true});
  d.add_knot(2, 4, KnotLabel{"C", false}, Orientation{3, 4});
  d.add_knotted_around({1, 4}, {1, 4});
  d.add_knotted_around({1, 4}, {2, 5});
  const auto problems = validate(d);
  auto has = [&](const std::string& s) {
    return std::any_of(problems.begin(), problems.end(), [&](const auto& p) {
      return p.find(s) != std::string::npos;
    });
  };
  EXPECT_TRUE(has("missing orientation"));
  EXPECT_TRUE(has("orientation on invertible knot"));
  EXPECT_TRUE(has("inconsistent invertibility"));
  EXPECT_TRUE(has("does not match the edge endpoints"));
  EXPECT_TRUE(has("knotted around itself"));
  EXPECT_TRUE(has("no shared vertex"));
  EXPECT_THROW(stabilizer(d), std::invalid_argument);
}

TEST(Validate, ParallelEdgesCannotBeKnottedAround) {
  Decoration d(mobius_ladder(1).graph);
  d.add_knotted_around(0, 1);
  const auto problems = validate(d);
  ASSERT_FALSE(problems.empty());
  EXPECT_NE(problems.front().find("parallel"), std::string::npos);
}

TEST(Decoration, AddKnotErrors) {
  Decoration d(k33().graph);
  d.add_knot(0, KnotLabel{"A", true});
  EXPECT_THROW(d.add_knot(0, KnotLabel{"B", true}), std::invalid_argument);
  EXPECT_THROW(d.add_knot(99, KnotLabel{"B", true}), std::invalid_argument);
  EXPECT_THROW(d.add_knot(1, 2, KnotLabel{"B", true}), std::invalid_argument);
  EXPECT_THROW(d.add_knotted_around(0, 99), std::invalid_argument);
}

TEST(Stabilizer, EmptyDecorationIsAut) {
  EXPECT_EQ(stabilizer(Decoration(k33().graph)), k33_automorphisms());
}

TEST(Stabilizer, ThetaGraph) {
  const Graph theta = mobius_ladder(1).graph;
  EXPECT_EQ(stabilizer(Decoration(theta)).order(), 2u);
  Decoration one(theta);
  one.add_knot(0, KnotLabel{"A", true});
  EXPECT_EQ(stabilizer(one).order(), 2u);
  Decoration oriented(theta);
  oriented.add_knot(0, KnotLabel{"N", false}, Orientation{1, 2});
  EXPECT_EQ(stabilizer(oriented).order(), 1u);
  Decoration two(theta);
  two.add_knot(0, KnotLabel{"N", false}, Orientation{1, 2});
  two.add_knot(1, KnotLabel{"N", false}, Orientation{2, 1});
  EXPECT_EQ(stabilizer(two).order(), 2u);
}

TEST(Catalog, ElevenEntries) {
  const std::vector<std::size_t> orders = {12, 6, 6, 3, 4, 2, 36, 18, 18, 9, 1};
  ASSERT_EQ(catalog().size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const CatalogEntry& entry = catalog()[i];
    const PermGroup h = evaluate(entry);
    EXPECT_EQ(h.order(), orders[i]) << entry.name;
    EXPECT_EQ(recognize(h), entry.expected) << entry.name;
  }
  EXPECT_EQ(find_catalog_entry("hex-Z6")->expected, GroupName::cyclic(6));
  EXPECT_EQ(find_catalog_entry("nope"), nullptr);
}

TEST(Catalog, StabilizersMatchNaiveFilter) {
  for (const auto& entry : catalog()) {
    EXPECT_EQ(stabilizer(entry.decoration).elements(),
              elements(naive_stabilizer(entry.decoration)))
        << entry.name;
  }
}

TEST(Catalog, RefinedBoundIsIntersection) {
  const PermGroup adm = admissible_subgroup();
  for (const auto& entry : catalog()) {
    const auto naive = naive_stabilizer(entry.decoration);
    std::vector<Permutation> expected;
    for (const auto& p : naive) {
      if (std::binary_search(adm.elements().begin(), adm.elements().end(), p)) {
        expected.push_back(p);
      }
    }
    EXPECT_EQ(refined_upper_bound(entry.decoration).elements(), expected)
        << entry.name;
  }
}

TEST(Catalog, HexagonEntriesLieInsideAdmissible) {
  const PermGroup adm = admissible_subgroup();
  for (const auto& entry : catalog()) {
    if (entry.evaluation == Evaluation::Stabilizer) {
      EXPECT_TRUE(evaluate(entry).is_subgroup_of(adm)) << entry.name;
    }
  }
}

TEST(RefinedBound, OnlyForK33) {
  EXPECT_THROW(refined_upper_bound(Decoration(mobius_ladder(4).graph)),
               std::invalid_argument);
}

TEST(Ladder, Examples) {
  const PermGroup a = stabilizer(ladder_decoration(4, 2, true));
  EXPECT_EQ(a.order(), 4u);
  EXPECT_EQ(a.elements(), elements(naive_stabilizer(ladder_decoration(4, 2, true))));
  EXPECT_EQ(recognize(a), GroupName::dihedral(2));

  const PermGroup b = stabilizer(ladder_decoration(5, 5, false));
  EXPECT_EQ(b.order(), 5u);
  EXPECT_EQ(b.elements(), elements(naive_stabilizer(ladder_decoration(5, 5, false))));
  EXPECT_EQ(recognize(b), GroupName::cyclic(5));
}

TEST(Ladder, AllDivisors) {
  for (std::size_t n = 4; n <= 8; ++n) {
    for (std::size_t k = 2; k <= 2 * n; ++k) {
      if ((2 * n) % k) continue;
      EXPECT_EQ(stabilizer(ladder_decoration(n, k, true)).order(), 2 * k);
      EXPECT_EQ(stabilizer(ladder_decoration(n, k, false)).order(), k);
    }
  }
}

TEST(Ladder, Errors) {
  EXPECT_THROW(ladder_decoration(3, 2, true), std::invalid_argument);
  EXPECT_THROW(ladder_decoration(4, 3, true), std::invalid_argument);
  EXPECT_THROW(ladder_decoration(4, 1, true), std::invalid_argument);
}

TEST(DistinctLabels, TrivialStabilizer) {
  for (std::size_t n = 2; n <= 6; ++n) {
    EXPECT_EQ(stabilizer(distinct_labels(mobius_ladder(n).graph)).order(), 1u);
  }
}

TEST(Relabel, StabilizerIsConjugated) {
  const Permutation pi = perm_from_cycles({{1, 2, 4}, {3, 6}}, 6);
  for (const auto& entry : catalog()) {
    const PermGroup h = stabilizer(entry.decoration);
    const PermGroup moved = stabilizer(entry.decoration.relabeled(pi));
    EXPECT_EQ(moved, conjugate_group(h, pi)) << entry.name;
  }
}
