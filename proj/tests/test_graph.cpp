#include <gtest/gtest.h>

#include "mobius/graph.hpp"
#include "oracles.hpp"

using namespace mobius;

namespace {

std::set<std::pair<Vertex, Vertex>> pair_set(const CycleWitness& c) {
  const auto pairs = c.edge_pairs();
  return {pairs.begin(), pairs.end()};
}

}  // namespace

TEST(Graph, Basics) {
  Graph g(4);
  EXPECT_EQ(g.add_edge(1, 2), 0u);
  EXPECT_EQ(g.add_edge(2, 3), 1u);
  EXPECT_EQ(g.add_edge(2, 3), 2u);
  EXPECT_EQ(g.multiplicity(3, 2), 2u);
  EXPECT_EQ(g.degree(2), 3u);
  EXPECT_EQ(g.degree(4), 0u);
  EXPECT_FALSE(g.is_simple());
  EXPECT_EQ(g.edges_between(2, 3), (std::vector<EdgeId>{1, 2}));
  EXPECT_EQ(g.edge_between(1, 2), 0u);
  EXPECT_THROW(g.edge_between(2, 3), std::invalid_argument);
  EXPECT_THROW(g.edge_between(1, 4), std::invalid_argument);
}

TEST(Graph, Errors) {
  EXPECT_THROW(Graph(0), std::invalid_argument);
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(1, 4), std::invalid_argument);
}

TEST(MobiusLadder, Shape) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto [g, cycle] = mobius_ladder(n);
    EXPECT_EQ(g.vertex_count(), 2 * n);
    EXPECT_EQ(g.edges().size(), 3 * n);
    for (Vertex v = 1; v <= 2 * n; ++v) EXPECT_EQ(g.degree(v), 3u);
    ASSERT_TRUE(cycle.has_value());
    EXPECT_TRUE(is_cycle_of(g, *cycle));
    EXPECT_EQ(g.edge(0), (Edge{0, 1, 2}));
    EXPECT_EQ(g.edge(2 * n - 1), (Edge{2 * n - 1, 2 * static_cast<Vertex>(n), 1}));
    EXPECT_TRUE(g.has_edge(1, static_cast<Vertex>(n + 1)));
  }
}

TEST(MobiusLadder, ThetaGraph) {
  const auto [g, cycle] = mobius_ladder(1);
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.multiplicity(1, 2), 3u);
  EXPECT_FALSE(cycle.has_value());
  EXPECT_THROW(mobius_ladder(0), std::invalid_argument);
}

TEST(K33, Shape) {
  const auto [g, cycle] = k33();
  EXPECT_EQ(g.edges().size(), 9u);
  for (Vertex a = 1; a <= 3; ++a) {
    for (Vertex b = 4; b <= 6; ++b) EXPECT_TRUE(g.has_edge(a, b));
    for (Vertex b = 1; b <= 3; ++b) EXPECT_FALSE(g.has_edge(a, b));
  }
  ASSERT_TRUE(cycle.has_value());
  EXPECT_TRUE(is_cycle_of(g, *cycle));
}

TEST(Automorphisms, Orders) {
  EXPECT_EQ(automorphisms(mobius_ladder(1).graph).order(), 2u);
  EXPECT_EQ(automorphisms(mobius_ladder(2).graph).order(), 24u);
  EXPECT_EQ(automorphisms(k33().graph).order(), 72u);
  for (std::size_t n = 4; n <= 8; ++n) {
    EXPECT_EQ(automorphisms(mobius_ladder(n).graph).order(), 4 * n);
  }
}

TEST(Automorphisms, MatchNaiveOnSmallLadders) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Graph g = mobius_ladder(n).graph;
    const auto naive = oracle::naive_automorphisms(g);
    const PermGroup aut = automorphisms(g);
    EXPECT_EQ(std::vector<Permutation>(naive.begin(), naive.end()),
              aut.elements());
  }
}

TEST(Automorphisms, EachIsVerified) {
  const Graph g = mobius_ladder(6).graph;
  const PermGroup aut = automorphisms(g);
  for (const auto& p : aut.elements()) {
    EXPECT_TRUE(is_automorphism(g, p));
  }
  EXPECT_FALSE(is_automorphism(g, perm_from_cycles({{1, 2}}, 12)));
}

TEST(Automorphisms, DisconnectedAndEdgeless) {
  EXPECT_EQ(automorphisms(Graph(4)).order(), 24u);
  Graph two_edges(4);
  two_edges.add_edge(1, 2);
  two_edges.add_edge(3, 4);
  EXPECT_EQ(automorphisms(two_edges).order(), 8u);
}

TEST(Automorphisms, VertexBound) {
  EXPECT_THROW(automorphisms(mobius_ladder(9).graph), std::length_error);
  EXPECT_EQ(automorphisms(mobius_ladder(9).graph, 18).order(), 36u);
}

TEST(CyclePreservation, LaddersKeepTheirRim) {
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto [g, cycle] = mobius_ladder(n);
    EXPECT_TRUE(preserves_cycle(automorphisms(g), *cycle));
  }
}

TEST(CyclePreservation, SmallLaddersDoNot) {
  const auto [k4, square] = mobius_ladder(2);
  EXPECT_FALSE(preserves_cycle(automorphisms(k4), *square));
}

TEST(CyclePreservation, K33HexagonStabilizer) {
  const auto [g, hexagon] = k33();
  const auto edges = pair_set(*hexagon);
  // Brute force: the elements of Aut(K33) that map the hexagon onto itself.
  std::vector<Permutation> keepers;
  std::size_t violators = 0;
  for (const auto& p : oracle::naive_automorphisms(g)) {
    std::set<std::pair<Vertex, Vertex>> image;
    for (auto [u, v] : edges) image.insert(std::minmax(p(u), p(v)));
    if (image == edges) {
      keepers.push_back(p);
    } else {
      ++violators;
    }
  }
  EXPECT_EQ(keepers.size(), 12u);
  EXPECT_EQ(violators, 60u);
  EXPECT_FALSE(preserves_cycle(automorphisms(g), *hexagon));
  EXPECT_TRUE(preserves_cycle(PermGroup::from_elements(keepers), *hexagon));
}

TEST(CycleWitness, Validation) {
  const Graph g = mobius_ladder(4).graph;
  EXPECT_FALSE(is_cycle_of(g, CycleWitness{{1, 2}}));
  EXPECT_FALSE(is_cycle_of(g, CycleWitness{{1, 2, 3, 1}}));
  EXPECT_FALSE(is_cycle_of(g, CycleWitness{{1, 3, 4}}));
  EXPECT_TRUE(is_cycle_of(g, CycleWitness{{1, 2, 6, 5}}));
}

TEST(Relabel, MapsEdges) {
  const Graph g = mobius_ladder(4).graph;
  const Permutation pi = perm_from_cycles({{1, 3}}, 8);
  const Graph h = g.relabeled(pi);
  for (const auto& e : g.edges()) {
    EXPECT_TRUE(h.edge(e.id).joins(pi(e.u), pi(e.v)));
  }
}

TEST(GraphText, RoundTrip) {
  const Graph g = mobius_ladder(3).graph;
  const Graph h = parse_graph_text(to_graph_text(g));
  EXPECT_EQ(h.edges(), g.edges());
}

TEST(GraphText, CommentsAndBlankLines) {
  const Graph g = parse_graph_text("# triangle\nvertices 3\n\nedge 1 2\nedge 2 3\n# x\nedge 3 1\n");
  EXPECT_EQ(g.edges().size(), 3u);
  EXPECT_EQ(automorphisms(g).order(), 6u);
}

TEST(GraphText, ErrorsCarryLineNumbers) {
  auto message = [](const char* text) {
    try {
      parse_graph_text(text);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("vertices 3\nedge 1 4\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("edge 1 2\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("vertices 3\nvertex 1 2\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("vertices 3\nedge 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("").find("vertices"), std::string::npos);
}

TEST(BuiltinGraph, Names) {
  EXPECT_TRUE(builtin_graph("k33").has_value());
  EXPECT_EQ(builtin_graph("mobius:5")->graph.vertex_count(), 10u);
  EXPECT_FALSE(builtin_graph("petersen").has_value());
  EXPECT_THROW(builtin_graph("mobius:0"), std::invalid_argument);
  EXPECT_THROW(builtin_graph("mobius:x"), std::invalid_argument);
}
