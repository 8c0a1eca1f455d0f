#include "mskkt/graph.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <set>

using namespace mskkt;
using namespace mskkt::test;

TEST_CASE("graph construction invariants") {
  const Graph g = cherry();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(0, 1));
  for (int i = 0; i < 3; ++i) CHECK_FALSE(g.adjacent(i, i));
  CHECK_THROWS_WITH_AS(from_edges1(3, {{1, 1}}), "loops not allowed", std::invalid_argument);
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  // duplicate edges collapse
  CHECK(from_edges1(3, {{1, 3}, {3, 1}, {1, 3}, {2, 3}}) == cherry());
}

TEST_CASE("complement") {
  CHECK(complement(cherry()) == from_edges1(3, {{1, 2}}));
  CHECK(complement(complete_graph(4)) == empty_graph(4));
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_graph(rng, 6, 0.5);
    CHECK(complement(complement(g)) == g);
    for (int i = 0; i < 6; ++i) CHECK(g.degree(i) + complement(g).degree(i) == 5);
  }
}

TEST_CASE("induced subgraphs") {
  CHECK(induced_subgraph(cherry(), VS({1, 2})).graph == empty_graph(2));
  CHECK(induced_subgraph(cherry(), VS({2, 3})).graph == complete_graph(2));
  CHECK(induced_subgraph(complete_graph(5), VS({1, 3, 5})).graph == complete_graph(3));
  CHECK(induced_subgraph(cherry(), VS({2, 3})).labels == VS({2, 3}));
  CHECK_THROWS_WITH_AS(induced_subgraph(cherry(), {}), "empty induced set", std::invalid_argument);
}

TEST_CASE("regularity") {
  CHECK_FALSE(is_regular(cherry()));
  CHECK(regular_degree(cycle_graph(4)) == 2);
  CHECK(regular_degree(Graph(1)) == 0);
  CHECK(regular_degree(complete_graph(4)) == 3);
}

TEST_CASE("edge counting and density") {
  const Graph g = cherry();
  CHECK(edge_count_between(g, VS({1, 2}), VS({3})) == 2);
  CHECK(edge_count_between(g, VS({1, 2}), VS({1, 2})) == 0);
  CHECK(edge_count_between(complete_graph(3), VS({1, 2, 3}), VS({1, 2, 3})) == 6);
  CHECK(edge_density(g, VS({1, 2}), VS({3})) == Rat(1));
  CHECK(edge_density(complete_graph(3), VS({1, 2, 3}), VS({1, 2, 3})) == make_rat(2, 3));
  CHECK(edge_density(paw(), VS({1, 2}), VS({3, 4})) == make_rat(1, 2));
  CHECK_THROWS_AS(edge_count_between(g, {}, VS({1})), std::invalid_argument);

  std::mt19937 rng(17);
  for (int t = 0; t < 30; ++t) {
    const Graph r = random_graph(rng, 7, 0.4);
    const VertexSet s1 = random_support(rng, 7), s2 = random_support(rng, 7);
    CHECK(edge_count_between(r, s1, s2) == edge_count_between(r, s2, s1));
    const Rat d = edge_density(r, s1, s2);
    CHECK(d >= 0);
    CHECK(d <= 1);
  }
}

TEST_CASE("density matrix") {
  SUBCASE("paw graph two-block values") {
    const DensityMatrix dm = density_matrix(paw(), VertexFamily({VS({1, 2}), VS({3, 4})}));
    CHECK(dm.d[0][0] == make_rat(1, 2));
    CHECK(dm.d[0][1] == make_rat(1, 2));
    CHECK(dm.d[1][0] == make_rat(1, 2));
    CHECK(dm.d[1][1] == make_rat(1, 2));
    CHECK(dm.class_sizes == std::vector<int>{2, 2});
  }
  SUBCASE("cherry periphery/core") {
    const DensityMatrix dm = density_matrix(cherry(), VertexFamily({VS({1, 2}), VS({3})}));
    CHECK(dm.d[0][0] == Rat(0));
    CHECK(dm.d[0][1] == Rat(1));
    CHECK(dm.d[1][1] == Rat(0));
    CHECK(dm.class_sizes == std::vector<int>{2, 1});
  }
  SUBCASE("single clique class") {
    for (int m = 1; m <= 4; ++m) {
      const DensityMatrix dm = density_matrix(complete_graph(m), VertexFamily({complete_graph(m).vertices()}));
      CHECK(dm.d[0][0] == make_rat(m - 1, m));
    }
  }
  SUBCASE("overlapping classes rejected") {
    CHECK_THROWS_AS(VertexFamily({VS({1, 2}), VS({2, 3})}), std::invalid_argument);
    CHECK_THROWS_AS(VertexFamily({VS({1}), {}}), std::invalid_argument);
  }
  SUBCASE("diagonal characterizes cliques and independent sets") {
    std::mt19937 rng(23);
    for (int t = 0; t < 25; ++t) {
      const Graph g = random_graph(rng, 6, 0.5);
      const VertexSet s = random_support(rng, 6);
      const Rat diag = edge_density(g, s, s);
      const long size = static_cast<long>(s.size());
      CHECK((diag == make_rat(size - 1, size)) == is_clique(g, s));
      CHECK((diag == 0) == is_independent_set(g, s));
    }
  }
}

TEST_CASE("maximal cliques and clique number") {
  CHECK(maximal_cliques(cherry()) == std::vector<VertexSet>{VS({1, 3}), VS({2, 3})});
  CHECK(clique_number(cherry()) == 2);
  CHECK(maximal_cliques(complete_graph(5)) == std::vector<VertexSet>{VS({1, 2, 3, 4, 5})});
  CHECK(maximal_cliques(cycle_graph(5)).size() == 5);
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(empty_graph(3)) == 1);

  std::mt19937 rng(29);
  for (int t = 0; t < 25; ++t) {
    const int n = 4 + t % 7;
    const Graph g = random_graph(rng, n, 0.5);
    CHECK(clique_number(g) == brute_force_clique_number(g));
    // every maximal clique is a clique and none contains another
    const auto cliques = maximal_cliques(g);
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      CHECK(is_clique(g, cliques[i]));
      for (std::size_t j = 0; j < cliques.size(); ++j) {
        if (i == j) continue;
        CHECK(set_intersection(cliques[i], cliques[j]) != cliques[i]);
      }
    }
  }
}

TEST_CASE("automorphisms") {
  SUBCASE("cherry: identity and the leaf swap") {
    const auto perms = automorphisms(cherry());
    REQUIRE(perms.size() == 2);
    CHECK(perms[0] == Permutation{0, 1, 2});
    CHECK(perms[1] == Permutation{1, 0, 2});
  }
  SUBCASE("triangle: all six permutations") { CHECK(automorphisms(complete_graph(3)).size() == 6); }
  SUBCASE("path on four vertices: identity and the reversal") {
    const auto perms = automorphisms(path_graph(4));
    REQUIRE(perms.size() == 2);
    CHECK(perms[1] == Permutation{3, 2, 1, 0});
  }
  SUBCASE("search limit") {
    CHECK_THROWS_WITH_AS(automorphisms(empty_graph(17)), "automorphism search limit",
                         std::invalid_argument);
    CHECK_THROWS_AS(automorphisms(empty_graph(4), 3), std::invalid_argument);
  }
}

TEST_CASE("automorphism group axioms") {
  std::mt19937 rng(31);
  std::vector<Graph> subjects{cherry(), path_graph(4), cycle_graph(4), cycle_graph(5),
                              complete_graph(4), bowtie()};
  for (int t = 0; t < 6; ++t) subjects.push_back(random_graph(rng, 5 + t % 4, 0.5));
  for (const Graph& g : subjects) {
    const auto perms = automorphisms(g);
    const std::set<Permutation> group(perms.begin(), perms.end());
    CHECK(group.count(identity_permutation(g.vertex_count())) == 1);
    for (const auto& a : perms) {
      Permutation inverse(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) inverse[a[i]] = static_cast<int>(i);
      CHECK(group.count(inverse) == 1);
      for (const auto& b : perms) CHECK(group.count(compose(a, b)) == 1);
    }
  }
}

TEST_CASE("subgraph automorphisms fix the rest") {
  // G[{1,3,4}] is a triangle, so all six permutations lift; the pendant vertex
  // 2 stays fixed in every lifted permutation.
  const auto lifted = subgraph_automorphisms(paw(), VS({1, 3, 4}));
  CHECK(lifted.size() == 6);
  for (const auto& p : lifted) CHECK(p[1] == 1);
}

TEST_CASE("principal submatrix nonsingularity") {
  // cherry adjacency is singular: rows of the two leaves coincide
  CHECK_FALSE(principal_submatrix_nonsingular(cherry(), VS({1, 2, 3}), Rat(0)));
  CHECK_FALSE(principal_submatrix_nonsingular(cherry(), VS({1, 2}), Rat(0)));  // edgeless block
  CHECK(principal_submatrix_nonsingular(cherry(), VS({1, 3}), Rat(0)));        // det = -1
  CHECK(principal_submatrix_nonsingular(cherry(), VS({1, 2, 3}), Rat(4)));     // Gershgorin
  std::mt19937 rng(37);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_graph(rng, 6, 0.5);
    const VertexSet s = random_support(rng, 6);
    CHECK(principal_submatrix_nonsingular(g, s, Rat(static_cast<long>(s.size()) + 1)));
  }
}
