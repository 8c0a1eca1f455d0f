#pragma once

#include "mskkt/linalg.hpp"
#include "mskkt/rational.hpp"
#include "mskkt/types.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mskkt {

/// Undirected unweighted graph on vertices 0..n-1, immutable after
/// construction. Adjacency is symmetric with an empty diagonal; safe for
/// concurrent reads.
class Graph {
 public:
  explicit Graph(int n);  // edgeless
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  bool adjacent(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j] != 0; }
  int degree(int i) const { return degree_[i]; }
  const std::vector<int>& degrees() const { return degree_; }
  int edge_count() const { return edge_count_; }
  VertexSet vertices() const;
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<int> degree_;
};

Graph complement(const Graph& g);

/// Induced subgraph relabeled to 0..|s|-1; labels[new] = original vertex.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> labels;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_regular(const Graph& g);
/// Common degree when regular, nullopt otherwise.
std::optional<int> regular_degree(const Graph& g);
bool is_complete(const Graph& g);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent_set(const Graph& g, const VertexSet& s);

/// Ordered adjacent pairs in s1 x s2. Symmetric in its arguments; an edge with
/// both ends in s1 ∩ s2 is counted twice.
long edge_count_between(const Graph& g, const VertexSet& s1, const VertexSet& s2);
Rat edge_density(const Graph& g, const VertexSet& s1, const VertexSet& s2);

/// Pairwise edge densities of a family, indexed in class enumeration order,
/// with the diagonal class-size matrix alongside.
struct DensityMatrix {
  RatMat d;
  std::vector<int> class_sizes;
  std::size_t order() const { return class_sizes.size(); }
};
DensityMatrix density_matrix(const Graph& g, const VertexFamily& fam);

/// All maximal cliques (pivoted backtracking), each sorted, list sorted.
std::vector<VertexSet> maximal_cliques(const Graph& g);
int clique_number(const Graph& g);

using Permutation = std::vector<int>;
Permutation identity_permutation(int n);
Permutation compose(const Permutation& sigma, const Permutation& tau);  // sigma after tau

inline constexpr int kDefaultAutomorphismLimit = 16;

/// The full automorphism group as explicit permutations, lexicographically
/// sorted. Backtracking with degree pruning; refuses graphs above the limit.
std::vector<Permutation> automorphisms(const Graph& g, int search_limit = kDefaultAutomorphismLimit);

/// Automorphisms of G[s] lifted to permutations of the whole vertex set that
/// fix every vertex outside s.
std::vector<Permutation> subgraph_automorphisms(const Graph& g, const VertexSet& s,
                                                int search_limit = kDefaultAutomorphismLimit);

/// Exact test det(A[s,s] + c*I) != 0, i.e. -c is not an eigenvalue of A[s,s].
bool principal_submatrix_nonsingular(const Graph& g, const VertexSet& s, const Rat& c);

}  // namespace mskkt
