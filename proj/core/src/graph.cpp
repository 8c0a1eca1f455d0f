#include "mskkt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mskkt {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  degree_.assign(n, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) + "}");
    }
    if (i == j) throw std::invalid_argument("loops not allowed");
    if (adjacent(i, j)) continue;  // duplicates collapse
    adj_[static_cast<std::size_t>(i) * n_ + j] = 1;
    adj_[static_cast<std::size_t>(j) * n_ + i] = 1;
    ++degree_[i];
    ++degree_[j];
    ++edge_count_;
  }
}

VertexSet Graph::vertices() const {
  VertexSet v(n_);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

namespace {

void check_vertex_range(const Graph& g, const VertexSet& s) {
  if (!is_sorted_unique(s)) throw std::invalid_argument("vertex set must be sorted and duplicate-free");
  if (!s.empty() && (s.front() < 0 || s.back() >= g.vertex_count())) {
    throw std::invalid_argument("vertex label out of range in " + label_string(s));
  }
}

}  // namespace

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("empty induced set");
  check_vertex_range(g, s);
  const int m = static_cast<int>(s.size());
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (g.adjacent(s[a], s[b])) edges.emplace_back(a, b);
    }
  }
  return InducedSubgraph{Graph(m, edges), s};
}

bool is_regular(const Graph& g) { return regular_degree(g).has_value(); }

std::optional<int> regular_degree(const Graph& g) {
  const int d = g.degree(0);
  for (int i = 1; i < g.vertex_count(); ++i) {
    if (g.degree(i) != d) return std::nullopt;
  }
  return d;
}

bool is_complete(const Graph& g) {
  const int n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  check_vertex_range(g, s);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (!g.adjacent(s[a], s[b])) return false;
    }
  }
  return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  check_vertex_range(g, s);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (g.adjacent(s[a], s[b])) return false;
    }
  }
  return true;
}

long edge_count_between(const Graph& g, const VertexSet& s1, const VertexSet& s2) {
  if (s1.empty() || s2.empty()) throw std::invalid_argument("edge count between empty sets");
  check_vertex_range(g, s1);
  check_vertex_range(g, s2);
  long count = 0;
  for (int i : s1) {
    for (int j : s2) {
      if (g.adjacent(i, j)) ++count;
    }
  }
  return count;
}

Rat edge_density(const Graph& g, const VertexSet& s1, const VertexSet& s2) {
  const long e = edge_count_between(g, s1, s2);
  Rat d(e, static_cast<long>(s1.size()) * static_cast<long>(s2.size()));
  d.canonicalize();
  return d;
}

DensityMatrix density_matrix(const Graph& g, const VertexFamily& fam) {
  const std::size_t k = fam.size();
  DensityMatrix dm;
  dm.d.assign(k, RatVec(k, Rat(0)));
  dm.class_sizes.resize(k);
  for (std::size_t l = 0; l < k; ++l) {
    check_vertex_range(g, fam.cls(l));
    dm.class_sizes[l] = static_cast<int>(fam.cls(l).size());
  }
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t m = l; m < k; ++m) {
      Rat d = edge_density(g, fam.cls(l), fam.cls(m));
      dm.d[l][m] = d;
      dm.d[m][l] = d;
    }
  }
  return dm;
}

namespace {

// Bron-Kerbosch with greedy pivoting over word-packed vertex sets.
class CliqueEnumerator {
 public:
  explicit CliqueEnumerator(const Graph& g)
      : n_(g.vertex_count()), words_((n_ + 63) / 64), nbr_(n_, Bits(words_, 0)) {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (g.adjacent(i, j)) nbr_[i][j / 64] |= (std::uint64_t{1} << (j % 64));
      }
    }
  }

  std::vector<VertexSet> run() {
    Bits p(words_, 0), x(words_, 0);
    for (int i = 0; i < n_; ++i) p[i / 64] |= (std::uint64_t{1} << (i % 64));
    VertexSet r;
    expand(r, p, x);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  using Bits = std::vector<std::uint64_t>;

  static bool any(const Bits& b) {
    for (auto w : b) {
      if (w) return true;
    }
    return false;
  }

  int count_and(const Bits& a, const Bits& b) const {
    int c = 0;
    for (int w = 0; w < words_; ++w) c += __builtin_popcountll(a[w] & b[w]);
    return c;
  }

  void expand(VertexSet& r, Bits p, Bits x) {
    if (!any(p) && !any(x)) {
      VertexSet clique = r;
      std::sort(clique.begin(), clique.end());
      out_.push_back(std::move(clique));
      return;
    }
    // pivot u maximizing |P ∩ N(u)| over P ∪ X
    int pivot = -1, best = -1;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t both = p[w] | x[w];
      while (both) {
        const int u = w * 64 + __builtin_ctzll(both);
        both &= both - 1;
        const int score = count_and(p, nbr_[u]);
        if (score > best) {
          best = score;
          pivot = u;
        }
      }
    }
    for (int w = 0; w < words_; ++w) {
      std::uint64_t cand = p[w] & ~(pivot >= 0 ? nbr_[pivot][w] : 0);
      while (cand) {
        const int v = w * 64 + __builtin_ctzll(cand);
        cand &= cand - 1;
        Bits p2(words_), x2(words_);
        for (int t = 0; t < words_; ++t) {
          p2[t] = p[t] & nbr_[v][t];
          x2[t] = x[t] & nbr_[v][t];
        }
        r.push_back(v);
        expand(r, p2, x2);
        r.pop_back();
        p[w] &= ~(std::uint64_t{1} << (v % 64));
        x[v / 64] |= (std::uint64_t{1} << (v % 64));
      }
    }
  }

  int n_;
  int words_;
  std::vector<Bits> nbr_;
  std::vector<VertexSet> out_;
};

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) { return CliqueEnumerator(g).run(); }

int clique_number(const Graph& g) {
  std::size_t best = 0;
  for (const auto& c : maximal_cliques(g)) best = std::max(best, c.size());
  return static_cast<int>(best);
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation out(sigma.size());
  for (std::size_t i = 0; i < tau.size(); ++i) out[i] = sigma[tau[i]];
  return out;
}

namespace {

void extend_automorphism(const Graph& g, Permutation& image, std::vector<bool>& used, int v,
                         std::vector<Permutation>& out) {
  const int n = g.vertex_count();
  if (v == n) {
    out.push_back(image);
    return;
  }
  for (int u = 0; u < n; ++u) {
    if (used[u] || g.degree(u) != g.degree(v)) continue;
    bool ok = true;
    for (int w = 0; w < v; ++w) {
      if (g.adjacent(v, w) != g.adjacent(u, image[w])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    image[v] = u;
    used[u] = true;
    extend_automorphism(g, image, used, v + 1, out);
    used[u] = false;
  }
}

}  // namespace

std::vector<Permutation> automorphisms(const Graph& g, int search_limit) {
  if (g.vertex_count() > search_limit) throw std::invalid_argument("automorphism search limit");
  std::vector<Permutation> out;
  Permutation image(g.vertex_count(), -1);
  std::vector<bool> used(g.vertex_count(), false);
  extend_automorphism(g, image, used, 0, out);
  return out;  // lexicographically sorted by construction
}

std::vector<Permutation> subgraph_automorphisms(const Graph& g, const VertexSet& s,
                                                int search_limit) {
  InducedSubgraph sub = induced_subgraph(g, s);
  std::vector<Permutation> lifted;
  for (const Permutation& p : automorphisms(sub.graph, search_limit)) {
    Permutation full = identity_permutation(g.vertex_count());
    for (std::size_t a = 0; a < s.size(); ++a) full[sub.labels[a]] = sub.labels[p[a]];
    lifted.push_back(std::move(full));
  }
  std::sort(lifted.begin(), lifted.end());
  return lifted;
}

bool principal_submatrix_nonsingular(const Graph& g, const VertexSet& s, const Rat& c) {
  if (s.empty()) throw std::invalid_argument("empty vertex set");
  check_vertex_range(g, s);
  const std::size_t m = s.size();
  RatMat a(m, RatVec(m, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    a[i][i] = c;
    for (std::size_t j = 0; j < m; ++j) {
      if (g.adjacent(s[i], s[j])) a[i][j] += 1;
    }
  }
  return determinant(std::move(a)) != 0;
}

}  // namespace mskkt
