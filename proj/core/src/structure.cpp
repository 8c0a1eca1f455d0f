#include "mskkt/structure.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace mskkt {

bool is_highly_regular(const Graph& g, const VertexFamily& fam) {
  const std::size_t k = fam.size();
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t m = 0; m < k; ++m) {
      const VertexSet& vl = fam.cls(l);
      const VertexSet& vm = fam.cls(m);
      const long class_pairs = edge_count_between(g, vl, vm);
      for (int i : vl) {
        // d({i}, Vm) == d(Vl, Vm)  <=>  e({i}, Vm) * |Vl| == e(Vl, Vm)
        long single = 0;
        for (int j : vm) {
          if (g.adjacent(i, j)) ++single;
        }
        if (single * static_cast<long>(vl.size()) != class_pairs) return false;
      }
    }
  }
  return true;
}

std::vector<VertexFamily> highly_regular_partitions(const Graph& g, const VertexSet& s,
                                                    int size_limit) {
  if (s.empty()) throw std::invalid_argument("empty vertex set");
  if (static_cast<int>(s.size()) > size_limit) {
    throw std::invalid_argument("support too large for exhaustive partition search (limit " +
                                std::to_string(size_limit) + ")");
  }
  const int m = static_cast<int>(s.size());
  std::vector<VertexFamily> out;
  std::vector<int> assign(m, 0);
  // restricted growth strings enumerate each partition exactly once
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == m) {
      std::vector<VertexSet> classes(max_used + 1);
      for (int j = 0; j < m; ++j) classes[assign[j]].push_back(s[j]);
      VertexFamily fam(std::move(classes));
      if (is_highly_regular(g, fam)) out.push_back(std::move(fam));
      return;
    }
    for (int a = 0; a <= max_used + 1 && a < m; ++a) {
      assign[i] = a;
      rec(i + 1, std::max(max_used, a));
    }
  };
  rec(0, -1);
  return out;
}

RatMat ReducedProgram::reduced_matrix() const {
  const std::size_t k = dm.order();
  RatMat m = dm.d;
  for (std::size_t l = 0; l < k; ++l) m[l][l] += c / Rat(dm.class_sizes[l]);
  return m;
}

ReducedProgram reduce(const Graph& g, const Rat& c, const VertexFamily& fam) {
  return ReducedProgram{density_matrix(g, fam), c, fam};
}

bool reduced_kkt_check(const ReducedProgram& rp, const RatVec& y) {
  if (y.size() != rp.dm.order()) throw std::invalid_argument("dimension mismatch");
  Rat sum(0);
  for (const Rat& v : y) {
    if (v <= 0) {
      throw std::invalid_argument(
          "reduced program is defined over the relative interior of the simplex");
    }
    sum += v;
  }
  if (sum != 1) throw std::invalid_argument("weights must sum to 1");

  const RatVec row = mat_vec(rp.reduced_matrix(), y);
  for (std::size_t l = 1; l < row.size(); ++l) {
    if (row[l] != row[0]) return false;
  }
  return true;
}

StationaryFamily solve_reduced(const ReducedProgram& rp) {
  return solve_constant_row_sum(rp.reduced_matrix());
}

namespace {

void require_separating_partition(const SimplexPoint& x, const VertexFamily& p) {
  if (!p.partitions(x.support())) {
    throw std::invalid_argument("family does not partition the support of the point");
  }
  if (!separates_distinct_values(x, p)) {
    throw std::invalid_argument("partition does not separate distinct coordinate values");
  }
}

}  // namespace

bool forward_reduction_holds(const Graph& g, const Rat& c, const SimplexPoint& x,
                             const VertexFamily& p) {
  require_separating_partition(x, p);
  if (!classify({g, c}, x).is_generalized()) {
    throw std::invalid_argument("point is not a generalized KKT point for this c");
  }
  const BarycentricCoords bc = barycentric(x, p);
  return reduced_kkt_check(reduce(g, c, p), bc.y);
}

bool converse_reduction_holds(const Graph& g, const Rat& c, const SimplexPoint& x,
                              const VertexFamily& p) {
  require_separating_partition(x, p);
  if (!is_highly_regular(g, p)) {
    throw std::invalid_argument("requires a highly regular partition");
  }
  const bool member = classify({g, c}, x).is_generalized();
  const BarycentricCoords bc = barycentric(x, p);
  const bool reduced = reduced_kkt_check(reduce(g, c, p), bc.y);
  return member == reduced;
}

TwoBlockReport two_block_analysis(const Graph& g, const VertexSet& v1, const VertexSet& v2) {
  const VertexFamily fam({v1, v2});
  if (!is_highly_regular(g, fam)) {
    throw std::invalid_argument("family {V1, V2} is not highly regular");
  }

  TwoBlockReport r;
  r.n = g.vertex_count();
  r.v1 = v1;
  r.v2 = v2;
  r.dm = density_matrix(g, fam);
  r.alpha = Rat(static_cast<long>(v2.size())) * (r.dm.d[0][1] - r.dm.d[1][1]);
  r.beta = Rat(static_cast<long>(v1.size())) * (r.dm.d[1][0] - r.dm.d[0][0]);
  r.regular_case = (r.alpha == r.beta);

  const bool union_regular = is_regular(induced_subgraph(g, set_union(v1, v2)).graph);
  if (r.regular_case != union_regular) {
    throw std::logic_error("alpha == beta must match regularity of the union subgraph");
  }

  if (r.regular_case) {
    r.c_star = r.alpha;
  } else {
    r.a = std::min(r.alpha, r.beta);
    r.b = std::max(r.alpha, r.beta);
  }
  return r;
}

TwoBlockReport::Segment TwoBlockReport::segment_membership(const Rat& c) const {
  if (regular_case) {
    return c == c_star ? Segment::WholeSegment : Segment::ThreePoints;
  }
  return (c >= a && c <= b) ? Segment::EndpointsOnly : Segment::EndpointsWithInterior;
}

std::optional<SimplexPoint> TwoBlockReport::interior_point(const Rat& c) const {
  if (regular_case) {
    if (c == c_star) return std::nullopt;
    return characteristic_vector(n, set_union(v1, v2));
  }
  if (c >= a && c <= b) return std::nullopt;
  const Rat w1 = (c - alpha) * Rat(static_cast<long>(v1.size()));
  const Rat w2 = (c - beta) * Rat(static_cast<long>(v2.size()));
  const Rat y1 = w1 / (w1 + w2);
  const Rat y2 = w2 / (w1 + w2);
  return lift_from_family(n, VertexFamily({v1, v2}), {y1, y2});
}

std::optional<GeneralizedStar> detect_generalized_star(const Graph& g, const VertexSet& core,
                                                       const VertexSet& periphery) {
  if (core.empty() || periphery.empty()) return std::nullopt;
  if (!set_intersection(core, periphery).empty()) return std::nullopt;
  for (int h : core) {
    for (int p : periphery) {
      if (!g.adjacent(h, p)) return std::nullopt;  // core joined to all of the periphery
    }
  }
  if (!is_clique(g, core)) return std::nullopt;
  const InducedSubgraph per = induced_subgraph(g, periphery);
  const std::optional<int> d = regular_degree(per.graph);
  if (!d) return std::nullopt;
  if (is_complete(per.graph)) return std::nullopt;  // makes G[core ∪ periphery] complete

  GeneralizedStar star;
  star.core = core;
  star.periphery = periphery;
  star.periphery_degree = *d;
  star.b = static_cast<int>(periphery.size()) - *d;
  return star;
}

SimplexPoint genstar_kkt_point(const Graph& g, const GeneralizedStar& star, const Rat& c) {
  const Rat b(star.b);
  if (c >= 1 && c <= b) {
    throw std::invalid_argument("no closed-form point for c in [1, b]");
  }
  const long p = static_cast<long>(star.periphery.size());
  const long h = static_cast<long>(star.core.size());
  const Rat w1 = (c - 1) * Rat(p);
  const Rat w2 = (c - b) * Rat(h);
  const Rat y1 = w1 / (w1 + w2);
  const Rat y2 = w2 / (w1 + w2);
  SimplexPoint x =
      lift_from_family(g.vertex_count(), VertexFamily({star.periphery, star.core}), {y1, y2});

  if (!classify({g, c}, x).is_generalized()) {
    throw std::logic_error("star construction failed the membership check");
  }
  if (x.support() != set_union(star.core, star.periphery)) {
    throw std::logic_error("star construction changed the support");
  }
  return x;
}

SharedCoreReport shared_core_analysis(const Graph& g, const std::vector<VertexSet>& cliques,
                                      const Rat& c) {
  const std::size_t q = cliques.size();
  if (q < 2) throw std::invalid_argument("need at least two cliques");
  for (std::size_t i = 0; i < q; ++i) {
    if (!is_clique(g, cliques[i])) {
      throw std::invalid_argument("set " + label_string(cliques[i]) + " is not a clique");
    }
    for (std::size_t j = i + 1; j < q; ++j) {
      if (cliques[i] == cliques[j]) throw std::invalid_argument("cliques must be distinct");
    }
  }
  VertexSet core = cliques[0];
  for (const VertexSet& cl : cliques) core = set_intersection(core, cl);
  if (core.empty()) throw std::invalid_argument("cliques have an empty common intersection");
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i + 1; j < q; ++j) {
      if (set_intersection(cliques[i], cliques[j]) != core) {
        throw std::invalid_argument("pairwise intersections differ from the common core");
      }
    }
    if (set_difference(cliques[i], core).empty()) {
      throw std::invalid_argument("clique " + label_string(cliques[i]) +
                                  " equals the shared core");
    }
  }

  VertexSet periphery;
  for (const VertexSet& cl : cliques) periphery = set_union(periphery, set_difference(cl, core));
  const std::optional<GeneralizedStar> star = detect_generalized_star(g, core, periphery);
  if (!star) {
    throw std::invalid_argument("periphery is not a regular, non-complete induced subgraph");
  }

  const Rat c0 = Rat(static_cast<long>(q) - star->b) / Rat(static_cast<long>(q) - 1);
  if (c == c0 || (c >= 1 && c <= Rat(star->b))) {
    throw std::invalid_argument("excluded parameter value: c must avoid c0 and [1, b]");
  }

  SharedCoreReport report{genstar_kkt_point(g, *star, c), false, c0, star->b};

  // Hull membership has forced coefficients: on each petal the weight must be
  // (petal coordinate) * |C_l|. The point is in the hull iff those weights are
  // convex and their combination reproduces x.
  const SimplexPoint& x = report.point;
  RatVec weights(q);
  Rat total(0);
  bool in_hull = true;
  for (std::size_t l = 0; l < q; ++l) {
    const VertexSet petal = set_difference(cliques[l], core);
    weights[l] = x[petal.front()] * Rat(static_cast<long>(cliques[l].size()));
    if (weights[l] < 0) in_hull = false;
    total += weights[l];
  }
  if (total != 1) in_hull = false;
  if (in_hull) {
    RatVec combo(x.dimension(), Rat(0));
    for (std::size_t l = 0; l < q; ++l) {
      const Rat share = weights[l] / Rat(static_cast<long>(cliques[l].size()));
      for (int i : cliques[l]) combo[i] += share;
    }
    in_hull = (combo == x.coords());
  }
  report.outside_hull = !in_hull;
  return report;
}

}  // namespace mskkt
