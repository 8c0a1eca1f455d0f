// Acceptance suite: one criterion per entry, one pass/fail line each, exact
// tolerances pinned in code. Exit status is the number of failed criteria.

#include "mskkt/kkt.hpp"
#include "mskkt/replicator.hpp"
#include "mskkt/structure.hpp"

#include "../test_util.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace mskkt;
using namespace mskkt::test;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double budget_seconds;  // wall-clock cap; <= 0 means uncapped
  std::function<Outcome()> run;
};

const std::vector<Rat> kSweep{Rat(-2), Rat(0), make_rat(1, 2), Rat(1), Rat(3)};

SimplexPoint midpoint(const SimplexPoint& a, const SimplexPoint& b) {
  RatVec coords(a.dimension());
  for (int i = 0; i < a.dimension(); ++i) coords[i] = (a[i] + b[i]) / 2;
  return SimplexPoint(std::move(coords));
}

// All strictly positive members worth exercising from one support solve.
std::vector<SimplexPoint> sample_points(const SupportSolveResult& res) {
  std::vector<SimplexPoint> out = res.points;
  if (!res.points.empty()) {
    for (const SimplexPoint& v : res.family_vertices) out.push_back(midpoint(res.points[0], v));
  }
  return out;
}

std::vector<VertexSet> all_supports(int n) {
  std::vector<VertexSet> out;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    VertexSet s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1ul << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// 1. The cherry graph's interior point is exactly KKT at c = 0, in under 1 ms.
Outcome cherry_classification() {
  const Graph g = cherry();
  const SimplexPoint x({make_rat(1, 4), make_rat(1, 4), make_rat(1, 2)});
  const ParametricProgram prog{g, Rat(0)};

  classify(prog, x);  // warm-up
  const auto t0 = std::chrono::steady_clock::now();
  const KktCertificate cert = classify(prog, x);
  const auto t1 = std::chrono::steady_clock::now();
  const double micros = std::chrono::duration<double, std::micro>(t1 - t0).count();

  if (cert.verdict != Verdict::Kkt) return {false, "verdict " + verdict_name(cert.verdict)};
  if (cert.lambda != make_rat(1, 2)) return {false, "lambda " + rational_string(cert.lambda)};
  if (micros >= 1000.0) return {false, "classification took " + std::to_string(micros) + "us"};
  std::ostringstream detail;
  detail << "KKT with lambda 1/2 in " << micros << "us";
  return {true, detail.str()};
}

// 2. Over all 64 labeled 4-vertex graphs, all 15 supports, five parameters:
//    characteristic vector stationarity <=> induced subgraph regularity.
Outcome characteristic_sweep() {
  long checks = 0;
  for (unsigned long mask = 0; mask < labeled_graph_count(4); ++mask) {
    const Graph g = graph_from_mask(4, mask);
    for (const VertexSet& s : all_supports(4)) {
      const bool regular = is_regular(induced_subgraph(g, s).graph);
      const SimplexPoint x = characteristic_vector(4, s);
      for (const Rat& c : kSweep) {
        ++checks;
        if (classify({g, c}, x).is_generalized() != regular) {
          return {false, "mismatch at graph mask " + std::to_string(mask) + " support " +
                             label_string(s) + " c=" + rational_string(c)};
        }
      }
    }
  }
  return {true, std::to_string(checks) + " exact checks, zero failures"};
}

// 3. 1000 random (graph, c, point) triples: membership for the complement at c
//    equals membership for the graph at 1-c, exactly.
Outcome complement_duality() {
  std::mt19937 rng(20240811);
  long checks = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 7;
    const Graph g = random_graph(rng, n, 0.2 + 0.1 * (trial % 7));
    std::uniform_int_distribution<int> den(1, 7);
    const int d = den(rng);
    const Rat c = make_rat(std::uniform_int_distribution<int>(-3 * d, 3 * d)(rng), d);

    SimplexPoint x = random_simplex_point(rng, n, 6, 0.3);
    const int kind = trial % 3;
    if (kind == 1) {
      x = characteristic_vector(n, random_support(rng, n));
    } else if (kind == 2) {
      const SupportSolveResult res = solve_on_support({complement(g), c}, random_support(rng, n));
      if (!res.points.empty()) x = res.points[0];
    }
    ++checks;
    if (!complement_duality_holds(g, c, x)) {
      return {false, "duality failed at trial " + std::to_string(trial)};
    }
  }
  return {true, std::to_string(checks) + " random triples, zero failures"};
}

// 4. Symmetrizing any scanned stationary point by the full automorphism group
//    of its support subgraph keeps support and membership, exactly.
Outcome symmetrization() {
  std::mt19937 rng(424243);
  const std::vector<Rat> cs{Rat(0), make_rat(1, 2), Rat(-1)};
  long points_checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const Graph g = random_graph(rng, n, 0.25 + 0.1 * (trial % 6));
    for (const VertexSet& s : all_supports(n)) {
      const auto group = subgraph_automorphisms(g, s);
      for (const Rat& c : cs) {
        const ParametricProgram prog{g, c};
        for (const SimplexPoint& x : sample_points(solve_on_support(prog, s))) {
          ++points_checked;
          SimplexPoint averaged = symmetrize(prog, x, group);
          if (averaged.support() != s) return {false, "support changed"};
          if (!classify(prog, averaged).is_generalized()) return {false, "membership lost"};
          for (const Permutation& sigma : group) {
            for (int i : s) {
              if (averaged[sigma[i]] != averaged[i]) return {false, "invariance failed"};
            }
          }
        }
      }
    }
  }
  return {true, std::to_string(points_checked) + " stationary points symmetrized, zero failures"};
}

// 5. On every graph with n <= 5: lifted solutions of the reduced interior
//    condition over every highly regular partition are exactly stationary, and
//    every scanned stationary point passes its induced-partition reduction.
Outcome reduction_round_trip() {
  long lifted = 0, reduced = 0;
  for (int n = 1; n <= 5; ++n) {
    for (unsigned long mask = 0; mask < labeled_graph_count(n); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      for (const VertexSet& s : all_supports(n)) {
        // forward direction, sampled from the scans
        for (const Rat& c : kSweep) {
          const ParametricProgram prog{g, c};
          for (const SimplexPoint& x : sample_points(solve_on_support(prog, s))) {
            ++reduced;
            if (!forward_reduction_holds(g, c, x, induced_partition(x))) {
              return {false, "forward reduction failed (n=" + std::to_string(n) + ")"};
            }
          }
        }
        // constructive direction over highly regular partitions
        for (const VertexFamily& fam : highly_regular_partitions(g, s)) {
          for (const Rat& c : kSweep) {
            const ReducedProgram rp = reduce(g, c, fam);
            const StationaryFamily sol = solve_reduced(rp);
            if (!sol.consistent || !sol.interior) continue;
            std::vector<RatVec> ys{*sol.interior};
            for (const RatVec& v : sol.vertices) {
              RatVec mid(v.size());
              bool positive = true;
              for (std::size_t i = 0; i < v.size(); ++i) {
                mid[i] = ((*sol.interior)[i] + v[i]) / 2;
                if (mid[i] <= 0) positive = false;
              }
              if (positive) ys.push_back(std::move(mid));
            }
            for (const RatVec& y : ys) {
              ++lifted;
              if (!reduced_kkt_check(rp, y)) {
                return {false, "reduced condition lost on a family member"};
              }
              const SimplexPoint x = lift_from_family(n, fam, y);
              if (!classify({g, c}, x).is_generalized()) {
                return {false, "lift of a reduced solution is not stationary"};
              }
              if (!converse_reduction_holds(g, c, x, fam)) {
                return {false, "reduction equivalence failed"};
              }
            }
          }
        }
      }
    }
  }
  std::ostringstream detail;
  detail << lifted << " lifted solutions and " << reduced
         << " induced-partition reductions, zero failures";
  return {true, detail.str()};
}

// 6. The paw graph's even two-block split passes the reduced condition at every
//    parameter while the uniform vector is never stationary.
Outcome paw_reduction_gap() {
  const Graph g = paw();
  const VertexFamily fam({VS({1, 2}), VS({3, 4})});
  const SimplexPoint x = characteristic_vector(4, VS({1, 2, 3, 4}));
  const RatVec even{make_rat(1, 2), make_rat(1, 2)};
  const DensityMatrix dm = density_matrix(g, fam);
  const Rat half = make_rat(1, 2);
  if (dm.d != RatMat{{half, half}, {half, half}}) return {false, "density matrix mismatch"};
  if (dm.class_sizes != std::vector<int>{2, 2}) return {false, "class size mismatch"};
  for (const Rat& c : {Rat(-1), Rat(0), make_rat(1, 2), Rat(1), Rat(2)}) {
    if (!reduced_kkt_check(reduce(g, c, fam), even)) {
      return {false, "reduced condition failed at c=" + rational_string(c)};
    }
    if (classify({g, c}, x).verdict != Verdict::NotStationary) {
      return {false, "uniform vector unexpectedly stationary at c=" + rational_string(c)};
    }
  }
  return {true, "reduced condition holds for every c while the full point never does"};
}

// 7. The star closed form at c = 0 reproduces the cherry's interior point
//    through an independent formula path.
Outcome star_cross_validation() {
  const Graph g = cherry();
  const auto star = detect_generalized_star(g, VS({3}), VS({1, 2}));
  if (!star) return {false, "cherry star not detected"};
  if (star->b != 2 || star->periphery_degree != 0) return {false, "star parameters wrong"};
  const SimplexPoint x = genstar_kkt_point(g, *star, Rat(0));
  const SimplexPoint expected({make_rat(1, 4), make_rat(1, 4), make_rat(1, 2)});
  if (!(x == expected)) return {false, "closed form disagrees"};
  return {true, "closed form reproduces (1/4, 1/4, 1/2) exactly"};
}

// 8. Two triangles sharing a vertex: the constructed point is exactly
//    stationary, fully supported, and outside the hull of the triangle vectors.
Outcome shared_core_outside_hull() {
  const Graph g = bowtie();
  const std::vector<VertexSet> cliques{VS({1, 2, 3}), VS({1, 4, 5})};
  const SharedCoreReport rep = shared_core_analysis(g, cliques, Rat(0));
  if (rep.b != 3) return {false, "b mismatch"};
  if (rep.c0 != Rat(-1)) return {false, "c0 mismatch"};
  if (!classify({g, Rat(0)}, rep.point).is_generalized()) return {false, "not stationary"};
  if (!rep.point.has_full_support()) return {false, "support not full"};
  if (!rep.outside_hull) return {false, "point reported inside the hull"};
  RatVec mean(5, Rat(0));
  for (const VertexSet& cl : cliques) {
    for (int i : cl) mean[i] += make_rat(1, 2 * 3);
  }
  if (rep.point.coords() == mean) return {false, "point equals the arithmetic mean"};
  return {true, "gKKT point with full support differs from the clique mean"};
}

// 9. Exhaustive scans at c = 0: the best objective value over KKT points equals
//    1 - 1/omega, with omega from brute-force clique enumeration.
Outcome max_clique_value() {
  std::vector<Graph> subjects;
  for (int n = 1; n <= 4; ++n) {
    for (unsigned long mask = 0; mask < labeled_graph_count(n); ++mask) {
      subjects.push_back(graph_from_mask(n, mask));
    }
  }
  std::mt19937 rng(99991);
  for (int t = 0; t < 100; ++t) subjects.push_back(random_graph(rng, 5 + t % 2, 0.45));

  for (std::size_t idx = 0; idx < subjects.size(); ++idx) {
    const Graph& g = subjects[idx];
    const ParametricProgram prog{g, Rat(0)};
    Rat best(-1);
    for (const VertexSet& s : all_supports(g.vertex_count())) {
      const SupportSolveResult res = solve_on_support(prog, s);
      for (const SimplexPoint& x : res.points) {
        if (classify(prog, x).verdict == Verdict::Kkt && res.lambda > best) best = res.lambda;
      }
    }
    const int omega = brute_force_clique_number(g);
    const Rat expected = Rat(1) - make_rat(1, omega);
    if (best != expected) {
      return {false, "graph " + std::to_string(idx) + ": best " + rational_string(best) +
                         " expected " + rational_string(expected)};
    }
  }
  return {true, std::to_string(subjects.size()) + " graphs agree with 1 - 1/omega exactly"};
}

// 10. 400 seeded interior starts across 20 random graphs at c = 1/2: at least
//     95% end with KKT residual below 1e-5 and the objective never drops by
//     more than 1e-9 in any step.
Outcome replicator_convergence() {
  std::mt19937_64 rng(5150);
  auto canonical = [&rng]() {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
  };

  IntegrateOptions opt;
  opt.t_end = 500.0;
  opt.dt = 0.01;
  opt.record_stride = 50000;

  int runs = 0, converged = 0;
  long violations = 0;
  for (int gi = 0; gi < 20; ++gi) {
    const int n = 2 + static_cast<int>(rng() % 9);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (canonical() < 0.5) edges.emplace_back(i, j);
      }
    }
    const Graph g(n, edges);
    for (int s = 0; s < 20; ++s) {
      std::vector<double> x0(n);
      double sum = 0.0;
      for (double& v : x0) {
        double u;
        do {
          u = canonical();
        } while (u <= 0.0);
        v = -std::log(u);
        sum += v;
      }
      for (double& v : x0) v /= sum;

      const Trajectory t = integrate(g, 0.5, x0, opt);
      ++runs;
      violations += t.lyapunov_violations;
      if (kkt_residual(g, 0.5, t.terminal()) < 1e-5) ++converged;
    }
  }
  std::ostringstream detail;
  detail << converged << "/" << runs << " runs below 1e-5 residual, " << violations
         << " objective drops";
  if (violations != 0) return {false, detail.str()};
  if (converged * 100 < runs * 95) return {false, detail.str()};
  return {true, detail.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"cherry-kkt-classification", 5.0, cherry_classification},
      {"characteristic-stationarity-sweep", 10.0, characteristic_sweep},
      {"complement-parameter-duality", 30.0, complement_duality},
      {"symmetrization-preserves-membership", 0.0, symmetrization},
      {"reduction-round-trip", 120.0, reduction_round_trip},
      {"paw-graph-reduction-gap", 5.0, paw_reduction_gap},
      {"star-formula-cross-validation", 5.0, star_cross_validation},
      {"shared-core-outside-hull", 5.0, shared_core_outside_hull},
      {"max-clique-objective-value", 60.0, max_clique_value},
      {"replicator-convergence", 120.0, replicator_convergence},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (criteria[i].budget_seconds > 0 && seconds > criteria[i].budget_seconds) {
      outcome.pass = false;
      outcome.detail += " [over budget " + std::to_string(criteria[i].budget_seconds) + "s]";
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %02zu %-38s (%6.2fs) %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), seconds, outcome.detail.c_str());
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures;
}
