#pragma once

#include "mskkt/graph.hpp"
#include "mskkt/linalg.hpp"
#include "mskkt/simplex.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mskkt {

/// The parametric program: maximize x^T (A + c*I) x over the standard simplex.
struct ParametricProgram {
  Graph graph;
  Rat c;
};

enum class Verdict { Kkt, GeneralizedOnly, NotStationary };
std::string verdict_name(Verdict v);

/// Exact membership certificate. lambda equals the objective value; the
/// multipliers are mu_0 = -2*lambda and mu = 2*(lambda*1 - (A + cI)x), which
/// turn the stationarity conditions into the definition of a KKT point.
struct KktCertificate {
  Verdict verdict = Verdict::NotStationary;
  Rat lambda;
  RatVec mu;
  std::optional<int> witness;  // index violating the failed condition

  bool is_generalized() const { return verdict != Verdict::NotStationary; }
  bool is_kkt() const { return verdict == Verdict::Kkt; }
};

/// (A + c*I) x, exact.
RatVec payoff_vector(const ParametricProgram& p, const SimplexPoint& x);
Rat objective(const ParametricProgram& p, const SimplexPoint& x);

/// Exact classification: KKT iff the payoff is lambda on the support and at
/// most lambda off it; generalized-only when just the support condition holds.
KktCertificate classify(const ParametricProgram& p, const SimplexPoint& x);

/// Characteristic vectors are generalized KKT points for every c or for none:
/// membership is equivalent to regularity of the induced subgraph.
bool characteristic_gkkt_test(const Graph& g, const VertexSet& s);

/// For a non-characteristic point, the unique c making it a generalized KKT
/// point, if one exists. Rejects characteristic vectors, whose membership does
/// not depend on c.
std::optional<Rat> unique_c_recovery(const Graph& g, const SimplexPoint& x);

/// Group-average of x under automorphisms of the support subgraph. The result
/// keeps the support, keeps generalized KKT membership, and is invariant under
/// every permutation of the group; all three are verified exactly.
SimplexPoint symmetrize(const ParametricProgram& p, const SimplexPoint& x,
                        const std::vector<Permutation>& group);

/// Raw invariance check, no preconditions: x_{sigma(i)} == x_i for every
/// automorphism sigma of G[supp(x)].
bool coordinates_respect_automorphisms(const Graph& g, const SimplexPoint& x,
                                       int search_limit = kDefaultAutomorphismLimit);

/// Invariance guarantee for KKT points whose support submatrix has -c outside
/// its spectrum. Enforces both preconditions (error names the violated one)
/// and returns the verified invariance result.
bool orbit_invariance_check(const ParametricProgram& p, const SimplexPoint& x,
                            int search_limit = kDefaultAutomorphismLimit);

/// Support patterns that rule out generalized KKT points at c = 1 (an adjacent
/// witness pair) or c = 0 (a nonadjacent one).
enum class ObstructionCase { BlocksCOne, BlocksCZero };

struct Obstruction {
  ObstructionCase kind;
  std::array<int, 3> witness;  // (i1, i2, i3): i1 !~ i3, i2 ~ i3
};

std::optional<Obstruction> obstruction_applies(const Graph& g, const VertexSet& s);
std::optional<Obstruction> find_obstruction(const Graph& g, const VertexSet& s,
                                            ObstructionCase kind);

enum class SolveStatus { Empty, Unique, NonUnique };

/// Generalized KKT points with support exactly s: solutions of the exact
/// linear system (A+cI)x = lambda*1 on s, sum(x)=1, restricted to x > 0 on s.
/// A degenerate system yields a NonUnique family description: a basis point
/// plus kernel generators, the nonnegative slice's vertices, and an interior
/// representative when the slice meets the open face.
struct SupportSolveResult {
  SolveStatus status = SolveStatus::Empty;
  std::vector<SimplexPoint> points;  // Unique: the point. NonUnique: interior representative.
  Rat lambda;
  RatVec family_basis;                     // full-length, NonUnique only
  std::vector<RatVec> family_generators;   // full-length, NonUnique only
  std::vector<SimplexPoint> family_vertices;  // boundary members (support may shrink)

  bool realizes_support() const { return !points.empty(); }
};
SupportSolveResult solve_on_support(const ParametricProgram& p, const VertexSet& s);

/// Membership in the generalized KKT set of the complement graph at c equals
/// membership for the original graph at 1-c; exposed as a testable predicate.
bool complement_duality_holds(const Graph& g, const Rat& c, const SimplexPoint& x);

// ---- float bridge for replicator trajectories ----

enum class ApproxVerdict { Kkt, GeneralizedOnly, NotStationary };

struct ApproxCertificate {
  ApproxVerdict verdict = ApproxVerdict::NotStationary;
  double lambda = 0.0;
  double residual = 0.0;
};

/// Residual of the KKT conditions at a float point: max over the numerical
/// support of |(Mx)_i - f| and over the rest of the positive part of
/// (Mx)_i - f. Coordinates at or below support_eps count as off-support.
double kkt_residual(const Graph& g, double c, std::span<const double> x,
                    double support_eps = 1e-8);

ApproxCertificate classify_approx(const Graph& g, double c, std::span<const double> x,
                                  double eps = 1e-7, double support_eps = 1e-8);

/// Round float coordinates to rationals with denominators at most
/// max_denominator, then renormalize exactly to the simplex. Tiny negative
/// coordinates (>= -1e-12) are clamped to zero.
SimplexPoint rationalize_point(std::span<const double> x, long max_denominator = 1000000);

}  // namespace mskkt
