#pragma once

#include "mskkt/graph.hpp"
#include "mskkt/kkt.hpp"
#include "mskkt/simplex.hpp"

#include <optional>
#include <vector>

namespace mskkt {

/// A family is highly regular when every single vertex sees each class with
/// the class-level density: each block is regular and cross-degrees are
/// constant within each class.
bool is_highly_regular(const Graph& g, const VertexFamily& fam);

/// Every highly regular partition of s, by exhaustive enumeration. Partition
/// counts grow like the Bell numbers, so supports above size_limit are
/// refused; pass a candidate family to is_highly_regular directly instead.
std::vector<VertexFamily> highly_regular_partitions(const Graph& g, const VertexSet& s,
                                                    int size_limit = 10);

/// The k-variable program over the relative interior of the k-simplex with
/// quadratic form D + c * Lambda^{-1}, obtained by collapsing each class of
/// the family to its characteristic vector.
struct ReducedProgram {
  DensityMatrix dm;
  Rat c;
  VertexFamily family;

  RatMat reduced_matrix() const;  // D + c * Lambda^{-1}
};
ReducedProgram reduce(const Graph& g, const Rat& c, const VertexFamily& fam);

/// Interior stationarity of the reduced program: ((D + c*Lambda^{-1}) y)_l is
/// the same for every l. y must lie in the relative interior of the simplex.
bool reduced_kkt_check(const ReducedProgram& rp, const RatVec& y);

/// All solutions of the reduced interior condition (possibly a family).
StationaryFamily solve_reduced(const ReducedProgram& rp);

/// Collapsing a generalized KKT point along a separating partition of its
/// support always yields an interior KKT point of the reduced program; exposed
/// as a checkable predicate for property tests.
bool forward_reduction_holds(const Graph& g, const Rat& c, const SimplexPoint& x,
                             const VertexFamily& p);

/// With a highly regular separating partition the reduction is exact:
/// membership of x and the reduced condition for bary(x) are equivalent.
/// Returns whether the two sides agree; requires the partition to be highly
/// regular.
bool converse_reduction_holds(const Graph& g, const Rat& c, const SimplexPoint& x,
                              const VertexFamily& p);

/// Exact description of the generalized KKT points on the segment between the
/// characteristic vectors of a highly regular pair {V1, V2}.
struct TwoBlockReport {
  int n = 0;
  VertexSet v1, v2;
  DensityMatrix dm;
  Rat alpha;  // |V2| * (d12 - d22)
  Rat beta;   // |V1| * (d21 - d11)
  bool regular_case = false;  // alpha == beta, equivalently G[V1 ∪ V2] regular
  Rat c_star;                 // regular case: the exceptional parameter
  Rat a, b;                   // irregular case: the excluded interval [a, b]

  enum class Segment {
    WholeSegment,           // regular, c == c*
    ThreePoints,            // regular, c != c*: endpoints and x^{V1 ∪ V2}
    EndpointsOnly,          // irregular, c in [a, b]
    EndpointsWithInterior,  // irregular, c outside [a, b]: endpoints and x_c
  };
  Segment segment_membership(const Rat& c) const;

  /// The distinguished non-endpoint member: x_c in the irregular case (defined
  /// for c outside [a, b]), x^{V1 ∪ V2} in the regular case for c != c*.
  /// Empty when the whole segment qualifies (regular, c == c*).
  std::optional<SimplexPoint> interior_point(const Rat& c) const;
};
TwoBlockReport two_block_analysis(const Graph& g, const VertexSet& v1, const VertexSet& v2);

/// Complete core fully joined to a regular, non-complete periphery.
struct GeneralizedStar {
  VertexSet core;       // H, induces a complete graph
  VertexSet periphery;  // P, induces a d-regular graph, joined to all of H
  int periphery_degree = 0;  // d
  int b = 0;                 // |P| - d, always > 1 here
};

/// Checks the definition on G[core ∪ periphery]; nullopt when any condition
/// fails (including G[core ∪ periphery] complete).
std::optional<GeneralizedStar> detect_generalized_star(const Graph& g, const VertexSet& core,
                                                       const VertexSet& periphery);

/// Closed-form generalized KKT point with support core ∪ periphery, defined
/// for c outside [1, b]:
///   y1 = (c-1)p / ((c-1)p + (c-b)h),  y2 = (c-b)h / ((c-1)p + (c-b)h),
///   x  = y1 * x^P + y2 * x^H.
/// Membership and support are verified exactly before returning.
SimplexPoint genstar_kkt_point(const Graph& g, const GeneralizedStar& star, const Rat& c);

/// Cliques sharing exactly one common core, petals forming a regular
/// non-complete periphery: the star construction produces a generalized KKT
/// point with full support that leaves the hull of the clique characteristic
/// vectors whenever c != c0 = (q-b)/(q-1).
struct SharedCoreReport {
  SimplexPoint point;
  bool outside_hull = false;
  Rat c0;
  int b = 0;
};
SharedCoreReport shared_core_analysis(const Graph& g, const std::vector<VertexSet>& cliques,
                                      const Rat& c);

}  // namespace mskkt
