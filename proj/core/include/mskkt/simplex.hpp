#pragma once

#include "mskkt/linalg.hpp"
#include "mskkt/rational.hpp"
#include "mskkt/types.hpp"

#include <vector>

namespace mskkt {

/// Point of the standard simplex with exact rational coordinates. The float
/// view is derived on demand and never authoritative.
class SimplexPoint {
 public:
  explicit SimplexPoint(RatVec coords);  // validates: coords >= 0, sum == 1

  int dimension() const { return static_cast<int>(coords_.size()); }
  const Rat& operator[](int i) const { return coords_[i]; }
  const RatVec& coords() const { return coords_; }
  VertexSet support() const;
  bool has_full_support() const;
  bool is_characteristic() const;  // constant on its support
  std::vector<double> to_doubles() const;

  bool operator==(const SimplexPoint&) const = default;

 private:
  RatVec coords_;
};

/// Uniform weight 1/|s| on s, zero elsewhere.
SimplexPoint characteristic_vector(int n, const VertexSet& s);

/// Classes of equal coordinate value over the support, ordered by decreasing
/// value (ties cannot occur across classes).
VertexFamily induced_partition(const SimplexPoint& x);

/// True iff coordinates are constant on every class, i.e. the partition is at
/// least as fine as the induced one. `p` must partition supp(x).
bool separates_distinct_values(const SimplexPoint& x, const VertexFamily& p);

struct BarycentricCoords {
  RatVec y;  // in the simplex of dimension |family|
  VertexFamily family;
};

/// The unique y with x = sum_l y_l * characteristic_vector(V_l). Defined when
/// x lies in the convex hull of the family's characteristic vectors; throws
/// "not representable" otherwise.
BarycentricCoords barycentric(const SimplexPoint& x, const VertexFamily& fam);

/// Hull membership specialized to disjoint characteristic vectors: x must be
/// constant on each class and zero outside the union.
bool in_hull_of_family(const SimplexPoint& x, const VertexFamily& fam);

/// sum_l y_l * characteristic_vector(V_l) for y in the k-simplex.
SimplexPoint lift_from_family(int n, const VertexFamily& fam, const RatVec& y);

}  // namespace mskkt
