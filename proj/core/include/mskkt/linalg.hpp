#pragma once

#include "mskkt/rational.hpp"

#include <optional>
#include <vector>

namespace mskkt {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

RatMat identity_matrix(int k);
RatVec mat_vec(const RatMat& m, const RatVec& v);
Rat determinant(RatMat m);

/// Full solution set of A x = b: one particular solution plus a kernel basis.
struct AffineSolution {
  bool consistent = false;
  RatVec particular;
  std::vector<RatVec> kernel;
};
AffineSolution solve_linear(RatMat a, RatVec b);

/// Solution set of M y = lambda*1, sum(y) = 1 for a square rational M,
/// together with an analysis of its nonnegative slice.
///
/// The multiplier lambda is constant across the whole family whenever M is
/// symmetric, which is the only way this is used; the solver checks it.
struct StationaryFamily {
  bool consistent = false;
  Rat lambda;
  RatVec particular;             // one solution, may have nonpositive entries
  std::vector<RatVec> kernel;    // directions within {sum = 0}
  std::vector<RatVec> vertices;  // vertices of {family} ∩ {y >= 0} (dimension >= 1 only)
  std::optional<RatVec> interior;  // strictly positive member, when one exists

  int dimension() const { return static_cast<int>(kernel.size()); }
};
StationaryFamily solve_constant_row_sum(const RatMat& m);

}  // namespace mskkt
