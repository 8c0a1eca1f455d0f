#include "mskkt/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace mskkt {

RatMat identity_matrix(int k) {
  RatMat m(k, RatVec(k, Rat(0)));
  for (int i = 0; i < k; ++i) m[i][i] = 1;
  return m;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw std::invalid_argument("dimension mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

Rat determinant(RatMat m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  }
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rat inv = Rat(1) / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rat factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

AffineSolution solve_linear(RatMat a, RatVec b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("dimension mismatch");
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto& row : a) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }

  // Gauss-Jordan to reduced row echelon form on [A | b].
  std::vector<int> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);
    const Rat inv = Rat(1) / a[rank][col];
    for (std::size_t c = col; c < cols; ++c) a[rank][c] *= inv;
    b[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rat factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
      b[r] -= factor * b[rank];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++rank;
  }

  AffineSolution out;
  for (std::size_t r = rank; r < rows; ++r) {
    if (b[r] != 0) return out;  // 0 = nonzero row: inconsistent
  }
  out.consistent = true;

  std::vector<int> pivot_row_of_col(cols, -1);
  for (std::size_t r = 0; r < rank; ++r) pivot_row_of_col[pivot_col_of_row[r]] = static_cast<int>(r);

  out.particular.assign(cols, Rat(0));
  for (std::size_t r = 0; r < rank; ++r) out.particular[pivot_col_of_row[r]] = b[r];

  for (std::size_t col = 0; col < cols; ++col) {
    if (pivot_row_of_col[col] >= 0) continue;
    RatVec dir(cols, Rat(0));
    dir[col] = 1;
    for (std::size_t r = 0; r < rank; ++r) dir[pivot_col_of_row[r]] = -a[r][col];
    out.kernel.push_back(std::move(dir));
  }
  return out;
}

namespace {

// Vertices of {y = base + K t : y >= 0}; the slice is bounded because every
// member sums to 1 and is nonnegative. Enumerate d-subsets of active
// coordinates, solve for t, keep feasible solutions.
std::vector<RatVec> polytope_vertices(const RatVec& base, const std::vector<RatVec>& kernel) {
  const int k = static_cast<int>(base.size());
  const int d = static_cast<int>(kernel.size());
  std::vector<RatVec> verts;

  std::vector<int> idx(d);
  // next_combination over k coordinates
  std::vector<int> comb(d);
  for (int i = 0; i < d; ++i) comb[i] = i;
  auto advance = [&]() {
    int i = d - 1;
    while (i >= 0 && comb[i] == k - d + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };

  if (d > k) return verts;
  do {
    RatMat sys(d, RatVec(d, Rat(0)));
    RatVec rhs(d, Rat(0));
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) sys[r][c] = kernel[c][comb[r]];
      rhs[r] = -base[comb[r]];
    }
    AffineSolution sol = solve_linear(sys, rhs);
    if (!sol.consistent || !sol.kernel.empty()) continue;
    RatVec y(base);
    for (int c = 0; c < d; ++c) {
      for (int i = 0; i < k; ++i) y[i] += sol.particular[c] * kernel[c][i];
    }
    bool feasible = true;
    for (const Rat& v : y) {
      if (v < 0) {
        feasible = false;
        break;
      }
    }
    if (feasible) verts.push_back(std::move(y));
  } while (advance());

  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

}  // namespace

StationaryFamily solve_constant_row_sum(const RatMat& m) {
  const int k = static_cast<int>(m.size());
  if (k == 0) throw std::invalid_argument("empty system");
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != k) throw std::invalid_argument("ragged matrix");
  }

  // Unknowns (y_1..y_k, lambda): rows M y - lambda = 0, then sum(y) = 1.
  RatMat sys(k + 1, RatVec(k + 1, Rat(0)));
  RatVec rhs(k + 1, Rat(0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) sys[i][j] = m[i][j];
    sys[i][k] = -1;
  }
  for (int j = 0; j < k; ++j) sys[k][j] = 1;
  rhs[k] = 1;

  StationaryFamily fam;
  AffineSolution sol = solve_linear(std::move(sys), std::move(rhs));
  if (!sol.consistent) return fam;
  fam.consistent = true;
  fam.lambda = sol.particular[k];
  fam.particular.assign(sol.particular.begin(), sol.particular.begin() + k);
  for (const auto& dir : sol.kernel) {
    if (dir[k] != 0) {
      // cannot happen for symmetric M; see header
      throw std::logic_error("stationary family with varying multiplier");
    }
    fam.kernel.emplace_back(dir.begin(), dir.begin() + k);
  }

  if (fam.kernel.empty()) {
    bool positive = true;
    for (const Rat& v : fam.particular) {
      if (v <= 0) {
        positive = false;
        break;
      }
    }
    if (positive) fam.interior = fam.particular;
    return fam;
  }

  fam.vertices = polytope_vertices(fam.particular, fam.kernel);
  if (!fam.vertices.empty()) {
    // Centroid of the vertices: strictly positive iff some member of the
    // nonnegative slice is strictly positive (coordinate maxima sit at vertices).
    RatVec centroid(k, Rat(0));
    for (const auto& v : fam.vertices) {
      for (int i = 0; i < k; ++i) centroid[i] += v[i];
    }
    const Rat scale(1, static_cast<unsigned long>(fam.vertices.size()));
    bool positive = true;
    for (int i = 0; i < k; ++i) {
      centroid[i] *= scale;
      if (centroid[i] <= 0) positive = false;
    }
    if (positive) fam.interior = std::move(centroid);
  }
  return fam;
}

}  // namespace mskkt
