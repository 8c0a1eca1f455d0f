#include "mskkt/simplex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mskkt {

SimplexPoint::SimplexPoint(RatVec coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("point needs at least one coordinate");
  Rat sum(0);
  for (const Rat& v : coords_) {
    if (v < 0) throw std::invalid_argument("simplex coordinates must be nonnegative");
    sum += v;
  }
  if (sum != 1) throw std::invalid_argument("simplex coordinates must sum to 1");
}

VertexSet SimplexPoint::support() const {
  VertexSet s;
  for (int i = 0; i < dimension(); ++i) {
    if (coords_[i] != 0) s.push_back(i);
  }
  return s;
}

bool SimplexPoint::has_full_support() const {
  return std::none_of(coords_.begin(), coords_.end(), [](const Rat& v) { return v == 0; });
}

bool SimplexPoint::is_characteristic() const {
  const Rat* first = nullptr;
  for (const Rat& v : coords_) {
    if (v == 0) continue;
    if (!first) {
      first = &v;
    } else if (v != *first) {
      return false;
    }
  }
  return true;
}

std::vector<double> SimplexPoint::to_doubles() const {
  std::vector<double> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = to_double(coords_[i]);
  return out;
}

SimplexPoint characteristic_vector(int n, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("characteristic vector of the empty set");
  if (!is_sorted_unique(s) || s.front() < 0 || s.back() >= n) {
    throw std::invalid_argument("vertex set invalid for dimension " + std::to_string(n));
  }
  RatVec coords(n, Rat(0));
  const Rat w(1, static_cast<unsigned long>(s.size()));
  for (int i : s) coords[i] = w;
  return SimplexPoint(std::move(coords));
}

VertexFamily induced_partition(const SimplexPoint& x) {
  std::map<Rat, VertexSet, std::greater<Rat>> by_value;
  for (int i = 0; i < x.dimension(); ++i) {
    if (x[i] != 0) by_value[x[i]].push_back(i);
  }
  if (by_value.empty()) throw std::logic_error("simplex point with empty support");
  std::vector<VertexSet> classes;
  classes.reserve(by_value.size());
  for (auto& [value, members] : by_value) classes.push_back(members);
  return VertexFamily(std::move(classes));
}

bool separates_distinct_values(const SimplexPoint& x, const VertexFamily& p) {
  if (!p.partitions(x.support())) {
    throw std::invalid_argument("family does not partition the support of the point");
  }
  for (const VertexSet& cls : p.classes()) {
    const Rat& v = x[cls.front()];
    for (int i : cls) {
      if (x[i] != v) return false;
    }
  }
  return true;
}

bool in_hull_of_family(const SimplexPoint& x, const VertexFamily& fam) {
  VertexSet covered = fam.union_all();
  if (covered.back() >= x.dimension()) return false;
  for (const VertexSet& cls : fam.classes()) {
    const Rat& v = x[cls.front()];
    for (int i : cls) {
      if (x[i] != v) return false;
    }
  }
  VertexSet outside = set_difference(x.support(), covered);
  return outside.empty();
}

BarycentricCoords barycentric(const SimplexPoint& x, const VertexFamily& fam) {
  if (!in_hull_of_family(x, fam)) throw std::invalid_argument("not representable");
  RatVec y;
  y.reserve(fam.size());
  for (const VertexSet& cls : fam.classes()) {
    y.push_back(Rat(static_cast<long>(cls.size())) * x[cls.front()]);
  }
  return BarycentricCoords{std::move(y), fam};
}

SimplexPoint lift_from_family(int n, const VertexFamily& fam, const RatVec& y) {
  if (y.size() != fam.size()) throw std::invalid_argument("weight vector size mismatch");
  RatVec coords(n, Rat(0));
  for (std::size_t l = 0; l < fam.size(); ++l) {
    const VertexSet& cls = fam.cls(l);
    if (cls.back() >= n) throw std::invalid_argument("family exceeds dimension");
    const Rat share = y[l] / Rat(static_cast<long>(cls.size()));
    for (int i : cls) coords[i] = share;
  }
  return SimplexPoint(std::move(coords));  // validates y in the simplex
}

}  // namespace mskkt
