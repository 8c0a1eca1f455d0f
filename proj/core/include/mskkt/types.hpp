#pragma once

#include <string>
#include <vector>

namespace mskkt {

/// Vertex subset, kept strictly increasing. Vertices are 0-based in the
/// library; all file formats and printed labels are 1-based.
using VertexSet = std::vector<int>;

VertexSet normalized_vertex_set(VertexSet members);
bool is_sorted_unique(const VertexSet& s);
bool set_contains(const VertexSet& s, int v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// "{1,2,5}" with 1-based labels, for error messages and reports.
std::string label_string(const VertexSet& s);

/// Ordered family {V_1,...,V_k} of pairwise disjoint nonempty vertex sets.
/// The enumeration order of the classes is significant: density matrices and
/// barycentric coordinate vectors index against it.
class VertexFamily {
 public:
  explicit VertexFamily(std::vector<VertexSet> classes);

  std::size_t size() const { return classes_.size(); }
  const VertexSet& cls(std::size_t i) const { return classes_[i]; }
  const std::vector<VertexSet>& classes() const { return classes_; }
  VertexSet union_all() const;
  /// True when the classes exactly cover `s` (disjointness is an invariant).
  bool partitions(const VertexSet& s) const;

  bool operator==(const VertexFamily&) const = default;

 private:
  std::vector<VertexSet> classes_;
};

}  // namespace mskkt
