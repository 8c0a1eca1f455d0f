#include "mskkt/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace mskkt {

VertexSet normalized_vertex_set(VertexSet members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

bool is_sorted_unique(const VertexSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] >= s[i]) return false;
  }
  return true;
}

bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string label_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  out += "}";
  return out;
}

VertexFamily::VertexFamily(std::vector<VertexSet> classes) : classes_(std::move(classes)) {
  if (classes_.empty()) throw std::invalid_argument("family must have at least one class");
  for (auto& c : classes_) {
    if (c.empty()) throw std::invalid_argument("family class must be nonempty");
    if (!is_sorted_unique(c)) c = normalized_vertex_set(std::move(c));
  }
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    for (std::size_t j = i + 1; j < classes_.size(); ++j) {
      if (!set_intersection(classes_[i], classes_[j]).empty()) {
        throw std::invalid_argument("family classes must be pairwise disjoint");
      }
    }
  }
}

VertexSet VertexFamily::union_all() const {
  VertexSet out;
  for (const auto& c : classes_) out = set_union(out, c);
  return out;
}

bool VertexFamily::partitions(const VertexSet& s) const { return union_all() == s; }

}  // namespace mskkt
