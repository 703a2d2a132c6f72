#include "kha/ring/permutation.hpp"

#include <set>

#include "kha/errors.hpp"

namespace kha::ring {

SlotPermutation SlotPermutation::of_vertex(int vertex, const std::vector<int>& images) {
  std::map<VarId, VarId> m;
  for (std::size_t j = 0; j < images.size(); ++j) {
    m[{vertex, static_cast<int>(j) + 1}] = {vertex, images[j]};
  }
  return from_map(m);
}

SlotPermutation SlotPermutation::from_map(const std::map<VarId, VarId>& images) {
  std::set<VarId> range;
  for (const auto& [from, to] : images) {
    if (from.vertex != to.vertex) {
      throw InvalidPermutation("permutation moves a slot to a different vertex");
    }
    if (!range.insert(to).second) throw InvalidPermutation("permutation is not injective");
  }
  // A finite injective self-map is a bijection iff its range equals its domain.
  for (const auto& v : range) {
    if (!images.count(v)) throw InvalidPermutation("permutation is not a bijection of its slots");
  }
  SlotPermutation s;
  for (const auto& [from, to] : images) {
    if (!(from == to)) s.images_.emplace(from, to);
  }
  return s;
}

VarId SlotPermutation::operator()(VarId v) const {
  auto it = images_.find(v);
  return it == images_.end() ? v : it->second;
}

SlotPermutation SlotPermutation::after(const SlotPermutation& first) const {
  std::map<VarId, VarId> m;
  for (const auto& [from, to] : first.images_) m[from] = (*this)(to);
  for (const auto& [from, to] : images_) {
    if (!m.count(from)) m[from] = (*this)(first(from));
  }
  return from_map(m);
}

int SlotPermutation::inversions() const {
  int count = 0;
  for (auto a = images_.begin(); a != images_.end(); ++a) {
    for (auto b = std::next(a); b != images_.end(); ++b) {
      if (a->first.vertex == b->first.vertex && b->second < a->second) ++count;
    }
  }
  return count;
}

}  // namespace kha::ring
