#pragma once

#include <map>
#include <vector>

#include "kha/ring/monomial.hpp"

namespace kha::ring {

/// A permutation of slots within each vertex, i.e. an element of a product
/// of symmetric groups. Variables not mentioned are fixed.
class SlotPermutation {
 public:
  SlotPermutation() = default;

  /// images[j-1] = sigma(j) for slots 1..images.size() of `vertex`.
  static SlotPermutation of_vertex(int vertex, const std::vector<int>& images);
  /// Validates that the map preserves vertices and is a bijection on its
  /// domain; throws InvalidPermutation otherwise.
  static SlotPermutation from_map(const std::map<VarId, VarId>& images);

  VarId operator()(VarId v) const;
  /// (*this) o first: apply `first`, then *this.
  SlotPermutation after(const SlotPermutation& first) const;
  /// Inversions of the permutation restricted to its moved slots, summed
  /// over vertices. Only the parity is intrinsic.
  int inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  const std::map<VarId, VarId>& images() const { return images_; }

 private:
  std::map<VarId, VarId> images_;
};

}  // namespace kha::ring
