#pragma once

#include "icpm/field_matrix.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace icpm {

/// Column vectors over GF(2) with at most 64 coordinates, bit r = row r.
using Gf2Word = std::uint64_t;

/// Packs the columns of a GF(2) matrix (rows() <= 64) into words.
std::vector<Gf2Word> pack_columns(const FieldMatrix& m);

/// Linear span of packed GF(2) vectors, kept as an xor basis with distinct
/// leading bits. Fixed capacity so copies are cheap in the solver loop.
class Gf2Span {
 public:
  /// Adds v to the span. Returns true if the dimension grew.
  bool insert(Gf2Word v) noexcept {
    v = reduce(v);
    if (v == 0) return false;
    // Keep the basis sorted by descending leading bit so reduce() is a single pass.
    int at = size_;
    while (at > 0 && basis_[at - 1] < v) {
      basis_[at] = basis_[at - 1];
      --at;
    }
    basis_[at] = v;
    ++size_;
    return true;
  }

  bool contains(Gf2Word v) const noexcept { return reduce(v) == 0; }

  Gf2Word reduce(Gf2Word v) const noexcept {
    for (int i = 0; i < size_; ++i) {
      const Gf2Word candidate = v ^ basis_[i];
      if (candidate < v) v = candidate;
    }
    return v;
  }

  int dimension() const noexcept { return size_; }

 private:
  std::array<Gf2Word, 64> basis_{};
  int size_ = 0;
};

}  // namespace icpm
