#pragma once

#include "icpm/field_matrix.hpp"
#include "icpm/representation_search.hpp"
#include "icpm/subset.hpp"

#include <optional>
#include <span>
#include <vector>

namespace icpm {

inline constexpr int kMaxMatroidGroundSize = 16;

/// A matroid on {0..m-1} stored as its full rank table, indexed by subset
/// bitmask. The rank axioms (normalization, R1 bounded by cardinality, R2
/// monotone, R3 submodular) are checked when the table is built.
class Matroid {
 public:
  /// Throws ValidationError if the table violates an axiom or m > 16.
  static Matroid from_rank_table(int ground_size, std::vector<int> ranks);
  /// Vector matroid of the columns of a.
  static Matroid from_matrix(const FieldMatrix& a);
  /// U_{k,m}: rank(S) = min(|S|, k).
  static Matroid uniform(int k, int m);

  int ground_size() const noexcept { return m_; }
  int rank() const noexcept { return ranks_.back(); }
  int rank(Subset s) const { return ranks_.at(s); }
  std::span<const int> rank_table() const noexcept { return ranks_; }

  bool is_independent(Subset s) const { return rank(s) == cardinality(s); }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(int m, std::vector<int> ranks) : m_(m), ranks_(std::move(ranks)) {}

  int m_ = 0;
  std::vector<int> ranks_;
};

/// Every basis, in lexicographic order of the sorted element tuples.
std::vector<Subset> bases(const Matroid& m);

/// Every circuit (minimal dependent set), in lexicographic order.
std::vector<Subset> circuits(const Matroid& m);

struct MatroidRepresentation {
  RepresentationVerdict verdict = RepresentationVerdict::NotRepresentable;
  /// rank(M) x m matrix whose vector matroid is M; set iff verdict == Found.
  std::optional<FieldMatrix> matrix;
  std::uint64_t candidates_tested = 0;
};

/// Certified search for a representation of m over GF(q). The columns of
/// the greedy basis are fixed to the identity; every other column is tried
/// in canonical (leading-one) form. NotRepresentable means the whole
/// canonical space was exhausted.
MatroidRepresentation find_representation(const Matroid& m, int q,
                                          std::uint64_t budget = kDefaultSearchBudget);

inline MatroidRepresentation find_binary_representation(const Matroid& m,
                                                        std::uint64_t budget = kDefaultSearchBudget) {
  return find_representation(m, 2, budget);
}

}  // namespace icpm
