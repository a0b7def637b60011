#pragma once

#include "icpm/field_matrix.hpp"
#include "icpm/matroid.hpp"
#include "icpm/representation_search.hpp"
#include "icpm/subset.hpp"

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace icpm {

inline constexpr int kMaxPolymatroidGroundSize = 10;

/// A vector of non-negative integers indexed by the ground set.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::vector<int> components);
  IntVector(std::initializer_list<int> components) : IntVector(std::vector<int>(components)) {}

  /// The indicator sum of the elements of s, on a ground set of given size.
  static IntVector indicator(int size, Subset s);

  int size() const noexcept { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& components() const noexcept { return c_; }

  /// |v|: sum of the components.
  int weight() const noexcept;
  /// Sum of the components indexed by s.
  int weight(Subset s) const;
  /// Indices of the nonzero components.
  Subset support() const noexcept;

  IntVector plus_unit(int i) const;
  IntVector minus_unit(int i) const;

  friend auto operator<=>(const IntVector&, const IntVector&) = default;

 private:
  std::vector<int> c_;
};

/// Componentwise partial order u <= v.
bool dominated_by(const IntVector& u, const IntVector& v);
/// Componentwise maximum.
IntVector join(const IntVector& u, const IntVector& v);

/// A discrete polymatroid on {0..r-1}, given by its rank function over all
/// subsets. Construction checks monotonicity, submodularity and rho(empty) = 0.
class DiscretePolymatroid {
 public:
  static DiscretePolymatroid from_rank_table(int ground_size, std::vector<int> ranks);

  int ground_size() const noexcept { return r_; }
  int rank() const noexcept { return ranks_.back(); }
  int rank(Subset s) const { return ranks_.at(s); }
  std::span<const int> rank_table() const noexcept { return ranks_; }

  /// (rho({0}), ..., rho({r-1})): the box every excluded vector lives in.
  IntVector caps() const;

  friend bool operator==(const DiscretePolymatroid&, const DiscretePolymatroid&) = default;

 private:
  DiscretePolymatroid(int r, std::vector<int> ranks) : r_(r), ranks_(std::move(ranks)) {}

  int r_ = 0;
  std::vector<int> ranks_;
};

/// u is a member iff |u(A)| <= rho(A) for every subset A.
bool membership(const DiscretePolymatroid& d, const IntVector& u);

/// Maximal members, in lexicographic order. All share weight rho(E).
std::vector<IntVector> basis_vectors(const DiscretePolymatroid& d);

/// Vectors under the caps that are not members, in lexicographic order.
std::vector<IntVector> excluded_vectors(const DiscretePolymatroid& d);

/// Excluded vectors with no smaller excluded vector, in lexicographic order.
std::vector<IntVector> minimal_excluded_vectors(const DiscretePolymatroid& d);

/// The member maximizing components greedily from the first element on.
IntVector greedy_basis_vector(const DiscretePolymatroid& d);

/// D(M): the rank function of M read as a polymatroid rank function.
DiscretePolymatroid from_matroid(const Matroid& m);

/// nD: every rank multiplied by n.
DiscretePolymatroid scale(const DiscretePolymatroid& d, int n);

/// A collection of subspaces V_i = colspan(A_i), stored as the concatenated
/// representing matrix plus the width of each block.
struct SubspaceRepresentation {
  FieldMatrix matrix;
  std::vector<Index> block_widths;

  std::size_t block_count() const noexcept { return block_widths.size(); }
  FieldMatrix block(std::size_t i) const;
  /// Columns of all blocks in s, concatenated in block order.
  FieldMatrix blocks(Subset s) const;
};

/// The polymatroid rho(X) = dim(sum of V_i, i in X).
DiscretePolymatroid from_subspaces(const SubspaceRepresentation& rep);

struct PolymatroidRepresentation {
  RepresentationVerdict verdict = RepresentationVerdict::NotRepresentable;
  std::optional<SubspaceRepresentation> representation;
  std::uint64_t candidates_tested = 0;
};

/// Certified search for a representation of d over GF(q) with blocks of
/// rho(E) rows and rho({i}) columns. The greedy basis vector's columns are
/// fixed to the identity; a success is re-checked through from_subspaces.
PolymatroidRepresentation find_representation(const DiscretePolymatroid& d, int q,
                                              std::uint64_t budget = kDefaultSearchBudget);

}  // namespace icpm
