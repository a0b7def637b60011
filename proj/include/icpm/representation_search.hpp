#pragma once

#include "icpm/field_matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace icpm {

enum class RepresentationVerdict { Found, NotRepresentable, BudgetExceeded };

const char* to_string(RepresentationVerdict v) noexcept;

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

namespace detail {

/// Search for a block matrix [A_1 | ... | A_r] over GF(q) with `ambient` rows,
/// where A_i has widths[i] columns and rank(A_S) = target[S] for every subset
/// S of blocks (S as bitmask).
///
/// Canonical form: block i starts with pivots[i] unit columns, consecutive
/// across blocks, so together they form the identity. pivots must be a basis
/// vector of the target (sum == ambient, pivots[i] <= widths[i]). Remaining
/// columns are zero on their block's pivot rows and have leading entry 1.
/// Candidates are tried in lexicographic order (column by column, top entry
/// most significant), so the first success is the lexicographically smallest
/// canonical representation.
struct BlockSearch {
  int q = 2;
  int ambient = 0;
  std::vector<int> widths;
  std::vector<int> target;
  std::vector<int> pivots;
  std::uint64_t budget = kDefaultSearchBudget;
};

struct BlockSearchResult {
  RepresentationVerdict verdict = RepresentationVerdict::NotRepresentable;
  std::optional<FieldMatrix> matrix;
  std::uint64_t nodes = 0;
};

BlockSearchResult search_block_representation(const BlockSearch& search);

}  // namespace detail
}  // namespace icpm
