#pragma once

#include "icpm/gic.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace icpm {

enum class ReportMode { First, All, Count };

struct SearchConfig {
  /// Fix the block forced invertible by a full-side-information group to the
  /// identity. Only applied when the structural scan licenses it.
  bool normalize_y_block = true;
  /// Maximum number of candidate codes examined. Must be positive.
  std::uint64_t budget = std::uint64_t{1} << 32;
  ReportMode report = ReportMode::First;
  /// Worker threads. The outcome does not depend on this.
  int jobs = 1;
};

enum class SolveVerdict { Found, NoneExists, BudgetExceeded };

const char* to_string(SolveVerdict v) noexcept;

struct SolveOutcome {
  SolveVerdict verdict = SolveVerdict::NoneExists;
  /// The first passing code in candidate order (Found only).
  std::optional<IndexCode> code;
  /// Every passing code, in candidate order (ReportMode::All only).
  std::vector<IndexCode> all;
  /// Number of passing codes (All and Count modes).
  std::uint64_t solutions = 0;
  /// Candidates a sequential scan examines to reach this verdict.
  std::uint64_t candidates_tested = 0;
  /// Size of the searched space; 0 if it does not fit in 64 bits.
  std::uint64_t space_size = 0;
  bool normalized = false;
};

/// Which rows of L the search may vary. When normalization applies, the
/// remaining rows of L are pinned to the identity.
struct SearchLayout {
  std::size_t length = 0;            // l = mu(P)
  std::vector<Index> free_rows;      // ascending
  std::vector<Index> pinned_rows;    // ascending; pinned_rows[c] carries a 1 in column c
  bool normalized() const noexcept { return !pinned_rows.empty(); }
};

/// Looks for a Has-set group whose knowledge spans exactly the coordinate
/// subspace of some rows S and whose demands, restricted to the other mu
/// rows J, have full rank. Any solution then has an invertible J-block, and
/// right-multiplying by its inverse keeps it a solution, so that block may be
/// taken to be the identity.
SearchLayout plan_search(const GicProblem& p, bool normalize);

/// Exhaustive search over binary scalar codes of length mu(P). Candidate
/// index bits fill the free block little-endian, row by row: bit
/// (free row position) * l + column. Throws ValidationError unless q = 2 and n = 1.
SolveOutcome solve_perfect_scalar_binary(const GicProblem& p, const SearchConfig& cfg = {});

/// Number of passing codes in the (possibly normalized) search space.
/// Throws Error if the space exceeds the budget.
std::uint64_t count_solutions(const GicProblem& p, const SearchConfig& cfg = {});

}  // namespace icpm
