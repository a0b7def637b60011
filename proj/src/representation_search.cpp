#include "icpm/representation_search.hpp"

#include "icpm/errors.hpp"
#include "icpm/subset.hpp"

#include <numeric>

namespace icpm {

const char* to_string(RepresentationVerdict v) noexcept {
  switch (v) {
    case RepresentationVerdict::Found:
      return "representable";
    case RepresentationVerdict::NotRepresentable:
      return "not_representable";
    case RepresentationVerdict::BudgetExceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

namespace detail {
namespace {

struct Slot {
  int block;
  int column;  // within the block
};

class Searcher {
 public:
  explicit Searcher(const BlockSearch& s) : s_(s), blocks_(static_cast<int>(s.widths.size())) {
    offsets_.assign(blocks_ + 1, 0);
    std::partial_sum(s.widths.begin(), s.widths.end(), offsets_.begin() + 1);
    matrix_ = FieldStorage::Zero(s.ambient, offsets_.back());

    int pivot_row = 0;
    candidates_.resize(blocks_);
    for (int i = 0; i < blocks_; ++i) {
      for (int p = 0; p < s.pivots[i]; ++p) matrix_(pivot_row + p, offsets_[i] + p) = 1;
      candidates_[i] = canonical_columns(pivot_row, s.pivots[i]);
      for (int c = s.pivots[i]; c < s.widths[i]; ++c) slots_.push_back({i, c});
      pivot_row += s.pivots[i];
    }
  }

  BlockSearchResult run() {
    BlockSearchResult result;
    const bool found = descend(0);
    result.nodes = nodes_;
    if (found) {
      result.verdict = RepresentationVerdict::Found;
      result.matrix = FieldMatrix(s_.q, matrix_);
    } else {
      result.verdict = exhausted_ ? RepresentationVerdict::BudgetExceeded : RepresentationVerdict::NotRepresentable;
    }
    return result;
  }

 private:
  // Nonzero vectors vanishing on rows [first, first + count), leading entry 1,
  // in lexicographic order with row 0 most significant.
  std::vector<std::vector<int>> canonical_columns(int first, int count) const {
    std::vector<std::vector<int>> out;
    const int free_rows = s_.ambient - count;
    std::vector<int> digits(free_rows, 0);
    long long total = 1;
    for (int i = 0; i < free_rows; ++i) total *= s_.q;
    for (long long code = 0; code < total; ++code) {
      long long rest = code;
      for (int i = free_rows - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(rest % s_.q);
        rest /= s_.q;
      }
      std::vector<int> column(s_.ambient, 0);
      int next = 0;
      for (int r = 0; r < s_.ambient; ++r) {
        if (r >= first && r < first + count) continue;
        column[r] = digits[next++];
      }
      int lead = 0;
      for (int v : column) {
        if (v != 0) {
          lead = v;
          break;
        }
      }
      if (lead == 1) out.push_back(std::move(column));
    }
    return out;
  }

  Index rank_of(Subset blocks, int partial_block, int partial_columns) const {
    std::vector<Index> cols;
    for (int i : elements(blocks)) {
      const int width = i == partial_block ? partial_columns : s_.widths[i];
      for (int c = 0; c < width; ++c) cols.push_back(offsets_[i] + c);
    }
    FieldStorage gathered(s_.ambient, static_cast<Index>(cols.size()));
    for (Index j = 0; j < gathered.cols(); ++j) gathered.col(j) = matrix_.col(cols[j]);
    return rank(FieldMatrix(s_.q, std::move(gathered)));
  }

  // Constraints that only involve blocks < slot.block plus the assigned
  // prefix of slot.block.
  bool consistent(const Slot& slot) const {
    const int assigned = slot.column + 1;
    if (rank_of(Subset{1} << slot.block, slot.block, assigned) != assigned) return false;
    const bool complete = assigned == s_.widths[slot.block];
    const Subset earlier = full_set(slot.block);
    for (Subset rest = earlier;; rest = (rest - 1) & earlier) {
      const Subset set = rest | (Subset{1} << slot.block);
      const Index r = rank_of(set, slot.block, assigned);
      if (r > s_.target[set]) return false;
      if (complete && r != s_.target[set]) return false;
      if (rest == 0) break;
    }
    return true;
  }

  bool verify_all() const {
    for (Subset set = 0; set < (Subset{1} << blocks_); ++set) {
      if (rank_of(set, -1, 0) != s_.target[set]) return false;
    }
    return true;
  }

  bool descend(std::size_t depth) {
    if (depth == slots_.size()) return verify_all();
    const Slot slot = slots_[depth];
    const Index col = offsets_[slot.block] + slot.column;
    for (const auto& candidate : candidates_[slot.block]) {
      if (++nodes_ > s_.budget) {
        exhausted_ = true;
        return false;
      }
      for (int r = 0; r < s_.ambient; ++r) matrix_(r, col) = candidate[r];
      if (consistent(slot) && descend(depth + 1)) return true;
      if (exhausted_) return false;
    }
    for (int r = 0; r < s_.ambient; ++r) matrix_(r, col) = 0;
    return false;
  }

  const BlockSearch& s_;
  int blocks_;
  std::vector<Index> offsets_;
  FieldStorage matrix_;
  std::vector<std::vector<std::vector<int>>> candidates_;
  std::vector<Slot> slots_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

BlockSearchResult search_block_representation(const BlockSearch& search) {
  const auto blocks = search.widths.size();
  if (search.pivots.size() != blocks || search.target.size() != (std::size_t{1} << blocks)) {
    throw ShapeMismatch("block search arrays disagree on the number of blocks");
  }
  if (std::accumulate(search.pivots.begin(), search.pivots.end(), 0) != search.ambient) {
    throw ValidationError("pivot counts must sum to the ambient dimension");
  }
  for (std::size_t i = 0; i < blocks; ++i) {
    if (search.pivots[i] < 0 || search.pivots[i] > search.widths[i]) {
      throw ValidationError("pivot count exceeds block width");
    }
  }
  if (search.budget == 0) throw ValidationError("search budget must be positive");
  return Searcher(search).run();
}

}  // namespace detail
}  // namespace icpm
