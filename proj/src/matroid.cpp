#include "icpm/matroid.hpp"

#include "icpm/errors.hpp"

#include <algorithm>
#include <string>

namespace icpm {
namespace {

void check_rank_axioms(int m, const std::vector<int>& ranks) {
  const Subset universe = full_set(m);
  if (ranks[0] != 0) throw ValidationError("rank of the empty set must be 0");
  for (Subset x = 0; x <= universe; ++x) {
    if (ranks[x] < 0 || ranks[x] > cardinality(x)) {
      throw ValidationError("R1 violated: rank exceeds cardinality at subset " + std::to_string(x));
    }
    for (int a = 0; a < m; ++a) {
      if (contains(x, a)) continue;
      const Subset xa = x | (Subset{1} << a);
      if (ranks[xa] < ranks[x]) throw ValidationError("R2 violated: rank decreases at subset " + std::to_string(x));
      // Submodularity is equivalent to its local form r(X+a)+r(X+b) >= r(X+a+b)+r(X).
      for (int b = a + 1; b < m; ++b) {
        if (contains(x, b)) continue;
        const Subset xb = x | (Subset{1} << b);
        if (ranks[xa] + ranks[xb] < ranks[xa | xb] + ranks[x]) {
          throw ValidationError("R3 violated: submodularity fails at subset " + std::to_string(x));
        }
      }
    }
    if (x == universe) break;
  }
}

}  // namespace

Matroid Matroid::from_rank_table(int ground_size, std::vector<int> ranks) {
  if (ground_size < 0 || ground_size > kMaxMatroidGroundSize) {
    throw ValidationError("matroid ground set size must be in [0, 16], got " + std::to_string(ground_size));
  }
  if (ranks.size() != (std::size_t{1} << ground_size)) {
    throw ValidationError("rank table must have 2^m entries");
  }
  check_rank_axioms(ground_size, ranks);
  return Matroid(ground_size, std::move(ranks));
}

Matroid Matroid::from_matrix(const FieldMatrix& a) {
  if (a.cols() > kMaxMatroidGroundSize) {
    throw ValidationError("ground set too large: " + std::to_string(a.cols()) + " columns");
  }
  const int m = static_cast<int>(a.cols());
  std::vector<int> ranks(std::size_t{1} << m);
  for (Subset s = 0; s < ranks.size(); ++s) {
    std::vector<Index> cols;
    for (int e : elements(s)) cols.push_back(e);
    ranks[s] = static_cast<int>(icpm::rank(a.select_columns(cols)));
  }
  return Matroid(m, std::move(ranks));
}

Matroid Matroid::uniform(int k, int m) {
  if (k < 0 || m < 0 || k > m || m > kMaxMatroidGroundSize) {
    throw ValidationError("uniform matroid needs 0 <= k <= m <= 16");
  }
  std::vector<int> ranks(std::size_t{1} << m);
  for (Subset s = 0; s < ranks.size(); ++s) ranks[s] = std::min(cardinality(s), k);
  return Matroid(m, std::move(ranks));
}

std::vector<Subset> bases(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset s : subsets_in_lex_order(m.ground_size())) {
    if (cardinality(s) == m.rank() && m.rank(s) == m.rank()) out.push_back(s);
  }
  return out;
}

std::vector<Subset> circuits(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset s : subsets_in_lex_order(m.ground_size())) {
    if (s == 0 || m.is_independent(s)) continue;
    // Dependent and every one-element deletion independent.
    bool minimal = true;
    for (int e : elements(s)) {
      if (!m.is_independent(s & ~(Subset{1} << e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

MatroidRepresentation find_representation(const Matroid& m, int q, std::uint64_t budget) {
  if (!is_supported_modulus(q)) throw ValidationError("unsupported modulus q=" + std::to_string(q));
  const int size = m.ground_size();

  // Loops get a zero column; every other element is a one-column block.
  std::vector<int> kept;
  for (int e = 0; e < size; ++e)
    if (m.rank(Subset{1} << e) == 1) kept.push_back(e);

  detail::BlockSearch search;
  search.q = q;
  search.ambient = m.rank();
  search.budget = budget;
  const int blocks = static_cast<int>(kept.size());
  search.widths.assign(blocks, 1);
  search.target.resize(std::size_t{1} << blocks);
  for (Subset s = 0; s < search.target.size(); ++s) {
    Subset original = 0;
    for (int i : elements(s)) original |= Subset{1} << kept[i];
    search.target[s] = m.rank(original);
  }
  // Greedy basis: earliest elements first.
  search.pivots.assign(blocks, 0);
  Subset chosen = 0;
  for (int i = 0; i < blocks; ++i) {
    const Subset with = chosen | (Subset{1} << kept[i]);
    if (m.rank(with) == cardinality(with)) {
      chosen = with;
      search.pivots[i] = 1;
    }
  }

  const auto found = detail::search_block_representation(search);
  MatroidRepresentation out;
  out.verdict = found.verdict;
  out.candidates_tested = found.nodes;
  if (found.matrix) {
    FieldMatrix full(q, m.rank(), size);
    for (int i = 0; i < blocks; ++i)
      for (Index r = 0; r < full.rows(); ++r) full.set(r, kept[i], (*found.matrix)(r, i));
    out.matrix = std::move(full);
  }
  return out;
}

}  // namespace icpm
