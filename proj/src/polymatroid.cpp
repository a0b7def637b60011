#include "icpm/polymatroid.hpp"

#include "icpm/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace icpm {
namespace {

// Visits every vector in the box prod [0, caps[i]] in lexicographic order.
void for_each_in_box(const IntVector& caps, const std::function<void(const IntVector&)>& visit) {
  std::vector<int> current(static_cast<std::size_t>(caps.size()), 0);
  while (true) {
    visit(IntVector(current));
    int i = caps.size() - 1;
    while (i >= 0 && current[i] == caps[i]) {
      current[i] = 0;
      --i;
    }
    if (i < 0) return;
    ++current[i];
  }
}

}  // namespace

IntVector::IntVector(std::vector<int> components) : c_(std::move(components)) {
  for (int v : c_)
    if (v < 0) throw ValidationError("vector components must be non-negative");
}

IntVector IntVector::indicator(int size, Subset s) {
  std::vector<int> c(static_cast<std::size_t>(size), 0);
  for (int e : elements(s)) c.at(static_cast<std::size_t>(e)) = 1;
  return IntVector(std::move(c));
}

int IntVector::weight() const noexcept { return std::accumulate(c_.begin(), c_.end(), 0); }

int IntVector::weight(Subset s) const {
  int total = 0;
  for (int e : elements(s)) total += (*this)[e];
  return total;
}

Subset IntVector::support() const noexcept {
  Subset s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] > 0) s |= Subset{1} << i;
  return s;
}

IntVector IntVector::plus_unit(int i) const {
  auto c = c_;
  ++c.at(static_cast<std::size_t>(i));
  return IntVector(std::move(c));
}

IntVector IntVector::minus_unit(int i) const {
  auto c = c_;
  --c.at(static_cast<std::size_t>(i));
  return IntVector(std::move(c));
}

bool dominated_by(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size()) throw ShapeMismatch("vector length mismatch");
  for (int i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

IntVector join(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size()) throw ShapeMismatch("vector length mismatch");
  std::vector<int> c(static_cast<std::size_t>(u.size()));
  for (int i = 0; i < u.size(); ++i) c[i] = std::max(u[i], v[i]);
  return IntVector(std::move(c));
}

DiscretePolymatroid DiscretePolymatroid::from_rank_table(int ground_size, std::vector<int> ranks) {
  if (ground_size < 0 || ground_size > kMaxPolymatroidGroundSize) {
    throw ValidationError("polymatroid ground set size must be in [0, 10], got " + std::to_string(ground_size));
  }
  if (ranks.size() != (std::size_t{1} << ground_size)) throw ValidationError("rank table must have 2^r entries");
  if (ranks[0] != 0) throw ValidationError("D3 violated: rank of the empty set must be 0");
  const Subset universe = full_set(ground_size);
  for (Subset x = 0; x <= universe; ++x) {
    if (ranks[x] < 0) throw ValidationError("ranks must be non-negative");
    for (int a = 0; a < ground_size; ++a) {
      if (contains(x, a)) continue;
      const Subset xa = x | (Subset{1} << a);
      if (ranks[xa] < ranks[x]) throw ValidationError("D1 violated: rank decreases at subset " + std::to_string(x));
      for (int b = a + 1; b < ground_size; ++b) {
        if (contains(x, b)) continue;
        const Subset xb = x | (Subset{1} << b);
        if (ranks[xa] + ranks[xb] < ranks[xa | xb] + ranks[x]) {
          throw ValidationError("D2 violated: submodularity fails at subset " + std::to_string(x));
        }
      }
    }
    if (x == universe) break;
  }
  return DiscretePolymatroid(ground_size, std::move(ranks));
}

IntVector DiscretePolymatroid::caps() const {
  std::vector<int> c(static_cast<std::size_t>(r_));
  for (int i = 0; i < r_; ++i) c[i] = rank(Subset{1} << i);
  return IntVector(std::move(c));
}

bool membership(const DiscretePolymatroid& d, const IntVector& u) {
  if (u.size() != d.ground_size()) throw ShapeMismatch("vector length does not match the ground set");
  for (Subset a = 1; a < d.rank_table().size(); ++a)
    if (u.weight(a) > d.rank(a)) return false;
  return true;
}

std::vector<IntVector> basis_vectors(const DiscretePolymatroid& d) {
  std::vector<IntVector> out;
  for_each_in_box(d.caps(), [&](const IntVector& u) {
    if (!membership(d, u)) return;
    for (int i = 0; i < u.size(); ++i)
      if (membership(d, u.plus_unit(i))) return;
    out.push_back(u);
  });
  return out;
}

std::vector<IntVector> excluded_vectors(const DiscretePolymatroid& d) {
  std::vector<IntVector> out;
  for_each_in_box(d.caps(), [&](const IntVector& u) {
    if (!membership(d, u)) out.push_back(u);
  });
  return out;
}

std::vector<IntVector> minimal_excluded_vectors(const DiscretePolymatroid& d) {
  // Members are down-closed, so an excluded vector is minimal iff each
  // single-step decrease is a member.
  std::vector<IntVector> out;
  for_each_in_box(d.caps(), [&](const IntVector& u) {
    if (membership(d, u)) return;
    for (int i = 0; i < u.size(); ++i)
      if (u[i] > 0 && !membership(d, u.minus_unit(i))) return;
    out.push_back(u);
  });
  return out;
}

IntVector greedy_basis_vector(const DiscretePolymatroid& d) {
  IntVector u(std::vector<int>(static_cast<std::size_t>(d.ground_size()), 0));
  for (int i = 0; i < d.ground_size(); ++i)
    while (membership(d, u.plus_unit(i))) u = u.plus_unit(i);
  return u;
}

DiscretePolymatroid from_matroid(const Matroid& m) {
  if (m.ground_size() > kMaxPolymatroidGroundSize) {
    throw ValidationError("matroid ground set too large for a polymatroid");
  }
  const auto table = m.rank_table();
  return DiscretePolymatroid::from_rank_table(m.ground_size(), std::vector<int>(table.begin(), table.end()));
}

DiscretePolymatroid scale(const DiscretePolymatroid& d, int n) {
  if (n < 1) throw ValidationError("scale factor must be at least 1");
  std::vector<int> ranks(d.rank_table().begin(), d.rank_table().end());
  for (int& r : ranks) r *= n;
  return DiscretePolymatroid::from_rank_table(d.ground_size(), std::move(ranks));
}

FieldMatrix SubspaceRepresentation::block(std::size_t i) const {
  const Index first = std::accumulate(block_widths.begin(), block_widths.begin() + static_cast<long>(i), Index{0});
  return matrix.col_block(first, block_widths.at(i));
}

FieldMatrix SubspaceRepresentation::blocks(Subset s) const {
  std::vector<Index> cols;
  Index first = 0;
  for (std::size_t i = 0; i < block_widths.size(); ++i) {
    if (contains(s, static_cast<int>(i)))
      for (Index c = 0; c < block_widths[i]; ++c) cols.push_back(first + c);
    first += block_widths[i];
  }
  return matrix.select_columns(cols);
}

DiscretePolymatroid from_subspaces(const SubspaceRepresentation& rep) {
  const Index total = std::accumulate(rep.block_widths.begin(), rep.block_widths.end(), Index{0});
  if (total != rep.matrix.cols()) throw ShapeMismatch("block widths do not add up to the matrix width");
  const int r = static_cast<int>(rep.block_count());
  if (r > kMaxPolymatroidGroundSize) throw ValidationError("too many subspaces");
  std::vector<int> ranks(std::size_t{1} << r);
  for (Subset s = 0; s < ranks.size(); ++s) ranks[s] = static_cast<int>(rank(rep.blocks(s)));
  return DiscretePolymatroid::from_rank_table(r, std::move(ranks));
}

PolymatroidRepresentation find_representation(const DiscretePolymatroid& d, int q, std::uint64_t budget) {
  if (!is_supported_modulus(q)) throw ValidationError("unsupported modulus q=" + std::to_string(q));
  detail::BlockSearch search;
  search.q = q;
  search.ambient = d.rank();
  search.budget = budget;
  search.widths = d.caps().components();
  search.target.assign(d.rank_table().begin(), d.rank_table().end());
  search.pivots = greedy_basis_vector(d).components();

  const auto found = detail::search_block_representation(search);
  PolymatroidRepresentation out;
  out.verdict = found.verdict;
  out.candidates_tested = found.nodes;
  if (found.matrix) {
    SubspaceRepresentation rep{*found.matrix, {}};
    for (int w : search.widths) rep.block_widths.push_back(w);
    if (!(from_subspaces(rep) == d)) throw Error("internal: representation search returned a wrong witness");
    out.representation = std::move(rep);
  }
  return out;
}

}  // namespace icpm
