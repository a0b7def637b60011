#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace icpm {

/// A subset of a small ground set {0, ..., size-1}, bit i = element i.
using Subset = std::uint32_t;

inline int cardinality(Subset s) noexcept { return std::popcount(s); }

inline bool contains(Subset s, int element) noexcept { return (s >> element) & 1U; }

inline Subset full_set(int size) noexcept { return size >= 32 ? ~Subset{0} : (Subset{1} << size) - 1; }

/// Elements of s in increasing order.
std::vector<int> elements(Subset s);

/// All subsets of {0..size-1}, ordered lexicographically as sorted element
/// tuples: {0},{0,1},{0,1,2},...,{0,2},... The empty set comes first.
std::vector<Subset> subsets_in_lex_order(int size);

/// All k-element subsets of `pool`, as lists of positions into pool, in
/// lexicographic order of those positions.
std::vector<std::vector<int>> combinations(int pool, int k);

}  // namespace icpm
