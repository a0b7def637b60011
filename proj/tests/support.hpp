#pragma once

#include "icpm/field_matrix.hpp"

#include <cmath>
#include <random>
#include <set>
#include <vector>

namespace icpm::testing {

inline FieldMatrix random_matrix(int q, Index rows, Index cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> digit(0, q - 1);
  FieldMatrix m(q, rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m.set(r, c, digit(rng));
  return m;
}

// Every vector reachable as a combination of the columns, by enumerating all
// q^cols coefficient vectors. Only for tiny matrices.
inline std::set<std::vector<int>> brute_span(const FieldMatrix& m) {
  const int q = m.modulus();
  std::set<std::vector<int>> out;
  std::vector<int> coeff(static_cast<std::size_t>(m.cols()), 0);
  while (true) {
    std::vector<int> v(static_cast<std::size_t>(m.rows()), 0);
    for (Index c = 0; c < m.cols(); ++c)
      for (Index r = 0; r < m.rows(); ++r) v[r] = (v[r] + coeff[c] * m(r, c)) % q;
    out.insert(v);
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == q) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  return out;
}

inline Index brute_rank(const FieldMatrix& m) {
  const auto size = static_cast<double>(brute_span(m).size());
  return static_cast<Index>(std::lround(std::log(size) / std::log(m.modulus())));
}

inline bool brute_in_span(const FieldMatrix& basis, const FieldMatrix& target) {
  const auto span = brute_span(basis);
  for (const auto& c : target.to_columns())
    if (!span.count(c)) return false;
  return true;
}

}  // namespace icpm::testing
