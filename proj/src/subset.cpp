#include "icpm/subset.hpp"

#include <algorithm>

namespace icpm {

std::vector<int> elements(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

std::vector<Subset> subsets_in_lex_order(int size) {
  std::vector<Subset> all(std::size_t{1} << size);
  for (Subset s = 0; s < all.size(); ++s) all[s] = s;
  std::sort(all.begin(), all.end(), [](Subset a, Subset b) { return elements(a) < elements(b); });
  return all;
}

std::vector<std::vector<int>> combinations(int pool, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > pool) return out;
  std::vector<int> current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == pool - k + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

}  // namespace icpm
