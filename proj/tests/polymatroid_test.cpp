#include "icpm/errors.hpp"
#include "icpm/polymatroid.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace icpm;
using icpm::testing::random_matrix;

namespace {

DiscretePolymatroid eg3() { return DiscretePolymatroid::from_rank_table(3, {0, 1, 1, 2, 2, 3, 3, 3}); }
DiscretePolymatroid eg4() { return DiscretePolymatroid::from_rank_table(3, {0, 2, 2, 3, 1, 3, 2, 3}); }

std::set<IntVector> as_set(const std::vector<IntVector>& v) { return {v.begin(), v.end()}; }

// A random collection of subspaces of GF(2)^k, one block per ground element.
SubspaceRepresentation random_subspaces(std::mt19937_64& rng, int k, std::vector<Index> widths) {
  Index total = 0;
  for (Index w : widths) total += w;
  return SubspaceRepresentation{random_matrix(2, k, total, rng), std::move(widths)};
}

}  // namespace

TEST(Polymatroid, AxiomsAreChecked) {
  EXPECT_THROW(DiscretePolymatroid::from_rank_table(1, {1, 1}), ValidationError);
  EXPECT_THROW(DiscretePolymatroid::from_rank_table(2, {0, 2, 1, 1}), ValidationError);
  EXPECT_THROW(DiscretePolymatroid::from_rank_table(2, {0, 1, 1, 3}), ValidationError);
  EXPECT_THROW(DiscretePolymatroid::from_rank_table(2, {0, 1, 1}), ValidationError);
  // Ranks above cardinality are fine for a polymatroid.
  EXPECT_NO_THROW(DiscretePolymatroid::from_rank_table(2, {0, 3, 2, 4}));
}

TEST(Polymatroid, ThreeElementExampleVectors) {
  const auto d = eg3();
  EXPECT_EQ(as_set(basis_vectors(d)), (std::set<IntVector>{{1, 1, 1}, {1, 0, 2}, {0, 1, 2}}));
  EXPECT_EQ(minimal_excluded_vectors(d), (std::vector<IntVector>{{1, 1, 2}}));
}

TEST(Polymatroid, SecondExampleVectors) {
  const auto d = eg4();
  EXPECT_EQ(as_set(basis_vectors(d)), (std::set<IntVector>{{1, 1, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}));
  EXPECT_EQ(as_set(minimal_excluded_vectors(d)), (std::set<IntVector>{{0, 2, 1}, {2, 1, 1}, {2, 2, 0}}));
}

TEST(Polymatroid, PrintedRepresentingMatrixRepresentsSecondExample) {
  const SubspaceRepresentation rep{parse_text(2, "1 0 0 1 0; 0 1 0 1 0; 0 0 1 1 1"), {2, 2, 1}};
  EXPECT_EQ(from_subspaces(rep), eg4());
}

TEST(Polymatroid, ListsAreSortedAndConsistent) {
  for (const auto& d : {eg3(), eg4()}) {
    const auto b = basis_vectors(d);
    EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
    for (const auto& v : b) EXPECT_EQ(v.weight(), d.rank());
    const auto ex = excluded_vectors(d);
    EXPECT_TRUE(std::is_sorted(ex.begin(), ex.end()));
    // Minimal under the partial order, checked directly.
    std::vector<IntVector> minimal;
    for (const auto& u : ex) {
      bool has_smaller = false;
      for (const auto& v : ex)
        if (v != u && dominated_by(v, u)) has_smaller = true;
      if (!has_smaller) minimal.push_back(u);
    }
    EXPECT_EQ(minimal_excluded_vectors(d), minimal);
  }
}

TEST(Polymatroid, MembershipIsDominationByABasisVector) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = from_subspaces(random_subspaces(rng, 3, {1 + trial % 2, 2, 1}));
    const auto b = basis_vectors(d);
    const auto caps = d.caps();
    for (int x = 0; x <= caps[0]; ++x)
      for (int y = 0; y <= caps[1]; ++y)
        for (int z = 0; z <= caps[2]; ++z) {
          const IntVector u{x, y, z};
          const bool dominated = std::any_of(b.begin(), b.end(), [&](const IntVector& v) { return dominated_by(u, v); });
          EXPECT_EQ(membership(d, u), dominated);
        }
  }
}

TEST(Polymatroid, MatroidIndicatorsAreMembersExactlyWhenIndependent) {
  const auto m = Matroid::uniform(2, 4);
  const auto d = from_matroid(m);
  for (Subset s = 0; s < 16; ++s) EXPECT_EQ(membership(d, IntVector::indicator(4, s)), m.is_independent(s));
  std::set<Subset> from_vectors;
  for (const auto& v : basis_vectors(d)) from_vectors.insert(v.support());
  const auto b = bases(m);
  EXPECT_EQ(from_vectors, std::set<Subset>(b.begin(), b.end()));
}

TEST(Polymatroid, ScaleMultipliesRanks) {
  const auto d = scale(eg3(), 2);
  EXPECT_EQ(d.rank(), 6);
  EXPECT_EQ(d.rank(0b011), 4);
  EXPECT_THROW(scale(eg3(), 0), ValidationError);
}

TEST(Polymatroid, GreedyBasisVectorIsABasisVector) {
  for (const auto& d : {eg3(), eg4()}) {
    const auto g = greedy_basis_vector(d);
    const auto b = basis_vectors(d);
    EXPECT_NE(std::find(b.begin(), b.end(), g), b.end());
  }
}

TEST(PolymatroidRepresentation, ExamplesAreBinary) {
  for (const auto& d : {eg3(), eg4()}) {
    const auto rep = find_representation(d, 2);
    ASSERT_EQ(rep.verdict, RepresentationVerdict::Found);
    EXPECT_EQ(from_subspaces(*rep.representation), d);
  }
}

TEST(PolymatroidRepresentation, RecoversRandomSubspaceArrangements) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const auto d = from_subspaces(random_subspaces(rng, 3, {2, 1, 2}));
    if (d.rank() == 0) continue;
    const auto rep = find_representation(d, 2);
    ASSERT_EQ(rep.verdict, RepresentationVerdict::Found);
    EXPECT_EQ(from_subspaces(*rep.representation), d);
  }
}

TEST(PolymatroidRepresentation, MatroidObstructionCarriesOver) {
  EXPECT_EQ(find_representation(from_matroid(Matroid::uniform(2, 4)), 2).verdict,
            RepresentationVerdict::NotRepresentable);
}
