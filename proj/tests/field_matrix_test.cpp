#include "icpm/errors.hpp"
#include "icpm/field_matrix.hpp"
#include "icpm/gf2_span.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace icpm;
using icpm::testing::brute_in_span;
using icpm::testing::brute_rank;
using icpm::testing::random_matrix;

TEST(FieldMatrix, EntriesAreReducedModQ) {
  const auto m = FieldMatrix::from_rows(3, {{4, -1}, {3, 5}});
  EXPECT_EQ(m.to_rows(), (std::vector<std::vector<int>>{{1, 2}, {0, 2}}));
}

TEST(FieldMatrix, RejectsUnsupportedModulus) {
  EXPECT_THROW(FieldMatrix(4, 2, 2), ValidationError);
  EXPECT_THROW(FieldMatrix(7, 1, 1), ValidationError);
}

TEST(FieldMatrix, TextRoundTrip) {
  const auto m = parse_text(2, "1 0 1; 0 1 1");
  EXPECT_EQ(to_text(m), "1 0 1; 0 1 1");
  EXPECT_EQ(parse_text(2, to_text(m)), m);
  EXPECT_THROW(parse_text(2, "1 0; 1"), ValidationError);
}

TEST(FieldMatrix, KnownRanks) {
  EXPECT_EQ(rank(parse_text(2, "1 0 1; 0 1 1")), 2);
  EXPECT_EQ(rank(parse_text(2, "1 1; 1 1")), 1);
  EXPECT_EQ(rank(parse_text(3, "1 2; 2 1")), 1);
  EXPECT_EQ(rank(parse_text(5, "1 2; 3 4")), 2);
  EXPECT_EQ(rank(FieldMatrix(2, 3, 0)), 0);
}

TEST(FieldMatrix, InverseOfSingularThrows) {
  EXPECT_THROW(invert(parse_text(2, "1 1; 1 1")), SingularMatrix);
  EXPECT_THROW(invert(parse_text(2, "1 1 0; 1 1 1")), ShapeMismatch);
}

TEST(FieldMatrix, KronIdentity) {
  const auto k = kron_identity(parse_text(3, "1 2"), 2);
  EXPECT_EQ(to_text(k), "1 0 2 0; 0 1 0 2");
}

TEST(FieldMatrix, InverseMod) {
  for (int q : {2, 3, 5})
    for (int v = 1; v < q; ++v) EXPECT_EQ(v * inverse_mod(v, q) % q, 1);
}

class FieldMatrixProperty : public ::testing::TestWithParam<int> {};

TEST_P(FieldMatrixProperty, RankMatchesSpanCount) {
  const int q = GetParam();
  std::mt19937_64 rng(11 + q);
  for (int trial = 0; trial < 150; ++trial) {
    const auto m = random_matrix(q, 1 + trial % 4, 1 + (trial / 4) % 4, rng);
    EXPECT_EQ(rank(m), brute_rank(m));
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST_P(FieldMatrixProperty, SpanMembershipAgreesWithSolve) {
  const int q = GetParam();
  std::mt19937_64 rng(23 + q);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = random_matrix(q, 3, 1 + trial % 3, rng);
    const auto b = random_matrix(q, 3, 1 + trial % 2, rng);
    const bool inside = in_column_span(a, b);
    EXPECT_EQ(inside, brute_in_span(a, b));
    const auto x = try_solve_right(a, b);
    EXPECT_EQ(inside, x.has_value());
    if (x) {
      EXPECT_EQ(a * *x, b);
      EXPECT_NO_THROW(solve_right(a, b));
    } else {
      EXPECT_THROW(solve_right(a, b), NoSolution);
    }
  }
}

TEST_P(FieldMatrixProperty, InverseAndSubadditivity) {
  const int q = GetParam();
  std::mt19937_64 rng(37 + q);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 1 + trial % 4;
    const auto a = random_matrix(q, n, n, rng);
    if (rank(a) == n) {
      EXPECT_EQ(a * invert(a), FieldMatrix::identity(q, n));
      EXPECT_EQ(invert(a) * a, FieldMatrix::identity(q, n));
    } else {
      EXPECT_THROW(invert(a), SingularMatrix);
    }
    const auto b = random_matrix(q, n, 2, rng);
    EXPECT_LE(rank(hcat(a, b)), rank(a) + rank(b));
    EXPECT_LE(rank(a * b), std::min(rank(a), rank(b)));
  }
}

TEST_P(FieldMatrixProperty, ColumnSpaceKeyIsCanonical) {
  const int q = GetParam();
  std::mt19937_64 rng(41 + q);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_matrix(q, 4, 3, rng);
    const auto s = random_matrix(q, 3, 3, rng);
    if (rank(s) != 3) continue;
    // Right-multiplying by an invertible matrix keeps the column space.
    EXPECT_EQ(column_space_key(a), column_space_key(a * s));
    const auto b = random_matrix(q, 4, 3, rng);
    const bool same = in_column_span(a, b) && in_column_span(b, a);
    EXPECT_EQ(same, column_space_key(a) == column_space_key(b));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldMatrixProperty, ::testing::Values(2, 3, 5));

TEST(Gf2Span, AgreesWithDenseRank) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_matrix(2, 6, 1 + trial % 6, rng);
    const auto v = random_matrix(2, 6, 1, rng);
    Gf2Span span;
    for (Gf2Word w : pack_columns(a)) span.insert(w);
    EXPECT_EQ(span.dimension(), rank(a));
    EXPECT_EQ(span.contains(pack_columns(v)[0]), in_column_span(a, v));
  }
}

TEST(Gf2Span, PackingRequiresBinaryAndFewRows) {
  EXPECT_THROW(pack_columns(FieldMatrix(3, 2, 2)), ValidationError);
  EXPECT_THROW(pack_columns(FieldMatrix(2, 65, 1)), ValidationError);
}
