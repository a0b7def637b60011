#include "icpm/constructions.hpp"
#include "icpm/errors.hpp"
#include "icpm/examples.hpp"
#include "icpm/solver.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace icpm;
using icpm::testing::random_matrix;

namespace {

std::map<ReceiverFamily, int> family_counts(const ConstructedProblem& cp) {
  std::map<ReceiverFamily, int> out;
  for (const auto& entries : cp.trace) ++out[entries.front().family];
  return out;
}

const TraceEntry* find_entry(const ConstructedProblem& cp, ReceiverFamily f, const std::string& demand,
                             std::vector<std::string> has) {
  for (const auto& entries : cp.trace)
    for (const auto& e : entries) {
      if (e.family != f || cp.layout.name(e.demand) != demand) continue;
      std::vector<std::string> names;
      for (int pos : e.has) names.push_back(cp.layout.name(pos));
      if (names == has) return &e;
    }
  return nullptr;
}

// Sum of the named messages as a single column.
FieldMatrix message_sum(const ConstructedProblem& cp, const std::vector<std::string>& names) {
  FieldMatrix v(2, cp.layout.total(), 1);
  for (const auto& name : names)
    for (int pos = 0; pos < cp.layout.total(); ++pos)
      if (cp.layout.name(pos) == name) v.set(pos, 0, (v(pos, 0) + 1) % 2);
  return v;
}

}  // namespace

TEST(MessageLayout, OrderAndNames) {
  const MessageLayout layout(3, {2, 2, 1});
  EXPECT_EQ(layout.total(), 8);
  EXPECT_EQ(layout.name(0), "x1");
  EXPECT_EQ(layout.name(3), "y1^1");
  EXPECT_EQ(layout.name(6), "y2^2");
  EXPECT_EQ(layout.name(7), "y3^1");
  EXPECT_EQ(layout.y(1, 1), 6);
  EXPECT_EQ(layout.at(6), (MessageIndex{MessageIndex::Kind::Y, 1, 1}));
  EXPECT_THROW(layout.y(2, 1), ValidationError);
  EXPECT_EQ(MessageLayout(2, {1, 1}, true).name(3), "y2");
}

TEST(PolymatroidConstruction, ThreeElementExample) {
  const auto eg = make_example("eg3");
  const auto& cp = *eg.construction;
  EXPECT_EQ(cp.problem.receivers().size(), 20U);
  EXPECT_EQ(family_counts(cp), (std::map<ReceiverFamily, int>{
                                   {ReceiverFamily::S1, 12}, {ReceiverFamily::S2, 4}, {ReceiverFamily::R3, 4}}));
  EXPECT_EQ(mu(cp.problem), 4U);
  // The second copy of y3 is recovered from the other y's, never from itself.
  EXPECT_NE(find_entry(cp, ReceiverFamily::S2, "y3^2", {"y1^1", "y2^1", "y3^1"}), nullptr);
  EXPECT_NE(find_entry(cp, ReceiverFamily::S1, "x2", {"y1^1", "y3^1", "y3^2"}), nullptr);
  EXPECT_TRUE(is_perfect(cp.problem, *eg.code));
}

TEST(PolymatroidConstruction, SecondExampleShape) {
  const auto eg = make_example("eg4");
  const auto& cp = *eg.construction;
  EXPECT_EQ(cp.layout.total(), 8);
  EXPECT_EQ(family_counts(cp), (std::map<ReceiverFamily, int>{
                                   {ReceiverFamily::S1, 27}, {ReceiverFamily::S2, 15}, {ReceiverFamily::R3, 5}}));
  EXPECT_EQ(mu(cp.problem), 5U);
}

TEST(PolymatroidConstruction, S2ReceiversHaveFullHasSets) {
  // Every S2 receiver's Has-set sum carries weight |c| - 1 messages.
  const auto eg = make_example("eg4");
  for (const auto& entries : eg.construction->trace)
    for (const auto& e : entries)
      if (e.family == ReceiverFamily::S2) EXPECT_EQ(static_cast<int>(e.has.size()), e.generator.weight() - 1);
}

TEST(PolymatroidExtraction, PrintedCodeGivesPrintedMatrix) {
  const auto eg = make_example("eg3");
  const auto rep = polymatroid_rep_from_code(*eg.construction, *eg.code, *eg.polymatroid, 1);
  EXPECT_EQ(rep.matrix, parse_text(2, "1 0 0 1; 0 1 0 1; 0 0 1 1"));
  EXPECT_EQ(rep.block_widths, (std::vector<Index>{1, 1, 2}));
  EXPECT_EQ(from_subspaces(rep), *eg.polymatroid);
}

TEST(PolymatroidExtraction, VectorCodeRepresentsScaledPolymatroid) {
  const auto eg = make_example("eg3");
  const IndexCode lifted{kron_identity(eg.code->matrix, 2)};
  const auto rep = polymatroid_rep_from_code(*eg.construction, lifted, *eg.polymatroid, 2);
  EXPECT_EQ(from_subspaces(rep), scale(*eg.polymatroid, 2));
}

TEST(PolymatroidExtraction, RejectsBadCodes) {
  const auto eg = make_example("eg3");
  const auto& cp = *eg.construction;
  EXPECT_THROW(polymatroid_rep_from_code(cp, IndexCode{eg.code->matrix.col_block(0, 3)}, *eg.polymatroid, 1),
               NotPerfect);
  FieldMatrix singular = eg.code->matrix;
  singular.set(6, 3, 0);
  singular.set(5, 3, 1);
  EXPECT_THROW(polymatroid_rep_from_code(cp, IndexCode{singular}, *eg.polymatroid, 1), NonInvertibleLowerBlock);
  FieldMatrix wrong = eg.code->matrix;
  wrong.set(0, 3, 0);
  EXPECT_THROW(polymatroid_rep_from_code(cp, IndexCode{wrong}, *eg.polymatroid, 1), NotPerfect);
}

TEST(MatroidConstruction, U23CodeAndCircuitReceivers) {
  const auto eg = make_example("u23");
  const auto& cp = *eg.construction;
  EXPECT_EQ(cp.problem.receivers().size(), 12U);
  EXPECT_EQ(mu(cp.problem), 3U);
  EXPECT_EQ(eg.code->matrix, hcat(message_sum(cp, {"y1", "x1"}),
                                  hcat(message_sum(cp, {"y2", "x2"}), message_sum(cp, {"y3", "x1", "x2"}))));
  EXPECT_TRUE(is_perfect(cp.problem, *eg.code));
  // Circuit receivers see one sum: y1 from {y2 + y3}.
  const auto* e = find_entry(cp, ReceiverFamily::R2, "y1", {"y2", "y3"});
  ASSERT_NE(e, nullptr);
  EXPECT_TRUE(e->has_is_sum);
}

TEST(MatroidConstruction, HammingSize) {
  const auto eg = make_example("hamming");
  const auto& cp = *eg.construction;
  EXPECT_EQ(cp.problem.receivers().size(), 147U);
  EXPECT_EQ(family_counts(cp), (std::map<ReceiverFamily, int>{
                                   {ReceiverFamily::R1, 112}, {ReceiverFamily::R2, 28}, {ReceiverFamily::R3, 7}}));
  EXPECT_EQ(mu(cp.problem), 7U);
  EXPECT_TRUE(is_perfect(cp.problem, *eg.code));
  EXPECT_EQ(Matroid::from_matrix(matroid_rep_from_code(cp, *eg.code)), *eg.matroid);
}

TEST(MatroidExtraction, RejectsBadCodes) {
  const auto eg = make_example("u23");
  const auto& cp = *eg.construction;
  EXPECT_THROW(matroid_rep_from_code(cp, IndexCode{eg.code->matrix.col_block(0, 2)}), NotPerfect);
  FieldMatrix no_y(2, 5, 3);
  no_y.set(0, 0, 1);
  EXPECT_THROW(matroid_rep_from_code(cp, IndexCode{no_y}), NonInvertibleYBlock);
  // Identity on y with x-block zero does not decode the basis receivers.
  EXPECT_THROW(matroid_rep_from_code(cp, IndexCode{vcat(FieldMatrix(2, 2, 3), FieldMatrix::identity(2, 3))}),
               NotPerfect);
  EXPECT_THROW(code_from_matroid_rep(parse_text(2, "1 0; 0 1"), cp), ShapeMismatch);
}

TEST(MatroidExtraction, RoundTripOnRandomBinaryMatrices) {
  std::mt19937_64 rng(71);
  int done = 0;
  while (done < 25) {
    const int k = 1 + done % 3;
    const int m = k + done % 3;
    const auto a = random_matrix(2, k, m, rng);
    if (rank(a) != k) continue;
    const auto matroid = Matroid::from_matrix(a);
    const auto cp = gic_from_matroid(matroid);
    const auto code = code_from_matroid_rep(a, cp);
    ASSERT_TRUE(is_perfect(cp.problem, code));
    EXPECT_EQ(Matroid::from_matrix(matroid_rep_from_code(cp, code)), matroid);
    ++done;
  }
}

TEST(MatroidExtraction, SolverOutputIsARepresentation) {
  for (const auto& m : {Matroid::uniform(2, 3), Matroid::uniform(1, 3), Matroid::from_matrix(parse_text(2, "1 0 1 1; 0 1 1 0"))}) {
    const auto cp = gic_from_matroid(m);
    const auto out = solve_perfect_scalar_binary(cp.problem);
    ASSERT_EQ(out.verdict, SolveVerdict::Found);
    EXPECT_EQ(Matroid::from_matrix(matroid_rep_from_code(cp, *out.code)), m);
  }
}

TEST(Constructions, RankZeroIsRejected) {
  EXPECT_THROW(gic_from_matroid(Matroid::uniform(0, 2)), ValidationError);
  EXPECT_THROW(gic_from_polymatroid(DiscretePolymatroid::from_rank_table(1, {0, 0})), ValidationError);
}

TEST(Constructions, PolymatroidOfALooplessMatroidGivesTheMatroidProblem) {
  // Receivers compared as sets of (demand, Has-set span); the two builders
  // list them in different orders.
  const auto receiver_set = [](const GicProblem& p) {
    std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> out;
    for (const auto& r : p.receivers()) out.insert({r.demand.to_columns(), column_space_key(r.knowledge).to_rows()});
    return out;
  };
  std::vector<Matroid> matroids{Matroid::uniform(2, 3), Matroid::uniform(2, 4), Matroid::uniform(3, 4),
                                Matroid::from_matrix(hamming_generator())};
  std::mt19937_64 rng(5);
  while (matroids.size() < 15) {
    const auto a = random_matrix(2, 3, 5, rng);
    const auto m = Matroid::from_matrix(a);
    bool loopless = m.rank() > 0;
    for (int e = 0; e < m.ground_size(); ++e) loopless = loopless && m.rank(Subset{1} << e) == 1;
    if (loopless) matroids.push_back(m);
  }
  for (const auto& m : matroids) {
    const auto from_poly = gic_from_polymatroid(from_matroid(m));
    const auto direct = gic_from_matroid(m);
    EXPECT_EQ(from_poly.layout.total(), direct.layout.total());
    EXPECT_EQ(receiver_set(from_poly.problem), receiver_set(direct.problem));
    EXPECT_EQ(family_counts(from_poly)[ReceiverFamily::S1], family_counts(direct)[ReceiverFamily::R1]);
    EXPECT_EQ(family_counts(from_poly)[ReceiverFamily::S2], family_counts(direct)[ReceiverFamily::R2]);
  }
}

TEST(Constructions, LoopsAddAMessageOnlyToTheMatroidProblem) {
  const auto m = Matroid::from_matrix(parse_text(2, "1 0 1; 0 1 0"));
  const auto with_loop = Matroid::from_matrix(parse_text(2, "1 0 0; 0 1 0"));
  EXPECT_EQ(gic_from_matroid(m).layout.total(), gic_from_polymatroid(from_matroid(m)).layout.total());
  EXPECT_EQ(gic_from_matroid(with_loop).layout.total(), gic_from_polymatroid(from_matroid(with_loop)).layout.total() + 1);
}
