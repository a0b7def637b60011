#include "icpm/examples.hpp"

#include "icpm/errors.hpp"

namespace icpm {
namespace {

// Columns given as sets of 0-based message indices.
FieldMatrix sums(int t, const std::vector<std::vector<int>>& columns) {
  FieldMatrix out(2, t, static_cast<Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (int e : columns[c]) out.set(e, static_cast<Index>(c), 1);
  return out;
}

ExampleBundle five_message_example() {
  constexpr int t = 5;
  std::vector<Receiver> receivers{
      {sums(t, {{1}}), sums(t, {{0}})},
      {sums(t, {{0, 4}}), sums(t, {{1}})},
      {sums(t, {{0}, {3}}), sums(t, {{2}})},
      {sums(t, {{0, 1, 2}}), sums(t, {{3}})},
      {sums(t, {{1}, {0, 2}}), sums(t, {{2, 3, 4}})},
  };
  GicProblem p(2, t, 1, std::move(receivers));
  return ExampleBundle{"eg1", std::move(p), IndexCode{sums(t, {{0, 1}, {2, 3}, {4}})}, {}, {}, {}};
}

ExampleBundle from_polymatroid(std::string name, std::vector<int> ranks, std::optional<std::vector<std::vector<int>>> code) {
  auto d = DiscretePolymatroid::from_rank_table(3, std::move(ranks));
  auto cp = gic_from_polymatroid(d);
  std::optional<IndexCode> c;
  if (code) c = IndexCode{sums(cp.layout.total(), *code)};
  return ExampleBundle{std::move(name), cp.problem, std::move(c), {}, std::move(d), std::move(cp)};
}

ExampleBundle from_matroid(std::string name, const Matroid& m, const std::optional<FieldMatrix>& rep) {
  auto cp = gic_from_matroid(m);
  std::optional<IndexCode> c;
  if (rep) c = code_from_matroid_rep(*rep, cp);
  return ExampleBundle{std::move(name), cp.problem, std::move(c), m, {}, std::move(cp)};
}

}  // namespace

std::vector<std::string> example_names() { return {"eg1", "eg3", "eg4", "u23", "u24", "hamming"}; }

FieldMatrix hamming_generator() {
  return parse_text(2, "1 0 0 0 0 1 1; 0 1 0 0 1 0 1; 0 0 1 0 1 1 0; 0 0 0 1 1 1 1");
}

ExampleBundle make_example(std::string_view name) {
  if (name == "eg1") return five_message_example();
  if (name == "eg3") {
    // Messages x1 x2 x3 y1^1 y2^1 y3^1 y3^2.
    return from_polymatroid("eg3", {0, 1, 1, 2, 2, 3, 3, 3}, std::vector<std::vector<int>>{{3, 0}, {4, 1}, {5, 2}, {6, 0, 1, 2}});
  }
  if (name == "eg4") return from_polymatroid("eg4", {0, 2, 2, 3, 1, 3, 2, 3}, std::nullopt);
  if (name == "u23") return from_matroid("u23", Matroid::uniform(2, 3), parse_text(2, "1 0 1; 0 1 1"));
  if (name == "u24") return from_matroid("u24", Matroid::uniform(2, 4), std::nullopt);
  if (name == "hamming") return from_matroid("hamming", Matroid::from_matrix(hamming_generator()), hamming_generator());
  throw ValidationError("unknown example \"" + std::string(name) + "\"");
}

}  // namespace icpm
