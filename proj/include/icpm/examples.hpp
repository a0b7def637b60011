#pragma once

#include "icpm/constructions.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace icpm {

/// A named reference instance. Problems built from a matroid or polymatroid
/// keep the construction (layout and trace) alongside the source object.
struct ExampleBundle {
  std::string name;
  GicProblem problem;
  std::optional<IndexCode> code;
  std::optional<Matroid> matroid;
  std::optional<DiscretePolymatroid> polymatroid;
  std::optional<ConstructedProblem> construction;
};

/// eg1, eg3, eg4, u23, u24, hamming.
std::vector<std::string> example_names();

/// Throws ValidationError for an unknown name.
ExampleBundle make_example(std::string_view name);

/// Binary [7,4] Hamming code generator, rows 1000011 0100101 0010110 0001111.
FieldMatrix hamming_generator();

}  // namespace icpm
