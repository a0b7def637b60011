#pragma once

#include "icpm/constructions.hpp"
#include "icpm/gic.hpp"
#include "icpm/matroid.hpp"
#include "icpm/polymatroid.hpp"
#include "icpm/solver.hpp"

#include <json.hpp>

#include <string>

namespace icpm::io {

using Json = nlohmann::json;

// Matrices: {"q": 2, "rows": [[1,0,1],[0,1,1]]}, or the text form
// "1 0 1; 0 1 1" (q taken from the caller, default 2).
Json to_json(const FieldMatrix& m);
FieldMatrix matrix_from_json(const Json& j, int default_q = 2);

// Column lists: [[c0 entries], [c1 entries], ...], each column of length `rows`.
Json columns_to_json(const FieldMatrix& m);
FieldMatrix columns_from_json(const Json& j, int q, Index rows);

// {"q", "m", "n", "receivers": [{"K": columns, "D": columns}]}
Json to_json(const GicProblem& p);
GicProblem problem_from_json(const Json& j);

// {"L": columns}; rows are implied by the problem (mn).
Json to_json(const IndexCode& code);
IndexCode code_from_json(const Json& j, const GicProblem& p);

// {"m": 3, "rank": [...]}; also accepted: {"uniform": [k, m]} and {"matrix": ...}.
Json to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

// {"r": 3, "rank": [...]}
Json to_json(const DiscretePolymatroid& d);
DiscretePolymatroid polymatroid_from_json(const Json& j);

// {"q", "rows", "block_widths"}
Json to_json(const SubspaceRepresentation& rep);
SubspaceRepresentation representation_from_json(const Json& j);

Json to_json(const IntVector& v);

/// One entry per receiver: the generators that produced it, with message names.
Json trace_to_json(const ConstructedProblem& cp);
/// Message names in row order ("x1", "y2^1", ...).
Json message_names(const MessageLayout& layout);

Json to_json(const SolveOutcome& outcome);

/// Deterministic single-line serialization followed by a newline.
std::string dump(const Json& j);

}  // namespace icpm::io
