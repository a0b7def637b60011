#include "icpm/io.hpp"

#include "icpm/errors.hpp"

#include <string>

namespace icpm::io {
namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int read_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> read_ints(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(read_int(v, what));
  return out;
}

std::vector<std::vector<int>> read_table(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) out.push_back(read_ints(row, what));
  return out;
}

}  // namespace

Json to_json(const FieldMatrix& m) { return Json{{"q", m.modulus()}, {"rows", m.to_rows()}}; }

FieldMatrix matrix_from_json(const Json& j, int default_q) {
  if (j.is_string()) return parse_text(default_q, j.get<std::string>());
  const int q = j.contains("q") ? read_int(j.at("q"), "q") : default_q;
  const auto rows = read_table(require(j, "rows"), "rows");
  return FieldMatrix::from_rows(q, rows);
}

Json columns_to_json(const FieldMatrix& m) {
  Json out = Json::array();
  for (const auto& c : m.to_columns()) out.push_back(c);
  return out;
}

FieldMatrix columns_from_json(const Json& j, int q, Index rows) {
  return FieldMatrix::from_columns(q, rows, read_table(j, "columns"));
}

Json to_json(const GicProblem& p) {
  Json receivers = Json::array();
  for (const auto& r : p.receivers()) {
    receivers.push_back(Json{{"K", columns_to_json(r.knowledge)}, {"D", columns_to_json(r.demand)}});
  }
  return Json{{"q", p.modulus()}, {"m", p.message_count()}, {"n", p.dimension()}, {"receivers", receivers}};
}

GicProblem problem_from_json(const Json& j) {
  const int q = read_int(require(j, "q"), "q");
  const int m = read_int(require(j, "m"), "m");
  const int n = j.contains("n") ? read_int(j.at("n"), "n") : 1;
  if (!is_supported_modulus(q)) throw ValidationError("unsupported modulus q=" + std::to_string(q));
  if (m < 0 || n < 1) throw ValidationError("need m >= 0 and n >= 1");
  const Index rows = Index{m} * n;
  const Json& list = require(j, "receivers");
  if (!list.is_array()) throw ValidationError("receivers must be an array");
  std::vector<Receiver> receivers;
  for (const auto& r : list) {
    receivers.push_back({columns_from_json(require(r, "K"), q, rows), columns_from_json(require(r, "D"), q, rows)});
  }
  return GicProblem(q, m, n, std::move(receivers));
}

Json to_json(const IndexCode& code) { return Json{{"L", columns_to_json(code.matrix)}}; }

IndexCode code_from_json(const Json& j, const GicProblem& p) {
  return IndexCode{columns_from_json(require(j, "L"), p.modulus(), p.symbol_count())};
}

Json to_json(const Matroid& m) {
  return Json{{"m", m.ground_size()}, {"rank", std::vector<int>(m.rank_table().begin(), m.rank_table().end())}};
}

Matroid matroid_from_json(const Json& j) {
  if (j.is_object() && j.contains("uniform")) {
    const auto km = read_ints(j.at("uniform"), "uniform");
    if (km.size() != 2) throw ValidationError("uniform must be [k, m]");
    return Matroid::uniform(km[0], km[1]);
  }
  if (j.is_object() && j.contains("matrix")) {
    const int q = j.contains("q") ? read_int(j.at("q"), "q") : 2;
    return Matroid::from_matrix(matrix_from_json(j.at("matrix"), q));
  }
  return Matroid::from_rank_table(read_int(require(j, "m"), "m"), read_ints(require(j, "rank"), "rank"));
}

Json to_json(const DiscretePolymatroid& d) {
  return Json{{"r", d.ground_size()}, {"rank", std::vector<int>(d.rank_table().begin(), d.rank_table().end())}};
}

DiscretePolymatroid polymatroid_from_json(const Json& j) {
  return DiscretePolymatroid::from_rank_table(read_int(require(j, "r"), "r"), read_ints(require(j, "rank"), "rank"));
}

Json to_json(const SubspaceRepresentation& rep) {
  Json out = to_json(rep.matrix);
  out["block_widths"] = rep.block_widths;
  return out;
}

SubspaceRepresentation representation_from_json(const Json& j) {
  SubspaceRepresentation rep{matrix_from_json(j), {}};
  for (int w : read_ints(require(j, "block_widths"), "block_widths")) rep.block_widths.push_back(w);
  return rep;
}

Json to_json(const IntVector& v) { return v.components(); }

Json message_names(const MessageLayout& layout) {
  Json out = Json::array();
  for (int pos = 0; pos < layout.total(); ++pos) out.push_back(layout.name(pos));
  return out;
}

Json trace_to_json(const ConstructedProblem& cp) {
  Json out = Json::array();
  for (std::size_t i = 0; i < cp.trace.size(); ++i) {
    Json generators = Json::array();
    for (const auto& e : cp.trace[i]) {
      Json has = Json::array();
      for (int pos : e.has) has.push_back(cp.layout.name(pos));
      Json entry{{"family", to_string(e.family)},
                 {"demand", cp.layout.name(e.demand)},
                 {"has", has},
                 {"has_is_sum", e.has_is_sum}};
      if (e.generator.size() > 0) entry["generator"] = to_json(e.generator);
      generators.push_back(std::move(entry));
    }
    out.push_back(Json{{"receiver", i}, {"generators", generators}});
  }
  return out;
}

Json to_json(const SolveOutcome& outcome) {
  Json out{{"verdict", to_string(outcome.verdict)},
           {"candidates_tested", outcome.candidates_tested},
           {"space_size", outcome.space_size},
           {"normalized", outcome.normalized},
           {"solutions", outcome.solutions}};
  if (outcome.code) out["L"] = columns_to_json(outcome.code->matrix);
  if (!outcome.all.empty()) {
    Json all = Json::array();
    for (const auto& c : outcome.all) all.push_back(columns_to_json(c.matrix));
    out["all"] = std::move(all);
  }
  return out;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace icpm::io
