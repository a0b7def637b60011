#include "icpm/cli.hpp"

#include "icpm/errors.hpp"
#include "icpm/examples.hpp"
#include "icpm/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace icpm::cli {
namespace {

using io::Json;

Json read_document(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(path);
    if (!file) throw ValidationError("cannot open " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  return Json::parse(text);
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream file(path);
  if (!file) throw ValidationError("cannot write " + path);
  file << io::dump(j);
}

// A bundle nests the problem under "problem"; a bare problem is accepted too.
const Json& problem_part(const Json& j) { return j.contains("problem") ? j.at("problem") : j; }

bool looks_polymatroid(const Json& j) { return j.contains("r") || j.value("kind", "") == "polymatroid"; }

Json bundle_to_json(const ExampleBundle& b) {
  Json out{{"name", b.name}, {"problem", io::to_json(b.problem)}};
  if (b.code) out["code"] = io::to_json(*b.code);
  if (b.matroid) out["matroid"] = io::to_json(*b.matroid);
  if (b.polymatroid) out["polymatroid"] = io::to_json(*b.polymatroid);
  if (b.construction) out["messages"] = io::message_names(b.construction->layout);
  return out;
}

struct Options {
  std::string input;
  std::string problem_path;
  std::string code_path;
  std::string trace_path;
  std::string witness_path;
  std::string example;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  bool no_normalize = false;
  bool count = false;
  bool all = false;
  int jobs = 1;
  int q = 2;
};

int do_construct(const Options& o, std::istream& in, std::ostream& out) {
  const Json doc = read_document(o.input, in);
  ConstructedProblem cp = [&] {
    if (doc.contains("polymatroid")) return gic_from_polymatroid(io::polymatroid_from_json(doc.at("polymatroid")));
    if (doc.contains("matroid")) return gic_from_matroid(io::matroid_from_json(doc.at("matroid")));
    if (looks_polymatroid(doc)) return gic_from_polymatroid(io::polymatroid_from_json(doc));
    return gic_from_matroid(io::matroid_from_json(doc));
  }();
  if (!o.trace_path.empty()) write_file(o.trace_path, io::trace_to_json(cp));
  out << io::dump(Json{{"problem", io::to_json(cp.problem)},
                       {"messages", io::message_names(cp.layout)},
                       {"mu", mu(cp.problem)}});
  return kAffirmative;
}

int do_verify(const Options& o, std::istream& in, std::ostream& out) {
  const bool need_stdin = o.problem_path.empty() || o.code_path.empty();
  const Json doc = need_stdin ? read_document(o.input, in) : Json::object();
  const Json problem_doc = o.problem_path.empty() ? problem_part(doc) : problem_part(read_document(o.problem_path, in));
  const GicProblem p = io::problem_from_json(problem_doc);
  const Json code_doc = !o.code_path.empty() ? read_document(o.code_path, in) : doc.contains("code") ? doc.at("code") : doc;
  const IndexCode code = io::code_from_json(code_doc, p);

  const auto report = verify_code(p, code);
  Json receivers = Json::array();
  for (std::size_t i = 0; i < report.decodes.size(); ++i) {
    Json r{{"index", i}, {"decodes", static_cast<bool>(report.decodes[i])}};
    if (report.decodes[i]) r["M"] = io::columns_to_json(decoding_matrix(p, code, i, o.seed + i));
    receivers.push_back(std::move(r));
  }
  const bool pass = report.all_pass();
  out << io::dump(Json{{"all_pass", pass},
                       {"length", code.length()},
                       {"mu", mu(p)},
                       {"perfect", pass && is_perfect(p, code)},
                       {"receivers", receivers}});
  return pass ? kAffirmative : kNegative;
}

int do_solve(const Options& o, std::istream& in, std::ostream& out) {
  const GicProblem p = io::problem_from_json(problem_part(read_document(o.input, in)));
  SearchConfig cfg;
  cfg.normalize_y_block = !o.no_normalize;
  if (o.budget > 0) cfg.budget = o.budget;
  cfg.jobs = o.jobs;
  cfg.report = o.all ? ReportMode::All : o.count ? ReportMode::Count : ReportMode::First;
  const SolveOutcome outcome = solve_perfect_scalar_binary(p, cfg);
  if (!o.witness_path.empty() && outcome.code) write_file(o.witness_path, io::to_json(*outcome.code));
  out << io::dump(io::to_json(outcome));
  switch (outcome.verdict) {
    case SolveVerdict::Found:
      return kAffirmative;
    case SolveVerdict::NoneExists:
      return kNegative;
    case SolveVerdict::BudgetExceeded:
      return kBudgetExceeded;
  }
  return kInputError;
}

int verdict_code(RepresentationVerdict v) {
  switch (v) {
    case RepresentationVerdict::Found:
      return kAffirmative;
    case RepresentationVerdict::NotRepresentable:
      return kNegative;
    case RepresentationVerdict::BudgetExceeded:
      return kBudgetExceeded;
  }
  return kInputError;
}

int do_repcheck(const Options& o, std::istream& in, std::ostream& out) {
  const Json doc = read_document(o.input, in);
  const std::uint64_t budget = o.budget > 0 ? o.budget : kDefaultSearchBudget;
  const bool poly = doc.contains("polymatroid") || (!doc.contains("matroid") && looks_polymatroid(doc));
  Json result{{"q", o.q}};
  RepresentationVerdict verdict{};
  if (poly) {
    const auto d = io::polymatroid_from_json(doc.contains("polymatroid") ? doc.at("polymatroid") : doc);
    const auto rep = find_representation(d, o.q, budget);
    verdict = rep.verdict;
    result["kind"] = "polymatroid";
    result["candidates_tested"] = rep.candidates_tested;
    if (rep.representation) result["representation"] = io::to_json(*rep.representation);
  } else {
    const auto m = io::matroid_from_json(doc.contains("matroid") ? doc.at("matroid") : doc);
    const auto rep = find_representation(m, o.q, budget);
    verdict = rep.verdict;
    result["kind"] = "matroid";
    result["candidates_tested"] = rep.candidates_tested;
    if (rep.matrix) result["representation"] = io::to_json(*rep.matrix);
  }
  result["verdict"] = to_string(verdict);
  out << io::dump(result);
  return verdict_code(verdict);
}

int do_mu(const Options& o, std::istream& in, std::ostream& out) {
  const GicProblem p = io::problem_from_json(problem_part(read_document(o.input, in)));
  out << io::dump(Json{{"mu", mu(p)}, {"receivers", p.receivers().size()}});
  return kAffirmative;
}

int do_examples(const Options& o, std::ostream& out) {
  if (o.example.empty()) {
    out << io::dump(Json{{"examples", example_names()}});
    return kAffirmative;
  }
  out << io::dump(bundle_to_json(make_example(o.example)));
  return kAffirmative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized index coding and polymatroid representability toolkit", "icpm"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build the index coding problem of a matroid or polymatroid");
  construct->add_option("input", o.input, "JSON file (default: stdin)");
  construct->add_option("--trace", o.trace_path, "Write the receiver trace to this path");

  auto* verify = app.add_subcommand("verify", "Check that a code lets every receiver decode");
  verify->add_option("input", o.input, "Bundle or code JSON (default: stdin)");
  verify->add_option("--problem", o.problem_path, "Problem JSON file");
  verify->add_option("--code", o.code_path, "Code JSON file");
  verify->add_option("--seed", o.seed, "Seed for the randomized decoding checks");

  auto* solve = app.add_subcommand("solve", "Search for a perfect scalar binary linear code");
  solve->add_option("input", o.input, "Problem or bundle JSON (default: stdin)");
  solve->add_option("--budget", o.budget, "Maximum number of candidates")->check(CLI::PositiveNumber);
  solve->add_flag("--no-normalize", o.no_normalize, "Search the full space");
  solve->add_flag("--count", o.count, "Count every passing code");
  solve->add_flag("--all", o.all, "Report every passing code");
  solve->add_option("--emit-witness", o.witness_path, "Write the found code to this path");
  solve->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* repcheck = app.add_subcommand("repcheck", "Search for a representation over GF(q)");
  repcheck->add_option("input", o.input, "Matroid or polymatroid JSON (default: stdin)");
  repcheck->add_option("--q", o.q, "Field size (2, 3 or 5)");
  repcheck->add_option("--budget", o.budget, "Maximum number of search nodes")->check(CLI::PositiveNumber);

  auto* mu_cmd = app.add_subcommand("mu", "Largest number of receivers sharing a Has-set");
  mu_cmd->add_option("input", o.input, "Problem or bundle JSON (default: stdin)");

  auto* examples = app.add_subcommand("examples", "Print a bundled instance");
  examples->add_option("name", o.example, "eg1, eg3, eg4, u23, u24 or hamming");

  std::vector<const char*> argv{"icpm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kAffirmative : kInputError;
  }

  try {
    if (*construct) return do_construct(o, in, out);
    if (*verify) return do_verify(o, in, out);
    if (*solve) return do_solve(o, in, out);
    if (*repcheck) return do_repcheck(o, in, out);
    if (*mu_cmd) return do_mu(o, in, out);
    if (*examples) return do_examples(o, out);
  } catch (const icpm::BudgetExceeded& e) {
    err << "icpm: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const Json::exception& e) {
    err << "icpm: malformed JSON: " << e.what() << "\n";
    return kInputError;
  } catch (const icpm::Error& e) {
    err << "icpm: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace icpm::cli
