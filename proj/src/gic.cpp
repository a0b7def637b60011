#include "icpm/gic.hpp"

#include "icpm/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace icpm {
namespace {

void check_code_shape(const GicProblem& p, const IndexCode& code) {
  if (code.matrix.modulus() != p.modulus()) throw ValidationError("code and problem use different fields");
  if (code.matrix.rows() != p.symbol_count()) {
    throw ShapeMismatch("code matrix has " + std::to_string(code.matrix.rows()) + " rows, expected " +
                        std::to_string(p.symbol_count()));
  }
}

FieldMatrix side_information(const Receiver& r, const IndexCode& code) { return hcat(r.knowledge, code.matrix); }

FieldMatrix random_row(int q, Index length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> digit(0, q - 1);
  FieldMatrix x(q, 1, length);
  for (Index c = 0; c < length; ++c) x.set(0, c, digit(rng));
  return x;
}

}  // namespace

GicProblem::GicProblem(int q, int messages, int dimension, std::vector<Receiver> receivers)
    : q_(q), m_(messages), n_(dimension), receivers_(std::move(receivers)) {
  if (!is_supported_modulus(q)) throw ValidationError("unsupported modulus q=" + std::to_string(q));
  if (messages < 0) throw ValidationError("message count must be non-negative");
  if (dimension < 1) throw ValidationError("dimension must be at least 1");
  for (std::size_t i = 0; i < receivers_.size(); ++i) {
    const auto& r = receivers_[i];
    const std::string where = "receiver " + std::to_string(i) + ": ";
    if (r.knowledge.modulus() != q || r.demand.modulus() != q) throw ValidationError(where + "field mismatch");
    if (r.knowledge.rows() != symbol_count() || r.demand.rows() != symbol_count()) {
      throw ShapeMismatch(where + "matrices must have mn = " + std::to_string(symbol_count()) + " rows");
    }
    if (r.demand.cols() < 1) throw ValidationError(where + "demand matrix needs at least one column");
  }
}

GicProblem lift(const GicProblem& p, int n) {
  std::vector<Receiver> lifted;
  lifted.reserve(p.receivers().size());
  for (const auto& r : p.receivers()) lifted.push_back({kron_identity(r.knowledge, n), kron_identity(r.demand, n)});
  return GicProblem(p.modulus(), p.message_count(), p.dimension() * n, std::move(lifted));
}

bool VerificationReport::all_pass() const { return std::all_of(decodes.begin(), decodes.end(), [](bool b) { return b; }); }

std::optional<std::size_t> VerificationReport::first_failure() const {
  for (std::size_t i = 0; i < decodes.size(); ++i)
    if (!decodes[i]) return i;
  return std::nullopt;
}

VerificationReport verify_code(const GicProblem& p, const IndexCode& code) {
  check_code_shape(p, code);
  VerificationReport report;
  report.decodes.reserve(p.receivers().size());
  for (const auto& r : p.receivers()) report.decodes.push_back(in_column_span(side_information(r, code), r.demand));
  return report;
}

FieldMatrix decoding_matrix(const GicProblem& p, const IndexCode& code, std::size_t receiver, std::uint64_t seed) {
  check_code_shape(p, code);
  const Receiver& r = p.receiver(receiver);
  const FieldMatrix side = side_information(r, code);
  auto m = try_solve_right(side, r.demand);
  if (!m) throw Undecodable(receiver);

  // The receiver sees X*[K|L]; decoding must reproduce X*D for every X.
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 8; ++trial) {
    const FieldMatrix x = random_row(p.modulus(), p.symbol_count(), rng);
    if (!((x * side) * *m == x * r.demand)) throw Error("internal: decoding matrix failed its functional check");
  }
  return *std::move(m);
}

std::size_t mu(const GicProblem& p) {
  std::map<std::vector<std::vector<int>>, std::size_t> groups;
  std::size_t best = 0;
  for (const auto& r : p.receivers()) {
    best = std::max(best, ++groups[column_space_key(r.knowledge).to_rows()]);
  }
  return best;
}

bool is_perfect(const GicProblem& p, const IndexCode& code) {
  if (!verify_code(p, code).all_pass()) return false;
  return code.length() == static_cast<Index>(mu(p)) * p.dimension();
}

FieldMatrix GicRepresentation::message_matrix() const {
  if (message_blocks.empty()) return FieldMatrix(code_block.modulus(), code_block.rows(), 0);
  return hcat(message_blocks);
}

bool ConditionReport::c1() const {
  return message_rank && code_rank && std::all_of(block_rank.begin(), block_rank.end(), [](bool b) { return b; });
}

bool ConditionReport::c2_all() const { return std::all_of(c2.begin(), c2.end(), [](bool b) { return b; }); }

ConditionReport check_c1_c2(const GicRepresentation& rep, const GicProblem& p) {
  if (static_cast<int>(rep.message_blocks.size()) != p.message_count()) {
    throw ShapeMismatch("representation has " + std::to_string(rep.message_blocks.size()) + " message blocks for " +
                        std::to_string(p.message_count()) + " messages");
  }
  for (const auto& block : rep.message_blocks) {
    if (block.cols() != p.dimension()) throw ShapeMismatch("message blocks must have n columns");
    if (block.rows() != rep.code_block.rows()) throw ShapeMismatch("representation blocks disagree on row count");
  }
  const FieldMatrix a = rep.message_matrix();
  if (a.cols() != p.symbol_count()) throw ShapeMismatch("message matrix must have mn columns");

  ConditionReport out;
  for (const auto& block : rep.message_blocks) out.block_rank.push_back(rank(block) == p.dimension());
  out.message_rank = rank(a) == p.symbol_count();
  out.code_rank = rank(rep.code_block) == rep.code_block.cols();
  for (const auto& r : p.receivers()) {
    const FieldMatrix known = hcat(a * r.knowledge, rep.code_block);
    out.c2.push_back(rank(hcat(a * r.demand, known)) == rank(known));
  }
  return out;
}

GicRepresentation induced_representation(const GicProblem& p, const IndexCode& code) {
  check_code_shape(p, code);
  const FieldMatrix identity = FieldMatrix::identity(p.modulus(), p.symbol_count());
  GicRepresentation rep;
  for (int i = 0; i < p.message_count(); ++i) rep.message_blocks.push_back(identity.col_block(Index{i} * p.dimension(), p.dimension()));
  rep.code_block = code.matrix;
  return rep;
}

GicRepresentation code_to_representation(const GicProblem& p, const IndexCode& code) {
  const auto report = verify_code(p, code);
  if (auto failed = report.first_failure()) throw Undecodable(*failed);
  return induced_representation(p, code);
}

IndexCode representation_to_code(const GicRepresentation& rep, const GicProblem& p) {
  const auto report = check_c1_c2(rep, p);
  for (std::size_t i = 0; i < report.block_rank.size(); ++i) {
    if (!report.block_rank[i]) throw C1Violation("block " + std::to_string(i) + " does not have rank n");
  }
  if (!report.message_rank) throw C1Violation("[A_1 ... A_m] is not invertible");
  for (std::size_t i = 0; i < report.c2.size(); ++i) {
    if (!report.c2[i]) throw C2Violation(i);
  }
  return IndexCode{invert(rep.message_matrix()) * rep.code_block};
}

}  // namespace icpm
