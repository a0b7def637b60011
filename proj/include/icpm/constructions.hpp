#pragma once

#include "icpm/gic.hpp"
#include "icpm/matroid.hpp"
#include "icpm/polymatroid.hpp"

#include <string>
#include <vector>

namespace icpm {

/// Identifies one message of a constructed problem: x_j or y_i^p (0-based).
struct MessageIndex {
  enum class Kind { X, Y };
  Kind kind = Kind::X;
  int element = 0;  // j for x_j, i for y_i^p
  int copy = 0;     // p for y_i^p, 0 for x_j

  friend bool operator==(const MessageIndex&, const MessageIndex&) = default;
};

/// Canonical message order: x_1..x_k, then y_1^1..y_1^{rho(1)}, ..., y_r^{rho(r)}.
/// This order is the row order of every matrix in a constructed problem.
class MessageLayout {
 public:
  /// copies[i] = rho({i}). With single_copy_names, y's print as "y3" instead of "y3^1".
  MessageLayout(int k, std::vector<int> copies, bool single_copy_names = false);

  int x_count() const noexcept { return k_; }
  int y_count() const noexcept { return offsets_.back(); }
  int total() const noexcept { return k_ + y_count(); }
  int ground_size() const noexcept { return static_cast<int>(copies_.size()); }
  int copies(int i) const { return copies_.at(static_cast<std::size_t>(i)); }

  int x(int j) const;
  int y(int i, int p) const;
  /// Position of y_i^0 among the y messages only.
  int y_offset(int i) const { return offsets_.at(static_cast<std::size_t>(i)); }

  MessageIndex at(int position) const;
  /// 1-based display name, e.g. "x2", "y3^1", or "y3".
  std::string name(int position) const;

 private:
  int k_;
  std::vector<int> copies_;
  std::vector<int> offsets_;
  bool single_copy_names_;
};

enum class ReceiverFamily { S1, S2, R1, R2, R3 };

const char* to_string(ReceiverFamily f) noexcept;

/// Why a receiver exists: the generating basis / excluded vector (or set
/// indicator, for matroids), the demanded message, and the Has-set messages.
struct TraceEntry {
  ReceiverFamily family = ReceiverFamily::R3;
  IntVector generator;  // empty for R3
  int demand = 0;       // message position
  std::vector<int> has; // message positions, ascending
  bool has_is_sum = false;
};

struct ConstructedProblem {
  GicProblem problem;
  MessageLayout layout;
  /// trace[i] lists every generator that produced receiver i (duplicates merged).
  std::vector<std::vector<TraceEntry>> trace;
};

/// The problem built from a discrete polymatroid with rho(E) >= 1: one
/// receiver family per basis vector, one per minimal excluded vector, and
/// the y_i^p receivers that know every x.
ConstructedProblem gic_from_polymatroid(const DiscretePolymatroid& d);

/// The problem built from a matroid of rank >= 1: basis, circuit and
/// y-from-all-x receivers.
ConstructedProblem gic_from_matroid(const Matroid& m);

/// f_i = y_i + x . M_i: x-block = representation, y-block = identity. GF(2) only.
IndexCode code_from_matroid_rep(const FieldMatrix& representation, const ConstructedProblem& p);

/// C = (x-block) * (y-block)^{-1} for a perfect scalar binary code on a
/// matroid-built problem. The result's vector matroid is the source matroid.
FieldMatrix matroid_rep_from_code(const ConstructedProblem& p, const IndexCode& code);

/// For a perfect dimension-n binary code on lift(p.problem, n) with p built
/// from d: normalizes the lower (y) block to the identity and slices the
/// upper block into one subspace per ground element. The result represents nD.
SubspaceRepresentation polymatroid_rep_from_code(const ConstructedProblem& p, const IndexCode& code,
                                                 const DiscretePolymatroid& d, int n);

}  // namespace icpm
