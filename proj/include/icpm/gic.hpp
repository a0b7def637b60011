#pragma once

#include "icpm/field_matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace icpm {

/// One client: it holds X * knowledge and wants X * demand.
struct Receiver {
  FieldMatrix knowledge;  // mn x h, h may be 0
  FieldMatrix demand;     // mn x w, w >= 1

  friend bool operator==(const Receiver&, const Receiver&) = default;
};

/// A generalized index coding instance: m messages, each a vector of n
/// symbols over GF(q), so X lives in GF(q)^{mn}.
class GicProblem {
 public:
  GicProblem(int q, int messages, int dimension, std::vector<Receiver> receivers);

  int modulus() const noexcept { return q_; }
  int message_count() const noexcept { return m_; }
  int dimension() const noexcept { return n_; }
  /// mn: the length of the message vector X.
  Index symbol_count() const noexcept { return Index{m_} * n_; }
  const std::vector<Receiver>& receivers() const noexcept { return receivers_; }
  const Receiver& receiver(std::size_t i) const { return receivers_.at(i); }

  friend bool operator==(const GicProblem&, const GicProblem&) = default;

 private:
  int q_;
  int m_;
  int n_;
  std::vector<Receiver> receivers_;
};

/// Every scalar function becomes its n-symbol vector version (K (x) I_n).
GicProblem lift(const GicProblem& p, int n);

/// The linear code f(X) = X * L.
struct IndexCode {
  FieldMatrix matrix;  // mn x l

  Index length() const noexcept { return matrix.cols(); }
  friend bool operator==(const IndexCode&, const IndexCode&) = default;
};

struct VerificationReport {
  std::vector<bool> decodes;  // by receiver index

  bool all_pass() const;
  std::optional<std::size_t> first_failure() const;
};

/// Receiver i decodes iff every column of D_i lies in colspan([K_i | L]).
VerificationReport verify_code(const GicProblem& p, const IndexCode& code);

/// M_i with [K_i | L] M_i = D_i. The product identity is also spot-checked on
/// random message vectors drawn from `seed`. Throws Undecodable.
FieldMatrix decoding_matrix(const GicProblem& p, const IndexCode& code, std::size_t receiver,
                            std::uint64_t seed = 0);

/// Largest number of receivers sharing a Has-set, where two Has-sets are the
/// same iff their knowledge matrices have the same column space.
std::size_t mu(const GicProblem& p);

/// verify_code passes and l / n == mu.
bool is_perfect(const GicProblem& p, const IndexCode& code);

/// Representing matrices A_1..A_m (mn x n each) and A_{m+1} (mn x l).
struct GicRepresentation {
  std::vector<FieldMatrix> message_blocks;
  FieldMatrix code_block;

  /// A = [A_1 ... A_m].
  FieldMatrix message_matrix() const;
};

struct ConditionReport {
  std::vector<bool> block_rank;  // rank(A_i) == n, per message
  bool message_rank = false;     // rank(A) == mn
  bool code_rank = false;        // rank(A_{m+1}) == l
  std::vector<bool> c2;          // per receiver

  bool c1() const;
  bool c2_all() const;
  bool all() const { return c1() && c2_all(); }
};

/// C1 ranks and, for each receiver, rank([A D_i | A K_i | A_{m+1}]) ==
/// rank([A K_i | A_{m+1}]).
ConditionReport check_c1_c2(const GicRepresentation& rep, const GicProblem& p);

/// A_i = i-th n-column block of the identity, A_{m+1} = L. No decodability check.
GicRepresentation induced_representation(const GicProblem& p, const IndexCode& code);

/// induced_representation for a code that verifies; throws Undecodable otherwise.
GicRepresentation code_to_representation(const GicProblem& p, const IndexCode& code);

/// L = A^{-1} A_{m+1}. Requires rank(A_i) == n, A invertible (C1Violation) and
/// C2 at every receiver (C2Violation). A rank-deficient A_{m+1} is accepted:
/// redundant transmissions still form a valid code of length l.
IndexCode representation_to_code(const GicRepresentation& rep, const GicProblem& p);

}  // namespace icpm
