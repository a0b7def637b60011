#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace icpm {

using Index = Eigen::Index;

/// Row-major entry storage. Entries are always kept reduced to [0, q).
using FieldStorage = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// True for the supported prime moduli {2, 3, 5}.
bool is_supported_modulus(int q) noexcept;

/// Multiplicative inverse of a nonzero residue modulo a supported prime.
int inverse_mod(int value, int q);

/// A dense matrix over the prime field GF(q).
///
/// Every index-coding object (knowledge and demand matrices, code matrices,
/// representing matrices) is a FieldMatrix. The modulus travels with the value
/// and binary operations require both operands to share it.
class FieldMatrix {
 public:
  /// 0x0 matrix over GF(2).
  FieldMatrix() = default;

  /// Zero matrix of the given shape.
  FieldMatrix(int q, Index rows, Index cols);

  /// Takes ownership of raw entries, reducing every value mod q.
  FieldMatrix(int q, FieldStorage entries);

  static FieldMatrix zero(int q, Index rows, Index cols) { return FieldMatrix(q, rows, cols); }
  static FieldMatrix identity(int q, Index n);
  /// n x 1 indicator of coordinate i.
  static FieldMatrix unit_column(int q, Index n, Index i);
  static FieldMatrix from_rows(int q, const std::vector<std::vector<int>>& rows);
  /// Builds a matrix whose j-th column is columns[j]; every column must have `rows` entries.
  static FieldMatrix from_columns(int q, Index rows, const std::vector<std::vector<int>>& columns);

  int modulus() const noexcept { return q_; }
  Index rows() const noexcept { return entries_.rows(); }
  Index cols() const noexcept { return entries_.cols(); }
  bool empty() const noexcept { return entries_.size() == 0; }

  int operator()(Index r, Index c) const { return entries_(r, c); }
  void set(Index r, Index c, int value);

  const FieldStorage& entries() const noexcept { return entries_; }

  FieldMatrix col_block(Index first, Index count) const;
  FieldMatrix row_block(Index first, Index count) const;
  FieldMatrix select_columns(std::span<const Index> columns) const;
  FieldMatrix column(Index c) const { return col_block(c, 1); }
  FieldMatrix transpose() const;

  std::vector<std::vector<int>> to_rows() const;
  std::vector<std::vector<int>> to_columns() const;

  bool is_zero() const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.q_ == b.q_ && a.entries_.rows() == b.entries_.rows() &&
           a.entries_.cols() == b.entries_.cols() && a.entries_ == b.entries_;
  }

 private:
  int q_ = 2;
  FieldStorage entries_;
};

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
/// Scalar multiple.
FieldMatrix operator*(int scalar, const FieldMatrix& a);

/// Horizontal concatenation [a | b]; row counts must agree.
FieldMatrix hcat(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix hcat(std::span<const FieldMatrix> blocks);
/// Vertical concatenation.
FieldMatrix vcat(const FieldMatrix& top, const FieldMatrix& bottom);

/// Kronecker product a (x) I_n: every entry becomes an n x n scaled identity.
FieldMatrix kron_identity(const FieldMatrix& a, Index n);

/// Dimension of the column space.
Index rank(const FieldMatrix& m);

/// True iff every column of target lies in the column span of basis.
bool in_column_span(const FieldMatrix& basis, const FieldMatrix& target);

/// Exact inverse. Throws SingularMatrix if m is square but rank deficient,
/// ShapeMismatch if m is not square.
FieldMatrix invert(const FieldMatrix& m);

/// Some X with a * X = b. Free variables are set to zero, pivots chosen by a
/// row-major first-nonzero scan, so the answer is reproducible.
/// Throws NoSolution when a column of b leaves the column span of a.
FieldMatrix solve_right(const FieldMatrix& a, const FieldMatrix& b);

/// Same as solve_right, but reports failure as nullopt.
std::optional<FieldMatrix> try_solve_right(const FieldMatrix& a, const FieldMatrix& b);

/// Reduced row echelon form with zero rows removed.
FieldMatrix reduced_row_echelon(const FieldMatrix& m);

/// Canonical description of the column space: rref of the transpose with zero
/// rows dropped. Two matrices have equal column spaces iff these are equal.
FieldMatrix column_space_key(const FieldMatrix& m);

/// Text form: rows of space-separated digits joined by ';', e.g. "1 0 1; 0 1 1".
std::string to_text(const FieldMatrix& m);
FieldMatrix parse_text(int q, const std::string& text);

}  // namespace icpm
