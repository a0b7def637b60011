#include "icpm/field_matrix.hpp"

#include "icpm/errors.hpp"

#include <sstream>
#include <utility>

namespace icpm {
namespace {

int reduce(long long value, int q) {
  long long r = value % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

void require_same_modulus(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.modulus() != b.modulus()) {
    throw ValidationError("operands live over different fields (q=" + std::to_string(a.modulus()) +
                          " vs q=" + std::to_string(b.modulus()) + ")");
  }
}

// In-place reduction to reduced row echelon form. Returns the pivot column of
// each nonzero row. Pivot choice: scan columns left to right, take the first
// row at or below the current one holding a nonzero entry.
std::vector<Index> rref_in_place(FieldStorage& m, int q) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const int inv = inverse_mod(m(row, col), q);
    if (inv != 1) {
      for (Index c = col; c < m.cols(); ++c) m(row, c) = reduce(1LL * m(row, c) * inv, q);
    }
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const int factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c) {
        if (m(row, c) != 0) m(r, c) = reduce(m(r, c) - 1LL * factor * m(row, c), q);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

bool is_supported_modulus(int q) noexcept { return q == 2 || q == 3 || q == 5; }

int inverse_mod(int value, int q) {
  const int v = reduce(value, q);
  if (v == 0) throw SingularMatrix();
  for (int candidate = 1; candidate < q; ++candidate) {
    if ((v * candidate) % q == 1) return candidate;
  }
  throw ValidationError("modulus " + std::to_string(q) + " is not prime");
}

FieldMatrix::FieldMatrix(int q, Index rows, Index cols) : q_(q), entries_(FieldStorage::Zero(rows, cols)) {
  if (!is_supported_modulus(q)) throw ValidationError("unsupported modulus q=" + std::to_string(q));
  if (rows < 0 || cols < 0) throw ShapeMismatch("negative matrix dimension");
}

FieldMatrix::FieldMatrix(int q, FieldStorage entries) : q_(q), entries_(std::move(entries)) {
  if (!is_supported_modulus(q)) throw ValidationError("unsupported modulus q=" + std::to_string(q));
  for (Index r = 0; r < entries_.rows(); ++r)
    for (Index c = 0; c < entries_.cols(); ++c) entries_(r, c) = reduce(entries_(r, c), q_);
}

FieldMatrix FieldMatrix::identity(int q, Index n) {
  FieldMatrix m(q, n, n);
  m.entries_.setIdentity();
  return m;
}

FieldMatrix FieldMatrix::unit_column(int q, Index n, Index i) {
  FieldMatrix m(q, n, 1);
  m.entries_(i, 0) = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(int q, const std::vector<std::vector<int>>& rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.front().size());
  FieldStorage s(r, c);
  for (Index i = 0; i < r; ++i) {
    if (static_cast<Index>(rows[i].size()) != c) throw ShapeMismatch("ragged matrix rows");
    for (Index j = 0; j < c; ++j) s(i, j) = rows[i][j];
  }
  return FieldMatrix(q, std::move(s));
}

FieldMatrix FieldMatrix::from_columns(int q, Index rows, const std::vector<std::vector<int>>& columns) {
  FieldStorage s(rows, static_cast<Index>(columns.size()));
  for (Index j = 0; j < s.cols(); ++j) {
    if (static_cast<Index>(columns[j].size()) != rows) {
      throw ShapeMismatch("column " + std::to_string(j) + " has " + std::to_string(columns[j].size()) +
                          " entries, expected " + std::to_string(rows));
    }
    for (Index i = 0; i < rows; ++i) s(i, j) = columns[j][i];
  }
  return FieldMatrix(q, std::move(s));
}

void FieldMatrix::set(Index r, Index c, int value) { entries_(r, c) = reduce(value, q_); }

FieldMatrix FieldMatrix::col_block(Index first, Index count) const {
  if (first < 0 || count < 0 || first + count > cols()) throw ShapeMismatch("column block out of range");
  return FieldMatrix(q_, FieldStorage(entries_.middleCols(first, count)));
}

FieldMatrix FieldMatrix::row_block(Index first, Index count) const {
  if (first < 0 || count < 0 || first + count > rows()) throw ShapeMismatch("row block out of range");
  return FieldMatrix(q_, FieldStorage(entries_.middleRows(first, count)));
}

FieldMatrix FieldMatrix::select_columns(std::span<const Index> columns) const {
  FieldStorage s(rows(), static_cast<Index>(columns.size()));
  for (Index j = 0; j < s.cols(); ++j) s.col(j) = entries_.col(columns[j]);
  return FieldMatrix(q_, std::move(s));
}

FieldMatrix FieldMatrix::transpose() const { return FieldMatrix(q_, FieldStorage(entries_.transpose())); }

std::vector<std::vector<int>> FieldMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows(), std::vector<int>(cols()));
  for (Index r = 0; r < rows(); ++r)
    for (Index c = 0; c < cols(); ++c) out[r][c] = entries_(r, c);
  return out;
}

std::vector<std::vector<int>> FieldMatrix::to_columns() const { return transpose().to_rows(); }

bool FieldMatrix::is_zero() const { return entries_.size() == 0 || entries_.isZero(); }

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_modulus(a, b);
  if (a.cols() != b.rows()) throw ShapeMismatch("product dimension mismatch");
  // Entries are < 5 and dimensions tiny, so the int product cannot overflow before reduction.
  return FieldMatrix(a.modulus(), FieldStorage(a.entries() * b.entries()));
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_modulus(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("sum dimension mismatch");
  return FieldMatrix(a.modulus(), FieldStorage(a.entries() + b.entries()));
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_modulus(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("difference dimension mismatch");
  return FieldMatrix(a.modulus(), FieldStorage(a.entries() - b.entries()));
}

FieldMatrix operator*(int scalar, const FieldMatrix& a) {
  return FieldMatrix(a.modulus(), FieldStorage(a.entries() * reduce(scalar, a.modulus())));
}

FieldMatrix hcat(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_modulus(a, b);
  if (a.rows() != b.rows()) throw ShapeMismatch("hcat row mismatch");
  FieldStorage s(a.rows(), a.cols() + b.cols());
  s << a.entries(), b.entries();
  return FieldMatrix(a.modulus(), std::move(s));
}

FieldMatrix hcat(std::span<const FieldMatrix> blocks) {
  if (blocks.empty()) throw ShapeMismatch("hcat of no blocks");
  Index cols = 0;
  for (const auto& b : blocks) {
    require_same_modulus(blocks.front(), b);
    if (b.rows() != blocks.front().rows()) throw ShapeMismatch("hcat row mismatch");
    cols += b.cols();
  }
  FieldStorage s(blocks.front().rows(), cols);
  Index at = 0;
  for (const auto& b : blocks) {
    s.middleCols(at, b.cols()) = b.entries();
    at += b.cols();
  }
  return FieldMatrix(blocks.front().modulus(), std::move(s));
}

FieldMatrix vcat(const FieldMatrix& top, const FieldMatrix& bottom) {
  require_same_modulus(top, bottom);
  if (top.cols() != bottom.cols()) throw ShapeMismatch("vcat column mismatch");
  FieldStorage s(top.rows() + bottom.rows(), top.cols());
  s << top.entries(), bottom.entries();
  return FieldMatrix(top.modulus(), std::move(s));
}

FieldMatrix kron_identity(const FieldMatrix& a, Index n) {
  if (n < 1) throw ValidationError("dimension must be at least 1");
  FieldMatrix out(a.modulus(), a.rows() * n, a.cols() * n);
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c)
      for (Index d = 0; d < n; ++d) out.set(r * n + d, c * n + d, a(r, c));
  return out;
}

Index rank(const FieldMatrix& m) {
  FieldStorage work = m.entries();
  return static_cast<Index>(rref_in_place(work, m.modulus()).size());
}

bool in_column_span(const FieldMatrix& basis, const FieldMatrix& target) {
  if (basis.rows() != target.rows()) throw ShapeMismatch("in_column_span row mismatch");
  return rank(hcat(basis, target)) == rank(basis);
}

FieldMatrix invert(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("cannot invert a non-square matrix");
  auto x = try_solve_right(m, FieldMatrix::identity(m.modulus(), m.rows()));
  if (!x) throw SingularMatrix();
  return *std::move(x);
}

std::optional<FieldMatrix> try_solve_right(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_modulus(a, b);
  if (a.rows() != b.rows()) throw ShapeMismatch("solve_right row mismatch");
  const int q = a.modulus();
  FieldStorage aug(a.rows(), a.cols() + b.cols());
  aug << a.entries(), b.entries();
  const auto pivots = rref_in_place(aug, q);

  FieldMatrix x(q, a.cols(), b.cols());
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    if (pivots[row] >= a.cols()) return std::nullopt;  // pivot in the b part: inconsistent
    for (Index j = 0; j < b.cols(); ++j) x.set(pivots[row], j, aug(static_cast<Index>(row), a.cols() + j));
  }
  return x;
}

FieldMatrix solve_right(const FieldMatrix& a, const FieldMatrix& b) {
  auto x = try_solve_right(a, b);
  if (!x) throw NoSolution();
  return *std::move(x);
}

FieldMatrix reduced_row_echelon(const FieldMatrix& m) {
  FieldStorage work = m.entries();
  const auto pivots = rref_in_place(work, m.modulus());
  return FieldMatrix(m.modulus(), FieldStorage(work.topRows(static_cast<Index>(pivots.size()))));
}

FieldMatrix column_space_key(const FieldMatrix& m) { return reduced_row_echelon(m.transpose()); }

std::string to_text(const FieldMatrix& m) {
  std::ostringstream out;
  for (Index r = 0; r < m.rows(); ++r) {
    if (r > 0) out << "; ";
    for (Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << m(r, c);
    }
  }
  return out.str();
}

FieldMatrix parse_text(int q, const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream all(text);
  std::string row_text;
  while (std::getline(all, row_text, ';')) {
    std::istringstream row_stream(row_text);
    std::vector<int> row;
    std::string token;
    while (row_stream >> token) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw ValidationError("bad matrix entry '" + token + "'");
      }
      if (used != token.size() || value < 0 || value >= q) {
        throw ValidationError("bad matrix entry '" + token + "' for q=" + std::to_string(q));
      }
      row.push_back(value);
    }
    if (row.empty()) {
      if (text.find_first_not_of(" \t\n;") == std::string::npos) break;
      throw ValidationError("empty row in matrix text");
    }
    rows.push_back(std::move(row));
  }
  return FieldMatrix::from_rows(q, rows);
}

}  // namespace icpm
