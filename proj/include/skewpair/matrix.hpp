#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "skewpair/field.hpp"

namespace skewpair {

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class NotSkewError : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal invariant check fails. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Per-step invariant checks, enabled by SKEWPAIR_DEBUG_ASSERT=1 or set_debug_asserts().
bool debug_asserts_enabled();
void set_debug_asserts(bool enabled);

/// Throws InternalError with `what` when `condition` is false.
void ensure(bool condition, const std::string& what);

/// Dense row-major matrix over a FieldSpec.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_skew_symmetric() const;

  Matrix transpose() const;
  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  /// Principal submatrix on `idx`.
  Matrix principal(std::span<const std::size_t> idx) const { return submatrix(idx, idx); }
  std::vector<FieldElement> row(std::size_t i) const;
  std::vector<FieldElement> column(std::size_t j) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const FieldElement& c, const Matrix& m);
  friend bool operator==(const Matrix& x, const Matrix& y);

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

/// Two square skew-symmetric matrices of equal size over one field.
class MatrixPair {
 public:
  /// The 0x0 pair over the rationals.
  MatrixPair() = default;
  /// Validates shapes, fields and skew-symmetry.
  MatrixPair(Matrix a, Matrix b);
  static MatrixPair zero(FieldSpec field, std::size_t n);

  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  Matrix& mutable_a() { return a_; }
  Matrix& mutable_b() { return b_; }
  std::size_t size() const { return a_.rows(); }
  const FieldSpec& field() const { return a_.field(); }

  /// (B, A).
  MatrixPair swapped() const;

  friend bool operator==(const MatrixPair&, const MatrixPair&) = default;

 private:
  Matrix a_;
  Matrix b_;
};

/// A congruence elementary operation: the row operation followed by the
/// identical column operation. AddRow(i, j, c) adds c times row j to row i.
struct SwapRows {
  std::size_t i;
  std::size_t j;
};
struct ScaleRow {
  std::size_t i;
  FieldElement c;
};
struct AddRow {
  std::size_t i;
  std::size_t j;
  FieldElement c;
};
using ElementaryOp = std::variant<SwapRows, ScaleRow, AddRow>;

/// A nonsingular matrix S recording an accumulated congruence S (A,B) S^T.
struct Witness {
  Matrix s;

  static Witness identity(FieldSpec field, std::size_t n) { return {Matrix::identity(field, n)}; }
  std::size_t size() const { return s.rows(); }
  bool is_nonsingular() const;
};

// Congruence ---------------------------------------------------------------

/// Returns E (A, B) E^T for the elementary matrix E of `op`.
MatrixPair apply_congruence(const MatrixPair& p, const ElementaryOp& op);
/// Returns E * w.
Witness record(const ElementaryOp& op, const Witness& w);

/// In-place variants used by the reduction algorithms.
void apply_congruence_in_place(Matrix& m, const ElementaryOp& op);
void apply_row_op(Matrix& m, const ElementaryOp& op);

/// (S A S^T, S B S^T). Throws SingularMatrixError / DimensionError.
MatrixPair congruence_by(const MatrixPair& p, const Matrix& s);
/// Same without the nonsingularity check.
MatrixPair congruence_unchecked(const MatrixPair& p, const Matrix& s);
Matrix congruence_unchecked(const Matrix& m, const Matrix& s);

// Elimination kernels --------------------------------------------------------

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;
};
Echelon row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
bool is_nonsingular(const Matrix& m);
Matrix inverse(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<std::vector<FieldElement>> nullspace_basis(const Matrix& m);
FieldElement determinant(const Matrix& m);

// Direct sums --------------------------------------------------------------

/// Block-diagonal assembly; the empty list yields the 0x0 pair over `field`.
MatrixPair direct_sum(std::span<const MatrixPair> pairs, FieldSpec field = {});
Matrix block_diagonal(std::span<const Matrix> blocks, FieldSpec field);
MatrixPair extract_principal(const MatrixPair& p, std::span<const std::size_t> idx);

/// Permutation matrix P with (P M P^T)(k, l) = M(order[k], order[l]).
Matrix permutation_matrix(FieldSpec field, std::span<const std::size_t> order);

}  // namespace skewpair
