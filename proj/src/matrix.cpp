#include "skewpair/matrix.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>

namespace skewpair {

namespace {

std::atomic<int> g_debug_asserts{-1};

void check_index(std::size_t i, std::size_t n) {
  if (i >= n) throw DimensionError("index " + std::to_string(i) + " out of range for size " + std::to_string(n));
}

}  // namespace

bool debug_asserts_enabled() {
  int v = g_debug_asserts.load(std::memory_order_relaxed);
  if (v < 0) {
    const char* env = std::getenv("SKEWPAIR_DEBUG_ASSERT");
    v = (env != nullptr && std::string(env) == "1") ? 1 : 0;
    g_debug_asserts.store(v, std::memory_order_relaxed);
  }
  return v == 1;
}

void set_debug_asserts(bool enabled) { g_debug_asserts.store(enabled ? 1 : 0, std::memory_order_relaxed); }

void ensure(bool condition, const std::string& what) {
  if (!condition) throw InternalError("invariant violated: " + what);
}

// ------------------------------------------------------------------- Matrix

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged matrix literal");
    std::size_t j = 0;
    for (long long v : row) m(i, j++) = field.from_int(v);
    ++i;
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!((*this)(i, j) + (*this)(j, i)).is_zero()) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  Matrix s(field_, row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    check_index(row_idx[i], rows_);
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      check_index(col_idx[j], cols_);
      s(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
  }
  return s;
}

std::vector<FieldElement> Matrix::row(std::size_t i) const {
  check_index(i, rows_);
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<FieldElement> Matrix::column(std::size_t j) const {
  check_index(j, cols_);
  std::vector<FieldElement> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum: shape mismatch");
  if (!(field_ == other.field_)) throw FieldError("matrix sum: field mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix difference: shape mismatch");
  if (!(field_ == other.field_)) throw FieldError("matrix difference: field mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw DimensionError("matrix product: shape mismatch");
  if (!(x.field_ == y.field_)) throw FieldError("matrix product: field mismatch");
  Matrix r(x.field_, x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i) {
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const FieldElement& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        const FieldElement& ykj = y(k, j);
        if (!ykj.is_zero()) r(i, j) += xik * ykj;
      }
    }
  }
  return r;
}

Matrix operator*(const FieldElement& c, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_) x *= c;
  return r;
}

bool operator==(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
  if (x.rows_ * x.cols_ == 0) return true;
  if (!(x.field_ == y.field_)) return false;
  return x.data_ == y.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

// --------------------------------------------------------------- MatrixPair

MatrixPair::MatrixPair(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.is_square() || !b_.is_square() || a_.rows() != b_.rows()) {
    throw DimensionError("matrix pair: matrices must be square of equal size");
  }
  if (!(a_.field() == b_.field())) throw FieldError("matrix pair: field mismatch");
  if (!a_.is_skew_symmetric()) throw NotSkewError("matrix pair: first matrix is not skew-symmetric");
  if (!b_.is_skew_symmetric()) throw NotSkewError("matrix pair: second matrix is not skew-symmetric");
}

MatrixPair MatrixPair::zero(FieldSpec field, std::size_t n) { return {Matrix(field, n, n), Matrix(field, n, n)}; }

MatrixPair MatrixPair::swapped() const {
  MatrixPair p;
  p.a_ = b_;
  p.b_ = a_;
  return p;
}

bool Witness::is_nonsingular() const { return skewpair::is_nonsingular(s); }

// --------------------------------------------------------------- Congruence

void apply_row_op(Matrix& m, const ElementaryOp& op) {
  const std::size_t n = m.rows();
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, SwapRows>) {
          check_index(o.i, n);
          check_index(o.j, n);
          if (o.i == o.j) return;
          for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(o.i, c), m(o.j, c));
        } else if constexpr (std::is_same_v<T, ScaleRow>) {
          check_index(o.i, n);
          if (o.c.is_zero()) throw DimensionError("ScaleRow with zero factor");
          for (std::size_t c = 0; c < m.cols(); ++c) m(o.i, c) *= o.c;
        } else {
          check_index(o.i, n);
          check_index(o.j, n);
          if (o.i == o.j) throw DimensionError("AddRow with identical rows");
          if (o.c.is_zero()) return;
          for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m(o.j, c).is_zero()) m(o.i, c) += o.c * m(o.j, c);
          }
        }
      },
      op);
}

void apply_congruence_in_place(Matrix& m, const ElementaryOp& op) {
  apply_row_op(m, op);
  const std::size_t n = m.rows();
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, SwapRows>) {
          if (o.i == o.j) return;
          for (std::size_t r = 0; r < n; ++r) std::swap(m(r, o.i), m(r, o.j));
        } else if constexpr (std::is_same_v<T, ScaleRow>) {
          for (std::size_t r = 0; r < n; ++r) m(r, o.i) *= o.c;
        } else {
          if (o.c.is_zero()) return;
          for (std::size_t r = 0; r < n; ++r) {
            if (!m(r, o.j).is_zero()) m(r, o.i) += o.c * m(r, o.j);
          }
        }
      },
      op);
}

MatrixPair apply_congruence(const MatrixPair& p, const ElementaryOp& op) {
  MatrixPair q = p;
  apply_congruence_in_place(q.mutable_a(), op);
  apply_congruence_in_place(q.mutable_b(), op);
  if (debug_asserts_enabled()) {
    ensure(q.a().is_skew_symmetric() && q.b().is_skew_symmetric(), "skew-symmetry after elementary congruence");
  }
  return q;
}

Witness record(const ElementaryOp& op, const Witness& w) {
  Witness r = w;
  apply_row_op(r.s, op);
  return r;
}

Matrix congruence_unchecked(const Matrix& m, const Matrix& s) { return s * m * s.transpose(); }

MatrixPair congruence_unchecked(const MatrixPair& p, const Matrix& s) {
  MatrixPair q;
  q.mutable_a() = congruence_unchecked(p.a(), s);
  q.mutable_b() = congruence_unchecked(p.b(), s);
  return q;
}

MatrixPair congruence_by(const MatrixPair& p, const Matrix& s) {
  if (!s.is_square() || s.rows() != p.size()) throw DimensionError("congruence_by: size mismatch");
  if (!(s.field() == p.field()) && p.size() > 0) throw FieldError("congruence_by: field mismatch");
  if (!is_nonsingular(s)) throw SingularMatrixError("congruence_by: singular transformation");
  return congruence_unchecked(p, s);
}

// ----------------------------------------------------------------- Kernels

Echelon row_echelon(const Matrix& m) {
  Echelon e{m, {}};
  Matrix& r = e.rref;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t piv = row;
    while (piv < r.rows() && r(piv, col).is_zero()) ++piv;
    if (piv == r.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r(piv, c), r(row, c));
    }
    FieldElement scale = r(row, col).inv();
    for (std::size_t c = col; c < r.cols(); ++c) r(row, c) *= scale;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      FieldElement f = r(i, col);
      for (std::size_t c = col; c < r.cols(); ++c) {
        if (!r(row, c).is_zero()) r(i, c) -= f * r(row, c);
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

bool is_nonsingular(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  Echelon e = row_echelon(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw SingularMatrixError("inverse of a singular matrix");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  }
  return inv;
}

std::vector<std::vector<FieldElement>> nullspace_basis(const Matrix& m) {
  Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rref(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldElement determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  Matrix r = m;
  const std::size_t n = r.rows();
  FieldElement det = m.field().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && r(piv, col).is_zero()) ++piv;
    if (piv == n) return m.field().zero();
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(r(piv, c), r(col, c));
      det = -det;
    }
    det *= r(col, col);
    FieldElement pinv = r(col, col).inv();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (r(i, col).is_zero()) continue;
      FieldElement f = r(i, col) * pinv;
      for (std::size_t c = col; c < n; ++c) r(i, c) -= f * r(col, c);
    }
  }
  return det;
}

// -------------------------------------------------------------- Direct sums

Matrix block_diagonal(std::span<const Matrix> blocks, FieldSpec field) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw DimensionError("block_diagonal: non-square block");
    if (b.rows() > 0 && !(b.field() == field)) throw FieldError("block_diagonal: field mismatch");
    n += b.rows();
  }
  Matrix m(field, n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    }
    off += b.rows();
  }
  return m;
}

MatrixPair direct_sum(std::span<const MatrixPair> pairs, FieldSpec field) {
  if (!pairs.empty()) field = pairs.front().field();
  std::vector<Matrix> as;
  std::vector<Matrix> bs;
  for (const auto& p : pairs) {
    if (!(p.field() == field)) throw FieldError("direct_sum: field mismatch");
    as.push_back(p.a());
    bs.push_back(p.b());
  }
  MatrixPair sum;
  sum.mutable_a() = block_diagonal(as, field);
  sum.mutable_b() = block_diagonal(bs, field);
  return sum;
}

MatrixPair extract_principal(const MatrixPair& p, std::span<const std::size_t> idx) {
  MatrixPair q;
  q.mutable_a() = p.a().principal(idx);
  q.mutable_b() = p.b().principal(idx);
  return q;
}

Matrix permutation_matrix(FieldSpec field, std::span<const std::size_t> order) {
  const std::size_t n = order.size();
  Matrix p(field, n, n);
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    check_index(order[k], n);
    if (seen[order[k]]) throw DimensionError("permutation_matrix: repeated index");
    seen[order[k]] = true;
    p(k, order[k]) = field.one();
  }
  return p;
}

}  // namespace skewpair
