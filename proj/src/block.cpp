#include "skewpair/block.hpp"

#include <sstream>

namespace skewpair {

CanonicalBlock CanonicalBlock::J(Polynomial f, bool fully_decomposed) {
  if (f.degree() < 1 || !f.is_monic()) throw DimensionError("J block label must be monic and nonconstant");
  auto n = static_cast<std::size_t>(f.degree());
  return {Kind::J, n, std::nullopt, std::move(f), fully_decomposed};
}

std::string CanonicalBlock::to_string() const {
  std::ostringstream os;
  os << (kind == Kind::L ? "L" : kind == Kind::K ? "K" : "J") << n;
  if (eigenvalue) os << "(" << eigenvalue->to_string() << ")";
  if (poly) os << "[" << poly->to_string() << "]";
  return os.str();
}

bool operator==(const CanonicalBlock& x, const CanonicalBlock& y) {
  return (x <=> y) == std::strong_ordering::equal && x.fully_decomposed == y.fully_decomposed;
}

std::strong_ordering operator<=>(const CanonicalBlock& x, const CanonicalBlock& y) {
  if (auto c = static_cast<int>(x.kind) <=> static_cast<int>(y.kind); c != 0) return c;
  if (auto c = x.n <=> y.n; c != 0) return c;
  if (x.eigenvalue.has_value() != y.eigenvalue.has_value()) {
    return x.eigenvalue.has_value() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (x.eigenvalue) return *x.eigenvalue <=> *y.eigenvalue;
  if (x.poly.has_value() != y.poly.has_value()) {
    return x.poly.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (x.poly) return *x.poly <=> *y.poly;
  return std::strong_ordering::equal;
}

Matrix jordan_block(std::size_t n, const FieldElement& lambda, FieldSpec field) {
  Matrix j(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, i) = lambda;
    if (i + 1 < n) j(i + 1, i) = field.one();
  }
  return j;
}

namespace {

/// [[0, X], [-X^T, 0]] for a p x q block X.
Matrix skew_from_corner(const Matrix& x, FieldSpec field) {
  const std::size_t p = x.rows();
  const std::size_t q = x.cols();
  Matrix m(field, p + q, p + q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      m(i, p + j) = x(i, j);
      m(p + j, i) = -x(i, j);
    }
  }
  return m;
}

}  // namespace

MatrixPair realize(const CanonicalBlock& block, FieldSpec field) {
  const std::size_t n = block.n;
  if (n == 0) throw DimensionError("canonical block of size zero");
  switch (block.kind) {
    case CanonicalBlock::Kind::L: {
      Matrix l(field, n - 1, n);
      Matrix r(field, n - 1, n);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        l(i, i) = field.one();
        r(i, i + 1) = field.one();
      }
      return {skew_from_corner(l, field), skew_from_corner(r, field)};
    }
    case CanonicalBlock::Kind::K:
      return {skew_from_corner(jordan_block(n, field.zero(), field), field),
              skew_from_corner(Matrix::identity(field, n), field)};
    case CanonicalBlock::Kind::J: {
      Matrix core;
      if (block.eigenvalue) {
        if (block.eigenvalue->field() != field) throw FieldError("block label from a different field");
        core = jordan_block(n, *block.eigenvalue, field);
      } else if (block.poly) {
        if (static_cast<std::size_t>(block.poly->degree()) != n) throw DimensionError("J block degree mismatch");
        core = companion_matrix(*block.poly);
      } else {
        throw DimensionError("J block without a label");
      }
      return {skew_from_corner(Matrix::identity(field, n), field), skew_from_corner(core, field)};
    }
  }
  throw DimensionError("unknown block kind");
}

MatrixPair realize_sum(const std::vector<CanonicalBlock>& blocks, FieldSpec field) {
  std::vector<MatrixPair> parts;
  parts.reserve(blocks.size());
  for (const auto& b : blocks) parts.push_back(realize(b, field));
  return direct_sum(parts, field);
}

}  // namespace skewpair
