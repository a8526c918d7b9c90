#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "skewpair/field.hpp"
#include "skewpair/matrix.hpp"
#include "skewpair/poly.hpp"

namespace skewpair {

/// One canonical summand: J(n, label), K(n) or L(n).
struct CanonicalBlock {
  enum class Kind { L = 0, K = 1, J = 2 };

  Kind kind = Kind::L;
  std::size_t n = 1;
  /// J blocks carry exactly one of these.
  std::optional<FieldElement> eigenvalue;
  std::optional<Polynomial> poly;
  /// Meaningful for polynomial labels only: true when `poly` is a prime power.
  bool fully_decomposed = false;

  static CanonicalBlock L(std::size_t n) { return {Kind::L, n, std::nullopt, std::nullopt, false}; }
  static CanonicalBlock K(std::size_t n) { return {Kind::K, n, std::nullopt, std::nullopt, false}; }
  static CanonicalBlock J(std::size_t n, FieldElement lambda) { return {Kind::J, n, std::move(lambda), std::nullopt, false}; }
  static CanonicalBlock J(Polynomial f, bool fully_decomposed);

  /// Size of the realized pair: 2n for J and K, 2n-1 for L.
  std::size_t size() const { return kind == Kind::L ? 2 * n - 1 : 2 * n; }
  bool has_polynomial_label() const { return poly.has_value(); }

  /// "L2", "K1", "J3(5)", "J2[x^2 + 1]".
  std::string to_string() const;

  friend bool operator==(const CanonicalBlock& x, const CanonicalBlock& y);
  /// L < K < J, then n, then label (eigenvalues before polynomials).
  friend std::strong_ordering operator<=>(const CanonicalBlock& x, const CanonicalBlock& y);
};

/// The canonical matrices of a block.
MatrixPair realize(const CanonicalBlock& block, FieldSpec field);
/// Direct sum of realize() over the blocks, in order.
MatrixPair realize_sum(const std::vector<CanonicalBlock>& blocks, FieldSpec field);

/// Jordan block: lambda on the diagonal, ones on the subdiagonal.
Matrix jordan_block(std::size_t n, const FieldElement& lambda, FieldSpec field);

}  // namespace skewpair
