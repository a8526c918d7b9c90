#pragma once

#include <cstddef>
#include <vector>

#include "skewpair/block.hpp"
#include "skewpair/matrix.hpp"
#include "skewpair/poly.hpp"

namespace skewpair {

/// Equivalence invariants of the pencil x A - B.
struct PencilInvariants {
  std::vector<std::size_t> right_minimal_indices;  ///< ascending
  std::vector<std::size_t> left_minimal_indices;   ///< ascending
  /// Nonconstant invariant factors of x A - B, each dividing the next.
  std::vector<Polynomial> invariant_factors;
  /// Elementary divisors, sorted. Over Q the non-linear part of an invariant
  /// factor is kept whole (split only into squarefree parts).
  std::vector<FactorPower> finite_divisors;
  /// Degrees of the infinite elementary divisors, ascending.
  std::vector<std::size_t> infinite_divisors;

  friend bool operator==(const PencilInvariants&, const PencilInvariants&) = default;
};

/// Computed from Smith forms of x A - B and x B - A and nullities of stacked
/// coefficient matrices. Does not require skew-symmetry; A and B must share a shape.
PencilInvariants pencil_invariants(const Matrix& a, const Matrix& b);
inline PencilInvariants pencil_invariants(const MatrixPair& p) { return pencil_invariants(p.a(), p.b()); }

/// The invariants that the direct sum of `blocks` must have.
PencilInvariants expected_invariants(const std::vector<CanonicalBlock>& blocks, FieldSpec field);

/// Left and right minimal indices agree and every elementary divisor occurs an even number of times.
bool skew_symmetry_checks(const PencilInvariants& inv);

/// Column count: sum(eps + 1) + sum(eta) + sum deg(finite) + sum(infinite) equals `cols`.
bool dimension_accounting_holds(const PencilInvariants& inv, std::size_t cols);

/// Minimal indices, infinite divisors and invariant factors agree; elementary
/// divisors are compared too when `compare_elementary`.
bool concordant(const PencilInvariants& observed, const PencilInvariants& expected, bool compare_elementary = true);

/// Invariant factors of diag(polys): repeated gcd/lcm exchange, units dropped.
std::vector<Polynomial> invariant_factors_of_diagonal(std::vector<Polynomial> polys);

}  // namespace skewpair
