#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "skewpair/block.hpp"
#include "skewpair/matrix.hpp"

namespace skewpair {

/// Strip layout of a pair whose first matrix is [[0, I, 0], [-I, 0, 0], [0, 0, 0]]:
/// first[t] and second[t] are coupled by A(first[t], second[t]) = 1; A vanishes on `third`.
struct StripContext {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  std::vector<std::size_t> third;

  /// The layout of the canonical form with half-rank k in an n x n pair.
  static StripContext canonical(std::size_t k, std::size_t n);
  std::size_t size() const { return first.size() + second.size() + third.size(); }
};

/// A congruence that leaves A unchanged. Positions index into the strips of a StripContext.
struct CoupledTransform {
  enum class Kind {
    StripOne,    ///< (i) an elementary op on strip-1 positions, inverse op on strip 2
    StripThree,  ///< (i) an elementary op on strip-3 positions
    AddOneToTwo, ///< (ii) row j2 += a row i1 and row i2 += a row j1 (only the first when i == j)
    AddTwoToOne, ///< (iii) row j1 += a row i2 and row i1 += a row j2 (only the first when i == j)
    SwapPair,    ///< (iv) row i1 *= -1, then swap rows i1 and i2
    AddThree,    ///< (v) row `target` += a row i3; `target` is a matrix index
  };

  Kind kind = Kind::StripThree;
  ElementaryOp op = SwapRows{0, 0};
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t target = 0;
  FieldElement a;

  static CoupledTransform strip_one(ElementaryOp op) { return {Kind::StripOne, std::move(op), 0, 0, 0, {}}; }
  static CoupledTransform strip_three(ElementaryOp op) { return {Kind::StripThree, std::move(op), 0, 0, 0, {}}; }
  static CoupledTransform add_one_to_two(std::size_t i, std::size_t j, FieldElement a) {
    return {Kind::AddOneToTwo, SwapRows{0, 0}, i, j, 0, std::move(a)};
  }
  static CoupledTransform add_two_to_one(std::size_t i, std::size_t j, FieldElement a) {
    return {Kind::AddTwoToOne, SwapRows{0, 0}, i, j, 0, std::move(a)};
  }
  static CoupledTransform swap_pair(std::size_t i) { return {Kind::SwapPair, SwapRows{0, 0}, i, 0, 0, {}}; }
  static CoupledTransform add_three(std::size_t i, std::size_t target, FieldElement a) {
    return {Kind::AddThree, SwapRows{0, 0}, i, 0, target, std::move(a)};
  }
};

/// The elementary congruences, in matrix indices, that make up `t`.
std::vector<ElementaryOp> expand(const CoupledTransform& t, const StripContext& ctx, const FieldSpec& field);

struct CoupledResult {
  MatrixPair pair;
  StripContext ctx;
  Matrix update;  ///< E with pair = E (p) E^T
};

/// Applies `t`; throws InternalError if A changed (which signals invalid parameters).
CoupledResult coupled_transform(const MatrixPair& p, const StripContext& ctx, const CoupledTransform& t);

struct ExtractedSummand {
  CanonicalBlock block;
  /// Indices occupied before the final reordering, in canonical order of the block.
  std::vector<std::size_t> original_indices;
};

struct SemiRegResult {
  MatrixPair remaining;
  std::vector<ExtractedSummand> extracted;
  /// witness (A0, B0) witness^T = remaining + extracted blocks, in this order.
  Witness witness;
};

struct RegularizationResult {
  MatrixPair regular;
  /// In witness order, following the regular part.
  std::vector<CanonicalBlock> singular_summands;
  Witness witness;
  std::size_t t = 0;
  /// Kinds the swapped second pass extracted, before relabeling.
  std::vector<CanonicalBlock::Kind> second_pass_kinds;
};

SemiRegResult semi_regularize(const MatrixPair& p);
RegularizationResult regularize(const MatrixPair& p);

namespace detail {
/// The semi-regularized pair with every summand in chain order but signs not yet normalized.
std::pair<MatrixPair, Witness> chain_form(const MatrixPair& p);
}  // namespace detail

}  // namespace skewpair
