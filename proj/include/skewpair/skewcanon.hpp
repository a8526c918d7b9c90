#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "skewpair/matrix.hpp"

namespace skewpair {

struct StripRanges {
  std::size_t first_begin, first_end;
  std::size_t second_begin, second_end;
  std::size_t zero_begin, zero_end;
};

struct SkewCanonResult {
  Witness witness;
  std::size_t half_rank = 0;
  StripRanges strips{};
};

/// S with S a S^T = [[0, I_k, 0], [-I_k, 0, 0], [0, 0, 0]].
/// Pivots are taken in lexicographic order, so the witness is deterministic.
SkewCanonResult skew_canonicalize(const Matrix& a);

/// Brings the principal block of B on `idx` to skew canonical form by a
/// congruence supported on `idx`; A is transformed by the same congruence.
std::pair<MatrixPair, Witness> skew_block_canonicalize(const MatrixPair& p, std::span<const std::size_t> idx);

/// Identity matrix with `w` placed on the rows and columns `idx`.
Matrix embed(const Matrix& w, std::span<const std::size_t> idx, std::size_t n);

}  // namespace skewpair
