#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skewpair/block.hpp"
#include "skewpair/matrix.hpp"

namespace skewpair {

/// A call whose documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

struct CanonicalForm {
  std::vector<CanonicalBlock> blocks;
  /// When present, witness (A, B) witness^T = realize_sum(blocks).
  std::optional<Witness> witness;
  bool witness_complete = false;
};

/// Canonical form of a pair with both matrices nonsingular.
/// Split characteristic polynomial: eigenvalues ascending, each peeled by a shifted
/// semi-regularization, with a witness. Otherwise: blocks labelled by paired
/// invariant factors (prime powers over GF(p)), without a witness.
CanonicalForm canonicalize_regular(const MatrixPair& p);

/// Regularization followed by canonicalize_regular; blocks sorted L < K < J, then n, then label.
CanonicalForm canonicalize(const MatrixPair& p);

/// The pair with every singular summand brought to +-1 chain form (at most one
/// nonzero entry, equal to 1 or -1, per row and column of each matrix).
/// Throws PreconditionError when A is nonsingular.
std::pair<MatrixPair, Witness> rly_reduce(const MatrixPair& p);

/// Stable permutation sorting blocks canonically: entry k is the input index placed at position k.
std::vector<std::size_t> canonical_block_order(const std::vector<CanonicalBlock>& blocks);

}  // namespace skewpair
