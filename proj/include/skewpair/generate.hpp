#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "skewpair/block.hpp"
#include "skewpair/matrix.hpp"

namespace skewpair {

/// "J:2:3,K:1,L:2": kind:n, with the eigenvalue as a third field for J.
std::vector<CanonicalBlock> parse_block_spec(std::string_view spec, FieldSpec field);

/// Small-height scalar: over Q a fraction with |numerator| <= 9 and denominator in 1..9,
/// over GF(p) a uniform residue. Uses only modulo reduction of raw engine output,
/// so the stream is identical on every platform.
FieldElement random_small_scalar(FieldSpec field, std::mt19937_64& rng);

/// Unit lower triangular times unit upper triangular times a permutation.
Matrix random_congruence(FieldSpec field, std::size_t n, std::mt19937_64& rng);

struct GeneratedInstance {
  MatrixPair pair;
  std::vector<CanonicalBlock> blocks;  ///< canonically sorted
  Matrix scramble;                     ///< pair = scramble * realize_sum(spec order) * scramble^T
};

GeneratedInstance generate_instance(const std::vector<CanonicalBlock>& blocks, FieldSpec field, std::uint64_t seed,
                                    bool random_congruence_enabled = true);

}  // namespace skewpair
