#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skewpair/skewcanon.hpp"

using namespace skewpair;
using oracle::skew;

namespace {
const FieldSpec Q;

// [[0, I_k, 0], [-I_k, 0, 0], [0, 0, 0]]
Matrix target_form(FieldSpec f, std::size_t n, std::size_t k) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < k; ++i) {
    m(i, k + i) = f.one();
    m(k + i, i) = -f.one();
  }
  return m;
}
}  // namespace

TEST_CASE("already canonical inputs keep the identity witness") {
  auto r = skew_canonicalize(skew(Q, 2, {{0, 1, 1}}));
  CHECK(r.half_rank == 1);
  CHECK(r.witness.s == Matrix::identity(Q, 2));

  auto z = skew_canonicalize(Matrix(Q, 3, 3));
  CHECK(z.half_rank == 0);
  CHECK(z.witness.s == Matrix::identity(Q, 3));
}

TEST_CASE("scaling example") {
  Matrix a = skew(Q, 2, {{0, 1, 2}});
  auto r = skew_canonicalize(a);
  CHECK(r.half_rank == 1);
  Matrix expected = Matrix::identity(Q, 2);
  expected(0, 0) = Q.parse_scalar("1/2");
  CHECK(r.witness.s == expected);
  CHECK(congruence_unchecked(a, r.witness.s) == target_form(Q, 2, 1));
}

TEST_CASE("strip ranges") {
  auto r = skew_canonicalize(skew(Q, 5, {{0, 3, 1}, {1, 4, 2}}));
  CHECK(r.half_rank == 2);
  CHECK(r.strips.first_begin == 0);
  CHECK(r.strips.first_end == 2);
  CHECK(r.strips.second_begin == 2);
  CHECK(r.strips.second_end == 4);
  CHECK(r.strips.zero_begin == 4);
  CHECK(r.strips.zero_end == 5);
}

TEST_CASE("random skew matrices reach the target form with half the minor rank") {
  std::mt19937_64 rng(21);
  for (FieldSpec f : {Q, FieldSpec::prime(3), FieldSpec::prime(97)}) {
    for (int it = 0; it < 40; ++it) {
      const std::size_t n = 1 + rng() % 6;
      Matrix a(f, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          if (rng() % 3 == 0) continue;
          a(i, j) = f.from_int(static_cast<long long>(rng() % 9) - 4);
          a(j, i) = -a(i, j);
        }
      auto r = skew_canonicalize(a);
      CHECK(2 * r.half_rank == oracle::minor_rank(a));
      CHECK(!oracle::leibniz_det(r.witness.s).is_zero());
      CHECK(congruence_unchecked(a, r.witness.s) == target_form(f, n, r.half_rank));
    }
  }
}

TEST_CASE("sub-block canonicalization acts on B and touches only the chosen indices") {
  MatrixPair p{skew(Q, 3, {{0, 2, 1}}), skew(Q, 3, {{0, 2, -3}, {0, 1, 4}})};
  std::vector<std::size_t> idx{0, 2};
  auto [q, w] = skew_block_canonicalize(p, idx);
  CHECK(congruence_unchecked(p, w.s) == q);
  CHECK(q.b()(0, 2) == Q.one());
  // rows outside idx of the witness are unit vectors
  CHECK(w.s(1, 1) == Q.one());
  CHECK(w.s(1, 0).is_zero());
  CHECK(w.s(1, 2).is_zero());

  MatrixPair k1{Matrix(Q, 2, 2), skew(Q, 2, {{0, 1, 1}})};
  std::vector<std::size_t> both{0, 1};
  auto [same, id] = skew_block_canonicalize(k1, both);
  CHECK(same == k1);
  CHECK(id.s == Matrix::identity(Q, 2));

  auto [flipped, fw] = skew_block_canonicalize(MatrixPair(Matrix(Q, 2, 2), skew(Q, 2, {{0, 1, -1}})), both);
  CHECK(flipped.b() == skew(Q, 2, {{0, 1, 1}}));
  CHECK(!oracle::leibniz_det(fw.s).is_zero());
}

TEST_CASE("non-skew input is rejected") {
  CHECK_THROWS(skew_canonicalize(Matrix::identity(Q, 2)));
}
