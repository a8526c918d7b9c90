#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skewpair/kronecker.hpp"

using namespace skewpair;
using B = CanonicalBlock;

namespace {
const FieldSpec Q;
using Sizes = std::vector<std::size_t>;
}  // namespace

TEST_CASE("invariants of single blocks") {
  auto l2 = pencil_invariants(realize(B::L(2), Q));
  CHECK(l2.right_minimal_indices == Sizes{1});
  CHECK(l2.left_minimal_indices == Sizes{1});
  CHECK(l2.finite_divisors.empty());
  CHECK(l2.infinite_divisors.empty());

  auto k1 = pencil_invariants(realize(B::K(1), Q));
  CHECK(k1.infinite_divisors == Sizes{1, 1});

  auto j = pencil_invariants(realize(B::J(1, Q.from_int(4)), Q));
  FactorPower x4{Polynomial::linear(Q.from_int(4)), 1};
  CHECK(j.finite_divisors == std::vector<FactorPower>{x4, x4});
}

TEST_CASE("expected invariants") {
  auto l1 = expected_invariants({B::L(1)}, Q);
  CHECK(l1.right_minimal_indices == Sizes{0});
  CHECK(l1.left_minimal_indices == Sizes{0});
  CHECK(expected_invariants({B::K(2)}, Q).infinite_divisors == Sizes{2, 2});
  auto j = expected_invariants({B::J(2, Q.zero())}, Q);
  FactorPower x{Polynomial::x(Q), 2};
  CHECK(j.finite_divisors == std::vector<FactorPower>{x, x});
  CHECK(j.invariant_factors == std::vector<Polynomial>{pow(Polynomial::x(Q), 2), pow(Polynomial::x(Q), 2)});
}

TEST_CASE("skew symmetry checks") {
  CHECK(skew_symmetry_checks(pencil_invariants(realize(B::L(3), Q))));
  // (I_1, J_1(0)) is not skew: a single divisor x
  CHECK(!skew_symmetry_checks(pencil_invariants(Matrix::identity(Q, 1), Matrix(Q, 1, 1))));
  std::vector<MatrixPair> parts{realize(B::K(1), Q), realize(B::J(1, Q.from_int(2)), Q)};
  CHECK(skew_symmetry_checks(pencil_invariants(direct_sum(parts, Q))));
}

TEST_CASE("rectangular pencils: minimal indices of a single Kronecker block") {
  // L_e = [x I_e | 0] - [0 | I_e] has one right index e and no left indices.
  for (std::size_t e = 1; e <= 3; ++e) {
    Matrix a(Q, e, e + 1), b(Q, e, e + 1);
    for (std::size_t i = 0; i < e; ++i) {
      a(i, i) = Q.one();
      b(i, i + 1) = Q.one();
    }
    auto inv = pencil_invariants(a, b);
    CHECK(inv.right_minimal_indices == Sizes{e});
    CHECK(inv.left_minimal_indices.empty());
    CHECK(dimension_accounting_holds(inv, e + 1));
  }
}

TEST_CASE("invariant factors of a diagonal") {
  Polynomial x = Polynomial::x(Q), y = Polynomial::linear(Q.one());
  auto f = invariant_factors_of_diagonal({x, y, x * x});
  CHECK(f == std::vector<Polynomial>{x, x * x * y});
}

TEST_CASE("observed and expected invariants agree on direct sums") {
  std::mt19937_64 rng(61);
  for (FieldSpec f : {Q, FieldSpec::prime(3), FieldSpec::prime(7)}) {
    for (int it = 0; it < 30; ++it) {
      std::vector<B> blocks;
      std::size_t total = 0;
      while (true) {
        const std::size_t n = 1 + rng() % 3;
        const auto k = rng() % 3;
        B b = k == 0 ? B::L(n) : k == 1 ? B::K(n) : B::J(n, f.from_int(static_cast<long long>(rng() % 4) - 1));
        if (total + b.size() > 10) break;
        total += b.size();
        blocks.push_back(b);
      }
      MatrixPair sum = realize_sum(blocks, f);
      Matrix c = oracle::random_nonsingular(f, sum.size(), rng);
      auto inv = pencil_invariants(congruence_by(sum, c));
      CHECK(concordant(inv, expected_invariants(blocks, f)));
      CHECK(skew_symmetry_checks(inv));
      CHECK(dimension_accounting_holds(inv, sum.size()));
    }
  }
}
