#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skewpair/generate.hpp"
#include "skewpair/regcore.hpp"

using namespace skewpair;
using oracle::skew;

namespace {
const FieldSpec Q;
const FieldSpec F7 = FieldSpec::prime(7);

MatrixPair k1(FieldSpec f = Q) { return realize(CanonicalBlock::K(1), f); }
MatrixPair k2_pair() { return {skew(Q, 4, {{0, 1, 1}}), skew(Q, 4, {{0, 3, 1}, {1, 2, 1}})}; }

Matrix canonical_a(FieldSpec f, std::size_t k, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < k; ++i) {
    m(i, k + i) = f.one();
    m(k + i, i) = -f.one();
  }
  return m;
}

std::vector<CanonicalBlock> singular_part(const std::vector<CanonicalBlock>& blocks) {
  std::vector<CanonicalBlock> out;
  for (const auto& b : blocks) {
    if (b.kind != CanonicalBlock::Kind::J || b.eigenvalue->is_zero()) out.push_back(b);
  }
  return out;
}

std::vector<CanonicalBlock> random_blocks(FieldSpec f, std::mt19937_64& rng, std::size_t budget) {
  std::vector<CanonicalBlock> out;
  std::size_t total = 0;
  while (true) {
    const std::size_t n = 1 + rng() % 4;
    const auto kind = rng() % 3;
    CanonicalBlock b = kind == 0   ? CanonicalBlock::L(n)
                       : kind == 1 ? CanonicalBlock::K(n)
                                   : CanonicalBlock::J(n, f.from_int(static_cast<long long>(rng() % 5) - 2));
    if (total + b.size() > budget) break;
    total += b.size();
    out.push_back(b);
  }
  return out;
}
}  // namespace

TEST_CASE("coupled transform examples") {
  MatrixPair j10 = realize(CanonicalBlock::J(1, Q.zero()), Q);
  StripContext ctx = StripContext::canonical(1, 2);

  auto same = coupled_transform(j10, ctx, CoupledTransform::strip_one(ScaleRow{0, Q.one()}));
  CHECK(same.pair == j10);
  CHECK(same.update == Matrix::identity(Q, 2));

  auto zero = coupled_transform(j10, ctx, CoupledTransform::add_one_to_two(0, 0, Q.zero()));
  CHECK(zero.pair == j10);

  MatrixPair p{j10.a(), skew(Q, 2, {{0, 1, 5}})};
  auto swapped = coupled_transform(p, ctx, CoupledTransform::swap_pair(0));
  CHECK(swapped.pair.a() == p.a());
  CHECK(swapped.pair == congruence_unchecked(p, swapped.update));
}

TEST_CASE("every coupled transform preserves the canonical A") {
  std::mt19937_64 rng(9);
  for (FieldSpec f : {Q, F7}) {
    for (int it = 0; it < 200; ++it) {
      const std::size_t k = 1 + rng() % 3, n = 2 * k + rng() % 3;
      StripContext ctx = StripContext::canonical(k, n);
      Matrix b(f, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          b(i, j) = f.from_int(static_cast<long long>(rng() % 5) - 2);
          b(j, i) = -b(i, j);
        }
      MatrixPair p{canonical_a(f, k, n), b};
      const std::size_t i = rng() % k, j = rng() % k;
      FieldElement a = f.from_int(1 + static_cast<long long>(rng() % 4));
      CoupledTransform t;
      switch (rng() % 7) {
        case 0: t = CoupledTransform::strip_one(SwapRows{i, j}); break;
        case 1: t = CoupledTransform::strip_one(ScaleRow{i, a}); break;
        case 2: t = i == j ? CoupledTransform::strip_one(ScaleRow{i, a}) : CoupledTransform::strip_one(AddRow{i, j, a}); break;
        case 3: t = CoupledTransform::add_one_to_two(i, j, a); break;
        case 4: t = CoupledTransform::add_two_to_one(i, j, a); break;
        case 5: t = CoupledTransform::swap_pair(i); break;
        default:
          if (n == 2 * k) {
            t = CoupledTransform::swap_pair(i);
          } else {
            t = CoupledTransform::add_three(rng() % (n - 2 * k), rng() % (2 * k), a);
          }
      }
      CoupledResult r = coupled_transform(p, ctx, t);
      CHECK(r.pair.a() == p.a());
      CHECK(r.pair == congruence_unchecked(p, r.update));
      CHECK(!oracle::leibniz_det(r.update).is_zero());
    }
  }
}

TEST_CASE("semi-regularization examples") {
  auto r = semi_regularize(k1());
  CHECK(r.remaining.size() == 0);
  REQUIRE(r.extracted.size() == 1);
  CHECK(r.extracted[0].block == CanonicalBlock::K(1));

  auto l = semi_regularize(MatrixPair::zero(Q, 1));
  REQUIRE(l.extracted.size() == 1);
  CHECK(l.extracted[0].block == CanonicalBlock::L(1));

  auto m = semi_regularize(k2_pair());
  REQUIRE(m.extracted.size() == 1);
  CHECK(m.extracted[0].block == CanonicalBlock::K(2));
  CHECK(m.remaining.size() == 0);

  MatrixPair ns{skew(Q, 2, {{0, 1, 1}}), Matrix(Q, 2, 2)};
  auto n = semi_regularize(ns);
  CHECK(n.extracted.empty());
  CHECK(n.remaining == ns);
}

TEST_CASE("regularization examples") {
  auto j = regularize(realize(CanonicalBlock::J(1, Q.zero()), Q));
  CHECK(j.regular.size() == 0);
  CHECK(oracle::names(j.singular_summands) == oracle::names({CanonicalBlock::J(1, Q.zero())}));

  MatrixPair both{skew(Q, 2, {{0, 1, 1}}), skew(Q, 2, {{0, 1, 3}})};
  auto b = regularize(both);
  CHECK(b.singular_summands.empty());
  CHECK(b.regular == both);

  auto g = generate_instance({CanonicalBlock::K(1), CanonicalBlock::L(2)}, F7, 17);
  auto r = regularize(g.pair);
  CHECK(r.regular.size() == 0);
  CHECK(oracle::names(r.singular_summands) == oracle::names({CanonicalBlock::K(1), CanonicalBlock::L(2)}));
}

TEST_CASE("regularization contract on random scrambled sums") {
  std::mt19937_64 rng(31);
  for (FieldSpec f : {Q, FieldSpec::prime(3), F7}) {
    for (int it = 0; it < 60; ++it) {
      auto blocks = random_blocks(f, rng, 12);
      MatrixPair sum = realize_sum(blocks, f);
      Matrix c = oracle::random_nonsingular(f, sum.size(), rng);
      MatrixPair p = congruence_by(sum, c);
      RegularizationResult r = regularize(p);

      CHECK(oracle::names(r.singular_summands) == oracle::names(singular_part(blocks)));
      CHECK(is_nonsingular(r.regular.a()));
      CHECK(is_nonsingular(r.regular.b()));
      for (auto kind : r.second_pass_kinds) CHECK(kind != CanonicalBlock::Kind::L);
      std::vector<MatrixPair> parts{r.regular, realize_sum(r.singular_summands, f)};
      CHECK(congruence_by(p, r.witness.s) == direct_sum(parts, f));
    }
  }
}

TEST_CASE("chain form is a signed partial permutation congruent to the input") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 40; ++it) {
    std::vector<CanonicalBlock> blocks;
    std::size_t total = 0;
    while (true) {
      CanonicalBlock b = rng() % 2 ? CanonicalBlock::L(1 + rng() % 3) : CanonicalBlock::K(1 + rng() % 3);
      if (total + b.size() > 10) break;
      total += b.size();
      blocks.push_back(b);
    }
    MatrixPair sum = realize_sum(blocks, Q);
    Matrix c = oracle::random_nonsingular(Q, sum.size(), rng);
    MatrixPair p = congruence_by(sum, c);
    auto [form, w] = detail::chain_form(p);
    CHECK(congruence_by(p, w.s) == form);
    CHECK(oracle::is_signed_partial_permutation(form.a()));
    CHECK(oracle::is_signed_partial_permutation(form.b()));
  }
}

TEST_CASE("debug assertions stay silent on valid runs") {
  set_debug_asserts(true);
  std::mt19937_64 rng(51);
  for (int it = 0; it < 20; ++it) {
    auto blocks = random_blocks(F7, rng, 10);
    auto g = generate_instance(blocks, F7, rng());
    CHECK_NOTHROW(regularize(g.pair));
  }
  set_debug_asserts(false);
}
