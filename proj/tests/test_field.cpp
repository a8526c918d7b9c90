#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skewpair/field.hpp"

using namespace skewpair;

TEST_CASE("rational arithmetic is exact") {
  FieldSpec q;
  CHECK(q.parse_scalar("1/2") + q.parse_scalar("1/3") == q.parse_scalar("5/6"));
  CHECK(inv(q.parse_scalar("-2/3")) == q.parse_scalar("-3/2"));
  CHECK(q.parse_scalar("4/-6").to_string() == "-2/3");
  CHECK(neg(q.zero()) == q.zero());
  CHECK(is_zero(q.parse_scalar("0/5")));
}

TEST_CASE("prime field arithmetic") {
  FieldSpec f7 = FieldSpec::prime(7);
  CHECK(mul(f7.from_int(3), f7.from_int(5)) == f7.one());
  CHECK(div(f7.one(), f7.from_int(3)) == f7.from_int(static_cast<long long>(oracle::brute_inverse(3, 7))));
  CHECK(inv(FieldSpec::prime(5).from_int(4)) == FieldSpec::prime(5).from_int(4));
  CHECK(f7.from_int(-1).residue() == 6);
  CHECK(f7.parse_scalar("1/2") == f7.from_int(4));
}

TEST_CASE("every nonzero residue inverts like the brute-force search") {
  for (std::uint64_t p : {3u, 5u, 7u, 97u}) {
    for (std::uint64_t a = 1; a < p; ++a) {
      CHECK(inv(FieldElement(a, p)).residue() == oracle::brute_inverse(a, p));
    }
  }
}

TEST_CASE("large primes use exact 128-bit products") {
  const std::uint64_t p = 18446744073709551557ull;  // largest 64-bit prime
  FieldSpec f = FieldSpec::prime(p);
  FieldElement x(p - 1, p);
  CHECK(x * x == f.one());
  CHECK(x * inv(x) == f.one());
}

TEST_CASE("errors") {
  FieldSpec q;
  CHECK_THROWS_AS(q.zero().inv(), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(2), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(9), FieldError);
  CHECK_THROWS_AS(FieldSpec::parse("GF(2)"), ParseError);
  CHECK_THROWS_AS(q.parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(q.from_fraction(1, 0), FieldError);
  CHECK_THROWS_AS(q.parse_scalar("abc"), ParseError);
  CHECK_THROWS_AS(q.one() + FieldSpec::prime(5).one(), FieldError);
}

TEST_CASE("field names round-trip") {
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("GF(97)") == FieldSpec::prime(97));
  CHECK(FieldSpec::parse(FieldSpec::prime(97).name()) == FieldSpec::prime(97));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(7), FieldSpec::prime(97)}) {
    for (int it = 0; it < 200; ++it) {
      auto draw = [&] { return f.from_fraction(static_cast<long long>(rng() % 41) - 20, f.is_rational() ? 1 + rng() % 9 : 1); };
      FieldElement x = draw(), y = draw(), z = draw();
      CHECK((x + y) * z == x * z + y * z);
      CHECK(x - x == f.zero());
      if (!x.is_zero()) CHECK(x * x.inv() == f.one());
    }
  }
}
