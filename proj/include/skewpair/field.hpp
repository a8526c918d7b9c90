#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace skewpair {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic errors: division by zero, operands from different fields.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (scalars, field names, files).
class ParseError : public Error {
 public:
  using Error::Error;
};

class FieldElement;

/// The scalar field: either the rationals or GF(p) for an odd prime p.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  /// Defaults to the rationals.
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws FieldError unless p is an odd prime.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q", "QQ", "rationals", "GF(p)" or "GF p".
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long v) const;
  FieldElement from_mpz(const mpz_class& v) const;
  FieldElement from_fraction(long long num, long long den) const;
  /// Integers "-12", fractions "-3/4". Over GF(p) fractions are read as num * den^-1.
  FieldElement parse_scalar(std::string_view text) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class FieldElement;
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
};

/// An exact scalar. Rationals are kept in lowest terms with positive
/// denominator; residues are kept in [0, p).
class FieldElement {
 public:
  struct Residue {
    std::uint64_t value = 0;
    std::uint64_t modulus = 3;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  /// The rational zero.
  FieldElement() : value_(mpq_class(0)) {}
  explicit FieldElement(mpq_class q);
  FieldElement(std::uint64_t residue, std::uint64_t modulus);

  FieldSpec field() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; throws FieldError on a residue.
  const mpq_class& rational() const;
  /// Residue value; throws FieldError on a rational.
  std::uint64_t residue() const;

  FieldElement inv() const;
  FieldElement operator-() const;

  FieldElement& operator+=(const FieldElement& y);
  FieldElement& operator-=(const FieldElement& y);
  FieldElement& operator*=(const FieldElement& y);
  FieldElement& operator/=(const FieldElement& y);

  friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
  friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
  friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
  friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }

  friend bool operator==(const FieldElement& x, const FieldElement& y);

  /// Total order used for canonical labels: numeric over Q, residue order over GF(p).
  friend std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y);

  std::string to_string() const;

 private:
  void check_same_field(const FieldElement& y) const;

  std::variant<mpq_class, Residue> value_;
};

FieldElement add(const FieldElement& x, const FieldElement& y);
FieldElement sub(const FieldElement& x, const FieldElement& y);
FieldElement mul(const FieldElement& x, const FieldElement& y);
FieldElement div(const FieldElement& x, const FieldElement& y);
FieldElement neg(const FieldElement& x);
FieldElement inv(const FieldElement& x);
bool is_zero(const FieldElement& x);

bool is_prime(std::uint64_t n);

}  // namespace skewpair
