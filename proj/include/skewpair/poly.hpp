#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "skewpair/field.hpp"
#include "skewpair/matrix.hpp"

namespace skewpair {

class DegreeBoundError : public Error {
 public:
  using Error::Error;
};

/// Univariate polynomial over a FieldSpec, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(FieldSpec field) : field_(field) {}
  Polynomial(FieldSpec field, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  static Polynomial monomial(const FieldElement& c, std::size_t degree);
  /// x - root.
  static Polynomial linear(const FieldElement& root);
  static Polynomial x(FieldSpec field) { return monomial(field.one(), 1); }
  static Polynomial from_ints(FieldSpec field, std::initializer_list<long long> coeffs);

  const FieldSpec& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  /// Zero beyond the degree.
  FieldElement coeff(std::size_t i) const;
  const FieldElement& leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  FieldElement eval(const FieldElement& x) const;

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const FieldElement& c, const Polynomial& f);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);
  /// Degree first, then coefficients lowest-first; a total order for canonical labels.
  friend std::strong_ordering operator<=>(const Polynomial& f, const Polynomial& g);

  /// Human-readable, e.g. "x^2 + 1".
  std::string to_string() const;

 private:
  void trim();

  FieldSpec field_;
  std::vector<FieldElement> coeffs_;
};

/// Quotient and remainder; throws FieldError when dividing by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);
/// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& f, const Polynomial& g);
Polynomial lcm(const Polynomial& f, const Polynomial& g);
Polynomial pow(const Polynomial& f, std::size_t e);
/// f^e mod m with an arbitrary-size exponent.
Polynomial powmod(const Polynomial& f, const mpz_class& e, const Polynomial& m);
/// Exact quotient; throws InternalError when g does not divide f.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);
bool divides(const Polynomial& g, const Polynomial& f);

/// Characteristic polynomial det(xI - M) via Berkowitz (division-free).
Polynomial char_poly(const Matrix& m);

/// Frobenius block of a monic f: ones on the subdiagonal, last column -coefficients.
Matrix companion_matrix(const Polynomial& f);

/// Grid of polynomials.
class PolyMatrix {
 public:
  PolyMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  /// The pencil x*A - B.
  static PolyMatrix pencil(const Matrix& a, const Matrix& b);
  /// x*I - M.
  static PolyMatrix characteristic(const Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> data_;
};

/// Invariant factors d1 | d2 | ... | dr of the Smith normal form, all monic,
/// r = rank over F(x). Units appear as the constant 1.
std::vector<Polynomial> smith_form(PolyMatrix pm);

/// Nonconstant invariant factors only.
std::vector<Polynomial> nontrivial_invariant_factors(const PolyMatrix& pm);

/// Determinant of a square polynomial matrix (fraction-free expansion by elimination over F(x)).
Polynomial poly_determinant(const PolyMatrix& pm);

struct RootMultiplicity {
  FieldElement root;
  int multiplicity;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// Roots lying in the field, ascending. Throws FieldError on the zero polynomial.
std::vector<RootMultiplicity> roots_in_field(const Polynomial& f);

struct FactorPower {
  Polynomial factor;
  int multiplicity;
  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

struct Factorization {
  FieldElement unit;
  std::vector<FactorPower> factors;  ///< monic, pairwise distinct, sorted

  Polynomial expand() const;
};

/// Squarefree decomposition of f into monic coprime squarefree parts,
/// sorted by multiplicity. Handles p-th powers over GF(p).
std::vector<FactorPower> squarefree_decomposition(const Polynomial& f);

inline constexpr int kDefaultFactorDegreeBound = 16;

/// Complete factorization over GF(p): squarefree split, distinct-degree and
/// equal-degree splitting. Throws DegreeBoundError when deg f > degree_bound.
Factorization factor_gfp(const Polynomial& f, int degree_bound = kDefaultFactorDegreeBound);

/// Linear factors over the field plus a nonlinear residual (power 1) when
/// the field cannot factor further. Over GF(p) this is the full factorization.
std::vector<FactorPower> split_factors(const Polynomial& f);

/// Prime factors of |n| with multiplicity, ascending.
std::vector<mpz_class> integer_prime_factors(const mpz_class& n);

}  // namespace skewpair
