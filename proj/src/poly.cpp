#include "skewpair/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace skewpair {

// --------------------------------------------------------------- Polynomial

Polynomial::Polynomial(FieldSpec field, std::vector<FieldElement> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t degree) {
  FieldSpec f = c.field();
  std::vector<FieldElement> v(degree + 1, f.zero());
  v[degree] = c;
  return Polynomial(f, std::move(v));
}

Polynomial Polynomial::linear(const FieldElement& root) {
  FieldSpec f = root.field();
  return Polynomial(f, {-root, f.one()});
}

Polynomial Polynomial::from_ints(FieldSpec field, std::initializer_list<long long> coeffs) {
  std::vector<FieldElement> v;
  for (long long c : coeffs) v.push_back(field.from_int(c));
  return Polynomial(field, std::move(v));
}

FieldElement Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

const FieldElement& Polynomial::leading() const {
  if (coeffs_.empty()) throw FieldError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  FieldElement s = coeffs_.back().inv();
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(field_);
  std::vector<FieldElement> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * field_.from_int(static_cast<long long>(i)));
  return Polynomial(field_, std::move(d));
}

FieldElement Polynomial::eval(const FieldElement& x) const {
  FieldElement acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.field_);
  std::vector<FieldElement> r(f.coeffs_.size() + g.coeffs_.size() - 1, f.field_.zero());
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      if (!g.coeffs_[j].is_zero()) r[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
  }
  return Polynomial(f.field_, std::move(r));
}

Polynomial operator*(const FieldElement& c, const Polynomial& f) {
  if (c.is_zero()) return Polynomial(f.field_);
  Polynomial r = f;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.coeffs_.size() != g.coeffs_.size()) return false;
  if (f.coeffs_.empty()) return true;
  return f.coeffs_ == g.coeffs_;
}

std::strong_ordering operator<=>(const Polynomial& f, const Polynomial& g) {
  if (auto c = f.degree() <=> g.degree(); c != 0) return c;
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (auto c = f.coeffs_[i] <=> g.coeffs_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const FieldElement& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = cs == "1";
    if (k == 0) {
      os << cs;
    } else {
      if (!unit) os << (cs.find('/') != std::string::npos ? "(" + cs + ")" : cs) << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- Division

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw FieldError("polynomial division by zero");
  const FieldSpec& field = f.field();
  if (f.degree() < g.degree()) return {Polynomial(field), f};
  std::vector<FieldElement> r = f.coeffs();
  std::vector<FieldElement> q(static_cast<std::size_t>(f.degree() - g.degree() + 1), field.zero());
  const auto& gc = g.coeffs();
  FieldElement lead_inv = g.leading().inv();
  const std::size_t dg = gc.size() - 1;
  for (std::size_t k = r.size(); k-- > dg;) {
    if (r[k].is_zero()) continue;
    FieldElement t = r[k] * lead_inv;
    q[k - dg] = t;
    for (std::size_t j = 0; j <= dg; ++j) {
      if (!gc[j].is_zero()) r[k - dg + j] -= t * gc[j];
    }
  }
  r.resize(dg);
  return {Polynomial(field, std::move(q)), Polynomial(field, std::move(r))};
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  Polynomial a = f;
  Polynomial b = g;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial lcm(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial(f.field());
  return exact_div(f * g, gcd(f, g)).monic();
}

Polynomial pow(const Polynomial& f, std::size_t e) {
  Polynomial result = Polynomial::constant(f.field().one());
  Polynomial base = f;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial powmod(const Polynomial& f, const mpz_class& e, const Polynomial& m) {
  Polynomial result = divmod(Polynomial::constant(f.field().one()), m).second;
  Polynomial base = divmod(f, m).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t b = bits; b-- > 0;) {
    result = divmod(result * result, m).second;
    if (mpz_tstbit(e.get_mpz_t(), b)) result = divmod(result * base, m).second;
  }
  return result;
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
  auto [q, r] = divmod(f, g);
  ensure(r.is_zero(), "exact polynomial division left a remainder");
  return q;
}

bool divides(const Polynomial& g, const Polynomial& f) {
  if (g.is_zero()) return f.is_zero();
  return divmod(f, g).second.is_zero();
}

// ------------------------------------------------------ Characteristic poly

Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("char_poly of a non-square matrix");
  const FieldSpec& field = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(field.one());
  // Coefficients highest degree first, for the trailing principal submatrix.
  std::vector<FieldElement> vect{field.one(), -m(n - 1, n - 1)};
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t sz = n - 1 - k;  // size of the trailing block S
    // Toeplitz column: 1, -a, -R C, -R S C, ..., -R S^(sz-1) C.
    std::vector<FieldElement> t{field.one(), -m(k, k)};
    std::vector<FieldElement> v(sz, field.zero());
    for (std::size_t i = 0; i < sz; ++i) v[i] = m(k + 1 + i, k);
    for (std::size_t j = 0; j < sz; ++j) {
      FieldElement rv = field.zero();
      for (std::size_t i = 0; i < sz; ++i) {
        if (!v[i].is_zero()) rv += m(k, k + 1 + i) * v[i];
      }
      t.push_back(-rv);
      if (j + 1 < sz) {
        std::vector<FieldElement> w(sz, field.zero());
        for (std::size_t r = 0; r < sz; ++r) {
          for (std::size_t c = 0; c < sz; ++c) {
            if (!v[c].is_zero()) w[r] += m(k + 1 + r, k + 1 + c) * v[c];
          }
        }
        v = std::move(w);
      }
    }
    std::vector<FieldElement> next(vect.size() + 1, field.zero());
    for (std::size_t r = 0; r < next.size(); ++r) {
      for (std::size_t c = 0; c < vect.size() && c <= r; ++c) {
        if (r - c < t.size()) next[r] += t[r - c] * vect[c];
      }
    }
    vect = std::move(next);
  }
  std::reverse(vect.begin(), vect.end());
  return Polynomial(field, std::move(vect));
}

Matrix companion_matrix(const Polynomial& f) {
  if (f.degree() < 1 || !f.is_monic()) throw DimensionError("companion_matrix needs a monic nonconstant polynomial");
  const auto n = static_cast<std::size_t>(f.degree());
  Matrix c(f.field(), n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i + 1, i) = f.field().one();
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -f.coeff(i);
  return c;
}

// --------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(field)) {}

PolyMatrix PolyMatrix::pencil(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("pencil: shape mismatch");
  PolyMatrix pm(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) pm(i, j) = Polynomial(a.field(), {-b(i, j), a(i, j)});
  }
  return pm;
}

PolyMatrix PolyMatrix::characteristic(const Matrix& m) {
  return pencil(Matrix::identity(m.field(), m.rows()), m);
}

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
  bool found;
};

Pivot find_min_degree(const PolyMatrix& m, std::size_t k) {
  Pivot best{0, 0, false};
  int best_deg = 0;
  for (std::size_t i = k; i < m.rows(); ++i) {
    for (std::size_t j = k; j < m.cols(); ++j) {
      const Polynomial& e = m(i, j);
      if (e.is_zero()) continue;
      if (!best.found || e.degree() < best_deg) {
        best = {i, j, true};
        best_deg = e.degree();
      }
    }
  }
  return best;
}

void swap_rows(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

std::vector<Polynomial> smith_form(PolyMatrix m) {
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::vector<Polynomial> factors;
  for (std::size_t k = 0; k < limit; ++k) {
    bool finished = false;
    while (true) {
      Pivot piv = find_min_degree(m, k);
      if (!piv.found) {
        finished = true;
        break;
      }
      swap_rows(m, k, piv.row);
      swap_cols(m, k, piv.col);
      const Polynomial pivot = m(k, k);
      bool clean = true;
      for (std::size_t i = k + 1; i < m.rows(); ++i) {
        if (m(i, k).is_zero()) continue;
        auto [q, r] = divmod(m(i, k), pivot);
        for (std::size_t j = k + 1; j < m.cols(); ++j) {
          if (!m(k, j).is_zero()) m(i, j) -= q * m(k, j);
        }
        m(i, k) = std::move(r);
        if (!m(i, k).is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        if (m(k, j).is_zero()) continue;
        auto [q, r] = divmod(m(k, j), pivot);
        for (std::size_t i = k + 1; i < m.rows(); ++i) {
          if (!m(i, k).is_zero()) m(i, j) -= q * m(i, k);
        }
        m(k, j) = std::move(r);
        if (!m(k, j).is_zero()) clean = false;
      }
      if (!clean) continue;
      // Pivot row and column are clear; enforce divisibility of the rest.
      bool violation = false;
      for (std::size_t i = k + 1; i < m.rows() && !violation; ++i) {
        for (std::size_t j = k + 1; j < m.cols(); ++j) {
          if (!m(i, j).is_zero() && !divmod(m(i, j), pivot).second.is_zero()) {
            for (std::size_t c = k; c < m.cols(); ++c) m(k, c) += m(i, c);
            violation = true;
            break;
          }
        }
      }
      if (!violation) break;
    }
    if (finished) break;
    factors.push_back(m(k, k).monic());
  }
  return factors;
}

std::vector<Polynomial> nontrivial_invariant_factors(const PolyMatrix& pm) {
  std::vector<Polynomial> out;
  for (auto& d : smith_form(pm)) {
    if (d.degree() > 0) out.push_back(std::move(d));
  }
  return out;
}

Polynomial poly_determinant(const PolyMatrix& pm) {
  if (pm.rows() != pm.cols()) throw DimensionError("determinant of a non-square polynomial matrix");
  const std::size_t n = pm.rows();
  const FieldSpec& field = pm.field();
  if (n == 0) return Polynomial::constant(field.one());
  PolyMatrix m = pm;
  Polynomial prev = Polynomial::constant(field.one());
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k).is_zero()) ++piv;
    if (piv == n) return Polynomial(field);
    if (piv != k) {
      swap_rows(m, piv, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = Polynomial(field);
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

// -------------------------------------------------------- Integer factoring

namespace {

mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2;
    mpz_class x;
    mpz_class g = 1;
    mpz_class q = 1;
    mpz_class ys;
    const unsigned long m = 64;
    unsigned long r = 1;
    auto f = [&](const mpz_class& v) {
      mpz_class t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.push_back(n);
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<mpz_class> divisors_of(const mpz_class& n) {
  std::vector<mpz_class> primes = integer_prime_factors(n);
  std::vector<mpz_class> divs{1};
  std::size_t i = 0;
  while (i < primes.size()) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    const std::size_t existing = divs.size();
    mpz_class pk = 1;
    for (std::size_t e = i; e < j; ++e) {
      pk *= primes[i];
      for (std::size_t t = 0; t < existing; ++t) divs.push_back(divs[t] * pk);
    }
    i = j;
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::vector<mpz_class> integer_prime_factors(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  std::vector<mpz_class> out;
  if (n <= 1) return out;
  for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

// -------------------------------------------------------------- Root finding

namespace {

std::vector<RootMultiplicity> roots_gfp_exhaustive(const Polynomial& f) {
  const FieldSpec& field = f.field();
  std::vector<RootMultiplicity> out;
  Polynomial g = f;
  for (std::uint64_t v = 0; v < field.characteristic() && g.degree() > 0; ++v) {
    FieldElement r(v, field.characteristic());
    if (!g.eval(r).is_zero()) continue;
    int mult = 0;
    Polynomial lin = Polynomial::linear(r);
    while (g.degree() > 0) {
      auto [q, rem] = divmod(g, lin);
      if (!rem.is_zero()) break;
      g = std::move(q);
      ++mult;
    }
    out.push_back({r, mult});
  }
  return out;
}

std::vector<Polynomial> equal_degree_split(const Polynomial& g, int d);

std::vector<RootMultiplicity> roots_gfp_splitting(const Polynomial& f) {
  const FieldSpec& field = f.field();
  Polynomial xp = powmod(Polynomial::x(field), mpz_class(std::to_string(field.characteristic())), f);
  Polynomial lin_part = gcd(xp - Polynomial::x(field), f);
  std::vector<RootMultiplicity> out;
  if (lin_part.degree() <= 0) return out;
  for (const auto& l : equal_degree_split(lin_part, 1)) {
    FieldElement r = -l.coeff(0);
    int mult = 0;
    Polynomial g = f;
    Polynomial lin = Polynomial::linear(r);
    while (g.degree() > 0) {
      auto [q, rem] = divmod(g, lin);
      if (!rem.is_zero()) break;
      g = std::move(q);
      ++mult;
    }
    out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
  return out;
}

std::vector<RootMultiplicity> roots_rational(const Polynomial& f) {
  const FieldSpec& field = f.field();
  std::vector<RootMultiplicity> out;
  // Integer primitive multiple of f.
  mpz_class den_lcm = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : f.coeffs()) {
    mpq_class scaled = c.rational() * den_lcm;
    ints.push_back(scaled.get_num());
  }
  std::size_t zero_mult = 0;
  while (zero_mult < ints.size() && ints[zero_mult] == 0) ++zero_mult;
  if (zero_mult > 0) out.push_back({field.zero(), static_cast<int>(zero_mult)});
  std::vector<mpz_class> trimmed(ints.begin() + static_cast<std::ptrdiff_t>(zero_mult), ints.end());
  if (trimmed.size() <= 1) return out;

  std::vector<FieldElement> gc;
  for (const auto& z : trimmed) gc.push_back(field.from_mpz(z));
  Polynomial g(field, gc);

  std::vector<mpq_class> candidates;
  for (const auto& p : divisors_of(trimmed.front())) {
    for (const auto& q : divisors_of(trimmed.back())) {
      mpq_class c(p, q);
      c.canonicalize();
      candidates.push_back(c);
      candidates.push_back(-c);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& c : candidates) {
    if (g.degree() <= 0) break;
    FieldElement r(c);
    if (!g.eval(r).is_zero()) continue;
    int mult = 0;
    Polynomial lin = Polynomial::linear(r);
    while (g.degree() > 0) {
      auto [q, rem] = divmod(g, lin);
      if (!rem.is_zero()) break;
      g = std::move(q);
      ++mult;
    }
    out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
  return out;
}

}  // namespace

std::vector<RootMultiplicity> roots_in_field(const Polynomial& f) {
  if (f.is_zero()) throw FieldError("roots of the zero polynomial");
  if (f.degree() == 0) return {};
  if (f.field().is_rational()) return roots_rational(f);
  if (f.field().characteristic() <= 100000) return roots_gfp_exhaustive(f);
  return roots_gfp_splitting(f);
}

// ------------------------------------------------------------ Factorization

Polynomial Factorization::expand() const {
  Polynomial r = Polynomial::constant(unit);
  for (const auto& fp : factors) r = r * pow(fp.factor, static_cast<std::size_t>(fp.multiplicity));
  return r;
}

namespace {

/// g(x) with g(x)^p = f(x) over GF(p); requires f' = 0.
Polynomial pth_root(const Polynomial& f) {
  const auto p = static_cast<std::size_t>(f.field().characteristic());
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  // a^(1/p) = a in GF(p).
  return Polynomial(f.field(), std::move(c));
}

std::vector<FactorPower> squarefree_monic(const Polynomial& f) {
  std::vector<FactorPower> out;
  if (f.degree() <= 0) return out;
  const FieldSpec& field = f.field();
  Polynomial d = f.derivative();
  if (d.is_zero()) {
    for (auto& fp : squarefree_monic(pth_root(f))) {
      fp.multiplicity *= static_cast<int>(field.characteristic());
      out.push_back(std::move(fp));
    }
    return out;
  }
  Polynomial c = gcd(f, d);
  Polynomial w = exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    Polynomial y = gcd(w, c);
    Polynomial fac = exact_div(w, y);
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = std::move(y);
    c = exact_div(c, w);
    ++i;
  }
  if (c.degree() > 0) {
    ensure(!field.is_rational(), "squarefree decomposition residue over Q");
    for (auto& fp : squarefree_monic(pth_root(c.monic()))) {
      fp.multiplicity *= static_cast<int>(field.characteristic());
      out.push_back(std::move(fp));
    }
  }
  return out;
}

std::mt19937_64& split_rng() {
  thread_local std::mt19937_64 rng(0x5eedf00dULL);
  return rng;
}

std::vector<Polynomial> equal_degree_split(const Polynomial& g, int d) {
  if (g.degree() == d) return {g.monic()};
  const FieldSpec& field = g.field();
  const std::uint64_t p = field.characteristic();
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
  mpz_class e = (pd - 1) / 2;
  auto& rng = split_rng();
  while (true) {
    std::vector<FieldElement> a;
    for (int k = 0; k < g.degree(); ++k) a.emplace_back(rng() % p, p);
    Polynomial ap(field, std::move(a));
    if (ap.degree() <= 0) continue;
    Polynomial b = powmod(ap, e, g) - Polynomial::constant(field.one());
    Polynomial u = gcd(b, g);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      std::vector<Polynomial> left = equal_degree_split(u, d);
      std::vector<Polynomial> right = equal_degree_split(exact_div(g, u), d);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

/// Irreducible factors of a squarefree monic polynomial over GF(p).
std::vector<Polynomial> irreducible_factors(const Polynomial& s) {
  const FieldSpec& field = s.field();
  const mpz_class p(std::to_string(field.characteristic()));
  std::vector<Polynomial> out;
  Polynomial rest = s;
  Polynomial x = Polynomial::x(field);
  Polynomial h = x;
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = powmod(h, p, rest);
    Polynomial g = gcd(h - x, rest);
    if (g.degree() > 0) {
      for (auto& q : equal_degree_split(g, d)) out.push_back(std::move(q));
      rest = exact_div(rest, g);
      h = divmod(h, rest).second;
    }
  }
  if (rest.degree() > 0) out.push_back(rest.monic());
  return out;
}

}  // namespace

std::vector<FactorPower> squarefree_decomposition(const Polynomial& f) {
  if (f.is_zero()) throw FieldError("squarefree decomposition of the zero polynomial");
  auto out = squarefree_monic(f.monic());
  std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  return out;
}

Factorization factor_gfp(const Polynomial& f, int degree_bound) {
  if (f.field().is_rational()) throw FieldError("factor_gfp requires a prime field");
  if (f.is_zero()) throw FieldError("factorization of the zero polynomial");
  if (f.degree() > degree_bound) {
    throw DegreeBoundError("factor_gfp: degree " + std::to_string(f.degree()) + " exceeds bound " +
                           std::to_string(degree_bound) + "; raise the degree bound");
  }
  Factorization result{f.leading(), {}};
  for (const auto& part : squarefree_decomposition(f)) {
    for (auto& q : irreducible_factors(part.factor)) result.factors.push_back({std::move(q), part.multiplicity});
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const FactorPower& a, const FactorPower& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.multiplicity < b.multiplicity;
  });
  return result;
}

std::vector<FactorPower> split_factors(const Polynomial& f) {
  if (f.is_zero()) throw FieldError("split_factors of the zero polynomial");
  if (f.degree() <= 0) return {};
  if (!f.field().is_rational()) {
    return factor_gfp(f, std::max(f.degree(), kDefaultFactorDegreeBound)).factors;
  }
  std::vector<FactorPower> out;
  Polynomial rest = f.monic();
  for (const auto& rm : roots_in_field(f)) {
    Polynomial lin = Polynomial::linear(rm.root);
    out.push_back({lin, rm.multiplicity});
    rest = exact_div(rest, pow(lin, static_cast<std::size_t>(rm.multiplicity)));
  }
  if (rest.degree() > 0) {
    for (auto& part : squarefree_decomposition(rest)) out.push_back(std::move(part));
  }
  std::sort(out.begin(), out.end(), [](const FactorPower& a, const FactorPower& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

}  // namespace skewpair
