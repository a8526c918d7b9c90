#pragma once

// Deliberately naive reference computations. Nothing here calls the
// elimination or factoring code under test.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "skewpair/block.hpp"
#include "skewpair/matrix.hpp"
#include "skewpair/poly.hpp"

namespace oracle {

using namespace skewpair;

inline Matrix skew(FieldSpec f, std::size_t n, std::initializer_list<std::tuple<int, int, long long>> entries) {
  Matrix m(f, n, n);
  for (auto [i, j, v] : entries) {
    m(i, j) = f.from_int(v);
    m(j, i) = f.from_int(-v);
  }
  return m;
}

/// Inverse in GF(p) by trying every residue.
inline std::uint64_t brute_inverse(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t x = 1; x < p; ++x) {
    if ((a * x) % p == 1) return x;
  }
  return 0;
}

/// Determinant by the permutation expansion.
inline FieldElement leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FieldElement total = m.field().zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    FieldElement term = m.field().one();
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Polynomial leibniz_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial total(m.field());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Polynomial term = Polynomial::constant(m.field().one());
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// Rank as the largest nonvanishing minor.
inline std::size_t minor_rank(const Matrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    for (const auto& r : subsets(m.rows(), k))
      for (const auto& c : subsets(m.cols(), k))
        if (!leibniz_det(m.submatrix(r, c)).is_zero()) return k;
  }
  return 0;
}

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}, D_k the
/// monic gcd of all k x k minors. Only practical for tiny matrices.
inline std::vector<Polynomial> determinantal_invariants(const PolyMatrix& m) {
  std::vector<Polynomial> out;
  Polynomial prev = Polynomial::constant(m.field().one());
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Polynomial g(m.field());
    for (const auto& r : subsets(m.rows(), k)) {
      for (const auto& c : subsets(m.cols(), k)) {
        PolyMatrix sub(m.field(), k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
        g = gcd(g, leibniz_det(sub));
      }
    }
    if (g.is_zero()) break;
    out.push_back(divmod(g, prev).first.monic());
    prev = g;
  }
  return out;
}

/// Every root of f by evaluating at each residue of GF(p).
inline std::vector<std::uint64_t> exhaustive_roots(const Polynomial& f) {
  std::vector<std::uint64_t> out;
  const std::uint64_t p = f.field().characteristic();
  for (std::uint64_t r = 0; r < p; ++r) {
    if (f.eval(FieldElement(r, p)).is_zero()) out.push_back(r);
  }
  return out;
}

/// At most one nonzero entry per row and per column, each equal to 1 or -1.
inline bool is_signed_partial_permutation(const Matrix& m) {
  const FieldElement one = m.field().one();
  std::vector<int> row_count(m.rows()), col_count(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      if (m(i, j) != one && m(i, j) != -one) return false;
      ++row_count[i];
      ++col_count[j];
    }
  }
  return std::all_of(row_count.begin(), row_count.end(), [](int c) { return c <= 1; }) &&
         std::all_of(col_count.begin(), col_count.end(), [](int c) { return c <= 1; });
}

inline std::multiset<std::string> names(const std::vector<CanonicalBlock>& blocks) {
  std::multiset<std::string> out;
  for (const auto& b : blocks) out.insert(b.to_string());
  return out;
}

/// Scramble by a dense random matrix, re-drawn until nonsingular (checked by minors
/// for small n, by the library rank otherwise).
inline Matrix random_nonsingular(FieldSpec f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix c(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        c(i, j) = f.from_fraction(static_cast<long long>(rng() % 7) - 3, f.is_rational() ? 1 + rng() % 3 : 1);
    const bool ok = n <= 7 ? !leibniz_det(c).is_zero() : is_nonsingular(c);
    if (ok) return c;
  }
}

}  // namespace oracle
