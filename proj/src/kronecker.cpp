#include "skewpair/kronecker.hpp"

#include <algorithm>
#include <map>

namespace skewpair {

namespace {

bool factor_less(const FactorPower& x, const FactorPower& y) {
  if (x.factor != y.factor) return x.factor < y.factor;
  return x.multiplicity < y.multiplicity;
}

/// Minimal indices of x A - B acting on the right (column vectors).
std::vector<std::size_t> right_indices(const Matrix& a, const Matrix& b, std::size_t pencil_rank) {
  const FieldSpec& field = a.field();
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t wanted = cols - pencil_rank;
  std::vector<std::size_t> out;
  if (wanted == 0) return out;
  // Polynomial solutions of degree <= d: A v_{k-1} - B v_k = 0 for k = 0..d+1.
  std::size_t prev_nullity = 0;
  std::size_t prev_count = 0;
  for (std::size_t d = 0; d <= cols; ++d) {
    Matrix m(field, (d + 2) * rows, (d + 1) * cols);
    for (std::size_t k = 0; k <= d; ++k) {
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          m(k * rows + i, k * cols + j) = -b(i, j);
          m((k + 1) * rows + i, k * cols + j) = a(i, j);
        }
      }
    }
    const std::size_t nullity = (d + 1) * cols - rank(m);
    // nullity(d) = sum over indices e <= d of (d - e + 1)
    const std::size_t count = nullity - prev_nullity;
    for (std::size_t c = prev_count; c < count; ++c) out.push_back(d);
    prev_nullity = nullity;
    prev_count = count;
    if (count == wanted) break;
  }
  ensure(out.size() == wanted, "pencil_invariants: minimal indices not found within the degree cap");
  return out;
}

std::vector<FactorPower> elementary_divisors(const std::vector<Polynomial>& invariant) {
  std::vector<FactorPower> out;
  for (const auto& f : invariant) {
    for (auto& fp : split_factors(f)) out.push_back(std::move(fp));
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

}  // namespace

std::vector<Polynomial> invariant_factors_of_diagonal(std::vector<Polynomial> polys) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      Polynomial g = gcd(polys[i], polys[j]);
      Polynomial l = lcm(polys[i], polys[j]);
      polys[i] = std::move(g);
      polys[j] = std::move(l);
    }
  }
  std::vector<Polynomial> out;
  for (auto& p : polys) {
    if (p.degree() > 0) out.push_back(p.monic());
  }
  return out;
}

PencilInvariants pencil_invariants(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("pencil_invariants: shape mismatch");
  if (a.field() != b.field()) throw FieldError("pencil_invariants: field mismatch");
  PencilInvariants inv;
  std::vector<Polynomial> smith = smith_form(PolyMatrix::pencil(a, b));
  const std::size_t r = smith.size();
  for (auto& f : smith) {
    if (f.degree() > 0) inv.invariant_factors.push_back(std::move(f));
  }
  inv.finite_divisors = elementary_divisors(inv.invariant_factors);

  const Polynomial x = Polynomial::x(a.field());
  for (auto f : smith_form(PolyMatrix::pencil(b, a))) {
    std::size_t k = 0;
    while (f.degree() > 0 && f.coeff(0).is_zero()) {
      f = exact_div(f, x);
      ++k;
    }
    if (k > 0) inv.infinite_divisors.push_back(k);
  }
  std::sort(inv.infinite_divisors.begin(), inv.infinite_divisors.end());

  inv.right_minimal_indices = right_indices(a, b, r);
  inv.left_minimal_indices = right_indices(a.transpose(), b.transpose(), r);
  return inv;
}

PencilInvariants expected_invariants(const std::vector<CanonicalBlock>& blocks, FieldSpec field) {
  PencilInvariants inv;
  std::vector<Polynomial> diagonal;
  for (const auto& blk : blocks) {
    switch (blk.kind) {
      case CanonicalBlock::Kind::L:
        inv.right_minimal_indices.push_back(blk.n - 1);
        inv.left_minimal_indices.push_back(blk.n - 1);
        break;
      case CanonicalBlock::Kind::K:
        inv.infinite_divisors.push_back(blk.n);
        inv.infinite_divisors.push_back(blk.n);
        break;
      case CanonicalBlock::Kind::J: {
        Polynomial f = blk.eigenvalue ? pow(Polynomial::linear(*blk.eigenvalue), blk.n) : *blk.poly;
        if (f.field() != field) throw FieldError("expected_invariants: label from a different field");
        for (int copy = 0; copy < 2; ++copy) {
          diagonal.push_back(f);
          for (auto& fp : split_factors(f)) inv.finite_divisors.push_back(std::move(fp));
        }
        break;
      }
    }
  }
  std::sort(inv.right_minimal_indices.begin(), inv.right_minimal_indices.end());
  std::sort(inv.left_minimal_indices.begin(), inv.left_minimal_indices.end());
  std::sort(inv.infinite_divisors.begin(), inv.infinite_divisors.end());
  std::sort(inv.finite_divisors.begin(), inv.finite_divisors.end(), factor_less);
  inv.invariant_factors = invariant_factors_of_diagonal(std::move(diagonal));
  return inv;
}

bool skew_symmetry_checks(const PencilInvariants& inv) {
  if (inv.right_minimal_indices != inv.left_minimal_indices) return false;
  std::map<std::size_t, std::size_t> inf;
  for (std::size_t d : inv.infinite_divisors) ++inf[d];
  for (const auto& [d, count] : inf) {
    if (count % 2 != 0) return false;
  }
  // finite_divisors is sorted, so equal entries are adjacent
  std::size_t i = 0;
  while (i < inv.finite_divisors.size()) {
    std::size_t j = i;
    while (j < inv.finite_divisors.size() && inv.finite_divisors[j] == inv.finite_divisors[i]) ++j;
    if ((j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

bool dimension_accounting_holds(const PencilInvariants& inv, std::size_t cols) {
  std::size_t total = 0;
  for (std::size_t e : inv.right_minimal_indices) total += e + 1;
  for (std::size_t e : inv.left_minimal_indices) total += e;
  for (const auto& fp : inv.finite_divisors) total += static_cast<std::size_t>(fp.factor.degree() * fp.multiplicity);
  for (std::size_t d : inv.infinite_divisors) total += d;
  return total == cols;
}

bool concordant(const PencilInvariants& observed, const PencilInvariants& expected, bool compare_elementary) {
  if (observed.right_minimal_indices != expected.right_minimal_indices) return false;
  if (observed.left_minimal_indices != expected.left_minimal_indices) return false;
  if (observed.infinite_divisors != expected.infinite_divisors) return false;
  if (observed.invariant_factors != expected.invariant_factors) return false;
  return !compare_elementary || observed.finite_divisors == expected.finite_divisors;
}

}  // namespace skewpair
