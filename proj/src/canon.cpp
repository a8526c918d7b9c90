#include "skewpair/canon.hpp"

#include <algorithm>
#include <set>
#include <numeric>

#include "skewpair/poly.hpp"
#include "skewpair/regcore.hpp"

namespace skewpair {

namespace {

/// s on the leading block, identity on the rest.
Matrix lead_extend(const Matrix& s, std::size_t n) {
  Matrix out = Matrix::identity(s.field(), n);
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) out(i, j) = s(i, j);
  }
  return out;
}

CanonicalForm canonicalize_split(const MatrixPair& p, const std::vector<RootMultiplicity>& roots) {
  const FieldSpec& field = p.field();
  const std::size_t n = p.size();
  Matrix w = Matrix::identity(field, n);
  MatrixPair cur = p;
  std::vector<CanonicalBlock> tail;
  for (const auto& rm : roots) {
    if (cur.size() == 0) break;
    const FieldElement& lambda = rm.root;
    MatrixPair shifted(cur.b() - lambda * cur.a(), cur.a());
    SemiRegResult sr = semi_regularize(shifted);

    std::vector<CanonicalBlock> found;
    for (const auto& e : sr.extracted) {
      ensure(e.block.kind == CanonicalBlock::Kind::K, "canonicalize_regular: shifted pass produced an L block");
      found.push_back(CanonicalBlock::J(e.block.n, lambda));
    }
    MatrixPair rest(sr.remaining.b(), sr.remaining.a() + lambda * sr.remaining.b());

    // The congruence of the shifted pair maps the unshifted pair to rest + J blocks.
    std::vector<MatrixPair> parts{rest};
    for (const auto& b : found) parts.push_back(realize(b, field));
    ensure(congruence_unchecked(cur, sr.witness.s) == direct_sum(parts, field),
           "canonicalize_regular: shift-back identity failed");

    w = lead_extend(sr.witness.s, n) * w;
    found.insert(found.end(), tail.begin(), tail.end());
    tail = std::move(found);
    cur = std::move(rest);
  }
  ensure(cur.size() == 0, "canonicalize_regular: eigenvalues exhausted before the pair");
  return {std::move(tail), Witness{std::move(w)}, true};
}

CanonicalForm canonicalize_nonsplit(const Matrix& m) {
  const FieldSpec& field = m.field();
  std::vector<Polynomial> inv = nontrivial_invariant_factors(PolyMatrix::characteristic(m));
  ensure(inv.size() % 2 == 0, "canonicalize_regular: odd number of invariant factors");
  CanonicalForm out;
  for (std::size_t i = 0; i < inv.size(); i += 2) {
    ensure(inv[i] == inv[i + 1], "canonicalize_regular: invariant factors do not pair up");
    const Polynomial& f = inv[i];
    if (field.is_rational()) {
      out.blocks.push_back(CanonicalBlock::J(f, false));
      continue;
    }
    Factorization fac = factor_gfp(f, std::max(f.degree(), kDefaultFactorDegreeBound));
    for (const auto& fp : fac.factors) {
      const auto mult = static_cast<std::size_t>(fp.multiplicity);
      if (fp.factor.degree() == 1) {
        out.blocks.push_back(CanonicalBlock::J(mult, -fp.factor.coeff(0)));
      } else {
        out.blocks.push_back(CanonicalBlock::J(pow(fp.factor, mult), true));
      }
    }
  }
  out.witness_complete = false;
  return out;
}

/// Each J(n, 0) must account for two x^n elementary divisors of x A - B.
void cross_check_zero_blocks(const MatrixPair& p, const std::vector<CanonicalBlock>& blocks) {
  std::multiset<std::size_t> expected;
  for (const auto& b : blocks) {
    if (b.kind == CanonicalBlock::Kind::J && b.eigenvalue && b.eigenvalue->is_zero()) {
      expected.insert(b.n);
      expected.insert(b.n);
    }
  }
  std::multiset<std::size_t> found;
  const Polynomial x = Polynomial::x(p.field());
  for (auto f : nontrivial_invariant_factors(PolyMatrix::pencil(p.a(), p.b()))) {
    std::size_t k = 0;
    while (f.degree() > 0 && f.coeff(0).is_zero()) {
      f = exact_div(f, x);
      ++k;
    }
    if (k > 0) found.insert(k);
  }
  ensure(found == expected, "canonicalize: J(n,0) blocks disagree with the x-power divisors of xA - B");
}

}  // namespace

CanonicalForm canonicalize_regular(const MatrixPair& p) {
  const FieldSpec& field = p.field();
  const std::size_t n = p.size();
  if (n == 0) return {{}, Witness::identity(field, 0), true};
  if (!is_nonsingular(p.a()) || !is_nonsingular(p.b())) {
    throw SingularMatrixError("canonicalize_regular: both matrices must be nonsingular");
  }
  Matrix m = inverse(p.a()) * p.b();
  std::vector<RootMultiplicity> roots = roots_in_field(char_poly(m));
  std::size_t total = 0;
  for (const auto& r : roots) total += static_cast<std::size_t>(r.multiplicity);
  if (total == n) return canonicalize_split(p, roots);
  return canonicalize_nonsplit(m);
}

std::vector<std::size_t> canonical_block_order(const std::vector<CanonicalBlock>& blocks) {
  std::vector<std::size_t> idx(blocks.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return blocks[x] < blocks[y]; });
  return idx;
}

CanonicalForm canonicalize(const MatrixPair& p) {
  const FieldSpec& field = p.field();
  const std::size_t n = p.size();
  RegularizationResult reg = regularize(p);
  CanonicalForm reg_form = canonicalize_regular(reg.regular);

  std::vector<CanonicalBlock> blocks = reg_form.blocks;
  blocks.insert(blocks.end(), reg.singular_summands.begin(), reg.singular_summands.end());
  const std::vector<std::size_t> perm = canonical_block_order(blocks);

  CanonicalForm out;
  for (std::size_t i : perm) out.blocks.push_back(blocks[i]);
  out.witness_complete = reg_form.witness_complete;
  if (reg_form.witness_complete) {
    std::vector<std::size_t> offset(blocks.size() + 1, 0);
    for (std::size_t i = 0; i < blocks.size(); ++i) offset[i + 1] = offset[i] + blocks[i].size();
    std::vector<std::size_t> order;
    for (std::size_t i : perm) {
      for (std::size_t k = offset[i]; k < offset[i + 1]; ++k) order.push_back(k);
    }
    Matrix w = permutation_matrix(field, order) * lead_extend(reg_form.witness->s, n) * reg.witness.s;
    if (debug_asserts_enabled()) {
      ensure(congruence_unchecked(p, w) == realize_sum(out.blocks, field), "canonicalize: witness mismatch");
    }
    out.witness = Witness{std::move(w)};
  }
  if (debug_asserts_enabled()) cross_check_zero_blocks(p, out.blocks);
  return out;
}

std::pair<MatrixPair, Witness> rly_reduce(const MatrixPair& p) {
  if (is_nonsingular(p.a())) throw PreconditionError("rly_reduce: A must be singular");
  return detail::chain_form(p);
}

}  // namespace skewpair
