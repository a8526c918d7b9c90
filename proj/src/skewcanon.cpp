#include "skewpair/skewcanon.hpp"

#include <vector>

namespace skewpair {

SkewCanonResult skew_canonicalize(const Matrix& a) {
  if (!a.is_square() || !a.is_skew_symmetric()) throw NotSkewError("skew_canonicalize: input is not skew-symmetric");
  const FieldSpec& field = a.field();
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix w = Matrix::identity(field, n);
  std::vector<bool> active(n, true);
  std::vector<std::size_t> firsts;
  std::vector<std::size_t> seconds;

  auto apply = [&](const ElementaryOp& op) {
    apply_congruence_in_place(m, op);
    apply_row_op(w, op);
  };

  while (true) {
    std::size_t pi = n;
    std::size_t pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (active[j] && !m(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) break;
    if (!m(pi, pj).is_one()) apply(ScaleRow{pi, m(pi, pj).inv()});
    for (std::size_t t = 0; t < n; ++t) {
      if (!active[t] || t == pi || t == pj) continue;
      if (!m(t, pj).is_zero()) apply(AddRow{t, pi, -m(t, pj)});
      if (!m(t, pi).is_zero()) apply(AddRow{t, pj, m(t, pi)});
    }
    active[pi] = active[pj] = false;
    firsts.push_back(pi);
    seconds.push_back(pj);
  }

  const std::size_t k = firsts.size();
  std::vector<std::size_t> order = firsts;
  order.insert(order.end(), seconds.begin(), seconds.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (active[i]) order.push_back(i);
  }
  w = permutation_matrix(field, order) * w;

  if (debug_asserts_enabled()) {
    Matrix target(field, n, n);
    for (std::size_t i = 0; i < k; ++i) {
      target(i, k + i) = field.one();
      target(k + i, i) = -field.one();
    }
    ensure(congruence_unchecked(a, w) == target, "skew_canonicalize: witness does not reproduce the canonical form");
    ensure(2 * k == rank(a), "skew_canonicalize: rank mismatch");
  }
  return {Witness{std::move(w)}, k, {0, k, k, 2 * k, 2 * k, n}};
}

Matrix embed(const Matrix& w, std::span<const std::size_t> idx, std::size_t n) {
  if (w.rows() != idx.size() || w.cols() != idx.size()) throw DimensionError("embed: size mismatch");
  Matrix s = Matrix::identity(w.field(), n);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (idx[r] >= n) throw DimensionError("embed: index out of range");
    for (std::size_t c = 0; c < idx.size(); ++c) s(idx[r], idx[c]) = w(r, c);
  }
  return s;
}

std::pair<MatrixPair, Witness> skew_block_canonicalize(const MatrixPair& p, std::span<const std::size_t> idx) {
  for (std::size_t i : idx) {
    if (i >= p.size()) throw DimensionError("skew_block_canonicalize: index out of range");
  }
  SkewCanonResult sub = skew_canonicalize(p.b().principal(idx));
  Matrix s = embed(sub.witness.s, idx, p.size());
  return {congruence_unchecked(p, s), Witness{std::move(s)}};
}

}  // namespace skewpair
