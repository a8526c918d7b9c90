#include "skewpair/regcore.hpp"

#include <algorithm>
#include <numeric>

#include "skewpair/skewcanon.hpp"

namespace skewpair {

StripContext StripContext::canonical(std::size_t k, std::size_t n) {
  if (2 * k > n) throw DimensionError("StripContext: half-rank exceeds size");
  StripContext ctx;
  for (std::size_t i = 0; i < k; ++i) {
    ctx.first.push_back(i);
    ctx.second.push_back(k + i);
  }
  for (std::size_t i = 2 * k; i < n; ++i) ctx.third.push_back(i);
  return ctx;
}

namespace {

std::size_t at(const std::vector<std::size_t>& strip, std::size_t pos) {
  if (pos >= strip.size()) throw DimensionError("coupled transform: strip position out of range");
  return strip[pos];
}

ElementaryOp map_op(const ElementaryOp& op, const std::vector<std::size_t>& strip) {
  return std::visit(
      [&](const auto& o) -> ElementaryOp {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, SwapRows>) {
          return SwapRows{at(strip, o.i), at(strip, o.j)};
        } else if constexpr (std::is_same_v<T, ScaleRow>) {
          return ScaleRow{at(strip, o.i), o.c};
        } else {
          return AddRow{at(strip, o.i), at(strip, o.j), o.c};
        }
      },
      op);
}

}  // namespace

std::vector<ElementaryOp> expand(const CoupledTransform& t, const StripContext& ctx, const FieldSpec& field) {
  using K = CoupledTransform::Kind;
  switch (t.kind) {
    case K::StripOne:
      return std::visit(
          [&](const auto& o) -> std::vector<ElementaryOp> {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, SwapRows>) {
              return {SwapRows{at(ctx.first, o.i), at(ctx.first, o.j)},
                      SwapRows{at(ctx.second, o.i), at(ctx.second, o.j)}};
            } else if constexpr (std::is_same_v<T, ScaleRow>) {
              if (o.c.is_zero()) throw FieldError("coupled transform: zero scale");
              return {ScaleRow{at(ctx.first, o.i), o.c}, ScaleRow{at(ctx.second, o.i), o.c.inv()}};
            } else {
              // row i1 += c row j1 is undone on strip 2 by row j2 -= c row i2
              return {AddRow{at(ctx.first, o.i), at(ctx.first, o.j), o.c},
                      AddRow{at(ctx.second, o.j), at(ctx.second, o.i), -o.c}};
            }
          },
          t.op);
    case K::StripThree:
      return {map_op(t.op, ctx.third)};
    case K::AddOneToTwo:
      if (t.i == t.j) return {AddRow{at(ctx.second, t.i), at(ctx.first, t.i), t.a}};
      return {AddRow{at(ctx.second, t.j), at(ctx.first, t.i), t.a}, AddRow{at(ctx.second, t.i), at(ctx.first, t.j), t.a}};
    case K::AddTwoToOne:
      if (t.i == t.j) return {AddRow{at(ctx.first, t.i), at(ctx.second, t.i), t.a}};
      return {AddRow{at(ctx.first, t.j), at(ctx.second, t.i), t.a}, AddRow{at(ctx.first, t.i), at(ctx.second, t.j), t.a}};
    case K::SwapPair: {
      std::size_t i1 = at(ctx.first, t.i);
      std::size_t i2 = at(ctx.second, t.i);
      return {ScaleRow{i1, -field.one()}, SwapRows{i1, i2}};
    }
    case K::AddThree: {
      std::size_t src = at(ctx.third, t.i);
      if (t.target == src) throw DimensionError("coupled transform (v): target equals source");
      return {AddRow{t.target, src, t.a}};
    }
  }
  throw DimensionError("unknown coupled transform");
}

namespace {

/// Working state of one level: the pair, the accumulated transform, and the strips.
class Level {
 public:
  Level(const Matrix& a, const Matrix& b, StripContext ctx)
      : a_(a), b_(b), t_(Matrix::identity(a.field(), a.rows())), ctx_(std::move(ctx)), field_(a.field()) {}

  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  const Matrix& t() const { return t_; }
  const StripContext& ctx() const { return ctx_; }
  const FieldSpec& field() const { return field_; }
  const FieldElement& B(std::size_t i, std::size_t j) const { return b_(i, j); }

  void apply(const CoupledTransform& ct) {
    const bool check = debug_asserts_enabled();
    Matrix before = check ? a_ : Matrix();
    for (const auto& op : expand(ct, ctx_, field_)) {
      apply_congruence_in_place(a_, op);
      apply_congruence_in_place(b_, op);
      apply_row_op(t_, op);
    }
    if (check) {
      ensure(a_ == before, "coupled transform changed A");
      ensure(b_.is_skew_symmetric(), "coupled transform broke skew-symmetry");
    }
  }

  /// Congruence by an explicit matrix that must preserve A.
  void apply_matrix(const Matrix& s) {
    Matrix na = congruence_unchecked(a_, s);
    ensure(na == a_, "block transform changed A");
    b_ = congruence_unchecked(b_, s);
    t_ = s * t_;
  }

 private:
  Matrix a_;
  Matrix b_;
  Matrix t_;
  StripContext ctx_;
  FieldSpec field_;
};

struct FeyResult {
  Matrix t;
  Matrix a;
  Matrix b;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> remaining;
};

Matrix lower_strict(const Matrix& m) {
  Matrix l(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < i && j < m.cols(); ++j) l(i, j) = m(i, j);
  }
  return l;
}

Matrix slice(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  return m.submatrix(rows, cols);
}

std::vector<std::size_t> iota(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> v(end - begin);
  std::iota(v.begin(), v.end(), begin);
  return v;
}

FeyResult reduce_fey(const Matrix& a0, const Matrix& b0, const StripContext& ctx);

/// Step 4: the subpair on V + F is reduced on its own, then the transform is lifted
/// to the whole level so that A, the coupling B[G, H] = I, and the zero pattern
/// around G and H all survive.
void recurse_and_lift(Level& lv, const std::vector<std::size_t>& v1, const std::vector<std::size_t>& v2,
                      const std::vector<std::size_t>& f, const std::vector<std::size_t>& g,
                      const std::vector<std::size_t>& h, FeyResult& out) {
  const FieldSpec& field = lv.field();
  const std::size_t n = lv.a().rows();
  const std::size_t ka = v1.size();
  const std::size_t m = f.size();

  std::vector<std::size_t> u = v1;
  u.insert(u.end(), v2.begin(), v2.end());
  u.insert(u.end(), f.begin(), f.end());
  const std::size_t nu = u.size();

  StripContext local = StripContext::canonical(ka, nu);
  Matrix a_sub = lv.a().principal(u);
  Matrix b_sub = lv.b().principal(u);
  FeyResult sub = reduce_fey(a_sub, b_sub, local);
  const Matrix& tp = sub.t;

  const auto lv_idx = iota(0, 2 * ka);
  const auto lf_idx = iota(2 * ka, nu);
  ensure(slice(tp, lf_idx, lv_idx).is_zero(), "lift: subtransform mixes strip 3 into strips 1-2");

  Matrix p_blk = slice(tp, lv_idx, lv_idx);
  Matrix q_blk = slice(tp, lv_idx, lf_idx);
  Matrix r_blk = slice(tp, lf_idx, lf_idx);
  Matrix a_vv = a_sub.principal(lv_idx);

  Matrix mm = inverse(r_blk).transpose();
  Matrix x = mm * q_blk.transpose() * inverse(p_blk).transpose() * inverse(a_vv);
  x = -field.one() * x;
  Matrix z = x * a_vv * x.transpose();
  Matrix y = lower_strict(z) * r_blk;

  Matrix gu(field, m, nu);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < 2 * ka; ++c) gu(i, c) = x(i, c);
    for (std::size_t c = 0; c < m; ++c) gu(i, 2 * ka + c) = y(i, c);
  }
  Matrix alpha = tp * b_sub * gu.transpose() * r_blk;
  Matrix z2 = gu * b_sub * gu.transpose();
  Matrix gamma = lower_strict(z2) * r_blk;

  Matrix s = Matrix::identity(field, n);
  auto clear_row = [&](std::size_t row) {
    for (std::size_t c = 0; c < n; ++c) s(row, c) = field.zero();
  };
  for (std::size_t r = 0; r < nu; ++r) {
    clear_row(u[r]);
    for (std::size_t c = 0; c < nu; ++c) s(u[r], u[c]) = tp(r, c);
    for (std::size_t j = 0; j < m; ++j) s(u[r], h[j]) = alpha(r, j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    clear_row(g[i]);
    for (std::size_t c = 0; c < nu; ++c) s(g[i], u[c]) = gu(i, c);
    for (std::size_t j = 0; j < m; ++j) {
      s(g[i], g[j]) = mm(i, j);
      s(g[i], h[j]) = gamma(i, j);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    clear_row(h[i]);
    for (std::size_t j = 0; j < m; ++j) s(h[i], h[j]) = r_blk(i, j);
  }
  lv.apply_matrix(s);
  if (debug_asserts_enabled()) {
    ensure(lv.b().principal(u) == sub.b, "lift: subpair image differs from the recursive result");
  }

  for (const auto& blk : sub.blocks) {
    std::vector<std::size_t> mapped;
    for (std::size_t li : blk) {
      mapped.push_back(u[li]);
      if (li >= 2 * ka) {
        mapped.push_back(g[li - 2 * ka]);
        mapped.push_back(h[li - 2 * ka]);
      }
    }
    std::sort(mapped.begin(), mapped.end());
    out.blocks.push_back(std::move(mapped));
  }
  for (std::size_t li : sub.remaining) {
    ensure(li < 2 * ka, "lift: strip-3 index left in the nonsingular part");
    out.remaining.push_back(u[li]);
  }
}

FeyResult reduce_fey(const Matrix& a0, const Matrix& b0, const StripContext& ctx) {
  using CT = CoupledTransform;
  Level lv(a0, b0, ctx);
  const std::size_t n = a0.rows();
  const std::size_t k = ctx.first.size();
  const auto& s1 = ctx.first;
  const auto& s2 = ctx.second;
  const auto& s3 = ctx.third;
  FeyResult out;
  std::vector<bool> pair_active(k, true);
  std::vector<bool> third_active(s3.size(), true);

  // Clears column `col` everywhere except at the row `keep`, where B(keep, col) = 1 and
  // row `col` of B is -e_keep. Used with strip-3 columns only.
  auto clean_through = [&](std::size_t col_pos, std::size_t keep) {
    std::size_t col = s3[col_pos];
    for (std::size_t x = 0; x < n; ++x) {
      if (x == col || x == keep) continue;
      FieldElement v = lv.B(x, keep);
      if (!v.is_zero()) lv.apply(CT::add_three(col_pos, x, v));
    }
  };

  // Step 1: split off K1 summands from B33.
  {
    Matrix b33 = lv.b().principal(s3);
    if (!b33.is_zero()) {
      SkewCanonResult sc = skew_canonicalize(b33);
      lv.apply_matrix(embed(sc.witness.s, s3, n));
      const std::size_t r = sc.half_rank;
      for (std::size_t mi = 0; mi < r; ++mi) {
        std::size_t p = s3[mi];
        std::size_t q = s3[r + mi];
        for (std::size_t x = 0; x < n; ++x) {
          if (x == p || x == q) continue;
          FieldElement c = lv.B(x, p);
          if (!c.is_zero()) lv.apply(CT::add_three(r + mi, x, c));
          FieldElement d = lv.B(x, q);
          if (!d.is_zero()) lv.apply(CT::add_three(mi, x, -d));
        }
        out.blocks.push_back({std::min(p, q), std::max(p, q)});
        third_active[mi] = third_active[r + mi] = false;
      }
    }
  }

  // Step 2: dependent strip-3 columns give L1 summands.
  {
    std::vector<std::size_t> h3;
    for (std::size_t pos = 0; pos < s3.size(); ++pos) {
      if (third_active[pos]) h3.push_back(pos);
    }
    if (!h3.empty()) {
      std::vector<std::size_t> rows;
      for (std::size_t t = 0; t < k; ++t) {
        rows.push_back(s1[t]);
        rows.push_back(s2[t]);
      }
      std::vector<std::size_t> cols;
      for (std::size_t pos : h3) cols.push_back(s3[pos]);
      Echelon ech = row_echelon(lv.b().submatrix(rows, cols));
      std::vector<bool> is_pivot(h3.size(), false);
      for (std::size_t pc : ech.pivots) is_pivot[pc] = true;
      for (std::size_t jj = 0; jj < h3.size(); ++jj) {
        if (is_pivot[jj]) continue;
        for (std::size_t kk = 0; kk < ech.pivots.size(); ++kk) {
          const FieldElement& coef = ech.rref(kk, jj);
          if (!coef.is_zero()) lv.apply(CT::strip_three(AddRow{h3[jj], h3[ech.pivots[kk]], -coef}));
        }
        out.blocks.push_back({s3[h3[jj]]});
        third_active[h3[jj]] = false;
      }
    }
  }

  // Step 3: process strip-3 columns from the last one.
  struct Triple {
    std::size_t pair_pos;
    std::size_t third_pos;
  };
  std::vector<Triple> triples;
  while (true) {
    std::size_t cp = s3.size();
    for (std::size_t pos = s3.size(); pos-- > 0;) {
      if (third_active[pos]) {
        cp = pos;
        break;
      }
    }
    if (cp == s3.size()) break;
    const std::size_t c = s3[cp];

    if (debug_asserts_enabled()) {
      for (const auto& tr : triples) {
        ensure(lv.B(s1[tr.pair_pos], c).is_zero() && lv.B(s2[tr.pair_pos], c).is_zero(),
               "step 3: processed rows meet an active column");
      }
    }

    auto strip1_nonzero = [&](std::size_t t) { return pair_active[t] && !lv.B(s1[t], c).is_zero(); };
    bool any1 = false;
    for (std::size_t t = 0; t < k; ++t) any1 = any1 || strip1_nonzero(t);
    if (!any1) {
      std::size_t t0 = k;
      for (std::size_t t = 0; t < k; ++t) {
        if (pair_active[t] && !lv.B(s2[t], c).is_zero()) {
          t0 = t;
          break;
        }
      }
      ensure(t0 < k, "step 3: strip-3 column of B vanished");
      lv.apply(CT::swap_pair(t0));
    }

    std::size_t ts = k;
    for (std::size_t t = k; t-- > 0;) {
      if (strip1_nonzero(t)) {
        ts = t;
        break;
      }
    }
    ensure(ts < k, "step 3: no strip-1 pivot");
    const std::size_t i1 = s1[ts];
    const std::size_t i2 = s2[ts];
    if (!lv.B(i1, c).is_one()) lv.apply(CT::strip_one(ScaleRow{ts, lv.B(i1, c).inv()}));
    for (std::size_t u = 0; u < k; ++u) {
      if (u != ts && strip1_nonzero(u)) lv.apply(CT::strip_one(AddRow{u, ts, -lv.B(s1[u], c)}));
    }
    for (std::size_t u = 0; u < k; ++u) {
      if (!pair_active[u]) continue;
      FieldElement e = lv.B(s2[u], c);
      if (!e.is_zero()) lv.apply(CT::add_one_to_two(ts, u, -e));
    }
    clean_through(cp, i1);

    std::size_t cq = s3.size();
    for (std::size_t pos = 0; pos < s3.size(); ++pos) {
      if (pos != cp && third_active[pos] && !lv.B(i2, s3[pos]).is_zero()) {
        cq = pos;
        break;
      }
    }
    if (cq == s3.size()) {
      // Case (b): keep (i1, i2, c) for the recursion of step 4.
      triples.push_back({ts, cp});
      pair_active[ts] = false;
      third_active[cp] = false;
      continue;
    }

    // Case (a): {i1, i2, c, c2} is a K2 summand.
    const std::size_t c2 = s3[cq];
    if (!lv.B(i2, c2).is_one()) lv.apply(CT::strip_three(ScaleRow{cq, lv.B(i2, c2).inv()}));
    for (std::size_t pos = 0; pos < s3.size(); ++pos) {
      if (pos == cp || pos == cq || !third_active[pos]) continue;
      FieldElement e = lv.B(i2, s3[pos]);
      if (!e.is_zero()) lv.apply(CT::strip_three(AddRow{pos, cq, -e}));
    }
    for (std::size_t u = 0; u < k; ++u) {
      if (u == ts || !pair_active[u]) continue;
      FieldElement e = lv.B(s1[u], c2);
      if (!e.is_zero()) lv.apply(CT::add_two_to_one(ts, u, -e));
    }
    for (std::size_t u = 0; u < k; ++u) {
      if (u == ts || !pair_active[u]) continue;
      FieldElement e = lv.B(s2[u], c2);
      // row u2 -= e row i2 is the strip-2 half of row i1 += e row u1
      if (!e.is_zero()) lv.apply(CT::strip_one(AddRow{ts, u, e}));
    }
    if (!lv.B(i1, c2).is_zero()) lv.apply(CT::add_two_to_one(ts, ts, -lv.B(i1, c2)));
    clean_through(cp, i1);
    clean_through(cq, i2);
    std::vector<std::size_t> blk{i1, i2, c, c2};
    std::sort(blk.begin(), blk.end());
    out.blocks.push_back(std::move(blk));
    pair_active[ts] = false;
    third_active[cp] = third_active[cq] = false;
  }

  std::vector<std::size_t> v1;
  std::vector<std::size_t> v2;
  for (std::size_t t = 0; t < k; ++t) {
    if (pair_active[t]) {
      v1.push_back(s1[t]);
      v2.push_back(s2[t]);
    }
  }
  if (triples.empty()) {
    out.remaining = v1;
    out.remaining.insert(out.remaining.end(), v2.begin(), v2.end());
  } else {
    std::sort(triples.begin(), triples.end(), [](const Triple& x, const Triple& y) { return x.pair_pos < y.pair_pos; });
    std::vector<std::size_t> f;
    std::vector<std::size_t> g;
    std::vector<std::size_t> h;
    for (const auto& tr : triples) {
      f.push_back(s2[tr.pair_pos]);
      g.push_back(s1[tr.pair_pos]);
      h.push_back(s3[tr.third_pos]);
    }
    recurse_and_lift(lv, v1, v2, f, g, h, out);
  }
  std::sort(out.remaining.begin(), out.remaining.end());
  out.t = lv.t();
  out.a = lv.a();
  out.b = lv.b();
  return out;
}

/// A summand found by the reduction, read off from its +-1 chain.
struct Identified {
  CanonicalBlock block;
  std::vector<std::size_t> order;     ///< indices in canonical order
  std::vector<bool> negate;           ///< per entry of `order`
};

Identified identify_chain(const Matrix& a, const Matrix& b, const std::vector<std::size_t>& idx) {
  const std::size_t sz = idx.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> a_nb(sz, none);
  std::vector<std::size_t> b_nb(sz, none);
  auto unit = [](const FieldElement& v) { return v.is_one() || (-v).is_one(); };
  for (std::size_t r = 0; r < sz; ++r) {
    for (std::size_t c = 0; c < sz; ++c) {
      const FieldElement& va = a(idx[r], idx[c]);
      const FieldElement& vb = b(idx[r], idx[c]);
      if (!va.is_zero()) {
        ensure(unit(va) && a_nb[r] == none, "summand is not a +-1 chain (A)");
        a_nb[r] = c;
      }
      if (!vb.is_zero()) {
        ensure(unit(vb) && b_nb[r] == none, "summand is not a +-1 chain (B)");
        b_nb[r] = c;
      }
    }
  }

  Identified out;
  std::vector<std::size_t> walk;
  bool first_edge_a = false;
  if (sz % 2 == 1) {
    std::size_t start = none;
    for (std::size_t r = 0; r < sz && start == none; ++r) {
      if (b_nb[r] == none && (sz == 1 || a_nb[r] != none)) start = r;
    }
    ensure(start != none, "odd summand without an A-endpoint");
    walk.push_back(start);
    first_edge_a = true;
    out.block = CanonicalBlock::L((sz + 1) / 2);
  } else {
    std::vector<std::size_t> ends;
    for (std::size_t r = 0; r < sz; ++r) {
      if (a_nb[r] == none) {
        ensure(b_nb[r] != none, "isolated index in an even summand");
        ends.push_back(r);
      }
    }
    ensure(ends.size() == 2, "even summand is not a K chain");
    walk.push_back(idx[ends[0]] < idx[ends[1]] ? ends[0] : ends[1]);
    first_edge_a = false;
    out.block = CanonicalBlock::K(sz / 2);
  }
  bool use_a = first_edge_a;
  while (walk.size() < sz) {
    std::size_t next = use_a ? a_nb[walk.back()] : b_nb[walk.back()];
    ensure(next != none, "summand chain breaks early");
    walk.push_back(next);
    use_a = !use_a;
  }

  // x-type positions: odd positions for L, even positions for K.
  const bool is_l = out.block.kind == CanonicalBlock::Kind::L;
  auto is_x = [&](std::size_t pos) { return (pos % 2 == 1) == is_l; };
  std::vector<bool> neg(sz, false);
  use_a = first_edge_a;
  for (std::size_t pos = 1; pos < sz; ++pos) {
    std::size_t prev = walk[pos - 1];
    std::size_t cur = walk[pos];
    const Matrix& m = use_a ? a : b;
    std::size_t xr = is_x(pos - 1) ? prev : cur;
    std::size_t yr = is_x(pos - 1) ? cur : prev;
    bool s_negative = !m(idx[xr], idx[yr]).is_one();
    neg[pos] = neg[pos - 1] != s_negative;
    use_a = !use_a;
  }

  const std::size_t n = out.block.n;
  std::vector<std::size_t> xs;
  std::vector<std::size_t> ys;
  for (std::size_t pos = 0; pos < sz; ++pos) (is_x(pos) ? xs : ys).push_back(pos);
  ensure(xs.size() == (is_l ? n - 1 : n) && ys.size() == n, "summand chain has the wrong shape");
  for (std::size_t pos : xs) {
    out.order.push_back(idx[walk[pos]]);
    out.negate.push_back(neg[pos]);
  }
  for (std::size_t pos : ys) {
    out.order.push_back(idx[walk[pos]]);
    out.negate.push_back(neg[pos]);
  }
  return out;
}

struct Assembled {
  Matrix pre;   ///< the reducing transform before reordering
  Matrix a;     ///< reduced pair before reordering
  Matrix b;
  std::vector<std::size_t> remaining;
  std::vector<Identified> summands;
};

Assembled assemble(const MatrixPair& p) {
  const std::size_t n = p.size();
  SkewCanonResult sc = skew_canonicalize(p.a());
  Matrix a0 = congruence_unchecked(p.a(), sc.witness.s);
  Matrix b0 = congruence_unchecked(p.b(), sc.witness.s);
  FeyResult fey = reduce_fey(a0, b0, StripContext::canonical(sc.half_rank, n));
  Assembled out{fey.t * sc.witness.s, fey.a, fey.b, fey.remaining, {}};
  for (const auto& blk : fey.blocks) out.summands.push_back(identify_chain(fey.a, fey.b, blk));
  return out;
}

std::vector<std::size_t> final_order(const Assembled& as) {
  std::vector<std::size_t> order = as.remaining;
  for (const auto& s : as.summands) order.insert(order.end(), s.order.begin(), s.order.end());
  return order;
}

}  // namespace

CoupledResult coupled_transform(const MatrixPair& p, const StripContext& ctx, const CoupledTransform& t) {
  if (ctx.size() != p.size()) throw DimensionError("coupled_transform: strip layout does not cover the pair");
  Matrix a = p.a();
  Matrix b = p.b();
  Matrix e = Matrix::identity(p.field(), p.size());
  for (const auto& op : expand(t, ctx, p.field())) {
    apply_congruence_in_place(a, op);
    apply_congruence_in_place(b, op);
    apply_row_op(e, op);
  }
  ensure(a == p.a(), "coupled_transform changed A");
  return {MatrixPair(std::move(a), std::move(b)), ctx, std::move(e)};
}

SemiRegResult semi_regularize(const MatrixPair& p) {
  const FieldSpec& field = p.field();
  const std::size_t n = p.size();
  // Nothing to split off; keep the input as it is.
  if (n == 0 || is_nonsingular(p.a())) return {p, {}, Witness::identity(field, n)};
  Assembled as = assemble(p);
  std::vector<std::size_t> order = final_order(as);
  Matrix w = permutation_matrix(field, order) * as.pre;
  std::size_t pos = as.remaining.size();
  for (const auto& s : as.summands) {
    for (std::size_t r = 0; r < s.order.size(); ++r, ++pos) {
      if (s.negate[r]) apply_row_op(w, ScaleRow{pos, -field.one()});
    }
  }
  MatrixPair out = congruence_unchecked(p, w);

  SemiRegResult res;
  const std::size_t m = as.remaining.size();
  const auto rem_idx = iota(0, m);
  res.remaining = extract_principal(out, rem_idx);
  ensure(is_nonsingular(res.remaining.a()), "semi_regularize: remaining A is singular");
  pos = m;
  for (const auto& s : as.summands) {
    const std::size_t sz = s.order.size();
    auto blk_idx = iota(pos, pos + sz);
    ensure(extract_principal(out, blk_idx) == realize(s.block, field), "semi_regularize: summand is not canonical");
    res.extracted.push_back({s.block, s.order});
    pos += sz;
  }
  if (debug_asserts_enabled()) {
    std::vector<MatrixPair> parts{res.remaining};
    for (const auto& e : res.extracted) parts.push_back(realize(e.block, field));
    ensure(out == direct_sum(parts, field), "semi_regularize: not a direct sum");
  }
  res.witness = Witness{std::move(w)};
  return res;
}

namespace detail {

std::pair<MatrixPair, Witness> chain_form(const MatrixPair& p) {
  const FieldSpec& field = p.field();
  if (p.size() == 0) return {p, Witness::identity(field, 0)};
  Assembled as = assemble(p);
  Matrix w = permutation_matrix(field, final_order(as)) * as.pre;
  MatrixPair out = congruence_unchecked(p, w);
  return {std::move(out), Witness{std::move(w)}};
}

}  // namespace detail

RegularizationResult regularize(const MatrixPair& p) {
  const FieldSpec& field = p.field();
  const std::size_t n = p.size();
  SemiRegResult first = semi_regularize(p);
  const std::size_t m = first.remaining.size();
  SemiRegResult second = semi_regularize(first.remaining.swapped());

  RegularizationResult res;
  res.regular = second.remaining.swapped();
  for (const auto& e : second.extracted) {
    res.second_pass_kinds.push_back(e.block.kind);
    ensure(e.block.kind == CanonicalBlock::Kind::K, "regularize: second pass produced an L block");
    res.singular_summands.push_back(CanonicalBlock::J(e.block.n, field.zero()));
  }
  for (const auto& e : first.extracted) res.singular_summands.push_back(e.block);
  res.t = res.singular_summands.size();

  Matrix lift = Matrix::identity(field, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) lift(i, j) = second.witness.s(i, j);
  }
  res.witness = Witness{lift * first.witness.s};
  ensure(is_nonsingular(res.regular.a()) && is_nonsingular(res.regular.b()), "regularize: regular part is singular");
  if (debug_asserts_enabled()) {
    std::vector<MatrixPair> parts{res.regular};
    for (const auto& b : res.singular_summands) parts.push_back(realize(b, field));
    ensure(congruence_unchecked(p, res.witness.s) == direct_sum(parts, field), "regularize: witness mismatch");
  }
  return res;
}

}  // namespace skewpair
