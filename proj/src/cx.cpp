#include "charp/cx.hpp"

#include <algorithm>

namespace charp {

CochainComplex::CochainComplex(RingPtr ring, int lo_, std::vector<int> ranks_, std::vector<Mat> d_)
    : R(std::move(ring)), lo(lo_), ranks(std::move(ranks_)), d(std::move(d_)) {
  if (d.size() + 1 != ranks.size() && !(ranks.empty() && d.empty()))
    throw Error("complex: need one differential between consecutive degrees");
  validate();
}

Mat CochainComplex::diff(int i) const {
  if (i >= lo && i < hi()) return d[i - lo];
  return Mat(R, rank(i + 1), rank(i));
}

void CochainComplex::validate() const {
  for (size_t k = 0; k < d.size(); ++k) {
    if (d[k].rows != ranks[k + 1] || d[k].cols != ranks[k])
      throw Error("complex: differential " + std::to_string(lo + (int)k) + " has wrong shape");
    if (d[k].R.get() != R.get() && d[k].R->name() != R->name())
      throw Error("complex: ring mismatch");
  }
  for (size_t k = 0; k + 1 < d.size(); ++k)
    if (!(d[k + 1] * d[k]).is_zero())
      throw Error("complex: d^2 != 0 at degree " + std::to_string(lo + (int)k));
}

int CochainComplex::euler_rank() const {
  int s = 0;
  for (int i = lo; i <= hi(); ++i) s += ((i % 2) == 0 ? 1 : -1) * rank(i);
  return s;
}

CochainComplex CochainComplex::concentrated(RingPtr R, int degree, int rank) {
  return CochainComplex(std::move(R), degree, {rank}, {});
}

ComplexMap::ComplexMap(CochainComplex s, CochainComplex t, std::vector<Mat> comps)
    : src(std::move(s)), tgt(std::move(t)), f(std::move(comps)) {
  validate();
}

Mat ComplexMap::at(int i) const {
  int k = i - src.lo;
  if (k >= 0 && k < (int)f.size()) return f[k];
  return Mat(src.R, tgt.rank(i), src.rank(i));
}

void ComplexMap::validate() const {
  if ((int)f.size() != (int)src.ranks.size()) throw Error("complex map: wrong number of components");
  for (int i = src.lo; i <= src.hi(); ++i) {
    Mat fi = at(i);
    if (fi.rows != tgt.rank(i) || fi.cols != src.rank(i))
      throw Error("complex map: component " + std::to_string(i) + " has wrong shape");
  }
  for (int i = std::min(src.lo, tgt.lo) - 1; i <= std::max(src.hi(), tgt.hi()); ++i) {
    Mat lhs = at(i + 1) * src.diff(i);
    Mat rhs = tgt.diff(i) * at(i);
    if (!(lhs == rhs)) throw Error("complex map: not a chain map at degree " + std::to_string(i));
  }
}

ComplexMap ComplexMap::identity(const CochainComplex& C) {
  std::vector<Mat> f;
  for (int i = C.lo; i <= C.hi(); ++i) f.push_back(Mat::identity(C.R, C.rank(i)));
  return ComplexMap(C, C, f);
}

ComplexMap ComplexMap::zero(const CochainComplex& S, const CochainComplex& T) {
  std::vector<Mat> f;
  for (int i = S.lo; i <= S.hi(); ++i) f.push_back(Mat(S.R, T.rank(i), S.rank(i)));
  return ComplexMap(S, T, f);
}

ComplexMap compose(const ComplexMap& g, const ComplexMap& f) {
  std::vector<Mat> c;
  for (int i = f.src.lo; i <= f.src.hi(); ++i) c.push_back(g.at(i) * f.at(i));
  return ComplexMap(f.src, g.tgt, c);
}

bool CohomologySlice::is_cocycle(const std::vector<elt>& v) const {
  for (elt x : matvec(dnext, v))
    if (x) return false;
  return true;
}

bool CohomologySlice::is_coboundary(const std::vector<elt>& v) const {
  if (R->is_field()) {
    std::vector<elt> w = v, tr;
    span->reduce(w, &tr);
    for (elt x : w)
      if (x) return false;
    for (elt x : tr)
      if (x) return false;
    return true;
  }
  std::vector<elt> x;
  return solve_local(*sprev, v, x);
}

bool CohomologySlice::equal(const std::vector<elt>& v, const std::vector<elt>& w) const {
  std::vector<elt> diff(v.size());
  for (size_t k = 0; k < v.size(); ++k) diff[k] = R->sub(v[k], w[k]);
  return is_coboundary(diff);
}

std::vector<elt> CohomologySlice::coords(const std::vector<elt>& v) const {
  if (!R->is_field()) throw Error("class coordinates need a field");
  std::vector<elt> w = v, tr;
  span->reduce(w, &tr);
  for (elt x : w)
    if (x) throw Error("coords: vector is not a cocycle");
  tr.resize(dim());
  return tr;
}

std::vector<elt> CohomologySlice::preimage(const std::vector<elt>& v) const {
  std::vector<elt> x;
  if (R->is_field()) {
    if (!solver) solver = std::make_shared<Solver>(dprev);
    if (!solver->solve(v, x)) throw Error("preimage: not a coboundary");
    return x;
  }
  if (!solve_local(*sprev, v, x)) throw Error("preimage: not a coboundary");
  return x;
}

CohomologySlice cohomology(const CochainComplex& C, int i) {
  if (i < C.lo - 1 || i > C.hi() + 1) throw Error("cohomology: degree " + std::to_string(i) + " out of range");
  CohomologySlice h;
  h.degree = i;
  h.R = C.R;
  h.dprev = C.diff(i - 1);
  h.dnext = C.diff(i);
  const Ring& R = *C.R;
  const int n = C.rank(i);
  h.structure.p = R.p();
  h.structure.e = R.exponent();
  if (R.is_field()) {
    Mat K = kernel(h.dnext);
    Mat B = image(h.dprev);
    h.span = std::make_shared<Span>(C.R, n, K.cols);
    for (int j = 0; j < B.cols; ++j) h.span->insert(B.column(j));
    std::vector<std::vector<elt>> basis;
    for (int j = 0; j < K.cols; ++j) {
      std::vector<elt> tv(K.cols, 0);
      tv[basis.size()] = R.one();
      auto col = K.column(j);
      if (h.span->insert(col, tv)) basis.push_back(col);
    }
    h.structure.free_rank = (int)basis.size();
    h.basis = from_columns(C.R, n, basis);
    return h;
  }
  // local ring: Z / B via two Smith forms
  const int E = R.exponent();
  h.sprev = std::make_shared<Smith>(diagonalize(h.dprev));
  Smith sn = diagonalize(h.dnext);
  const int dl = std::min(h.dnext.rows, h.dnext.cols);
  std::vector<int> J, t;
  for (int j = 0; j < n; ++j) {
    int v = j < dl ? sn.val[j] : E;
    if (v == 0) continue;
    J.push_back(j);
    t.push_back(E - v);  // z_j = p^{t_j} v_j
  }
  const int g = (int)J.size();
  std::vector<std::vector<elt>> rel;
  for (int a = 0; a < g; ++a) {
    if (t[a] == 0) continue;
    std::vector<elt> col(g, 0);
    col[a] = R.pow(R.from_int(R.p()), E - t[a]);
    rel.push_back(col);
  }
  for (int b = 0; b < h.dprev.cols; ++b) {
    auto y = matvec(sn.Vinv, h.dprev.column(b));
    std::vector<elt> col(g, 0);
    for (int a = 0; a < g; ++a) {
      elt w = y[J[a]];
      for (int k = 0; k < t[a]; ++k) w = R.div_p(w);
      col[a] = w;
    }
    rel.push_back(col);
  }
  Mat Rm = from_columns(C.R, g, rel);
  if (Rm.cols == 0) Rm = Mat(C.R, g, 0);
  Smith sr = diagonalize(Rm);
  h.structure = sr.coker;
  std::vector<std::vector<elt>> basis;
  const int rl = std::min(Rm.rows, Rm.cols);
  for (int k = 0; k < g; ++k) {
    int v = k < rl ? sr.val[k] : E;
    if (v == 0) continue;
    std::vector<elt> hv(n, 0);
    for (int a = 0; a < g; ++a) {
      elt c = sr.Uinv(a, k);
      if (!c) continue;
      elt pt = R.pow(R.from_int(R.p()), t[a]);
      for (int r = 0; r < n; ++r) hv[r] = R.add(hv[r], R.mul(R.mul(c, pt), sn.V(r, J[a])));
    }
    basis.push_back(hv);
  }
  h.basis = from_columns(C.R, n, basis);
  return h;
}

std::vector<int> cohomology_dims(const CochainComplex& C) {
  if (!C.R->is_field()) throw Error("cohomology_dims needs a field");
  std::vector<int> rk(C.ranks.size() + 1, 0);
  for (size_t k = 0; k < C.d.size(); ++k) rk[k + 1] = rank(C.d[k]);
  std::vector<int> dims;
  for (size_t k = 0; k < C.ranks.size(); ++k) dims.push_back(C.ranks[k] - rk[k + 1] - rk[k]);
  return dims;
}

std::vector<ModuleStructure> cohomology_structures(const CochainComplex& C) {
  std::vector<ModuleStructure> out;
  for (int i = C.lo; i <= C.hi(); ++i) out.push_back(cohomology(C, i).structure);
  return out;
}

CochainComplex shift(const CochainComplex& C, int s) {
  std::vector<Mat> d = C.d;
  if (s % 2) {
    elt m1 = C.R->neg(C.R->one());
    for (auto& m : d) m = scale(m, m1);
  }
  return CochainComplex(C.R, C.lo + s, C.ranks, d);
}

CochainComplex cone(const ComplexMap& f) {
  const auto& C = f.src;
  const auto& D = f.tgt;
  const RingPtr& R = C.R;
  int lo = std::min(C.lo - 1, D.lo), hi = std::max(C.hi() - 1, D.hi());
  std::vector<int> ranks;
  std::vector<Mat> d;
  elt m1 = R->neg(R->one());
  for (int i = lo; i <= hi; ++i) ranks.push_back(C.rank(i + 1) + D.rank(i));
  for (int i = lo; i < hi; ++i) {
    Mat top = hstack(scale(C.diff(i + 1), m1), Mat(R, C.rank(i + 2), D.rank(i)));
    Mat bot = hstack(f.at(i + 1), D.diff(i));
    d.push_back(vstack(top, bot));
  }
  return CochainComplex(R, lo, ranks, d);
}

CochainComplex tensor(const CochainComplex& C, const CochainComplex& D) {
  const RingPtr& R = C.R;
  int lo = C.lo + D.lo, hi = C.hi() + D.hi();
  std::vector<int> ranks;
  auto offset = [&](int n, int i) {
    int o = 0;
    for (int a = C.lo; a < i; ++a) o += C.rank(a) * D.rank(n - a);
    return o;
  };
  for (int n = lo; n <= hi; ++n) ranks.push_back(offset(n, C.hi() + 1));
  std::vector<Mat> d;
  for (int n = lo; n < hi; ++n) {
    Mat m(R, ranks[n + 1 - lo], ranks[n - lo]);
    for (int i = C.lo; i <= C.hi(); ++i) {
      int j = n - i;
      if (D.rank(j) == 0 || C.rank(i) == 0) continue;
      int src = offset(n, i);
      Mat a = kron(C.diff(i), Mat::identity(R, D.rank(j)));
      int t1 = offset(n + 1, i + 1);
      for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c) m(t1 + r, src + c) = R->add(m(t1 + r, src + c), a(r, c));
      Mat b = kron(Mat::identity(R, C.rank(i)), D.diff(j));
      if (i % 2) b = scale(b, R->neg(R->one()));
      int t2 = offset(n + 1, i);
      for (int r = 0; r < b.rows; ++r)
        for (int c = 0; c < b.cols; ++c) m(t2 + r, src + c) = R->add(m(t2 + r, src + c), b(r, c));
    }
    d.push_back(m);
  }
  return CochainComplex(R, lo, ranks, d);
}

CochainComplex brutal_le(const CochainComplex& C, int n) {
  if (n < C.lo) return CochainComplex(C.R, C.lo, {0}, {});
  int hi = std::min(n, C.hi());
  std::vector<int> ranks(C.ranks.begin(), C.ranks.begin() + (hi - C.lo + 1));
  std::vector<Mat> d(C.d.begin(), C.d.begin() + (hi - C.lo));
  return CochainComplex(C.R, C.lo, ranks, d);
}

CochainComplex brutal_ge(const CochainComplex& C, int n) {
  if (n > C.hi()) return CochainComplex(C.R, n, {0}, {});
  int lo = std::max(n, C.lo);
  std::vector<int> ranks(C.ranks.begin() + (lo - C.lo), C.ranks.end());
  std::vector<Mat> d(C.d.begin() + (lo - C.lo), C.d.end());
  return CochainComplex(C.R, lo, ranks, d);
}

Truncation truncate_le(const CochainComplex& C, int n) {
  const RingPtr& R = C.R;
  if (n >= C.hi()) return {C, ComplexMap::identity(C)};
  if (n < C.lo) {
    CochainComplex Z(R, C.lo, {0}, {});
    return {Z, ComplexMap::zero(Z, C)};
  }
  Mat K;
  Mat coordsOf;  // maps C^n vectors in the kernel to kernel coordinates
  if (R->is_field()) {
    K = kernel(C.diff(n));
  } else {
    Smith s = diagonalize(C.diff(n));
    int dl = std::min(s.D.rows, s.D.cols);
    std::vector<int> cols, all(C.rank(n));
    for (int j = 0; j < C.rank(n); ++j) {
      all[j] = j;
      int v = j < dl ? s.val[j] : R->exponent();
      if (v != 0 && v != R->exponent()) throw Error("truncate_le: kernel is not free over " + R->name());
      if (v == R->exponent()) cols.push_back(j);
    }
    K = submatrix(s.V, all, cols);
    coordsOf = submatrix(s.Vinv, cols, all);
  }
  std::vector<int> ranks;
  std::vector<Mat> d, f;
  for (int i = C.lo; i < n; ++i) ranks.push_back(C.rank(i));
  ranks.push_back(K.cols);
  for (int i = C.lo; i < n - 1; ++i) d.push_back(C.diff(i));
  if (n > C.lo) {
    Mat dn = C.diff(n - 1);
    Mat m(R, K.cols, dn.cols);
    if (R->is_field()) {
      Solver sv(K);
      for (int j = 0; j < dn.cols; ++j) {
        std::vector<elt> x;
        if (!sv.solve(dn.column(j), x)) throw Error("truncate_le: boundary outside kernel");
        m.set_column(j, x);
      }
    } else {
      m = coordsOf * dn;
    }
    d.push_back(m);
  }
  CochainComplex T(R, C.lo, ranks, d);
  for (int i = C.lo; i < n; ++i) f.push_back(Mat::identity(R, C.rank(i)));
  f.push_back(K);
  return {T, ComplexMap(T, C, f)};
}

Truncation truncate_ge(const CochainComplex& C, int n) {
  const RingPtr& R = C.R;
  if (!R->is_field()) throw Error("truncate_ge needs a field");
  if (n <= C.lo) return {C, ComplexMap::identity(C)};
  if (n > C.hi()) {
    CochainComplex Z(R, n, {0}, {});
    return {Z, ComplexMap::zero(C, Z)};
  }
  const int m = C.rank(n);
  Mat B = image(C.diff(n - 1));
  Span sp(R, m, m);
  for (int j = 0; j < B.cols; ++j) sp.insert(B.column(j));
  std::vector<int> Q;
  for (int k = 0; k < m; ++k) {
    std::vector<elt> e(m, 0), tv(m, 0);
    e[k] = R->one();
    tv[Q.size()] = R->one();
    if (sp.insert(e, tv)) Q.push_back(k);
  }
  const int q = (int)Q.size();
  Mat P(R, q, m);
  for (int k = 0; k < m; ++k) {
    std::vector<elt> e(m, 0), tr;
    e[k] = R->one();
    sp.reduce(e, &tr);
    for (int r = 0; r < q; ++r) P(r, k) = tr[r];
  }
  std::vector<int> rows(m), cols(Q);
  for (int i = 0; i < m; ++i) rows[i] = i;
  Mat S = submatrix(Mat::identity(R, m), rows, cols);
  std::vector<int> ranks{q};
  std::vector<Mat> d;
  for (int i = n + 1; i <= C.hi(); ++i) ranks.push_back(C.rank(i));
  if (n < C.hi()) d.push_back(C.diff(n) * S);
  for (int i = n + 1; i < C.hi(); ++i) d.push_back(C.diff(i));
  CochainComplex T(R, n, ranks, d);
  std::vector<Mat> f;
  for (int i = C.lo; i <= C.hi(); ++i) {
    if (i < n)
      f.push_back(Mat(R, 0, C.rank(i)));
    else if (i == n)
      f.push_back(P);
    else
      f.push_back(Mat::identity(R, C.rank(i)));
  }
  return {T, ComplexMap(C, T, f)};
}

Mat induced_on_H(const ComplexMap& f, const CohomologySlice& hs, const CohomologySlice& ht) {
  Mat fi = f.at(hs.degree);
  Mat out(f.src.R, ht.dim(), hs.dim());
  for (int k = 0; k < hs.dim(); ++k) {
    auto c = ht.coords(matvec(fi, hs.basis.column(k)));
    for (int r = 0; r < ht.dim(); ++r) out(r, k) = c[r];
  }
  return out;
}

Mat induced_on_H(const ComplexMap& f, int i) {
  return induced_on_H(f, cohomology(f.src, i), cohomology(f.tgt, i));
}

std::vector<elt> connecting_cocycle(const SES& s, int i, const std::vector<elt>& x) {
  auto y = s.mid_d(i, s.lift(i, x));
  if (s.in_sub && !s.in_sub(i + 1, y)) throw Error("connecting: sequence is not exact");
  return s.retract(i + 1, y);
}

Mat connecting(const SES& s, const CohomologySlice& hq, const CohomologySlice& hs) {
  Mat out(hs.R, hs.dim(), hq.dim());
  for (int k = 0; k < hq.dim(); ++k) {
    auto y = connecting_cocycle(s, hq.degree, hq.basis.column(k));
    if (!hs.is_cocycle(y)) throw Error("connecting: image is not a cocycle");
    auto c = hs.coords(y);
    for (int r = 0; r < hs.dim(); ++r) out(r, k) = c[r];
  }
  return out;
}

Mat connecting(const SES& s, int i) {
  return connecting(s, cohomology(s.quot, i), cohomology(s.sub, i + 1));
}

SES split_ses(const ComplexMap& incl, const ComplexMap& proj) {
  const auto& B = incl.tgt;
  if (!B.R->is_field()) throw Error("split_ses needs a field");
  std::vector<std::shared_ptr<Solver>> sl, sr;
  int lo = B.lo, hi = B.hi();
  for (int i = lo; i <= hi; ++i) {
    Mat a = incl.at(i), b = proj.at(i);
    if (rank(a) != a.cols) throw Error("split_ses: inclusion not injective in degree " + std::to_string(i));
    if (rank(b) != b.rows) throw Error("split_ses: projection not surjective in degree " + std::to_string(i));
    if (!(b * a).is_zero() || a.cols + b.rows != B.rank(i))
      throw Error("split_ses: not exact in degree " + std::to_string(i));
    sl.push_back(std::make_shared<Solver>(b));
    sr.push_back(std::make_shared<Solver>(a));
  }
  SES s;
  s.sub = incl.src;
  s.quot = proj.tgt;
  s.lift = [sl, lo](int i, const std::vector<elt>& x) {
    std::vector<elt> y;
    sl[i - lo]->solve(x, y);
    return y;
  };
  s.mid_d = [B](int i, const std::vector<elt>& x) { return matvec(B.diff(i), x); };
  s.retract = [sr, lo](int i, const std::vector<elt>& x) {
    std::vector<elt> y;
    if (!sr[i - lo]->solve(x, y)) throw Error("connecting: element not in the subcomplex");
    return y;
  };
  return s;
}

CochainComplex reduce_mod_p(const CochainComplex& C) {
  std::vector<Mat> d;
  for (const auto& m : C.d) d.push_back(reduce_mod_p(m));
  return CochainComplex(C.R->residue_field(), C.lo, C.ranks, d);
}

SES bockstein_ses(const CochainComplex& C) {
  const RingPtr R = C.R;
  if (R->exponent() != 2) throw Error("bockstein_ses: need p^2 = 0 and p != 0");
  SES s;
  s.sub = reduce_mod_p(C);
  s.quot = s.sub;
  s.lift = [R](int, const std::vector<elt>& x) {
    std::vector<elt> y(x.size());
    for (size_t k = 0; k < x.size(); ++k) y[k] = R->lift_residue(x[k]);
    return y;
  };
  s.mid_d = [C](int i, const std::vector<elt>& x) { return matvec(C.diff(i), x); };
  s.retract = [R](int, const std::vector<elt>& x) {
    std::vector<elt> y(x.size());
    for (size_t k = 0; k < x.size(); ++k) {
      if (R->valuation(x[k]) < 1) throw Error("bockstein: element not divisible by p");
      y[k] = R->reduce_mod_p(R->div_p(x[k]));
    }
    return y;
  };
  return s;
}

Mat random_invertible(const RingPtr& R, int n, std::mt19937_64& rng) {
  for (;;) {
    Mat m = Mat::random(R, n, n, rng);
    if (rank(m) == n) return m;
  }
}

CochainComplex random_complex(const RingPtr& R, int lo, const std::vector<int>& hdims, int max_pairs,
                              std::mt19937_64& rng) {
  const int len = (int)hdims.size();
  std::vector<int> pairs(len, 0);  // acyclic pair starting at degree lo+k
  for (int k = 0; k + 1 < len; ++k) pairs[k] = (int)(rng() % (max_pairs + 1));
  std::vector<int> ranks(len);
  for (int k = 0; k < len; ++k) ranks[k] = hdims[k] + pairs[k] + (k ? pairs[k - 1] : 0);
  // basis in degree k: [cohomology | pair targets from k-1 | pair sources to k+1]
  std::vector<Mat> d;
  for (int k = 0; k + 1 < len; ++k) {
    Mat m(R, ranks[k + 1], ranks[k]);
    int src0 = hdims[k] + (k ? pairs[k - 1] : 0);
    int tgt0 = hdims[k + 1];
    for (int j = 0; j < pairs[k]; ++j) m(tgt0 + j, src0 + j) = R->one();
    d.push_back(m);
  }
  std::vector<Mat> g, gi;
  for (int k = 0; k < len; ++k) {
    g.push_back(random_invertible(R, ranks[k], rng));
    gi.push_back(inverse(g.back()));
  }
  for (int k = 0; k + 1 < len; ++k) d[k] = g[k + 1] * d[k] * gi[k];
  return CochainComplex(R, lo, ranks, d);
}

}  // namespace charp
