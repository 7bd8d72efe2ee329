#include "charp/dk.hpp"

#include <algorithm>
#include <bit>

namespace charp {

std::string PolyFunctor::name() const {
  const char* k = kind == FunctorKind::Sym ? "Sym" : kind == FunctorKind::Div ? "Div" : "Ext";
  return std::string(k) + "^" + std::to_string(n);
}

namespace {

void gen_tuples(int rank, int n, bool strict, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if ((int)cur.size() == n) {
    out.push_back(cur);
    return;
  }
  int start = cur.empty() ? 0 : cur.back() + (strict ? 1 : 0);
  for (int v = start; v < rank; ++v) {
    cur.push_back(v);
    gen_tuples(rank, n, strict, cur, out);
    cur.pop_back();
  }
}

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Mat to_dense(const RingPtr& R, int rows, const SparseMat& s) {
  Mat m(R, rows, (int)s.size());
  for (int c = 0; c < (int)s.size(); ++c)
    for (auto [r, v] : s[c]) m(r, c) = R->add(m(r, c), v);
  return m;
}

// sum of products over all choices of one term per column, output tuple kept nondecreasing
void div_dfs(const Ring& R, const SparseMat& f, const std::vector<int>& t, size_t k, std::vector<int>& cur,
             elt coef, std::map<std::vector<int>, elt>& acc) {
  if (k == t.size()) {
    auto& slot = acc[cur];
    slot = R.add(slot, coef);
    return;
  }
  for (auto [r, v] : f[t[k]]) {
    if (!cur.empty() && r < cur.back()) continue;
    cur.push_back(r);
    div_dfs(R, f, t, k + 1, cur, R.mul(coef, v), acc);
    cur.pop_back();
  }
}

void ext_dfs(const Ring& R, const SparseMat& f, const std::vector<int>& t, size_t k, std::vector<int>& cur,
             elt coef, std::map<std::vector<int>, elt>& acc) {
  if (k == t.size()) {
    std::vector<int> s = cur;
    int inv = 0;
    for (size_t a = 0; a < s.size(); ++a)
      for (size_t b = a + 1; b < s.size(); ++b)
        if (s[a] > s[b]) ++inv;
    std::sort(s.begin(), s.end());
    auto& slot = acc[s];
    slot = R.add(slot, inv % 2 ? R.neg(coef) : coef);
    return;
  }
  for (auto [r, v] : f[t[k]]) {
    if (std::find(cur.begin(), cur.end(), r) != cur.end()) continue;
    cur.push_back(r);
    ext_dfs(R, f, t, k + 1, cur, R.mul(coef, v), acc);
    cur.pop_back();
  }
}

elt factorial_ratio(const Ring& R, const std::vector<int>& t, bool stab) {
  // stab: product of multiplicity factorials; else n! / that
  long long s = 1, n = 1;
  for (size_t i = 0, run = 0; i < t.size(); ++i) {
    run = (i > 0 && t[i] == t[i - 1]) ? run + 1 : 1;
    s *= (long long)run;
    n *= (long long)(i + 1);
  }
  return R.from_int(stab ? s : n / s);
}

bool is_monomial_matrix(const Mat& m) {
  std::vector<int> rowcnt(m.rows, 0);
  for (int c = 0; c < m.cols; ++c) {
    int cnt = 0;
    for (int r = 0; r < m.rows; ++r)
      if (m(r, c)) {
        if (!m.R->is_unit(m(r, c))) return false;
        ++cnt;
        if (++rowcnt[r] > 1) return false;
      }
    if (cnt > 1) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> functor_basis(PolyFunctor F, int rank) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  gen_tuples(rank, F.n, F.kind == FunctorKind::Ext, cur, out);
  return out;
}

int functor_rank(PolyFunctor F, int rank) {
  return (int)(F.kind == FunctorKind::Ext ? binom(rank, F.n) : binom(rank + F.n - 1, F.n));
}

SparseMat to_sparse(const Mat& m) {
  SparseMat s(m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (m(r, c)) s[c].push_back({r, m(r, c)});
  return s;
}

std::map<std::vector<int>, elt> functor_image(PolyFunctor F, const Ring& R, const SparseMat& f,
                                              const std::vector<int>& tuple) {
  std::map<std::vector<int>, elt> acc;
  std::vector<int> cur;
  if (F.kind == FunctorKind::Sym) {
    acc[{}] = R.one();
    for (int src : tuple) {
      std::map<std::vector<int>, elt> next;
      for (auto& [mono, c] : acc)
        for (auto [r, v] : f[src]) {
          auto m2 = mono;
          m2.insert(std::upper_bound(m2.begin(), m2.end(), r), r);
          auto& slot = next[m2];
          slot = R.add(slot, R.mul(c, v));
        }
      acc.swap(next);
    }
  } else if (F.kind == FunctorKind::Div) {
    std::vector<int> t = tuple;
    std::sort(t.begin(), t.end());
    do {
      div_dfs(R, f, t, 0, cur, R.one(), acc);
    } while (std::next_permutation(t.begin(), t.end()));
  } else {
    ext_dfs(R, f, tuple, 0, cur, R.one(), acc);
  }
  for (auto it = acc.begin(); it != acc.end();) it = it->second ? std::next(it) : acc.erase(it);
  return acc;
}

Mat apply_functor(PolyFunctor F, const Mat& f) {
  auto rb = functor_basis(F, f.rows), cb = functor_basis(F, f.cols);
  std::map<std::vector<int>, int> ri;
  for (int i = 0; i < (int)rb.size(); ++i) ri[rb[i]] = i;
  auto s = to_sparse(f);
  Mat out(f.R, (int)rb.size(), (int)cb.size());
  for (int c = 0; c < (int)cb.size(); ++c)
    for (auto& [t, v] : functor_image(F, *f.R, s, cb[c])) out(ri.at(t), c) = v;
  return out;
}

void CosimplicialModule::validate() const {
  auto fail = [](const std::string& what) { throw Error("cosimplicial identity fails: " + what); };
  for (int n = 1; n + 1 <= L; ++n)
    for (int j = 1; j <= n + 1; ++j)
      for (int i = 0; i < j; ++i)
        if (!(coface[n + 1][j] * coface[n][i] == coface[n + 1][i] * coface[n][j - 1]))
          fail("d^" + std::to_string(j) + " d^" + std::to_string(i) + " at level " + std::to_string(n));
  for (int n = 0; n + 2 <= L; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (!(codeg[n][j] * codeg[n + 1][i] == codeg[n][i] * codeg[n + 1][j + 1]))
          fail("s^" + std::to_string(j) + " s^" + std::to_string(i) + " at level " + std::to_string(n));
  for (int n = 0; n + 1 <= L; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        Mat lhs = codeg[n][j] * coface[n + 1][i];
        Mat rhs;
        if (i == j || i == j + 1)
          rhs = Mat::identity(R, ranks[n]);
        else if (i < j)
          rhs = coface[n][i] * codeg[n - 1][j - 1];
        else
          rhs = coface[n][i - 1] * codeg[n - 1][j];
        if (!(lhs == rhs)) fail("s^" + std::to_string(j) + " d^" + std::to_string(i) + " at level " + std::to_string(n));
      }
}

DKLayout::DKLayout(const CochainComplex& C_, int L_) : C(C_), L(L_) {
  if (C.lo < 0) throw Error("Dold-Kan needs a complex in nonnegative degrees");
  if (L < 0 || L > 20) throw Error("Dold-Kan level out of range: " + std::to_string(L));
  lev.resize(L + 1);
  index.resize(L + 1);
  rank.assign(L + 1, 0);
  jumps.resize(L + 1);
  for (int n = 0; n <= L; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (C.rank(k) == 0) continue;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        index[n][mask] = (int)lev[n].size();
        lev[n].push_back({mask, k, rank[n]});
        rank[n] += C.rank(k);
        for (int c = 0; c < C.rank(k); ++c) jumps[n].push_back(mask);
      }
    }
  }
}

SparseMat DKLayout::structure(int n, int m, const std::vector<int>& theta) const {
  SparseMat cols(rank[n]);
  std::vector<int> sv(m + 1), tau(n + 1);
  for (auto& s : lev[m]) {
    sv[0] = 0;
    for (int t = 0; t < m; ++t) sv[t + 1] = sv[t] + (int)((s.mask >> t) & 1u);
    for (int t = 0; t <= n; ++t) tau[t] = sv[theta[t]];
    unsigned mk = 0;
    bool ok = tau[n] == s.k;
    for (int t = 0; t < n && ok; ++t) {
      int step = tau[t + 1] - tau[t];
      if (step > 1) ok = false;
      if (step == 1) mk |= 1u << t;
    }
    if (!ok) continue;
    if (tau[0] == 0) {
      const auto& src = lev[n][index[n].at(mk)];
      for (int c = 0; c < C.rank(s.k); ++c) cols[src.offset + c].push_back({s.offset + c, C.R->one()});
    } else if (tau[0] == 1) {
      auto it = index[n].find(mk);
      if (it == index[n].end()) continue;
      const auto& src = lev[n][it->second];
      Mat d = C.diff(s.k - 1);
      for (int c = 0; c < d.cols; ++c)
        for (int r = 0; r < d.rows; ++r)
          if (d(r, c)) cols[src.offset + c].push_back({s.offset + r, d(r, c)});
    }
  }
  return cols;
}

SparseMat DKLayout::coface(int n, int i) const {
  std::vector<int> th(n);
  for (int t = 0; t < n; ++t) th[t] = t < i ? t : t + 1;
  return structure(n - 1, n, th);
}

SparseMat DKLayout::codeg(int n, int j) const {
  std::vector<int> th(n + 2);
  for (int t = 0; t <= n + 1; ++t) th[t] = t <= j ? t : t - 1;
  return structure(n + 1, n, th);
}

CosimplicialModule dold_kan(const CochainComplex& C, int L) {
  DKLayout lay(C, L);
  CosimplicialModule A;
  A.R = C.R;
  A.L = L;
  A.ranks = lay.rank;
  A.coface.resize(L + 1);
  A.codeg.resize(L + 1);
  for (int n = 1; n <= L; ++n)
    for (int i = 0; i <= n; ++i) A.coface[n].push_back(to_dense(C.R, lay.rank[n], lay.coface(n, i)));
  for (int n = 0; n < L; ++n)
    for (int j = 0; j <= n; ++j) A.codeg[n].push_back(to_dense(C.R, lay.rank[n], lay.codeg(n, j)));
  return A;
}

Conormalized conormalize(const CosimplicialModule& A) {
  const auto& R = A.R;
  Conormalized out;
  std::vector<std::vector<int>> coord(A.L + 1);
  std::vector<bool> is_coord(A.L + 1, true);
  for (int n = 0; n <= A.L; ++n) {
    bool mono = true;
    if (n > 0)
      for (auto& s : A.codeg[n - 1]) mono = mono && is_monomial_matrix(s);
    if (mono) {
      for (int c = 0; c < A.ranks[n]; ++c) {
        bool killed = true;
        if (n > 0)
          for (auto& s : A.codeg[n - 1])
            for (int r = 0; r < s.rows && killed; ++r) killed = s(r, c) == 0;
        if (killed) coord[n].push_back(c);
      }
      Mat inc(R, A.ranks[n], (int)coord[n].size());
      for (int k = 0; k < (int)coord[n].size(); ++k) inc(coord[n][k], k) = R->one();
      out.incl.push_back(inc);
    } else {
      if (!R->is_field()) throw Error("conormalization over a non-field needs monomial codegeneracies");
      is_coord[n] = false;
      Mat st = A.codeg[n - 1][0];
      for (size_t j = 1; j < A.codeg[n - 1].size(); ++j) st = vstack(st, A.codeg[n - 1][j]);
      out.incl.push_back(kernel(st));
    }
  }
  std::vector<int> ranks;
  std::vector<Mat> ds;
  for (int n = 0; n <= A.L; ++n) ranks.push_back(out.incl[n].cols);
  for (int n = 0; n < A.L; ++n) {
    Mat D(R, A.ranks[n + 1], A.ranks[n]);
    for (int i = 0; i <= n + 1; ++i) D = i % 2 ? D - A.coface[n + 1][i] : D + A.coface[n + 1][i];
    Mat img = D * out.incl[n];
    Mat dn(R, ranks[n + 1], ranks[n]);
    if (is_coord[n + 1]) {
      dn = submatrix(img, coord[n + 1], [&] {
        std::vector<int> all(img.cols);
        for (int c = 0; c < img.cols; ++c) all[c] = c;
        return all;
      }());
    } else {
      Solver sol(out.incl[n + 1]);
      for (int c = 0; c < img.cols; ++c) {
        std::vector<elt> x;
        if (!sol.solve(img.column(c), x)) throw Error("conormalized differential leaves the normalized part");
        dn.set_column(c, x);
      }
    }
    ds.push_back(dn);
  }
  out.complex = CochainComplex(R, 0, ranks, ds);
  return out;
}

CosimplicialModule levelwise(PolyFunctor F, const CosimplicialModule& A) {
  CosimplicialModule B;
  B.R = A.R;
  B.L = A.L;
  for (int r : A.ranks) B.ranks.push_back(functor_rank(F, r));
  B.coface.resize(A.L + 1);
  B.codeg.resize(A.L + 1);
  for (int n = 0; n <= A.L; ++n) {
    for (auto& m : A.coface[n]) B.coface[n].push_back(apply_functor(F, m));
    for (auto& m : A.codeg[n]) B.codeg[n].push_back(apply_functor(F, m));
  }
  return B;
}

std::vector<Mat> dold_kan_map(const ComplexMap& g, int L) {
  DKLayout ls(g.src, L), lt(g.tgt, L);
  std::vector<Mat> out;
  for (int n = 0; n <= L; ++n) {
    Mat m(g.src.R, lt.rank[n], ls.rank[n]);
    for (auto& s : ls.lev[n]) {
      auto it = lt.index[n].find(s.mask);
      if (it == lt.index[n].end()) continue;
      int to = lt.lev[n][it->second].offset;
      Mat gk = g.at(s.k);
      for (int r = 0; r < gk.rows; ++r)
        for (int c = 0; c < gk.cols; ++c) m(to + r, s.offset + c) = gk(r, c);
    }
    out.push_back(m);
  }
  return out;
}

int DerivedPower::find(int n, const std::vector<int>& t) const {
  auto it = index[n].find(t);
  return it == index[n].end() ? -1 : it->second;
}

DerivedPower derived_power(PolyFunctor F, const CochainComplex& C, int B, int level_cap) {
  int L = B + 1;
  if (L > level_cap)
    throw SizeLimit("level bound exceeded: degree " + std::to_string(B) + " needs " + std::to_string(L) +
                    " cosimplicial levels, cap is " + std::to_string(level_cap));
  const auto& R = C.R;
  DerivedPower P;
  P.F = F;
  P.L = L;
  P.layout = std::make_shared<DKLayout>(C, L);
  const auto& lay = *P.layout;
  P.mono.resize(L + 1);
  P.index.resize(L + 1);
  for (int n = 0; n <= L; ++n) {
    unsigned full = n == 0 ? 0u : (1u << n) - 1u;
    for (auto& t : functor_basis(F, lay.rank[n])) {
      unsigned m = 0;
      for (int b : t) m |= lay.jumps[n][b];
      if (m == full) {
        P.index[n][t] = (int)P.mono[n].size();
        P.mono[n].push_back(t);
      }
    }
  }
  std::vector<int> ranks;
  std::vector<Mat> ds;
  for (int n = 0; n <= L; ++n) ranks.push_back((int)P.mono[n].size());
  for (int n = 0; n < L; ++n) {
    std::vector<SparseMat> cf;
    for (int i = 0; i <= n + 1; ++i) cf.push_back(lay.coface(n + 1, i));
    Mat d(R, ranks[n + 1], ranks[n]);
    for (int c = 0; c < ranks[n]; ++c) {
      std::map<std::vector<int>, elt> acc;
      for (int i = 0; i <= n + 1; ++i)
        for (auto& [t, v] : functor_image(F, *R, cf[i], P.mono[n][c])) {
          auto& slot = acc[t];
          slot = R->add(slot, i % 2 ? R->neg(v) : v);
        }
      for (auto& [t, v] : acc) {
        if (!v) continue;
        int r = P.find(n + 1, t);
        if (r < 0) throw Error("derived power differential leaves the normalized part");
        d(r, c) = v;
      }
    }
    ds.push_back(d);
  }
  P.complex = CochainComplex(R, 0, ranks, ds);
  return P;
}

DerivedPower frobenius_twist(const DerivedPower& P) {
  DerivedPower Q = P;
  Q.twisted = !P.twisted;
  for (auto& m : Q.complex.d) m = frobenius(m);
  return Q;
}

ComplexMap natural_map(NatKind kind, const DerivedPower& src, const DerivedPower& tgt) {
  if (src.L != tgt.L || src.layout->rank != tgt.layout->rank)
    throw Error("natural map between derived powers of different inputs");
  const auto& R = src.complex.R;
  std::vector<Mat> comps;
  for (int n = 0; n <= src.L; ++n) {
    Mat m(R, (int)tgt.mono[n].size(), (int)src.mono[n].size());
    for (int c = 0; c < (int)src.mono[n].size(); ++c) {
      const auto& t = src.mono[n][c];
      std::vector<int> to;
      elt coef = R->one();
      switch (kind) {
        case NatKind::Norm:
          to = t;
          coef = factorial_ratio(*R, t, true);
          break;
        case NatKind::Restr:
          to = t;
          coef = factorial_ratio(*R, t, false);
          break;
        case NatKind::Delta:
          to.assign(tgt.F.n, t[0]);
          break;
        case NatKind::Psi:
          if (std::all_of(t.begin(), t.end(), [&](int x) { return x == t[0]; })) to = {t[0]};
          break;
      }
      if (to.empty() || !coef) continue;
      int r = tgt.find(n, to);
      if (r < 0) throw Error("natural map target monomial is not normalized");
      m(r, c) = coef;
    }
    comps.push_back(m);
  }
  return ComplexMap(src.complex, tgt.complex, comps);
}

Mat norm_matrix(const RingPtr& R, int n, int rank) {
  auto b = functor_basis({FunctorKind::Sym, n}, rank);
  Mat m(R, (int)b.size(), (int)b.size());
  for (int i = 0; i < (int)b.size(); ++i) m(i, i) = factorial_ratio(*R, b[i], true);
  return m;
}

Mat restriction_matrix(const RingPtr& R, int n, int rank) {
  auto b = functor_basis({FunctorKind::Sym, n}, rank);
  Mat m(R, (int)b.size(), (int)b.size());
  for (int i = 0; i < (int)b.size(); ++i) m(i, i) = factorial_ratio(*R, b[i], false);
  return m;
}

Mat delta_matrix(const RingPtr& R, int rank) {
  int p = (int)R->p();
  auto b = functor_basis({FunctorKind::Sym, p}, rank);
  Mat m(R, (int)b.size(), rank);
  for (int i = 0; i < (int)b.size(); ++i)
    if (b[i].front() == b[i].back()) m(i, b[i][0]) = R->one();
  return m;
}

Mat psi_matrix(const RingPtr& R, int rank) {
  return transpose(delta_matrix(R, rank));
}

CochainComplex omega_complex(const RingPtr& R, int dimV, int n) {
  int top = std::min(n, dimV);
  std::vector<int> ranks;
  std::vector<Mat> ds;
  for (int i = 0; i <= top; ++i)
    ranks.push_back(functor_rank({FunctorKind::Sym, n - i}, dimV) * functor_rank({FunctorKind::Ext, i}, dimV));
  for (int i = 0; i < top; ++i) {
    auto sa = functor_basis({FunctorKind::Sym, n - i}, dimV), ea = functor_basis({FunctorKind::Ext, i}, dimV);
    auto sb = functor_basis({FunctorKind::Sym, n - i - 1}, dimV), eb = functor_basis({FunctorKind::Ext, i + 1}, dimV);
    std::map<std::vector<int>, int> si, ei;
    for (int k = 0; k < (int)sb.size(); ++k) si[sb[k]] = k;
    for (int k = 0; k < (int)eb.size(); ++k) ei[eb[k]] = k;
    Mat d(R, ranks[i + 1], ranks[i]);
    for (int a = 0; a < (int)sa.size(); ++a)
      for (int b = 0; b < (int)ea.size(); ++b) {
        for (int j = 0; j < dimV; ++j) {
          int mult = (int)std::count(sa[a].begin(), sa[a].end(), j);
          if (!mult || std::count(ea[b].begin(), ea[b].end(), j)) continue;
          auto s2 = sa[a];
          s2.erase(std::find(s2.begin(), s2.end(), j));
          int less = (int)std::count_if(ea[b].begin(), ea[b].end(), [&](int x) { return x < j; });
          auto e2 = ea[b];
          e2.insert(std::upper_bound(e2.begin(), e2.end(), j), j);
          elt c = R->from_int(mult);
          if (less % 2) c = R->neg(c);
          int row = si.at(s2) * (int)eb.size() + ei.at(e2), col = a * (int)ea.size() + b;
          d(row, col) = R->add(d(row, col), c);
        }
      }
    ds.push_back(d);
  }
  return CochainComplex(R, 0, ranks, ds);
}

std::vector<Mat> omega_action(const Mat& g, int n) {
  std::vector<Mat> out;
  for (int i = 0; i <= std::min(n, g.rows); ++i)
    out.push_back(kron(apply_functor({FunctorKind::Sym, n - i}, g), apply_functor({FunctorKind::Ext, i}, g)));
  return out;
}

}  // namespace charp
