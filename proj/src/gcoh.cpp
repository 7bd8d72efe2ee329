#include "charp/gcoh.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace charp {

namespace {

// k x n matrix L with L * B = 1 for B of full column rank (fields)
Mat left_inverse(const Mat& B) {
  if (B.cols == 0) return Mat(B.R, 0, B.rows);
  Echelon e = echelon(transpose(B));
  if (e.rank != B.cols) throw Error("left_inverse: columns are dependent");
  std::vector<int> rows = e.pivots, all(B.cols);
  std::iota(all.begin(), all.end(), 0);
  Mat inv = inverse(submatrix(B, rows, all));
  Mat L(B.R, B.cols, B.rows);
  for (int i = 0; i < B.cols; ++i)
    for (int j = 0; j < B.cols; ++j) L(i, rows[j]) = inv(i, j);
  return L;
}

void add_block(Mat& m, int r0, int c0, const Mat& b) {
  const Ring& R = *m.R;
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j)
      if (b(i, j)) m(r0 + i, c0 + j) = R.add(m(r0 + i, c0 + j), b(i, j));
}

std::vector<int> apply_perm(const std::vector<int>& perm, const std::vector<int>& t) {
  std::vector<int> u(t.size());
  for (size_t k = 0; k < t.size(); ++k) u[k] = perm[t[k]];
  return u;
}

std::vector<elt> add_vec(const Ring& R, std::vector<elt> a, const std::vector<elt>& b) {
  for (size_t k = 0; k < a.size(); ++k) a[k] = R.add(a[k], b[k]);
  return a;
}

}  // namespace

void GModule::validate(const FiniteGroup& G) const {
  if ((int)action.size() != G.order) throw Error("module: need one matrix per group element");
  for (auto& m : action)
    if (m.rows != rank || m.cols != rank) throw Error("module: matrix shape mismatch");
  if (!(action[G.identity] == Mat::identity(R, rank))) throw Error("module: identity acts nontrivially");
  auto check = [&](int g, int h) {
    if (!(action[g] * action[h] == action[G.mul(g, h)])) throw Error("module: action is not a homomorphism");
  };
  if (G.order <= 100) {
    for (int g = 0; g < G.order; ++g)
      for (int h = 0; h < G.order; ++h) check(g, h);
  } else {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10000; ++t) check(rng() % G.order, rng() % G.order);
  }
}

void GModule::validate_lattice() const {
  for (auto& m : action) inverse(m);
  for (size_t i = 0; i < action.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (!(action[i] * action[j] == action[j] * action[i])) throw Error("lattice module: generators do not commute");
}

GModule trivial_module(const RingPtr& R, int rank, int count) {
  return GModule{R, rank, std::vector<Mat>(count, Mat::identity(R, rank))};
}

GModule character_module(const RingPtr& R, const std::vector<elt>& values) {
  GModule M{R, 1, {}};
  for (elt v : values) {
    Mat m(R, 1, 1);
    m(0, 0) = v;
    M.action.push_back(m);
  }
  return M;
}

GModule hom_module(const GModule& B, const GModule& A) {
  if (A.action.size() != B.action.size()) throw Error("hom_module: different groups");
  GModule W{A.R, A.rank * B.rank, {}};
  for (size_t g = 0; g < A.action.size(); ++g)
    W.action.push_back(kron(transpose(inverse(B.action[g])), A.action[g]));
  return W;
}

GModule reduce_mod_p(const GModule& M) {
  GModule r{M.R->residue_field(), M.rank, {}};
  for (auto& m : M.action) r.action.push_back(reduce_mod_p(m));
  return r;
}

GModule restrict_module(const GModule& M, const std::vector<int>& elements) {
  GModule r{M.R, M.rank, {}};
  for (int g : elements) r.action.push_back(M.action.at(g));
  return r;
}

GModule frobenius_twist(const GModule& M) {
  GModule r{M.R, M.rank, {}};
  for (auto& m : M.action) r.action.push_back(frobenius(m));
  return r;
}

TupleCodec::TupleCodec(const FiniteGroup& g) : G(&g), nid(g.order, -1) {
  for (int x = 0; x < g.order; ++x)
    if (x != g.identity) {
      nid[x] = (int)elem.size();
      elem.push_back(x);
    }
}

long long TupleCodec::count(int n) const {
  long long c = 1;
  for (int k = 0; k < n; ++k) c *= (long long)elem.size();
  return c;
}

long long TupleCodec::encode(const std::vector<int>& t) const {
  long long c = 0, w = 1;
  for (int x : t) {
    if (nid[x] < 0) return -1;
    c += nid[x] * w;
    w *= (long long)elem.size();
  }
  return c;
}

std::vector<int> TupleCodec::decode(int n, long long code) const {
  std::vector<int> t(n);
  const long long b = (long long)elem.size();
  for (int k = 0; k < n; ++k) {
    t[k] = elem[code % b];
    code /= b;
  }
  return t;
}

namespace {

// the terms of (df)(t) = t1 f(t2..) + sum (-1)^i f(..t_i t_{i+1}..) + (-1)^{n+1} f(t1..tn)
template <class Fn>
void coboundary_terms(const FiniteGroup& G, const std::vector<int>& t, Fn&& fn) {
  const int n1 = (int)t.size();
  fn(std::vector<int>(t.begin() + 1, t.end()), t[0], 1);
  for (int i = 1; i < n1; ++i) {
    std::vector<int> s;
    for (int k = 0; k < n1; ++k) {
      if (k == i) continue;
      s.push_back(k == i - 1 ? G.mul(t[i - 1], t[i]) : t[k]);
    }
    fn(s, G.identity, i % 2 ? -1 : 1);
  }
  fn(std::vector<int>(t.begin(), t.end() - 1), G.identity, n1 % 2 ? -1 : 1);
}

}  // namespace

CochainComplex bar_complex(const FiniteGroup& G, const GModule& M, int top, long long budget) {
  TupleCodec tc(G);
  const int m = M.rank;
  long long cost = 0;
  for (int n = 0; n < top; ++n) cost += tc.count(n) * tc.count(n + 1) * m * m;
  if (cost > budget)
    throw SizeLimit("bar complex of " + G.name + " up to degree " + std::to_string(top) + " needs " + std::to_string(cost) +
                    " entries, over the budget of " + std::to_string(budget));
  std::vector<int> ranks;
  for (int n = 0; n <= top; ++n) ranks.push_back((int)(tc.count(n) * m));
  std::vector<Mat> d;
  const Ring& R = *M.R;
  for (int n = 0; n < top; ++n) {
    Mat D(M.R, ranks[n + 1], ranks[n]);
    for (long long code = 0; code < tc.count(n + 1); ++code) {
      auto t = tc.decode(n + 1, code);
      coboundary_terms(G, t, [&](const std::vector<int>& s, int act, int sign) {
        long long c = tc.encode(s);
        if (c < 0) return;
        const Mat& A = M.action[act];
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            elt v = act == G.identity ? (i == j ? R.one() : 0) : A(i, j);
            if (!v) continue;
            if (sign < 0) v = R.neg(v);
            elt& e = D((int)(code * m + i), (int)(c * m + j));
            e = R.add(e, v);
          }
      });
    }
    d.push_back(std::move(D));
  }
  return CochainComplex(M.R, 0, ranks, d);
}

std::vector<CohomologySlice> bar_cohomology(const FiniteGroup& G, const GModule& M, int D, long long budget) {
  auto C = bar_complex(G, M, D + 1, budget);
  std::vector<CohomologySlice> out;
  for (int i = 0; i <= D; ++i) out.push_back(cohomology(C, i));
  return out;
}

CochainComplex koszul_complex(const GModule& M) {
  M.validate_lattice();
  const int g = (int)M.action.size(), r = M.rank;
  std::vector<std::vector<int>> subsets(g + 1);  // bitmasks per size, increasing
  for (int mask = 0; mask < (1 << g); ++mask) subsets[__builtin_popcount(mask)].push_back(mask);
  std::vector<int> ranks;
  for (int n = 0; n <= g; ++n) ranks.push_back((int)subsets[n].size() * r);
  std::vector<Mat> d;
  for (int n = 0; n < g; ++n) {
    std::map<int, int> pos;
    for (int k = 0; k < (int)subsets[n].size(); ++k) pos[subsets[n][k]] = k;
    Mat D(M.R, ranks[n + 1], ranks[n]);
    for (int row = 0; row < (int)subsets[n + 1].size(); ++row) {
      int mask = subsets[n + 1][row], t = 0;
      for (int j = 0; j < g; ++j) {
        if (!(mask >> j & 1)) continue;
        Mat blk = M.action[j] - Mat::identity(M.R, r);
        if (t % 2) blk = scale(blk, M.R->neg(M.R->one()));
        add_block(D, row * r, pos.at(mask ^ (1 << j)) * r, blk);
        ++t;
      }
    }
    d.push_back(std::move(D));
  }
  return CochainComplex(M.R, 0, ranks, d);
}

std::vector<CohomologySlice> lattice_cohomology(const GModule& M) {
  auto C = koszul_complex(M);
  std::vector<CohomologySlice> out;
  for (int i = 0; i <= C.hi(); ++i) out.push_back(cohomology(C, i));
  return out;
}

CochainComplex presentation_complex(const Presentation& P, const GModule& M) {
  if ((int)M.action.size() != P.gens) throw Error("presentation: need one matrix per generator");
  const int r = M.rank, g = P.gens, nr = (int)P.relators.size();
  const Mat I = Mat::identity(M.R, r);
  std::vector<Mat> inv;
  for (auto& m : M.action) inv.push_back(inverse(m));
  Mat d0(M.R, g * r, r);
  for (int j = 0; j < g; ++j) add_block(d0, j * r, 0, M.action[j] - I);
  Mat d1(M.R, nr * r, g * r);
  for (int k = 0; k < nr; ++k) {
    Mat prefix = I;
    for (auto [x, e] : P.relators[k]) {
      if (x < 0 || x >= g || (e != 1 && e != -1)) throw Error("presentation: malformed relator");
      if (e == 1) {
        add_block(d1, k * r, x * r, prefix);
        prefix = prefix * M.action[x];
      } else {
        prefix = prefix * inv[x];
        add_block(d1, k * r, x * r, scale(prefix, M.R->neg(M.R->one())));
      }
    }
    if (!(prefix == I)) throw Error("presentation: relator " + std::to_string(k) + " does not act trivially");
  }
  return CochainComplex(M.R, 0, {r, g * r, nr * r}, {d0, d1});
}

Mat row_basis(const Mat& m, std::uint64_t seed) {
  if (m.rows <= 2 * m.cols + 16) return m;
  std::mt19937_64 rng(seed);
  std::vector<int> order(m.rows);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> taken(m.rows, 0);
  std::vector<int> rows(order.begin(), order.begin() + 2 * m.cols + 16);
  for (int r : rows) taken[r] = 1;
  std::vector<int> cols(m.cols);
  std::iota(cols.begin(), cols.end(), 0);
  const Ring& R = *m.R;
  for (;;) {
    std::sort(rows.begin(), rows.end());
    Mat K = kernel(submatrix(m, rows, cols));
    if (K.cols == 0) break;
    std::vector<int> bad;
    for (int r = 0; r < m.rows && (int)bad.size() < m.cols; ++r) {
      if (taken[r]) continue;
      const elt* row = m.row(r);
      for (int j = 0; j < K.cols; ++j) {
        elt s = 0;
        for (int c = 0; c < m.cols; ++c)
          if (row[c]) s = R.add(s, R.mul(row[c], K(c, j)));
        if (s) {
          bad.push_back(r);
          break;
        }
      }
    }
    if (bad.empty()) break;
    for (int r : bad) {
      taken[r] = 1;
      rows.push_back(r);
    }
  }
  std::sort(rows.begin(), rows.end());
  return submatrix(m, rows, cols);
}

InvariantCochains invariant_cochains(const FiniteGroup& G, const GModule& M, const Symmetry& S, int top) {
  const int nphi = (int)S.perm.size();
  if (nphi == 0 || nphi > 65535) throw Error("semidirect_reduce: symmetry group size out of range");
  if (nphi % M.R->p() == 0)
    throw Error("semidirect_reduce: |Phi| = " + std::to_string(nphi) + " is divisible by p = " +
                std::to_string(M.R->p()));
  if ((int)S.on_module.action.size() != nphi) throw Error("semidirect_reduce: need one module matrix per symmetry");
  if ((int)M.action.size() != G.order) throw Error("semidirect_reduce: need one matrix per group element");
  {
    std::mt19937_64 rng(3);
    const long long pairs = (long long)nphi * G.order;
    for (long long t = 0; t < std::min<long long>(pairs, 20000); ++t) {
      int f = pairs <= 20000 ? (int)(t / G.order) : (int)(rng() % nphi);
      int g = pairs <= 20000 ? (int)(t % G.order) : (int)(rng() % G.order);
      const Mat& P = S.on_module.action[f];
      if (!(P * M.action[g] == M.action[S.perm[f][g]] * P))
        throw Error("semidirect_reduce: symmetry is not compatible with the module");
      if (S.perm[f][G.mul(g, g)] != G.mul(S.perm[f][g], S.perm[f][g]))
        throw Error("semidirect_reduce: symmetry is not an automorphism");
    }
  }
  InvariantCochains IC;
  IC.G = &G;
  IC.M = M;
  IC.S = S;
  IC.top = top;
  TupleCodec tc(G);
  const int m = M.rank;
  for (int n = 0; n <= top; ++n) {
    InvariantCochains::Level L;
    const long long cnt = tc.count(n);
    if (cnt > 50000000) throw Error("semidirect_reduce: too many cochain tuples in degree " + std::to_string(n));
    L.orbit.assign(cnt, -1);
    L.moved.assign(cnt, 0);
    for (long long code = 0; code < cnt; ++code) {
      if (L.orbit[code] >= 0) continue;
      const int o = (int)L.rep.size();
      L.rep.push_back(code);
      auto t = tc.decode(n, code);
      std::vector<int> stab;
      for (int f = 0; f < nphi; ++f) {
        long long c2 = tc.encode(apply_perm(S.perm[f], t));
        if (c2 == code) stab.push_back(f);
        if (L.orbit[c2] < 0) {
          L.orbit[c2] = o;
          L.moved[c2] = (std::uint16_t)f;
        }
      }
      Mat B;
      if (stab.size() <= 1) {
        B = Mat::identity(M.R, m);
      } else {
        Mat stack(M.R, 0, m);
        for (int f : stab) stack = vstack(stack, S.on_module.action[f] - Mat::identity(M.R, m));
        B = kernel(stack);
      }
      L.offset.push_back(L.dim);
      L.dim += B.cols;
      L.left.push_back(left_inverse(B));
      L.basis.push_back(std::move(B));
    }
    IC.level.push_back(std::move(L));
  }
  const Ring& R = *M.R;
  for (int n = 0; n < top; ++n) {
    const auto& Ls = IC.level[n];
    const auto& Lt = IC.level[n + 1];
    Mat D(M.R, Lt.dim, Ls.dim);
    for (int o = 0; o < (int)Lt.rep.size(); ++o) {
      if (Lt.basis[o].cols == 0) continue;
      auto t = tc.decode(n + 1, Lt.rep[o]);
      std::map<int, Mat> acc;
      coboundary_terms(G, t, [&](const std::vector<int>& s, int act, int sign) {
        long long c = tc.encode(s);
        if (c < 0) return;
        int os = Ls.orbit[c];
        if (Ls.basis[os].cols == 0) return;
        Mat blk = S.on_module.action[Ls.moved[c]] * Ls.basis[os];
        if (act != G.identity) blk = M.action[act] * blk;
        if (sign < 0) blk = scale(blk, R.neg(R.one()));
        auto it = acc.find(os);
        if (it == acc.end())
          acc.emplace(os, blk);
        else
          it->second = it->second + blk;
      });
      for (auto& [os, blk] : acc) add_block(D, Lt.offset[o], Ls.offset[os], Lt.left[o] * blk);
    }
    IC.d.push_back(std::move(D));
  }
  return IC;
}

std::vector<elt> InvariantCochains::average(int n, const std::vector<elt>& full) const {
  TupleCodec tc(*G);
  const int m = M.rank, nphi = (int)S.perm.size();
  const Ring& R = *M.R;
  if ((long long)full.size() != tc.count(n) * m) throw Error("average: cochain size mismatch");
  std::vector<Mat> inv;
  for (auto& P : S.on_module.action) inv.push_back(inverse(P));
  const elt scal = R.inv(R.from_int(nphi));
  const auto& L = level.at(n);
  std::vector<elt> out(L.dim, 0);
  for (int o = 0; o < (int)L.rep.size(); ++o) {
    if (L.basis[o].cols == 0) continue;
    auto t = tc.decode(n, L.rep[o]);
    std::vector<elt> v(m, 0);
    for (int f = 0; f < nphi; ++f) {
      long long c = tc.encode(apply_perm(S.perm[f], t));
      std::vector<elt> val(full.begin() + c * m, full.begin() + (c + 1) * m);
      v = add_vec(R, v, matvec(inv[f], val));
    }
    for (auto& x : v) x = R.mul(x, scal);
    auto co = matvec(L.left[o], v);
    std::copy(co.begin(), co.end(), out.begin() + L.offset[o]);
  }
  return out;
}

std::vector<elt> InvariantCochains::expand(int n, const std::vector<elt>& coords) const {
  TupleCodec tc(*G);
  const int m = M.rank;
  const auto& L = level.at(n);
  std::vector<elt> full(tc.count(n) * m, 0);
  for (long long c = 0; c < tc.count(n); ++c) {
    int o = L.orbit[c];
    const Mat& B = L.basis[o];
    if (B.cols == 0) continue;
    std::vector<elt> co(coords.begin() + L.offset[o], coords.begin() + L.offset[o] + B.cols);
    auto v = matvec(S.on_module.action[L.moved[c]], matvec(B, co));
    std::copy(v.begin(), v.end(), full.begin() + c * m);
  }
  return full;
}

CohomologySlice InvariantCochains::H(int n, std::uint64_t seed) const {
  if (n < 0 || n >= top) throw Error("invariant cohomology: degree out of range");
  Mat out = row_basis(d[n], seed);
  if (n == 0) return cohomology(CochainComplex(M.R, 0, {level[0].dim, out.rows}, {out}), 0);
  return cohomology(CochainComplex(M.R, n - 1, {level[n - 1].dim, level[n].dim, out.rows}, {d[n - 1], out}), n);
}

std::vector<CohomologySlice> semidirect_reduce(const FiniteGroup& G, const GModule& M, const Symmetry& S, int D) {
  auto IC = invariant_cochains(G, M, S, D + 1);
  std::vector<CohomologySlice> out;
  for (int i = 0; i <= D; ++i) out.push_back(IC.H(i));
  return out;
}

std::vector<int> invariant_dims_by_idempotent(const FiniteGroup& G, const GModule& M, const Symmetry& S, int D) {
  const int nphi = (int)S.perm.size();
  if (nphi % M.R->p() == 0) throw Error("averaging idempotent: |Phi| divisible by p");
  auto hs = bar_cohomology(G, M, D);
  TupleCodec tc(G);
  const int m = M.rank;
  const Ring& R = *M.R;
  const elt scal = R.inv(R.from_int(nphi));
  std::vector<Mat> inv;
  for (auto& P : S.on_module.action) inv.push_back(inverse(P));
  std::vector<int> dims;
  for (int n = 0; n <= D; ++n) {
    const auto& h = hs[n];
    Mat E(M.R, h.dim(), h.dim());
    for (int j = 0; j < h.dim(); ++j) {
      auto f = h.basis.column(j);
      std::vector<elt> ef(f.size(), 0);
      for (long long c = 0; c < tc.count(n); ++c) {
        auto t = tc.decode(n, c);
        std::vector<elt> v(m, 0);
        for (int p = 0; p < nphi; ++p) {
          long long c2 = tc.encode(apply_perm(S.perm[p], t));
          std::vector<elt> val(f.begin() + c2 * m, f.begin() + (c2 + 1) * m);
          v = add_vec(R, v, matvec(inv[p], val));
        }
        for (int i = 0; i < m; ++i) ef[c * m + i] = R.mul(v[i], scal);
      }
      E.set_column(j, h.coords(ef));
    }
    dims.push_back(rank(E));
  }
  return dims;
}

void EquivariantComplex::validate() const {
  C.validate();
  for (auto& acts : action) {
    if ((int)acts.size() != (int)C.ranks.size()) throw Error("equivariant complex: one matrix per degree");
    for (int k = 0; k + 1 < (int)acts.size(); ++k)
      if (!(acts[k + 1] * C.d[k] == C.d[k] * acts[k])) throw Error("equivariant complex: action does not commute with d");
  }
}

GModule EquivariantComplex::module(int degree) const {
  GModule M{C.R, C.rank(degree), {}};
  for (auto& acts : action) M.action.push_back(acts.at(degree - C.lo));
  return M;
}

EquivariantComplex truncate_between(const EquivariantComplex& D, int a, int b) {
  if (a >= b) throw Error("truncate_between: need a < b");
  const CochainComplex& C = D.C;
  Mat Bm = image(C.diff(a - 1));
  Mat Zm = kernel(C.diff(b));
  Mat Lb = left_inverse(Bm), Lz = left_inverse(Zm);
  std::vector<int> ranks{Bm.cols};
  std::vector<Mat> d{Bm};
  for (int k = a; k < b; ++k) ranks.push_back(C.rank(k));
  for (int k = a; k + 1 < b; ++k) d.push_back(C.diff(k));
  ranks.push_back(Zm.cols);
  d.push_back(Lz * C.diff(b - 1));
  EquivariantComplex T{CochainComplex(C.R, a - 1, ranks, d), {}};
  for (auto& acts : D.action) {
    auto at = [&](int k) { return k >= C.lo && k <= C.hi() ? acts[k - C.lo] : Mat(C.R, C.rank(k), C.rank(k)); };
    std::vector<Mat> na{Lb * at(a) * Bm};
    for (int k = a; k < b; ++k) na.push_back(at(k));
    na.push_back(Lz * at(b) * Zm);
    T.action.push_back(std::move(na));
  }
  T.validate();
  return T;
}

bool is_cocycle(const FiniteGroup& G, const GroupClass& x) {
  auto C = bar_complex(G, x.W, x.degree + 1);
  auto v = matvec(C.d[x.degree], x.cocycle);
  return std::all_of(v.begin(), v.end(), [](elt e) { return e == 0; });
}

bool is_zero_class(const FiniteGroup& G, const GroupClass& x) {
  if (x.degree == 0) return std::all_of(x.cocycle.begin(), x.cocycle.end(), [](elt v) { return v == 0; });
  auto C = bar_complex(G, x.W, x.degree);
  std::vector<elt> w;
  return Solver(C.d[x.degree - 1]).solve(x.cocycle, w);
}

bool same_class(const FiniteGroup& G, const GroupClass& x, const GroupClass& y) {
  if (x.degree != y.degree || x.cocycle.size() != y.cocycle.size()) throw Error("same_class: incompatible classes");
  GroupClass z = x;
  const Ring& R = *x.W.R;
  for (size_t k = 0; k < z.cocycle.size(); ++k) z.cocycle[k] = R.sub(x.cocycle[k], y.cocycle[k]);
  return is_zero_class(G, z);
}

namespace {

// coordinates of an induced action on a cohomology slice
Mat induced_action(const CohomologySlice& h, const Mat& g) {
  Mat out(h.R, h.dim(), h.dim());
  for (int j = 0; j < h.dim(); ++j) out.set_column(j, h.coords(matvec(g, h.basis.column(j))));
  return out;
}

Mat random_combination(const Mat& K, int cols, std::mt19937_64& rng) {
  if (K.cols == 0) return Mat(K.R, K.rows, cols);
  return K * Mat::random(K.R, K.cols, cols, rng);
}

// sigma_s: tuple code -> Hom(B, D^t) matrix; returns (delta sigma)(t)
Mat delta_at(const FiniteGroup& G, const TupleCodec& tc, const std::vector<Mat>& sigma, const std::vector<int>& t,
             const std::vector<Mat>& actD, const std::vector<Mat>& invB, int rows, int cols, const RingPtr& R) {
  Mat out(R, rows, cols);
  coboundary_terms(G, t, [&](const std::vector<int>& s, int act, int sign) {
    long long c = tc.encode(s);
    if (c < 0) return;
    Mat v = sigma[c];
    if (act != G.identity) v = actD[act] * v * invB[act];
    if (sign < 0) v = scale(v, R->neg(R->one()));
    out = out + v;
  });
  return out;
}

}  // namespace

StaircaseResult hyperext_class(const FiniteGroup& G, const EquivariantComplex& D, std::mt19937_64* rng) {
  const CochainComplex& C = D.C;
  if (!C.R->is_field()) throw Error("hyperext: coefficients must be a field");
  if ((int)D.action.size() != G.order) throw Error("hyperext: need one action per group element");
  std::vector<int> nz;
  for (int k = C.lo; k <= C.hi(); ++k)
    if (cohomology(C, k).dim() > 0) nz.push_back(k);
  if (nz.size() != 2) {
    std::string s;
    for (int k : nz) s += " " + std::to_string(k);
    throw Error("hyperext: need exactly two nonzero cohomology degrees, found" + s);
  }
  const int a = nz[0], b = nz[1];
  auto Ha = cohomology(C, a), Hb = cohomology(C, b);
  StaircaseResult res;
  res.a = a;
  res.b = b;
  res.Abasis = Ha.basis;
  res.A = GModule{C.R, Ha.dim(), {}};
  res.B = GModule{C.R, Hb.dim(), {}};
  for (int g = 0; g < G.order; ++g) {
    res.A.action.push_back(induced_action(Ha, D.action[g][a - C.lo]));
    res.B.action.push_back(induced_action(Hb, D.action[g][b - C.lo]));
  }
  std::vector<Mat> invB;
  for (auto& m : res.B.action) invB.push_back(inverse(m));
  TupleCodec tc(G);
  const RingPtr R = C.R;
  const int nb = Hb.dim();
  // sigma_0 lifts the identity of B into cocycles of degree b
  std::vector<Mat> sigma{Hb.basis};
  if (rng) sigma[0] = sigma[0] + C.diff(b - 1) * Mat::random(R, C.rank(b - 1), nb, *rng);
  for (int s = 0; s < b - a; ++s) {
    const int t = b - s;  // sigma_s takes values in degree t
    std::vector<Mat> actD;
    for (int g = 0; g < G.order; ++g) actD.push_back(D.action[g][t - C.lo]);
    Mat dd = C.diff(t - 1);
    Solver solver(dd);
    Mat Zlow = kernel(dd);
    std::vector<Mat> next(tc.count(s + 1));
    for (long long code = 0; code < tc.count(s + 1); ++code) {
      Mat y = delta_at(G, tc, sigma, tc.decode(s + 1, code), actD, invB, C.rank(t), nb, R);
      if (s % 2) y = scale(y, R->neg(R->one()));
      Mat x(R, C.rank(t - 1), nb);
      for (int j = 0; j < nb; ++j) {
        std::vector<elt> col;
        if (!solver.solve(y.column(j), col)) throw Error("hyperext: unsolvable staircase step (internal inconsistency)");
        x.set_column(j, col);
      }
      if (rng) x = x + random_combination(Zlow, nb, *rng);
      next[code] = std::move(x);
    }
    sigma = std::move(next);
  }
  const int deg = b - a + 1;
  std::vector<Mat> actD;
  for (int g = 0; g < G.order; ++g) actD.push_back(D.action[g][a - C.lo]);
  const int na = Ha.dim();
  res.cls.degree = deg;
  res.cls.W = hom_module(res.B, res.A);
  res.cls.cocycle.assign(tc.count(deg) * na * nb, 0);
  for (long long code = 0; code < tc.count(deg); ++code) {
    Mat y = delta_at(G, tc, sigma, tc.decode(deg, code), actD, invB, C.rank(a), nb, R);
    for (int j = 0; j < nb; ++j) {
      auto co = Ha.coords(y.column(j));
      for (int i = 0; i < na; ++i) res.cls.cocycle[code * na * nb + j * na + i] = co[i];
    }
  }
  return res;
}

ExtensionData extension_values(const GModule& E, const Mat& sub, std::mt19937_64* rng) {
  if (!E.R->is_field()) throw Error("extension_class: coefficients must be a field");
  const int n = E.rank, na = sub.cols;
  if (rank(sub) != na) throw Error("extension_class: sub basis is dependent");
  Span sp(E.R, n);
  for (int j = 0; j < na; ++j) sp.insert(sub.column(j));
  std::vector<std::vector<elt>> qcols;
  for (int i = 0; i < n; ++i) {
    std::vector<elt> e(n, 0);
    e[i] = E.R->one();
    if (sp.insert(e)) qcols.push_back(e);
  }
  Mat Q = from_columns(E.R, n, qcols);
  const int nb = Q.cols;
  Mat P = inverse(hstack(sub, Q));
  std::vector<int> top(na), bot(nb), all(n);
  std::iota(top.begin(), top.end(), 0);
  std::iota(bot.begin(), bot.end(), na);
  std::iota(all.begin(), all.end(), 0);
  Mat Pa = submatrix(P, top, all), Pb = submatrix(P, bot, all);
  Mat sigma = Q;
  if (rng) sigma = sigma + sub * Mat::random(E.R, na, nb, *rng);
  ExtensionData out{GModule{E.R, na, {}}, GModule{E.R, nb, {}}, {}};
  for (auto& g : E.action) {
    if (!(Pb * g * sub).is_zero()) throw Error("extension_class: sub is not stable");
    out.A.action.push_back(Pa * g * sub);
    out.B.action.push_back(Pb * g * Q);
    out.value.push_back(Pa * (g * sigma * inverse(out.B.action.back()) - sigma));
  }
  return out;
}

StaircaseResult extension_class(const FiniteGroup& G, const GModule& E, const Mat& sub, std::mt19937_64* rng) {
  auto ext = extension_values(E, sub, rng);
  const int na = ext.A.rank, nb = ext.B.rank;
  StaircaseResult res;
  res.A = ext.A;
  res.B = ext.B;
  TupleCodec tc(G);
  res.cls.degree = 1;
  res.cls.W = hom_module(res.B, res.A);
  res.cls.cocycle.assign(tc.count(1) * na * nb, 0);
  for (long long code = 0; code < tc.count(1); ++code) {
    const Mat& c = ext.value[tc.elem[code]];
    for (int j = 0; j < nb; ++j)
      for (int i = 0; i < na; ++i) res.cls.cocycle[code * na * nb + j * na + i] = c(i, j);
  }
  res.a = res.b = 0;
  res.Abasis = sub;
  return res;
}

std::vector<elt> group_bockstein(const CochainModel& model, const GModule& M, const GModule& Mt, int i,
                                 const std::vector<elt>& x) {
  if (Mt.action.size() != M.action.size() || Mt.rank != M.rank) throw Error("bockstein: module shapes differ");
  for (size_t g = 0; g < M.action.size(); ++g)
    if (reduce_mod_p(Mt.action[g]).a != M.action[g].a) throw Error("bockstein: reduction mismatch");
  auto Ct = model(Mt);
  auto C = model(M);
  auto Cr = reduce_mod_p(Ct);
  if (Cr.ranks != C.ranks) throw Error("bockstein: model reduction mismatch");
  for (size_t k = 0; k < C.d.size(); ++k)
    if (Cr.d[k].a != C.d[k].a) throw Error("bockstein: model reduction mismatch");
  return connecting_cocycle(bockstein_ses(Ct), i, x);
}

GModule tensor_power_module(const FiniteGroup& Sn, const RingPtr& R, int rank, bool sign_twist) {
  const int n = (int)permutation(Sn, 0).size();
  int dim = 1;
  for (int k = 0; k < n; ++k) dim *= rank;
  GModule M{R, dim, {}};
  for (int g = 0; g < Sn.order; ++g) {
    auto pi = permutation(Sn, g);
    elt s = sign_twist && sign_of(pi) < 0 ? R->neg(R->one()) : R->one();
    Mat m(R, dim, dim);
    std::vector<int> t(n), u(n);
    for (int c = 0; c < dim; ++c) {
      for (int k = 0, x = c; k < n; ++k, x /= rank) t[k] = x % rank;
      for (int k = 0; k < n; ++k) u[pi[k]] = t[k];  // factor k moves to position pi(k)
      int r = 0;
      for (int k = n - 1; k >= 0; --k) r = r * rank + u[k];
      m(r, c) = s;
    }
    M.action.push_back(m);
  }
  return M;
}

std::vector<int> symmetric_orbit_dims(const RingPtr& R, int rank, int p) {
  if (p != 2 && p != 3) throw Error("symmetric_orbit_dims: p must be 2 or 3");
  auto Sp = FiniteGroup::symmetric(p);
  auto M = tensor_power_module(Sp, R, rank, true);
  auto index_of = [&](const std::vector<int>& perm) {
    for (int g = 0; g < Sp.order; ++g)
      if (permutation(Sp, g) == perm) return g;
    throw Error("symmetric_orbit_dims: missing permutation");
  };
  std::vector<int> cyc(p);
  for (int k = 0; k < p; ++k) cyc[k] = (k + 1) % p;
  const int sigma = index_of(cyc);
  const int n = M.rank;
  const Mat I = Mat::identity(R, n);
  Mat norm(R, n, n);
  for (int k = 0; k < p; ++k) norm = norm + M.action[Sp.pow(sigma, k)];
  const Mat one_minus = I - M.action[sigma];

  // homology degree j sits in cohomological degree p - j; complex in degrees 0..p
  std::vector<Mat> d;
  for (int c = 0; c < p; ++c) d.push_back((p - c) % 2 ? one_minus : norm);
  CochainComplex C(R, 0, std::vector<int>(p + 1, n), d);
  C.validate();

  // S_p / C_p acts through chain maps covering conjugation sigma -> sigma^a:
  // weight a^k in homology degree 2k, a^k (1 + ... + sigma^(a-1)) in degree 2k + 1
  std::vector<Mat> on_H(p + 1);
  for (int i = 1; i <= p; ++i) on_H[i] = Mat::zeros(R, cohomology(C, i).dim(), cohomology(C, i).dim());
  std::vector<bool> seen(p, false);
  for (int tau = 0; tau < Sp.order; ++tau) {
    const int conj = Sp.mul(Sp.mul(tau, sigma), Sp.inv(tau));
    int a = 1;
    while (Sp.pow(sigma, a) != conj) ++a;
    if (seen[a]) continue;  // one representative per coset
    seen[a] = true;
    Mat u(R, n, n);
    for (int k = 0; k < a; ++k) u = u + M.action[Sp.pow(sigma, k)];
    std::vector<Mat> f;
    for (int deg = 0; deg <= p; ++deg) {
      const int j = p - deg;
      long long w = 1;
      for (int k = 0; k < j / 2; ++k) w *= a;
      Mat m = scale(M.action[tau], R->from_int(w));
      f.push_back(j % 2 ? u * m : m);
    }
    ComplexMap F(C, C, f);
    F.validate();
    for (int i = 1; i <= p; ++i) on_H[i] = on_H[i] + induced_on_H(F, i);
  }
  std::vector<int> dims(p + 1, 0);
  for (int i = 1; i <= p; ++i) dims[i] = charp::rank(on_H[i]);
  return dims;
}

}  // namespace charp
