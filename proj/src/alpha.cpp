#include "charp/alpha.hpp"

#include <numeric>

namespace charp {

namespace {

Mat diag(const RingPtr& R, const std::vector<elt>& d) {
  Mat m(R, (int)d.size(), (int)d.size());
  for (size_t i = 0; i < d.size(); ++i) m((int)i, (int)i) = d[i];
  return m;
}

Mat elementary(const RingPtr& R, int n, int i, int j, elt x) {
  Mat m = Mat::identity(R, n);
  m(i, j) = x;
  return m;
}

// F_p basis of F_q
std::vector<elt> additive_basis(const RingPtr& Fq) {
  std::vector<elt> out;
  for (int k = 0; k < Fq->degree(); ++k) {
    std::vector<int> d(Fq->degree(), 0);
    d[k] = 1;
    out.push_back(Fq->from_digits(d));
  }
  return out;
}

Mat induced_action(const CohomologySlice& h, const Mat& g) {
  Mat out(h.R, h.dim(), h.dim());
  for (int j = 0; j < h.dim(); ++j) out.set_column(j, h.coords(matvec(g, h.basis.column(j))));
  return out;
}

bool all_zero(const std::vector<elt>& v) {
  return std::all_of(v.begin(), v.end(), [](elt e) { return e == 0; });
}

}  // namespace

int Indexed::find(const Mat& m) const {
  auto it = index.find(m.a);
  return it == index.end() ? -1 : it->second;
}

Indexed indexed(MatrixGroup MG) {
  Indexed out{std::move(MG), {}};
  for (int i = 0; i < (int)out.MG.elements.size(); ++i) out.index[out.MG.elements[i].a] = i;
  return out;
}

elt field_generator(const RingPtr& Fq) {
  const int q = (int)Fq->size();
  for (elt x = 1; x < (elt)q; ++x) {
    int ord = 1;
    for (elt y = x; y != Fq->one(); y = Fq->mul(y, x)) ++ord;
    if (ord == q - 1) return x;
  }
  throw Error("no generator of the multiplicative group of " + Fq->name());
}

Indexed sl2(const RingPtr& Fq) {
  elt w = field_generator(Fq);
  return indexed(matrix_group("SL2(" + Fq->name() + ")", Fq,
                              {elementary(Fq, 2, 0, 1, Fq->one()), elementary(Fq, 2, 1, 0, Fq->one()),
                               diag(Fq, {w, Fq->inv(w)})}));
}

Indexed unipotent2(const RingPtr& R) {
  return indexed(matrix_group("U2(F" + std::to_string(R->p()) + ")", R, {elementary(R, 2, 0, 1, R->one())}));
}

Indexed additive_group(int p, const RingPtr& Fq) {
  std::vector<Mat> gens;
  for (int i = 1; i < p; ++i)
    for (elt x : additive_basis(Fq)) gens.push_back(elementary(Fq, p, 0, i, x));
  return indexed(matrix_group("A" + std::to_string(p) + "(" + Fq->name() + ")", Fq, gens));
}

Indexed torus(int p, const RingPtr& Fq) {
  elt w = field_generator(Fq);
  std::vector<Mat> gens;
  for (int i = 0; i + 1 < p; ++i) {
    std::vector<elt> d(p, Fq->one());
    d[i] = w;
    d[i + 1] = Fq->inv(w);
    gens.push_back(diag(Fq, d));
  }
  if (gens.empty()) gens.push_back(Mat::identity(Fq, p));
  return indexed(matrix_group("T" + std::to_string(p) + "(" + Fq->name() + ")", Fq, gens));
}

Indexed borel_pair(const RingPtr& Fq) {
  elt w = field_generator(Fq);
  std::vector<Mat> gens{diag(Fq, {w, Fq->inv(w)})};
  for (elt x : additive_basis(Fq)) gens.push_back(elementary(Fq, 2, 0, 1, x));
  return indexed(matrix_group("B2(" + Fq->name() + ")", Fq, gens));
}

Symmetry conjugation_symmetry(const Indexed& A, const Indexed& T, const std::vector<Mat>& on_module) {
  Symmetry S;
  const auto& As = A.MG.elements;
  for (auto& t : T.MG.elements) {
    Mat ti = inverse(t);
    std::vector<int> perm;
    for (auto& a : As) {
      int k = A.find(t * a * ti);
      if (k < 0) throw Error("conjugation does not preserve " + A.MG.G.name);
      perm.push_back(k);
    }
    S.perm.push_back(std::move(perm));
  }
  S.on_module = GModule{on_module.empty() ? nullptr : on_module[0].R,
                        on_module.empty() ? 0 : on_module[0].rows, on_module};
  return S;
}

GModule natural_module(const Indexed& G) {
  return GModule{G.MG.elements[0].R, G.MG.elements[0].rows, G.MG.elements};
}

GModule functor_module(PolyFunctor F, const GModule& V) {
  GModule out{V.R, functor_rank(F, V.rank), {}};
  for (auto& m : V.action) out.action.push_back(apply_functor(F, m));
  return out;
}

std::vector<int> embedding(const Indexed& H, const Indexed& G) {
  std::vector<int> out;
  for (auto& m : H.MG.elements) {
    int k = G.find(m);
    if (k < 0) throw Error(H.MG.G.name + " is not contained in " + G.MG.G.name);
    out.push_back(k);
  }
  return out;
}

GroupClass restrict_class(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& embed,
                          const GroupClass& x) {
  TupleCodec tg(G), th(H);
  const int m = x.W.rank;
  GroupClass y{x.degree, restrict_module(x.W, embed), {}};
  y.cocycle.assign(th.count(x.degree) * m, 0);
  for (long long c = 0; c < th.count(x.degree); ++c) {
    auto t = th.decode(x.degree, c);
    for (auto& e : t) e = embed[e];
    long long cg = tg.encode(t);
    if (cg < 0) throw Error("restrict_class: embedding is not injective");
    std::copy(x.cocycle.begin() + cg * m, x.cocycle.begin() + (cg + 1) * m, y.cocycle.begin() + c * m);
  }
  return y;
}

EquivariantComplex omega_truncated(const std::vector<Mat>& mats, int n) {
  const RingPtr& R = mats.at(0).R;
  const int dimV = mats[0].rows;
  auto C = omega_complex(R, dimV, n);
  std::vector<int> ranks = C.ranks;
  std::vector<Mat> d = C.d;
  if (C.hi() == n) {
    ranks.pop_back();
    d.pop_back();
  }
  EquivariantComplex D{CochainComplex(R, 0, ranks, d), {}};
  for (auto& g : mats) {
    auto acts = omega_action(g, n);
    acts.resize(ranks.size());
    D.action.push_back(std::move(acts));
  }
  return D;
}

EquivariantComplex sym_shifted(const std::vector<Mat>& mats, int p, int B) {
  const RingPtr& R = mats.at(0).R;
  auto V1 = CochainComplex::concentrated(R, 1, mats[0].rows);
  PolyFunctor F{FunctorKind::Sym, p};
  auto P = derived_power(F, V1, B);
  EquivariantComplex D{P.complex, {}};
  for (auto& g : mats) {
    auto levels = dold_kan_map(ComplexMap(V1, V1, {g}), P.L);
    std::vector<Mat> acts;
    for (int n = 0; n <= P.L; ++n) {
      auto s = to_sparse(levels[n]);
      Mat m(R, P.complex.rank(n), P.complex.rank(n));
      for (int c = 0; c < (int)P.mono[n].size(); ++c)
        for (auto& [t, v] : functor_image(F, *R, s, P.mono[n][c])) {
          if (!v) continue;
          int r = P.find(n, t);
          if (r < 0) throw Error("group action leaves the normalized monomials");
          m(r, c) = v;
        }
      acts.push_back(std::move(m));
    }
    D.action.push_back(std::move(acts));
  }
  return D;
}

AlphaP2 alpha_p2(std::uint64_t seed) {
  auto F4 = Ring::make(RingSpec::galois_field(2, 2));
  auto G = sl2(F4);
  auto E = functor_module({FunctorKind::Sym, 2}, natural_module(G));
  Mat sub = delta_matrix(F4, 2);
  auto e = extension_class(G.MG.G, E, sub);
  AlphaP2 out;
  out.group_order = G.MG.G.order;
  out.nonzero = is_cocycle(G.MG.G, e.cls) && !is_zero_class(G.MG.G, e.cls);
  out.h1_dim = bar_cohomology(G.MG.G, e.cls.W, 1)[1].dim();
  auto U = unipotent2(F4);
  auto r = restrict_class(G.MG.G, U.MG.G, embedding(U, G), e.cls);
  out.restricted_zero = is_zero_class(U.MG.G, r);
  std::mt19937_64 rng(seed);
  out.choice_independent = true;
  for (int t = 0; t < 10; ++t)
    out.choice_independent &= same_class(G.MG.G, extension_class(G.MG.G, E, sub, &rng).cls, e.cls);
  return out;
}

namespace {

struct ModelOutcome {
  bool nonzero = false, factors = false, character_ok = false, line_map_nonzero = false;
  int h_line = 0, h_full = 0;
};

// staircase on A, T-average, then test in the T-invariant cochains of A
ModelOutcome run_model(int p, const Indexed& A, const Indexed& T, const EquivariantComplex& DA,
                       const EquivariantComplex& DT, int a, int b, std::uint64_t seed) {
  auto TA = truncate_between(DA, a, b);
  auto TT = truncate_between(DT, a, b);
  auto st = hyperext_class(A.MG.G, TA);
  if (st.a != a || st.b != b) throw Error("alpha: unexpected cohomology degrees of the model");
  auto Ha = cohomology(TA.C, a), Hb = cohomology(TA.C, b);
  if (!(Ha.basis == st.Abasis)) throw Error("alpha: cohomology basis mismatch");
  const RingPtr& R = Ha.R;
  std::vector<Mat> WT, aT, bT;
  for (auto& acts : TT.action) {
    aT.push_back(induced_action(Ha, acts[a - TT.C.lo]));
    bT.push_back(induced_action(Hb, acts[b - TT.C.lo]));
    WT.push_back(kron(transpose(inverse(bT.back())), aT.back()));
  }
  const int deg = p - 1;
  auto IC = invariant_cochains(A.MG.G, st.cls.W, conjugation_symmetry(A, T, WT), deg + 1);
  auto avg = IC.average(deg, st.cls.cocycle);
  if (!all_zero(matvec(IC.d[deg], avg))) throw Error("alpha: averaged class is not a cocycle");
  ModelOutcome out;
  std::vector<elt> x;
  Solver bound(IC.d[deg - 1]);
  out.nonzero = !bound.solve(avg, x);

  // the A-invariant line of H^a and its T-character
  Mat stack(R, 0, Ha.dim());
  for (auto& m : st.A.action) stack = vstack(stack, m - Mat::identity(R, Ha.dim()));
  Mat Lb = kernel(stack);
  if (Lb.cols != 1 || Hb.dim() != 1) throw Error("alpha: the invariant line is not one-dimensional");
  auto v = Lb.column(0);
  out.character_ok = true;
  std::vector<Mat> lineT;
  for (size_t t = 0; t < T.MG.elements.size(); ++t) {
    auto w = matvec(aT[t], v);
    int piv = 0;
    while (v[piv] == 0) ++piv;
    elt lambda = R->mul(w[piv], R->inv(v[piv]));
    for (size_t k = 0; k < v.size(); ++k)
      if (w[k] != R->mul(lambda, v[k])) throw Error("alpha: the invariant line is not T-stable");
    const Mat& tm = T.MG.elements[t];
    elt det = R->one();
    for (int i = 0; i < tm.rows; ++i) det = R->mul(det, tm(i, i));
    out.character_ok &= lambda == R->pow(tm(0, 0), p) && bT[t](0, 0) == det;
    Mat l(R, 1, 1);
    l(0, 0) = R->mul(lambda, R->inv(bT[t](0, 0)));
    lineT.push_back(l);
  }
  auto ICL = invariant_cochains(A.MG.G, trivial_module(R, 1, A.MG.G.order), conjugation_symmetry(A, T, lineT), deg + 1);
  Mat Z = kernel(ICL.d[deg]);
  auto include = [&](const std::vector<elt>& coords) {
    auto full = ICL.expand(deg, coords);
    std::vector<elt> fw(full.size() * v.size(), 0);
    for (size_t c = 0; c < full.size(); ++c)
      for (size_t k = 0; k < v.size(); ++k) fw[c * v.size() + k] = R->mul(full[c], v[k]);
    return IC.average(deg, fw);
  };
  std::vector<std::vector<elt>> iota;
  for (int j = 0; j < Z.cols; ++j) iota.push_back(include(Z.column(j)));
  Mat span = hstack(IC.d[deg - 1], from_columns(R, IC.level[deg].dim, iota));
  out.factors = Solver(span).solve(avg, x);
  auto hl = ICL.H(deg, seed), hw = IC.H(deg, seed);
  out.h_line = hl.dim();
  out.h_full = hw.dim();
  for (int j = 0; j < hl.dim(); ++j)
    if (!bound.solve(include(hl.basis.column(j)), x)) out.line_map_nonzero = true;
  return out;
}

}  // namespace

BorelAlpha alpha_borel(int p, int r, bool with_sym, std::uint64_t seed) {
  if (p < 3) throw Error("alpha_borel: the staircase models need p >= 3");
  auto Fq = Ring::make(RingSpec::galois_field(p, r));
  auto A = additive_group(p, Fq);
  auto T = torus(p, Fq);
  BorelAlpha out;
  out.p = p;
  out.q = (int)Fq->size();
  out.order_A = A.MG.G.order;
  out.order_T = T.MG.G.order;
  auto om = run_model(p, A, T, omega_truncated(A.MG.elements, p), omega_truncated(T.MG.elements, p), 1, p - 1, seed);
  out.omega_nonzero = om.nonzero;
  out.omega_factors = om.factors;
  out.character_ok = om.character_ok;
  out.h_line = om.h_line;
  out.h_full = om.h_full;
  out.line_map_nonzero = om.line_map_nonzero;
  if (with_sym) {
    auto sm = run_model(p, A, T, sym_shifted(A.MG.elements, p, p + 1), sym_shifted(T.MG.elements, p, p + 1), 2, p,
                        seed);
    out.sym_nonzero = sm.nonzero;
    out.sym_factors = sm.factors;
    out.character_ok &= sm.character_ok;
  }
  return out;
}

int chi1_invariant_dim(int p, int r) {
  auto Fq = Ring::make(RingSpec::galois_field(p, r));
  auto A = additive_group(p, Fq);
  auto T = torus(p, Fq);
  std::vector<Mat> chi;
  for (auto& t : T.MG.elements) {
    Mat l(Fq, 1, 1);
    l(0, 0) = Fq->pow(t(0, 0), p);
    chi.push_back(l);
  }
  auto IC = invariant_cochains(A.MG.G, trivial_module(Fq, 1, A.MG.G.order), conjugation_symmetry(A, T, chi), p);
  return IC.H(p - 1).dim();
}

IntegralP2 integral_p2() {
  auto F4 = Ring::make(RingSpec::galois_field(2, 2));
  auto W2 = Ring::make(RingSpec::witt2(RingSpec::galois_field(2, 2)));
  // the fundamental unit (1 + sqrt 5) / 2 modulo 4
  elt eps = 0;
  bool found = false;
  for (elt x = 0; x < (elt)W2->size() && !found; ++x) {
    elt red = W2->reduce_mod_p(x);
    if (W2->sub(W2->sub(W2->mul(x, x), x), W2->one()) == 0 && red != 0 && red != F4->one()) {
      eps = x;
      found = true;
    }
  }
  if (!found) throw Error("integral_p2: no root of x^2 - x - 1 lifting a generator of F_4");
  const elt m1 = W2->neg(W2->one());
  // generators s, tau, a1, a2
  Presentation P{4, {}};
  auto inv = [](int g) { return std::make_pair(g, -1); };
  auto gen = [](int g) { return std::make_pair(g, 1); };
  P.relators = {{gen(0), gen(0)},
                {gen(0), gen(1), inv(0), inv(1)},
                {gen(0), gen(2), inv(0), inv(2)},
                {gen(0), gen(3), inv(0), inv(3)},
                {gen(2), gen(3), inv(2), inv(3)},
                {gen(1), gen(2), inv(1), inv(3), inv(2)},
                {gen(1), gen(3), inv(1), inv(3), inv(3), inv(2)}};
  std::vector<Mat> Vt{diag(W2, {m1, m1}), diag(W2, {eps, W2->inv(eps)}), elementary(W2, 2, 0, 1, W2->one()),
                      elementary(W2, 2, 0, 1, eps)};
  GModule Vtilde{W2, 2, Vt};
  GModule Vtilde1 = frobenius_twist(Vtilde);
  GModule V = reduce_mod_p(Vtilde);
  GModule V1 = frobenius_twist(V);
  const elt w = W2->reduce_mod_p(eps);
  auto chi = [&](const RingPtr& R, elt s, elt tau) { return character_module(R, {s, tau, R->one(), R->one()}); };
  IntegralP2 out;
  auto h = [&](const GModule& M, int i) { return cohomology(presentation_complex(P, M), i); };
  out.h0_chi1sq = h(chi(F4, F4->one(), F4->mul(w, w)), 0).dim();
  out.h0_chi1msq = h(chi(F4, F4->one(), F4->inv(F4->mul(w, w))), 0).dim();
  out.h1_chi2sq = h(chi(F4, F4->one(), F4->inv(F4->mul(w, w))), 1).dim();
  out.h1_chi_tilde = h(chi(W2, W2->frobenius(m1), W2->frobenius(eps)), 1).structure;
  out.h1_vtilde = h(Vtilde1, 1).structure;
  out.chi_tilde_torsion = out.h1_chi_tilde.annihilated_by_p();
  out.vtilde_torsion = out.h1_vtilde.annihilated_by_p();

  // alpha(V): the extension 0 -> V^(1) -> S^2 V -> Lambda^2 V -> 0 on the generators
  auto ext = extension_values(functor_module({FunctorKind::Sym, 2}, V), delta_matrix(F4, 2));
  GModule Wm = hom_module(ext.B, ext.A);
  for (size_t g = 0; g < Wm.action.size(); ++g)
    if (!(Wm.action[g] == V1.action[g])) throw Error("integral_p2: coefficient module is not V^(1)");
  std::vector<elt> alpha;
  for (auto& c : ext.value)
    for (int j = 0; j < c.cols; ++j)
      for (int i = 0; i < c.rows; ++i) alpha.push_back(c(i, j));
  CochainModel model = [&](const GModule& M) { return presentation_complex(P, M); };
  auto C = model(V1);
  auto h1 = cohomology(C, 1), h2 = cohomology(C, 2);
  if (!h1.is_cocycle(alpha)) throw Error("integral_p2: alpha is not a cocycle");
  out.alpha_nonzero = !h1.is_coboundary(alpha);
  auto b = group_bockstein(model, V1, Vtilde1, 1, alpha);
  if (!h2.is_cocycle(b)) throw Error("integral_p2: Bockstein is not a cocycle");
  out.bock_nonzero = !h2.is_coboundary(b);

  // H^1(B_2(F_4), chi_1^2) -> H^1(G, chi_1^2) along reduction
  auto Bq = borel_pair(F4);
  std::vector<elt> sq;
  for (auto& m : Bq.MG.elements) sq.push_back(F4->mul(m(0, 0), m(0, 0)));
  auto hb = bar_cohomology(Bq.MG.G, character_module(F4, sq), 1)[1];
  std::vector<int> img;
  for (auto& m : V.action) {
    int k = Bq.find(m);
    if (k < 0) throw Error("integral_p2: generator image outside B_2(F_4)");
    img.push_back(k);
  }
  TupleCodec tc(Bq.MG.G);
  auto hx = h(chi(F4, F4->one(), F4->mul(w, w)), 1);
  Mat coords(F4, hx.dim(), hb.dim());
  for (int j = 0; j < hb.dim(); ++j) {
    auto f = hb.basis.column(j);
    std::vector<elt> r;
    for (int k : img) r.push_back(k == Bq.MG.G.identity ? 0 : f[tc.nid[k]]);
    if (!hx.is_cocycle(r)) throw Error("integral_p2: restricted class is not a cocycle");
    coords.set_column(j, hx.coords(r));
  }
  out.restriction_injective = hb.dim() > 0 && rank(coords) == hb.dim();
  return out;
}

}  // namespace charp
