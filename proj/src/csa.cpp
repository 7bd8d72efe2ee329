#include "charp/csa.hpp"

#include <mutex>

namespace charp {

bool SimplicialSet::degenerate(int n, simplex x) const {
  for (int j = 0; j < n; ++j)
    if (degen(n - 1, j, face(n, j, x)) == x) return true;
  return false;
}

std::vector<simplex> SimplicialSet::nondegenerate(int n) const {
  std::vector<simplex> out;
  for (simplex x = 0; x < count(n); ++x)
    if (!degenerate(n, x)) out.push_back(x);
  return out;
}

namespace {

struct Nerve : SimplicialSet {
  FiniteGroup G;
  explicit Nerve(FiniteGroup g) : G(std::move(g)) {}
  std::string name() const override { return "B" + G.name; }
  simplex count(int n) const override {
    simplex c = 1;
    for (int k = 0; k < n; ++k) c *= G.order;
    return c;
  }
  std::vector<int> decode(int n, simplex x) const {
    std::vector<int> g(n);
    for (int k = 0; k < n; ++k) {
      g[k] = (int)(x % G.order);
      x /= G.order;
    }
    return g;
  }
  simplex encode(const std::vector<int>& g) const {
    simplex x = 0;
    for (int k = (int)g.size() - 1; k >= 0; --k) x = x * G.order + g[k];
    return x;
  }
  simplex face(int n, int i, simplex x) const override {
    auto g = decode(n, x);
    if (i == 0) {
      g.erase(g.begin());
    } else if (i == n) {
      g.pop_back();
    } else {
      g[i - 1] = G.mul(g[i - 1], g[i]);
      g.erase(g.begin() + i);
    }
    return encode(g);
  }
  simplex degen(int n, int j, simplex x) const override {
    auto g = decode(n, x);
    g.insert(g.begin() + j, G.identity);
    return encode(g);
  }
};

// simplex k at level n: the map [n] -> [1] with k zeros; 0 is the collapsed boundary
struct Circle : SimplicialSet {
  std::string name() const override { return "S1"; }
  simplex count(int n) const override { return n + 1; }
  simplex face(int n, int i, simplex k) const override {
    if (k == 0) return 0;
    simplex z = i < k ? k - 1 : k;
    return (z == 0 || z == n) ? 0 : z;
  }
  simplex degen(int, int j, simplex k) const override {
    if (k == 0) return 0;
    return j < k ? k + 1 : k;
  }
};

struct Product : SimplicialSet {
  SSetPtr X, Y;
  Product(SSetPtr a, SSetPtr b) : X(std::move(a)), Y(std::move(b)) {}
  std::string name() const override { return X->name() + "x" + Y->name(); }
  simplex count(int n) const override { return X->count(n) * Y->count(n); }
  simplex face(int n, int i, simplex x) const override {
    simplex cx = X->count(n);
    return X->face(n, i, x % cx) + X->count(n - 1) * Y->face(n, i, x / cx);
  }
  simplex degen(int n, int j, simplex x) const override {
    simplex cx = X->count(n);
    return X->degen(n, j, x % cx) + X->count(n + 1) * Y->degen(n, j, x / cx);
  }
};

}  // namespace

static CochainComplex integer_complex(const CosimplicialAlgebra& A, const RingPtr& R) {
  std::vector<int> ranks;
  std::vector<Mat> ds;
  for (int n = 0; n <= A.L; ++n) ranks.push_back((int)A.nd[n].size());
  for (int n = 0; n < A.L; ++n) {
    Mat d(R, ranks[n + 1], ranks[n]);
    for (auto& [rc, v] : A.dint[n]) d(rc.first, rc.second) = R->from_int(v);
    ds.push_back(d);
  }
  return CochainComplex(R, 0, ranks, ds);
}

SSetPtr nerve(const FiniteGroup& G) { return std::make_shared<Nerve>(G); }
SSetPtr circle() { return std::make_shared<Circle>(); }
SSetPtr product(const SSetPtr& X, const SSetPtr& Y) { return std::make_shared<Product>(X, Y); }

CosimplicialAlgebra function_algebra(const SSetPtr& X, const RingPtr& R, int L, long long budget) {
  long long total = 0;
  for (int n = 0; n <= L; ++n) total += X->count(n);
  if (total > budget)
    throw SizeLimit("memory budget exceeded: " + X->name() + " up to level " + std::to_string(L) + " has " +
                    std::to_string(total) + " simplices, budget " + std::to_string(budget));
  CosimplicialAlgebra A;
  A.X = X;
  A.R = R;
  A.L = L;
  A.hcache = std::make_shared<std::map<int, CohomologySlice>>();
  for (int n = 0; n <= L; ++n) {
    A.nd.push_back(X->nondegenerate(n));
    std::map<simplex, int> idx;
    for (int k = 0; k < (int)A.nd[n].size(); ++k) idx[A.nd[n][k]] = k;
    A.nd_index.push_back(std::move(idx));
  }
  A.dint.resize(L);
  for (int n = 0; n < L; ++n)
    for (int r = 0; r < (int)A.nd[n + 1].size(); ++r)
      for (int i = 0; i <= n + 1; ++i) {
        auto it = A.nd_index[n].find(X->face(n + 1, i, A.nd[n + 1][r]));
        if (it != A.nd_index[n].end()) A.dint[n][{r, it->second}] += i % 2 ? -1 : 1;
      }
  A.normalized = integer_complex(A, R);
  return A;
}

CosimplicialAlgebra nerve_algebra(const FiniteGroup& G, const RingPtr& R, int L, long long budget) {
  return function_algebra(nerve(G), R, L, budget);
}

CosimplicialAlgebra CosimplicialAlgebra::over(const RingPtr& R2) const {
  CosimplicialAlgebra B = *this;
  B.R = R2;
  B.hcache = std::make_shared<std::map<int, CohomologySlice>>();
  B.normalized = integer_complex(B, R2);
  return B;
}

const CohomologySlice& CosimplicialAlgebra::H(int i) const {
  auto it = hcache->find(i);
  if (it == hcache->end()) it = hcache->emplace(i, cohomology(normalized, i)).first;
  return it->second;
}

CosimplicialModule CosimplicialAlgebra::module() const {
  CosimplicialModule M;
  M.R = R;
  M.L = L;
  for (int n = 0; n <= L; ++n) M.ranks.push_back((int)X->count(n));
  M.coface.resize(L + 1);
  M.codeg.resize(L + 1);
  for (int n = 1; n <= L; ++n)
    for (int i = 0; i <= n; ++i) {
      Mat m(R, M.ranks[n], M.ranks[n - 1]);
      for (simplex y = 0; y < X->count(n); ++y) m((int)y, (int)X->face(n, i, y)) = R->one();
      M.coface[n].push_back(m);
    }
  for (int n = 0; n < L; ++n)
    for (int j = 0; j <= n; ++j) {
      Mat m(R, M.ranks[n], M.ranks[n + 1]);
      for (simplex y = 0; y < X->count(n); ++y) m((int)y, (int)X->degen(n, j, y)) = R->one();
      M.codeg[n].push_back(m);
    }
  return M;
}

std::vector<elt> CosimplicialAlgebra::mul(int, const std::vector<elt>& a, const std::vector<elt>& b) const {
  std::vector<elt> out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = R->mul(a[k], b[k]);
  return out;
}

std::vector<elt> CosimplicialAlgebra::unit(int n) const { return std::vector<elt>(X->count(n), R->one()); }

void CosimplicialAlgebra::validate() const {
  std::mt19937_64 rng(7);
  auto M = module();
  for (int n = 0; n <= std::min(L, 3); ++n) {
    int rk = M.ranks[n];
    std::vector<elt> a(rk), b(rk), c(rk);
    for (int k = 0; k < rk; ++k) a[k] = R->random(rng), b[k] = R->random(rng), c[k] = R->random(rng);
    if (mul(n, a, b) != mul(n, b, a)) throw Error("multiplication is not commutative");
    if (mul(n, mul(n, a, b), c) != mul(n, a, mul(n, b, c))) throw Error("multiplication is not associative");
    if (mul(n, a, unit(n)) != a) throw Error("unit law fails");
    if (n + 1 <= L)
      for (auto& f : M.coface[n + 1])
        if (matvec(f, mul(n, a, b)) != mul(n + 1, matvec(f, a), matvec(f, b)))
          throw Error("coface is not multiplicative");
  }
}

HClass make_class(const CosimplicialAlgebra& A, int degree, const std::vector<elt>& cocycle) {
  if ((int)cocycle.size() != A.normalized.rank(degree)) throw Error("cochain has the wrong length");
  for (elt v : matvec(A.normalized.diff(degree), cocycle))
    if (v) throw Error("not a cocycle in degree " + std::to_string(degree));
  return {degree, cocycle};
}

bool same_class(const CosimplicialAlgebra& A, const HClass& x, const HClass& y) {
  if (x.degree != y.degree) return false;
  return A.H(x.degree).equal(x.cocycle, y.cocycle);
}

bool is_zero_class(const CosimplicialAlgebra& A, const HClass& x) { return A.H(x.degree).is_coboundary(x.cocycle); }

HClass add(const CosimplicialAlgebra& A, const HClass& x, const HClass& y) {
  HClass z = x;
  for (size_t k = 0; k < z.cocycle.size(); ++k) z.cocycle[k] = A.R->add(x.cocycle[k], y.cocycle[k]);
  return z;
}

HClass cup(const CosimplicialAlgebra& A, const HClass& x, const HClass& y) {
  int a = x.degree, b = y.degree, n = a + b;
  if (n > A.L) throw Error("cup product degree exceeds the level bound");
  std::vector<elt> out(A.nd[n].size());
  for (size_t r = 0; r < out.size(); ++r) {
    simplex f = A.nd[n][r], g = A.nd[n][r];
    for (int m = n; m > a; --m) f = A.X->face(m, m, f);
    for (int m = n; m > b; --m) g = A.X->face(m, 0, g);
    auto fi = A.nd_index[a].find(f), gi = A.nd_index[b].find(g);
    if (fi == A.nd_index[a].end() || gi == A.nd_index[b].end()) continue;
    out[r] = A.R->mul(x.cocycle[fi->second], y.cocycle[gi->second]);
  }
  return make_class(A, n, out);
}

std::vector<HClass> cohomology_basis(const CosimplicialAlgebra& A, int degree) {
  const auto& h = A.H(degree);
  std::vector<HClass> out;
  for (int k = 0; k < h.basis.cols; ++k) out.push_back({degree, h.basis.column(k)});
  return out;
}

ComplexMap frobenius_map(const CosimplicialAlgebra& A) {
  if (A.R->exponent() != 1) throw Error("Frobenius needs a ring of characteristic p");
  CochainComplex tw = A.normalized;
  for (auto& m : tw.d) m = frobenius(m);
  // delta_y^p = delta_y, so x -> x^p is the identity on indicator bases after the twist
  std::vector<Mat> comps;
  for (int n = 0; n <= A.L; ++n) comps.push_back(Mat::identity(A.R, A.normalized.rank(n)));
  return ComplexMap(tw, A.normalized, comps);
}

std::vector<Mat> realize_cocycle(const CosimplicialAlgebra& A, const HClass& x, int n) {
  const auto& R = A.R;
  const auto& X = *A.X;
  int i = x.degree;
  make_class(A, i, x.cocycle);
  DKLayout lay(CochainComplex::concentrated(R, i, 1), n);
  std::vector<Mat> out;
  for (int k = 0; k <= n; ++k) {
    int rk = lay.rank[k];
    Mat Xk(R, (int)X.count(k), rk);
    if (rk == 0) {
      out.push_back(Xk);
      continue;
    }
    std::vector<Mat> sdeg, cf;
    for (int j = 0; j < k; ++j) {
      SparseMat s = lay.codeg(k - 1, j);
      Mat m(R, lay.rank[k - 1], rk);
      for (int c = 0; c < rk; ++c)
        for (auto [r, v] : s[c]) m(r, c) = v;
      sdeg.push_back(out[k - 1] * m);
    }
    Mat M;
    std::shared_ptr<Solver> sol;
    if (k > i) {
      for (int t = 0; t <= k; ++t) {
        SparseMat s = lay.coface(k, t);
        Mat m(R, rk, lay.rank[k - 1]);
        for (int c = 0; c < (int)s.size(); ++c)
          for (auto [r, v] : s[c]) m(r, c) = v;
        M = t == 0 ? m : hstack(M, m);
      }
      if (rank(M) != rk) throw Error("cocycle realization is not determined by the cofaces");
      sol = std::make_shared<Solver>(transpose(M));
    }
    for (simplex y = 0; y < X.count(k); ++y) {
      int row = (int)y;
      bool done = false;
      for (int j = 0; j < k && !done; ++j) {
        simplex yp = X.face(k, j, y);
        if (X.degen(k - 1, j, yp) != y) continue;
        for (int c = 0; c < rk; ++c) Xk(row, c) = sdeg[j]((int)yp, c);
        done = true;
      }
      if (done) continue;
      if (k == i) {
        Xk(row, 0) = x.cocycle[A.nd_index[i].at(y)];
        continue;
      }
      std::vector<elt> b;
      for (int t = 0; t <= k; ++t) {
        simplex f = X.face(k, t, y);
        for (int c = 0; c < lay.rank[k - 1]; ++c) b.push_back(out[k - 1]((int)f, c));
      }
      std::vector<elt> z;
      if (!sol->solve(b, z)) throw Error("cocycle realization has no solution");
      for (int c = 0; c < rk; ++c) Xk(row, c) = z[c];
    }
    out.push_back(Xk);
  }
  return out;
}

const UniversalClasses& universal_classes(int p, int i) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<UniversalClasses>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, i}];
  if (slot) return *slot;
  auto Fp = Ring::make(RingSpec::prime_field(p));
  auto Z2 = Ring::make(RingSpec::integers_mod(p, 2));
  auto U = std::make_unique<UniversalClasses>();
  U->p = p;
  U->i = i;
  U->sym = derived_power({FunctorKind::Sym, p}, CochainComplex::concentrated(Fp, i, 1), i + 1, i + 2);
  auto div2 = derived_power({FunctorKind::Div, p}, CochainComplex::concentrated(Z2, i, 1), i + 1, i + 2);
  const auto& lay = *U->sym.layout;
  int b = lay.lev[i][lay.index[i].at(i == 0 ? 0u : (1u << i) - 1u)].offset;
  std::vector<int> top(p, b);
  U->p0.assign(U->sym.complex.rank(i), 0);
  U->p0[U->sym.find(i, top)] = Fp->one();
  // norm fiber generator: lift e^[p] to Gamma^p over Z/p^2, apply d, divide by the norm
  std::vector<elt> e(div2.complex.rank(i), 0);
  e[div2.find(i, top)] = Z2->one();
  auto c = matvec(div2.complex.diff(i), e);
  U->p1.assign(U->sym.complex.rank(i + 1), 0);
  for (int k = 0; k < (int)c.size(); ++k) {
    const auto& J = div2.mono[i + 1][k];
    long long stab = 1, run = 0;
    for (size_t t = 0; t < J.size(); ++t) {
      run = (t > 0 && J[t] == J[t - 1]) ? run + 1 : 1;
      stab *= run;
    }
    long long cv = (long long)c[k];
    long long s;
    if (stab % p == 0) {
      if (cv % p) throw Error("norm fiber lift is not divisible by p");
      s = (cv / p) % p * (long long)Fp->inv((elt)((stab / p) % p)) % p;
    } else {
      s = cv % p * (long long)Fp->inv((elt)(stab % p)) % p;
    }
    int r = U->sym.find(i + 1, J);
    if (r < 0) throw Error("norm fiber generator leaves the normalized part");
    U->p1[r] = Fp->neg((elt)s);
  }
  for (elt v : matvec(U->sym.complex.diff(i + 1), U->p1))
    if (v) throw Error("universal P1 class is not a cocycle");
  slot = std::move(U);
  return *slot;
}

HClass steenrod(const CosimplicialAlgebra& A, const HClass& x, int m) {
  if (m != 0 && m != 1) throw Error("only P0 and P1 are provided");
  if (A.R->exponent() != 1) throw Error("Steenrod operations need coefficients in a field of characteristic p");
  int i = x.degree, n = i + m, p = A.R->p();
  if (n > A.L - 1) throw Error("Steenrod output degree exceeds the level bound");
  const auto& U = universal_classes(p, i);
  const auto& u = m == 0 ? U.p0 : U.p1;
  Mat Xn = realize_cocycle(A, x, n)[n];
  std::vector<elt> out(A.nd[n].size(), 0);
  for (size_t r = 0; r < out.size(); ++r) {
    int row = (int)A.nd[n][r];
    elt acc = 0;
    for (size_t J = 0; J < u.size(); ++J) {
      if (!u[J]) continue;
      elt prod = A.R->from_int(u[J]);
      for (int b : U.sym.mono[n][J]) prod = A.R->mul(prod, Xn(row, b));
      acc = A.R->add(acc, prod);
    }
    out[r] = acc;
  }
  return make_class(A, n, out);
}

HClass witt_bockstein(const CosimplicialAlgebra& A, const HClass& x) {
  if (!A.R->is_field()) throw Error("Witt vector Bockstein needs coefficients in a finite field");
  auto W = Ring::make(RingSpec::witt2(A.R->spec()));
  SES s;
  s.sub = A.normalized;
  s.quot = A.normalized;
  s.lift = [W](int, const std::vector<elt>& v) {
    std::vector<elt> w(v.size());
    for (size_t k = 0; k < v.size(); ++k) w[k] = W->wpair(v[k], 0);
    return w;
  };
  s.mid_d = [W, &A](int deg, const std::vector<elt>& w) {
    std::vector<elt> out(A.normalized.rank(deg + 1), 0);
    if (deg < 0 || deg >= A.L) return out;
    for (auto& [rc, v] : A.dint[deg]) out[rc.first] = W->add(out[rc.first], W->mul(W->from_int(v), w[rc.second]));
    return out;
  };
  s.retract = [W](int, const std::vector<elt>& w) {
    std::vector<elt> out(w.size());
    for (size_t k = 0; k < w.size(); ++k) {
      if (W->w0(w[k])) throw Error("element is not in the image of V");
      out[k] = W->w1(w[k]);
    }
    return out;
  };
  return make_class(A, x.degree + 1, connecting_cocycle(s, x.degree, x.cocycle));
}

HClass bockstein(const CosimplicialAlgebra& A, const HClass& x) {
  if (!A.R->is_field()) throw Error("Bockstein needs coefficients in a finite field");
  RingPtr R2 = A.R->degree() == 1 ? Ring::make(RingSpec::integers_mod(A.R->p(), 2))
                                   : Ring::make(RingSpec::witt2(A.R->spec()));
  auto A2 = A.over(R2);
  return make_class(A, x.degree + 1, connecting_cocycle(bockstein_ses(A2.normalized), x.degree, x.cocycle));
}

BockCheck algebra_bockstein_check(const CosimplicialAlgebra& A, const HClass& x) {
  const auto& R = *A.R;
  if (R.kind() != RingKind::IntegersModPE || R.exponent() != 2) throw Error("algebra Bockstein check needs Z/p^2 coefficients");
  int p = R.p(), i = x.degree, n = i + 1;
  if (n > A.L - 1) throw Error("algebra Bockstein degree exceeds the level bound");
  long long p2 = (long long)p * p, p3 = p2 * p;
  long long fact = 1;
  for (int k = 2; k < p; ++k) fact = fact * k % p2;
  long long finv = 1;
  while (fact * finv % p2 != 1) ++finv;
  BockCheck out;
  out.lhs.degree = out.rhs.degree = n;
  for (simplex sigma : A.nd[n]) {
    // x~ lifted to Z/p^3; gamma(x~) = x~^[p], d, then the norm divides the constant monomials by p!
    long long csum = 0;
    for (int t = 0; t <= n; ++t) {
      auto it = A.nd_index[i].find(A.X->face(n, t, sigma));
      long long v = it == A.nd_index[i].end() ? 0 : (long long)x.cocycle[it->second];
      long long vp = 1;
      for (int k = 0; k < p; ++k) vp = vp * v % p3;
      csum = ((csum + (t % 2 ? -vp : vp)) % p3 + p3) % p3;
    }
    if (csum % p) throw Error("input is not a cocycle modulo p");
    long long q = csum / p % p2;
    // m o gamma is minus the connecting map of S^p -> Gamma^p -> F*
    long long lhs = (p2 - q * finv % p2) % p2;
    out.lhs.cocycle.push_back(R.from_int(lhs));
    // Bock o phi with phi(x) = x^p lifted as x~^p
    out.rhs.cocycle.push_back(R.from_int(q));
  }
  make_class(A, n, out.lhs.cocycle);
  make_class(A, n, out.rhs.cocycle);
  out.equal = same_class(A, out.lhs, out.rhs);
  return out;
}

}  // namespace charp
