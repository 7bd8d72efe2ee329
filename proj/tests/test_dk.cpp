#include "charp/dk.hpp"
#include "doctest.h"

using namespace charp;

namespace {
RingPtr F(int p, int r = 1) { return Ring::make(RingSpec::galois_field(p, r)); }

long long binom(int n, int k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

CochainComplex shifted_free(const RingPtr& R, int rank, int deg) { return CochainComplex::concentrated(R, deg, rank); }

// cohomology dims of degrees 0..B
std::vector<int> dims_upto(const CochainComplex& C, int B) {
  std::vector<int> out;
  for (int i = 0; i <= B; ++i) out.push_back(cohomology(C, i).dim());
  return out;
}
}  // namespace

TEST_CASE("Dold-Kan ranks and cosimplicial identities") {
  auto R = F(3);
  auto A = dold_kan(CochainComplex::concentrated(R, 0, 2), 4);
  for (int r : A.ranks) CHECK(r == 2);
  auto B = dold_kan(shifted_free(R, 1, 1), 5);
  for (int n = 0; n <= 5; ++n) CHECK(B.ranks[n] == n);
  CHECK_NOTHROW(A.validate());
  CHECK_NOTHROW(B.validate());
  std::mt19937_64 rng(11);
  auto C = random_complex(R, 0, {1, 0, 1, 1}, 2, rng);
  auto D = dold_kan(C, 5);
  CHECK_NOTHROW(D.validate());
  for (int n = 0; n <= 5; ++n) {
    long long expect = 0;
    for (int k = 0; k <= 3; ++k) expect += binom(n, k) * C.rank(k);
    CHECK(D.ranks[n] == expect);
  }
  CHECK_THROWS_AS(dold_kan(CochainComplex::concentrated(R, -1, 1), 2), Error);
}

TEST_CASE("conormalize inverts Dold-Kan") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    auto R = t % 2 ? F(2) : F(3);
    std::vector<int> h(1 + rng() % 4);
    for (auto& x : h) x = (int)(rng() % 3);
    auto C = random_complex(R, 0, h, 1, rng);
    int L = C.hi() + 1;
    auto N = conormalize(dold_kan(C, L));
    for (int i = 0; i <= C.hi(); ++i) CHECK(N.complex.rank(i) == C.rank(i));
    CHECK(N.complex.rank(L) == 0);
    CHECK(dims_upto(N.complex, C.hi()) == cohomology_dims(C));
  }
  auto R = F(5);
  auto N = conormalize(dold_kan(shifted_free(R, 1, 1), 3));
  CHECK(dims_upto(N.complex, 2) == std::vector<int>{0, 1, 0});
}

TEST_CASE("functor ranks and functoriality") {
  auto R = F(3);
  std::mt19937_64 rng(13);
  Mat f = Mat::random(R, 2, 2, rng);
  CHECK(apply_functor({FunctorKind::Sym, 2}, f).rows == 3);
  CHECK(apply_functor({FunctorKind::Ext, 2}, f).rows == 1);
  CHECK(apply_functor({FunctorKind::Div, 2}, f).rows == 3);
  for (int t = 0; t < 100; ++t) {
    auto Rt = t % 2 ? F(2) : F(3);
    int a = 1 + rng() % 3, b = 1 + rng() % 3, c = 1 + rng() % 3;
    Mat g = Mat::random(Rt, c, b, rng), h = Mat::random(Rt, b, a, rng);
    for (auto k : {FunctorKind::Sym, FunctorKind::Div, FunctorKind::Ext}) {
      PolyFunctor P{k, 1 + (int)(rng() % 3)};
      CHECK(apply_functor(P, g * h) == apply_functor(P, g) * apply_functor(P, h));
    }
  }
  // Ext^n on an n x n matrix is its determinant
  Mat m = Mat::from_rows(R, {{1, 2}, {0, 2}});
  CHECK(apply_functor({FunctorKind::Ext, 2}, m)(0, 0) == 2u);
}

TEST_CASE("psi and Delta are natural") {
  std::mt19937_64 rng(14);
  for (int p : {2, 3}) {
    auto R = F(p);
    for (int t = 0; t < 20; ++t) {
      int a = 1 + rng() % 3, b = 1 + rng() % 3;
      Mat f = Mat::random(R, b, a, rng);
      PolyFunctor G{FunctorKind::Div, p}, S{FunctorKind::Sym, p};
      CHECK(psi_matrix(R, b) * apply_functor(G, f) == frobenius(f) * psi_matrix(R, a));
      CHECK(delta_matrix(R, b) * frobenius(f) == apply_functor(S, f) * delta_matrix(R, a));
      CHECK(norm_matrix(R, p, b) * apply_functor(S, f) == apply_functor(G, f) * norm_matrix(R, p, a));
      CHECK(restriction_matrix(R, p, b) * apply_functor(G, f) == apply_functor(S, f) * restriction_matrix(R, p, a));
    }
    // over F_{p^2} the twist is visible
    auto Q = F(p, 2);
    Mat f = Mat::random(Q, 2, 2, rng);
    CHECK(psi_matrix(Q, 2) * apply_functor({FunctorKind::Div, p}, f) == frobenius(f) * psi_matrix(Q, 2));
  }
}

TEST_CASE("derived power agrees with the dense levelwise route") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 12; ++t) {
    auto R = t % 2 ? F(2) : F(3);
    auto C = random_complex(R, 0, {(int)(rng() % 2), 1, (int)(rng() % 2)}, 1, rng);
    for (auto k : {FunctorKind::Sym, FunctorKind::Div, FunctorKind::Ext}) {
      PolyFunctor P{k, 2 + (int)(rng() % 2)};
      int B = 2;
      auto D = derived_power(P, C, B);
      auto N = conormalize(levelwise(P, dold_kan(C, B + 1)));
      CHECK(D.complex.ranks == N.complex.ranks);
      CHECK(D.complex.d.size() == N.complex.d.size());
      for (size_t i = 0; i < D.complex.d.size(); ++i) CHECK(D.complex.d[i] == N.complex.d[i]);
      // independence of the level bound
      auto D2 = derived_power(P, C, B + 1);
      CHECK(dims_upto(D.complex, B) == dims_upto(D2.complex, B));
    }
  }
  CHECK_THROWS_AS(derived_power({FunctorKind::Sym, 2}, shifted_free(F(2), 1, 1), 8, 8), Error);
}

TEST_CASE("degree zero input gives F(E)") {
  auto R = F(3);
  auto D = derived_power({FunctorKind::Sym, 3}, CochainComplex::concentrated(R, 0, 2), 2);
  CHECK(dims_upto(D.complex, 2) == std::vector<int>{4, 0, 0});
}

TEST_CASE("decalage: Div^n(E[-1]) is Ext^n E in degree n") {
  for (int p : {2, 3}) {
    auto R = F(p);
    for (int n = 1; n <= p; ++n)
      for (int e = 1; e <= 4; ++e) {
        auto D = derived_power({FunctorKind::Div, n}, shifted_free(R, e, 1), n + 1);
        std::vector<int> expect(n + 2, 0);
        expect[n] = (int)binom(e, n);
        CHECK(dims_upto(D.complex, n + 1) == expect);
      }
  }
}

TEST_CASE("symmetric power cohomology") {
  auto D2 = derived_power({FunctorKind::Sym, 2}, shifted_free(F(2), 2, 1), 3);
  CHECK(dims_upto(D2.complex, 3) == std::vector<int>{0, 2, 3, 0});
  auto D3 = derived_power({FunctorKind::Sym, 3}, shifted_free(F(3), 3, 1), 4);
  CHECK(dims_upto(D3.complex, 4) == std::vector<int>{0, 3, 3, 1, 0});
}

TEST_CASE("natural maps on derived powers") {
  for (int p : {2, 3}) {
    auto R = F(p);
    auto C = shifted_free(R, 2, 1);
    int B = p + 1;
    auto S = derived_power({FunctorKind::Sym, p}, C, B);
    auto G = derived_power({FunctorKind::Div, p}, C, B);
    auto T = frobenius_twist(derived_power({FunctorKind::Sym, 1}, C, B));
    auto N = natural_map(NatKind::Norm, S, G);
    auto r = natural_map(NatKind::Restr, G, S);
    auto Dl = natural_map(NatKind::Delta, T, S);
    auto Ps = natural_map(NatKind::Psi, G, T);
    for (int n = 0; n <= S.L; ++n) {
      CHECK((r.f[n] * N.f[n]).is_zero());
      CHECK((N.f[n] * r.f[n]).is_zero());
      CHECK(Dl.f[n] * Ps.f[n] == r.f[n]);
    }
    // Delta induces an iso F*E -> H^1
    CHECK(rank(induced_on_H(Dl, 1)) == 2);
  }
}

TEST_CASE("four-term exact sequence F*M -> S^p M -> Gamma^p M -> F*M") {
  for (int p : {2, 3}) {
    auto R = F(p);
    for (int d = 1; d <= 3; ++d) {
      Mat D = delta_matrix(R, d), N = norm_matrix(R, p, d), P = psi_matrix(R, d);
      int s = (int)binom(d + p - 1, p);
      CHECK(rank(D) == d);
      CHECK(rank(N) == s - d);
      CHECK(rank(P) == d);
      CHECK((N * D).is_zero());
      CHECK((P * N).is_zero());
      CHECK(rank(D) == s - rank(N));  // ker N = im Delta
      CHECK(rank(N) == s - rank(P));  // ker psi = im N
    }
  }
}

TEST_CASE("norm cokernel over Z/p^2") {
  for (int p : {2, 3}) {
    auto R = Ring::make(RingSpec::integers_mod(p, 2));
    for (int d = 1; d <= 3; ++d) {
      auto sm = diagonalize(norm_matrix(R, p, d));
      int units = 0, ps = 0;
      for (int v : sm.val) {
        if (v == 0) ++units;
        if (v == 1) ++ps;
      }
      CHECK(units == (int)binom(d + p - 1, p) - d);
      CHECK(ps == d);
    }
  }
}

TEST_CASE("Omega complexes") {
  auto R = F(2);
  auto O = omega_complex(R, 2, 2);
  CHECK(O.ranks == std::vector<int>{3, 4, 1});
  CHECK(cohomology_dims(O) == std::vector<int>{2, 2, 0});
  for (int p : {2, 3, 5}) {
    auto Rp = F(p);
    for (int n = 1; n <= p + 2; ++n) {
      if (n % p == 0) continue;
      for (int x : cohomology_dims(omega_complex(Rp, 2, n))) CHECK(x == 0);
    }
  }
  std::mt19937_64 rng(16);
  auto R3 = F(3);
  auto O3 = omega_complex(R3, 2, 3);
  Mat g = random_invertible(R3, 2, rng);
  auto act = omega_action(g, 3);
  for (int i = 0; i + 1 < (int)act.size(); ++i) CHECK(O3.diff(i) * act[i] == act[i + 1] * O3.diff(i));
}
