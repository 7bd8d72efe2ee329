#include "charp/csa.hpp"
#include "doctest.h"

using namespace charp;

namespace {
RingPtr F(int p, int r = 1) { return Ring::make(RingSpec::galois_field(p, r)); }
RingPtr Z(int p, int e) { return Ring::make(RingSpec::integers_mod(p, e)); }

// the homomorphism C_p -> F_p, g -> g, as a normalized 1-cocycle
HClass generator1(const CosimplicialAlgebra& A) {
  std::vector<elt> v;
  for (simplex g : A.nd[1]) v.push_back(A.R->from_int(g));
  return make_class(A, 1, v);
}

HClass random_representative(const CosimplicialAlgebra& A, const HClass& x, std::mt19937_64& rng) {
  HClass y = x;
  if (x.degree == 0) return y;
  Mat d = A.normalized.diff(x.degree - 1);
  std::vector<elt> w(d.cols);
  for (auto& t : w) t = A.R->random(rng);
  auto b = matvec(d, w);
  for (size_t k = 0; k < y.cocycle.size(); ++k) y.cocycle[k] = A.R->add(y.cocycle[k], b[k]);
  return y;
}
}  // namespace

TEST_CASE("simplicial sets satisfy the simplicial identities") {
  auto R = F(2);
  for (auto X : {nerve(FiniteGroup::cyclic(3)), circle(), product(circle(), nerve(FiniteGroup::cyclic(2))),
                 nerve(FiniteGroup::symmetric(3))}) {
    auto A = function_algebra(X, R, 3);
    CHECK_NOTHROW(A.module().validate());
    CHECK_NOTHROW(A.validate());
  }
  CHECK_THROWS_AS(nerve_algebra(FiniteGroup::cyclic(50), R, 6), Error);
}

TEST_CASE("nerve cohomology") {
  auto T = nerve_algebra(FiniteGroup::trivial(), F(3), 4);
  CHECK(cohomology_dims(T.normalized) == std::vector<int>{1, 0, 0, 0, 0});
  for (int p : {2, 3}) {
    auto A = nerve_algebra(FiniteGroup::cyclic(p), F(p), 6);
    for (int i = 0; i <= 5; ++i) CHECK(A.H(i).dim() == 1);
  }
  auto A = nerve_algebra(FiniteGroup::cyclic(2), Z(2, 2), 6);
  CHECK(A.H(0).structure.free_rank == 1);
  // trivial action: H^even = M/2M and H^odd = M[2], both Z/2 for M = Z/4
  for (int i = 1; i <= 5; ++i) {
    CHECK(A.H(i).structure.free_rank == 0);
    CHECK(A.H(i).structure.torsion == std::vector<int>{1});
  }
  // circle: exterior algebra on one degree one class
  auto S = function_algebra(circle(), Z(3, 2), 4);
  CHECK(S.H(0).structure.free_rank == 1);
  CHECK(S.H(1).structure.free_rank == 1);
  CHECK(S.H(2).structure.is_zero());
}

TEST_CASE("Frobenius of nerve algebras is the identity") {
  for (int p : {2, 3}) {
    auto A = nerve_algebra(FiniteGroup::cyclic(p), F(p), 4);
    auto phi = frobenius_map(A);
    for (int n = 0; n <= 4; ++n) CHECK(phi.at(n) == Mat::identity(A.R, A.normalized.rank(n)));
    CHECK(induced_on_H(phi, 0) == Mat::identity(A.R, 1));
  }
  CHECK_THROWS_AS(frobenius_map(nerve_algebra(FiniteGroup::cyclic(2), Z(2, 2), 2)), Error);
}

TEST_CASE("multiplication after Delta is the Frobenius on symmetric algebras") {
  std::mt19937_64 rng(21);
  for (auto R : {F(2), F(3), F(2, 2), F(3, 2)}) {
    int p = R->p();
    for (int t = 0; t < 10; ++t) {
      int d = 1 + rng() % 3;
      Mat x = Mat::random(R, d, 1, rng);
      CHECK(apply_functor({FunctorKind::Sym, p}, x) == delta_matrix(R, d) * frobenius(x));
    }
  }
}

TEST_CASE("cocycle realization is a cosimplicial map") {
  auto A = nerve_algebra(FiniteGroup::cyclic(3), F(3), 4);
  auto x = generator1(A);
  auto X = realize_cocycle(A, x, 3);
  auto M = A.module();
  DKLayout lay(CochainComplex::concentrated(A.R, 1, 1), 3);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) {
      auto s = lay.coface(n, i);
      Mat k(A.R, lay.rank[n], lay.rank[n - 1]);
      for (int c = 0; c < (int)s.size(); ++c)
        for (auto [r, v] : s[c]) k(r, c) = v;
      CHECK(X[n] * k == M.coface[n][i] * X[n - 1]);
    }
}

TEST_CASE("P0 is the identity on nerve algebras") {
  for (int p : {2, 3}) {
    auto A = nerve_algebra(FiniteGroup::cyclic(p), F(p), 5);
    for (int i = 0; i <= 3; ++i)
      for (auto& x : cohomology_basis(A, i)) CHECK(same_class(A, steenrod(A, x, 0), x));
  }
}

TEST_CASE("P1 equals the Bockstein and the Witt vector Bockstein") {
  std::mt19937_64 rng(22);
  for (int p : {2, 3}) {
    auto A = nerve_algebra(FiniteGroup::cyclic(p), F(p), 4);
    for (int i = 0; i <= 2; ++i)
      for (auto& x : cohomology_basis(A, i)) {
        auto P1 = steenrod(A, x, 1);
        CHECK(same_class(A, P1, bockstein(A, x)));
        CHECK(same_class(A, P1, witt_bockstein(A, x)));
        if (i == 0) CHECK(is_zero_class(A, P1));
        for (int t = 0; t < 20; ++t) CHECK(same_class(A, steenrod(A, random_representative(A, x, rng), 1), P1));
      }
    auto x = generator1(A);
    CHECK_FALSE(is_zero_class(A, steenrod(A, x, 1)));
    if (p == 2) CHECK(same_class(A, steenrod(A, x, 1), cup(A, x, x)));
    // additivity on H^1 + H^1 and Bockstein squared
    auto y = add(A, x, x);
    CHECK(same_class(A, steenrod(A, y, 1), add(A, steenrod(A, x, 1), steenrod(A, x, 1))));
    CHECK(is_zero_class(A, witt_bockstein(A, witt_bockstein(A, x))));
  }
  // over F_4 the Witt Bockstein agrees with the Galois ring Bockstein
  auto A4 = nerve_algebra(FiniteGroup::cyclic(2), F(2, 2), 4);
  for (auto& x : cohomology_basis(A4, 1)) CHECK(same_class(A4, witt_bockstein(A4, x), bockstein(A4, x)));
}

TEST_CASE("Witt Bockstein vanishes on liftable classes") {
  auto A = function_algebra(circle(), F(3), 4);
  for (int i = 0; i <= 1; ++i)
    for (auto& x : cohomology_basis(A, i)) CHECK(is_zero_class(A, witt_bockstein(A, x)));
}

TEST_CASE("algebra Bockstein: m o gamma = Bock o phi") {
  for (int p : {2, 3}) {
    auto A = nerve_algebra(FiniteGroup::cyclic(p), Z(p, 2), 4);
    auto A0 = A.over(F(p));
    auto x = generator1(A0);
    auto r = algebra_bockstein_check(A, x);
    CHECK(r.equal);
    CHECK_FALSE(is_zero_class(A, r.lhs));
    auto u = cohomology_basis(A0, 0)[0];
    auto r0 = algebra_bockstein_check(A, u);
    CHECK(r0.equal);
    CHECK(is_zero_class(A, r0.lhs));
    auto S = function_algebra(product(nerve(FiniteGroup::trivial()), circle()), Z(p, 2), 4);
    auto S0 = S.over(F(p));
    for (int i = 0; i <= 1; ++i)
      for (auto& y : cohomology_basis(S0, i)) {
        auto rs = algebra_bockstein_check(S, y);
        CHECK(rs.equal);
        CHECK(is_zero_class(S, rs.lhs));
      }
  }
}
