#include <set>

#include "charp/ralg.hpp"
#include "doctest.h"

using namespace charp;

namespace {
RingPtr F(int p, int r = 1) { return Ring::make(RingSpec::galois_field(p, r)); }
}  // namespace

TEST_CASE("F4 from x^2+x+1") {
  auto R = Ring::make(RingSpec::galois_field(2, 2, {1, 1, 1}));
  CHECK(R->size() == 4);
  elt x = R->from_digits({0, 1});
  elt x1 = R->add(x, R->one());
  CHECK(R->mul(x, x1) == R->one());
}

TEST_CASE("reducible modulus is rejected") {
  CHECK_THROWS_AS(Ring::make(RingSpec::galois_field(2, 2, {1, 0, 1})), Error);
  CHECK_THROWS_AS(Ring::make(RingSpec::prime_field(4)), Error);
}

TEST_CASE("field axioms and frobenius order") {
  for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
    auto R = F(p, r);
    CHECK(R->is_field());
    std::set<elt> img;
    for (elt a = 0; a < R->size(); ++a) {
      if (a) CHECK(R->mul(a, R->inv(a)) == R->one());
      elt b = a;
      for (int i = 0; i < r; ++i) b = R->frobenius(b);
      CHECK(b == a);
      img.insert(R->frobenius(a));
      for (elt c = 0; c < R->size(); c += 3) {
        CHECK(R->frobenius(R->mul(a, c)) == R->mul(R->frobenius(a), R->frobenius(c)));
        CHECK(R->frobenius(R->add(a, c)) == R->add(R->frobenius(a), R->frobenius(c)));
      }
    }
    CHECK(img.size() == R->size());
  }
}

TEST_CASE("frobenius on F9 = F3[x]/(x^2+1)") {
  auto R = Ring::make(RingSpec::galois_field(3, 2, {1, 0, 1}));
  elt x = R->from_digits({0, 1});
  CHECK(R->frobenius(x) == R->neg(x));
  for (elt a = 0; a < 9; ++a) CHECK(R->frobenius(R->frobenius(a)) == a);
}

TEST_CASE("inverse of a non-unit names the element") {
  auto R = Ring::make(RingSpec::integers_mod(2, 2));
  CHECK_THROWS_WITH_AS(R->inv(2), doctest::Contains("2"), Error);
}

TEST_CASE("Galois ring reduction is a surjective ring map") {
  auto G = Ring::make(RingSpec::galois_ring(2, 2, 2, {1, 1, 1}));
  auto K = G->residue_field();
  CHECK(G->size() == 16);
  CHECK(K->size() == 4);
  std::set<elt> img;
  for (elt a = 0; a < 16; ++a) {
    img.insert(G->reduce_mod_p(a));
    for (elt b = 0; b < 16; ++b) {
      CHECK(G->reduce_mod_p(G->add(a, b)) == K->add(G->reduce_mod_p(a), G->reduce_mod_p(b)));
      CHECK(G->reduce_mod_p(G->mul(a, b)) == K->mul(G->reduce_mod_p(a), G->reduce_mod_p(b)));
    }
  }
  CHECK(img.size() == 4);
}

TEST_CASE("Galois ring Frobenius lifts x^p and is a ring automorphism") {
  // modulus x^2 - x - 1 over Z/4: sigma(x) = 1 - x
  auto G = Ring::make(RingSpec::galois_ring(2, 2, 2, {3, 3, 1}));
  elt x = G->from_digits({0, 1});
  CHECK(G->frobenius(x) == G->sub(G->one(), x));
  auto H = Ring::make(RingSpec::galois_ring(3, 2, 2));
  for (auto R : {G, H}) {
    auto K = R->residue_field();
    for (elt a = 0; a < R->size(); ++a) {
      CHECK(R->reduce_mod_p(R->frobenius(a)) == K->frobenius(R->reduce_mod_p(a)));
      CHECK(R->frobenius(R->frobenius(a)) == a);
      for (elt b = 0; b < R->size(); b += 5)
        CHECK(R->frobenius(R->mul(a, b)) == R->mul(R->frobenius(a), R->frobenius(b)));
    }
  }
}

TEST_CASE("echelon examples") {
  auto R = F(3);
  auto I = Mat::identity(R, 4);
  CHECK(echelon(I).rank == 4);
  CHECK(kernel(I).cols == 0);
  Mat Z(R, 2, 3);
  CHECK(echelon(Z).rank == 0);
  CHECK(kernel(Z).cols == 3);
  auto F4 = Ring::make(RingSpec::galois_field(2, 2, {1, 1, 1}));
  elt x = F4->from_digits({0, 1});
  Mat m(F4, 2, 2);
  m(0, 0) = x, m(0, 1) = 1, m(1, 0) = F4->mul(x, x), m(1, 1) = x;
  CHECK(echelon(m).rank == 1);
}

TEST_CASE("kernel and rank on random matrices") {
  std::mt19937_64 rng(7);
  for (auto R : {F(2), F(3), F(2, 2), F(3, 2)}) {
    for (int t = 0; t < 20; ++t) {
      int r = 1 + (int)(rng() % 6), c = 1 + (int)(rng() % 6);
      Mat m = Mat::random(R, r, c, rng);
      if (t % 3 == 0) m = m * Mat::random(R, c, c, rng) * Mat(R, c, c);
      Mat K = kernel(m);
      CHECK((m * K).is_zero());
      CHECK(rank(m) + K.cols == c);
      CHECK(rank(K) == K.cols);
      Mat Im = image(m);
      CHECK(Im.cols == rank(m));
      Solver s(m);
      std::vector<elt> v(c);
      for (auto& y : v) y = R->random(rng);
      auto b = matvec(m, v);
      std::vector<elt> xs;
      CHECK(s.solve(b, xs));
      CHECK(matvec(m, xs) == b);
    }
  }
}

TEST_CASE("span reduction with tracked coordinates") {
  auto R = F(5);
  Span S(R, 3, 2);
  CHECK(S.insert({1, 0, 0}, {0, 0}));
  CHECK(S.insert({0, 1, 1}, {1, 0}));
  CHECK(S.insert({0, 0, 1}, {0, 1}));
  std::vector<elt> v = {2, 3, 4}, tr;
  S.reduce(v, &tr);
  CHECK(v == std::vector<elt>{0, 0, 0});
  // (2,3,4) = 2 e1 + 3 (0,1,1) + 1 (0,0,1)
  CHECK(tr == std::vector<elt>{3, 1});
}

TEST_CASE("diagonalize examples") {
  auto Z4 = Ring::make(RingSpec::integers_mod(2, 2));
  auto Z9 = Ring::make(RingSpec::integers_mod(3, 2));
  auto s1 = diagonalize(Mat::from_rows(Z9, {{3}}));
  CHECK(s1.coker.torsion == std::vector<int>{1});
  CHECK(s1.coker.free_rank == 0);
  auto s2 = diagonalize(Mat::identity(Z4, 3));
  CHECK(s2.coker.is_zero());
  auto s3 = diagonalize(Mat::from_rows(Z4, {{2, 2}, {0, 2}}));
  CHECK(s3.coker.torsion == std::vector<int>{1, 1});
}

TEST_CASE("diagonalize invariants over local rings") {
  std::mt19937_64 rng(11);
  auto Z8 = Ring::make(RingSpec::integers_mod(2, 3));
  auto GR = Ring::make(RingSpec::galois_ring(2, 2, 2));
  auto W = Ring::make(RingSpec::witt2(RingSpec::galois_field(2, 2)));
  for (auto R : {Z8, GR, W}) {
    for (int t = 0; t < 30; ++t) {
      int r = 1 + (int)(rng() % 5), c = 1 + (int)(rng() % 5);
      Mat m = Mat::random(R, r, c, rng);
      if (t % 2) m = scale(m, R->from_int(2));
      Smith s = diagonalize(m);
      CHECK(s.U * m * s.V == s.D);
      CHECK(s.U * s.Uinv == Mat::identity(R, r));
      CHECK(s.V * s.Vinv == Mat::identity(R, c));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
          if (i != j) CHECK(s.D(i, j) == 0);
      Mat K = kernel_local(m);
      CHECK((m * K).is_zero());
      std::vector<elt> v(c);
      for (auto& y : v) y = R->random(rng);
      auto b = matvec(m, v);
      std::vector<elt> xs;
      CHECK(solve_local(s, b, xs));
      CHECK(matvec(m, xs) == b);
    }
  }
}

TEST_CASE("Witt2 addition is associative and commutative, exhaustive for small bases") {
  for (auto base : {RingSpec::prime_field(2), RingSpec::prime_field(3), RingSpec::galois_field(2, 2),
                    RingSpec::integers_mod(2, 2), RingSpec::galois_field(3, 2), RingSpec::galois_field(2, 4)}) {
    auto W = Ring::make(RingSpec::witt2(base));
    long bad = 0;
    for (elt a = 0; a < W->size(); ++a)
      for (elt b = 0; b < W->size(); ++b) {
        if (W->add(a, b) != W->add(b, a)) ++bad;
        if (W->mul(a, b) != W->mul(b, a)) ++bad;
        for (elt c = 0; c < W->size(); ++c)
          if (W->add(W->add(a, b), c) != W->add(a, W->add(b, c))) ++bad;
      }
    CHECK(bad == 0);
  }
}

TEST_CASE("Witt2 ring axioms on random triples") {
  std::mt19937_64 rng(3);
  for (auto base : {RingSpec::galois_field(2, 3), RingSpec::integers_mod(3, 2), RingSpec::galois_field(5, 1)}) {
    auto W = Ring::make(RingSpec::witt2(base));
    for (int t = 0; t < 1000; ++t) {
      elt a = W->random(rng), b = W->random(rng), c = W->random(rng);
      CHECK(W->mul(W->mul(a, b), c) == W->mul(a, W->mul(b, c)));
      CHECK(W->mul(a, W->add(b, c)) == W->add(W->mul(a, b), W->mul(a, c)));
      CHECK(W->add(a, W->neg(a)) == 0);
    }
  }
}

TEST_CASE("Witt2 identities: teichmuller, V, ghost") {
  std::mt19937_64 rng(5);
  for (int p : {2, 3, 5}) {
    auto base = Ring::make(RingSpec::integers_mod(p, 2));
    Witt2Ops W(base);
    // p^2 = V(p) in W2(Z/p^2)
    auto pw = W.from_int(p);
    CHECK(W.mul(pw, pw) == W.V(pw));
    for (int t = 0; t < 1000; ++t) {
      Witt2Ops::W a{base->random(rng), base->random(rng)};
      auto g = W.ghost(W.V(a));
      CHECK(g.first == 0);
      CHECK(g.second == base->mul(base->from_int(p), a.a0));
      elt x = base->random(rng), y = base->random(rng);
      CHECK(W.mul(W.teichmuller(x), W.teichmuller(y)) == W.teichmuller(base->mul(x, y)));
    }
  }
}

TEST_CASE("ghost is additive and multiplicative over Z-lifts") {
  std::mt19937_64 rng(9);
  for (int p : {2, 3, 5}) {
    auto base = Ring::make(RingSpec::integers_mod(p, 4));
    Witt2Ops W(base);
    for (int t = 0; t < 500; ++t) {
      Witt2Ops::W a{base->random(rng), base->random(rng)}, b{base->random(rng), base->random(rng)};
      auto ga = W.ghost(a), gb = W.ghost(b), gs = W.ghost(W.add(a, b)), gm = W.ghost(W.mul(a, b));
      CHECK(gs.first == base->add(ga.first, gb.first));
      CHECK(gs.second == base->add(ga.second, gb.second));
      CHECK(gm.first == base->mul(ga.first, gb.first));
      CHECK(gm.second == base->mul(ga.second, gb.second));
    }
  }
}

TEST_CASE("W2(F_q) and GR(p^2, r) are isomorphic") {
  for (auto [p, mod] : std::vector<std::pair<int, std::vector<int>>>{{2, {1, 1, 1}}, {3, {1, 0, 1}}}) {
    auto K = Ring::make(RingSpec::galois_field(p, 2, mod));
    auto W = Ring::make(RingSpec::witt2(K->spec()));
    auto G = Ring::make(RingSpec::galois_ring(p, 2, 2, mod));
    const std::uint64_t q = K->size();
    auto teich = [&](elt x) { return G->pow(G->lift_residue(x), q); };
    auto phi = [&](elt w) {
      elt a0 = W->w0(w), a1 = W->w1(w);
      return G->add(teich(a0), G->mul_p(teich(K->frobenius_inverse(a1))));
    };
    std::set<elt> img;
    for (elt a = 0; a < W->size(); ++a) {
      img.insert(phi(a));
      for (elt b = 0; b < W->size(); ++b) {
        CHECK(phi(W->add(a, b)) == G->add(phi(a), phi(b)));
        CHECK(phi(W->mul(a, b)) == G->mul(phi(a), phi(b)));
      }
    }
    CHECK(img.size() == G->size());
  }
}

TEST_CASE("valuation and division by p") {
  auto Z27 = Ring::make(RingSpec::integers_mod(3, 3));
  CHECK(Z27->exponent() == 3);
  CHECK(Z27->valuation(9) == 2);
  CHECK(Z27->valuation(0) == 3);
  CHECK(Z27->mul_p(Z27->div_p(18)) == 18);
  auto W = Ring::make(RingSpec::witt2(RingSpec::galois_field(3, 2)));
  CHECK(W->exponent() == 2);
  elt pp = W->from_int(3);
  CHECK(W->valuation(pp) == 1);
  CHECK(W->mul_p(W->div_p(pp)) == pp);
}
