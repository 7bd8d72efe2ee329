#include "charp/csa.hpp"
#include "charp/gcoh.hpp"
#include "doctest.h"

using namespace charp;

namespace {
RingPtr F(int p, int r = 1) { return Ring::make(RingSpec::galois_field(p, r)); }
RingPtr Z(int p, int e) { return Ring::make(RingSpec::integers_mod(p, e)); }

std::vector<int> dims(const std::vector<CohomologySlice>& h) {
  std::vector<int> out;
  for (auto& s : h) out.push_back(s.dim());
  return out;
}

// regular representation of C_n: generator shifts the basis cyclically
GModule regular_cyclic(const RingPtr& R, int n) {
  GModule M{R, n, {}};
  for (int g = 0; g < n; ++g) {
    Mat m(R, n, n);
    for (int i = 0; i < n; ++i) m((i + g) % n, i) = R->one();
    M.action.push_back(m);
  }
  return M;
}

int sign_of(const FiniteGroup& S, int g) {
  // permutations of 3 letters in lex order: even ones are 012, 120, 201
  (void)S;
  return (g == 0 || g == 3 || g == 4) ? 1 : -1;
}

// S_3 as C_3 semidirect C_2, Phi acting by inversion
Symmetry inversion_symmetry(const RingPtr& R, int character_sign) {
  Symmetry S;
  S.perm = {{0, 1, 2}, {0, 2, 1}};
  elt m1 = character_sign > 0 ? R->one() : R->neg(R->one());
  S.on_module = character_module(R, {R->one(), m1});
  return S;
}
}  // namespace

TEST_CASE("bar cohomology of small groups") {
  CHECK(dims(bar_cohomology(FiniteGroup::trivial(), trivial_module(F(3), 1, 1), 3)) == std::vector<int>{1, 0, 0, 0});
  auto V4 = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(dims(bar_cohomology(V4, trivial_module(F(2), 1, 4), 2)) == std::vector<int>{1, 2, 3});
  for (int p : {2, 3, 5}) {
    auto G = FiniteGroup::cyclic(p);
    CHECK(dims(bar_cohomology(G, trivial_module(F(p), 1, p), 3)) == std::vector<int>{1, 1, 1, 1});
    // free module: cohomology only in degree zero
    CHECK(dims(bar_cohomology(G, regular_cyclic(F(p), p), 2)) == std::vector<int>{1, 0, 0});
  }
  // prime-to-p group with a nontrivial character
  auto R = F(7);
  std::vector<elt> vals;
  for (int g = 0; g < 3; ++g) vals.push_back(R->pow(R->from_int(2), g));
  auto M = character_module(R, vals);
  CHECK_NOTHROW(M.validate(FiniteGroup::cyclic(3)));
  CHECK(dims(bar_cohomology(FiniteGroup::cyclic(3), M, 2)) == std::vector<int>{0, 0, 0});
  CHECK_THROWS_AS(bar_complex(FiniteGroup::cyclic(50), trivial_module(R, 1, 50), 5), Error);
}

TEST_CASE("bar cochains agree with the nerve algebra") {
  std::vector<std::pair<FiniteGroup, int>> cases{{FiniteGroup::cyclic(2), 2},
                                                 {FiniteGroup::cyclic(3), 3},
                                                 {FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)), 2},
                                                 {FiniteGroup::symmetric(3), 3},
                                                 {FiniteGroup::symmetric(3), 2},
                                                 {FiniteGroup::cyclic(4), 2},
                                                 {FiniteGroup::cyclic(5), 5}};
  for (auto& [G, p] : cases) {
    auto A = nerve_algebra(G, F(p), 4);
    auto h = bar_cohomology(G, trivial_module(F(p), 1, G.order), 3);
    for (int i = 0; i <= 3; ++i) CHECK(h[i].dim() == A.H(i).dim());
  }
}

TEST_CASE("Koszul complexes of lattices") {
  auto R = F(3);
  for (int m = 1; m <= 4; ++m) {
    auto h = lattice_cohomology(trivial_module(R, 1, m));
    for (int i = 0; i <= m; ++i) {
      int c = 1;
      for (int k = 0; k < i; ++k) c = c * (m - k) / (k + 1);
      CHECK(h[i].dim() == c);
    }
  }
  CHECK(dims(lattice_cohomology(character_module(R, {R->from_int(2)}))) == std::vector<int>{0, 0});
  auto R4 = F(2, 2);
  elt w = 2;  // a generator of F_4^*
  REQUIRE(w != R4->one());
  CHECK(dims(lattice_cohomology(character_module(R4, {R4->one(), w}))) == std::vector<int>{0, 0, 0});
  CHECK(dims(lattice_cohomology(character_module(R4, {R4->one(), R4->one()}))) == std::vector<int>{1, 2, 1});
}

TEST_CASE("presentation complexes") {
  auto R = F(3);
  Presentation Z2{2, {{{0, 1}, {1, 1}, {0, -1}, {1, -1}}}};
  auto C = presentation_complex(Z2, trivial_module(R, 1, 2));
  CHECK(cohomology_dims(C) == std::vector<int>{1, 2, 1});
  elt two = R->from_int(2);
  CHECK(cohomology_dims(presentation_complex(Z2, character_module(R, {two, R->one()}))) == std::vector<int>{0, 0, 0});
  // C_3 = <a | a^3>
  Presentation C3{1, {{{0, 1}, {0, 1}, {0, 1}}}};
  CHECK(cohomology_dims(presentation_complex(C3, trivial_module(R, 1, 1))) == std::vector<int>{1, 1, 1});
  // relator that does not act trivially
  CHECK_THROWS_AS(presentation_complex(Presentation{1, {{{0, 1}}}}, character_module(F(7), {F(7)->from_int(2)})),
                  Error);
}

TEST_CASE("invariants under a prime-to-p symmetry") {
  auto R = F(3);
  auto C3 = FiniteGroup::cyclic(3);
  auto S3 = FiniteGroup::symmetric(3);
  for (int sg : {1, -1}) {
    auto Sym = inversion_symmetry(R, sg);
    auto M = trivial_module(R, 1, 3);
    // the sign character restricted to C_3 is trivial; Phi acts on M by the sign
    auto red = dims(semidirect_reduce(C3, M, Sym, 3));
    std::vector<elt> vals;
    for (int g = 0; g < 6; ++g) vals.push_back(sign_of(S3, g) > 0 ? R->one() : R->neg(R->one()));
    auto MS = sg > 0 ? trivial_module(R, 1, 6) : character_module(R, vals);
    CHECK_NOTHROW(MS.validate(S3));
    auto direct = dims(bar_cohomology(S3, MS, 3));
    CHECK(red == direct);
    CHECK(invariant_dims_by_idempotent(C3, M, Sym, 3) == direct);
    if (sg > 0) CHECK(direct == std::vector<int>{1, 0, 0, 1});
    if (sg < 0) CHECK(direct == std::vector<int>{0, 1, 1, 0});
  }
  auto bad = inversion_symmetry(F(2), 1);
  CHECK_THROWS_AS(semidirect_reduce(FiniteGroup::cyclic(3), trivial_module(F(2), 1, 3), bad, 1), Error);
}

TEST_CASE("averaging and expansion of invariant cochains") {
  auto R = F(3);
  auto Sym = inversion_symmetry(R, -1);
  auto C3 = FiniteGroup::cyclic(3);
  auto IC = invariant_cochains(C3, trivial_module(R, 1, 3), Sym, 3);
  std::mt19937_64 rng(4);
  for (int n = 0; n <= 2; ++n) {
    std::vector<elt> c(IC.level[n].dim);
    for (auto& x : c) x = R->random(rng);
    CHECK(IC.average(n, IC.expand(n, c)) == c);
    // expanded coboundary equals the full coboundary of the expansion
    auto full = bar_complex(C3, trivial_module(R, 1, 3), n + 1);
    CHECK(matvec(full.d[n], IC.expand(n, c)) == IC.expand(n + 1, matvec(IC.d[n], c)));
  }
}

TEST_CASE("row_basis keeps the kernel") {
  auto R = F(5);
  std::mt19937_64 rng(9);
  Mat A = Mat::random(R, 3, 12, rng);
  Mat T = Mat::random(R, 200, 3, rng) * A;
  Mat B = row_basis(T, 3);
  CHECK(B.rows < T.rows);
  CHECK(kernel(B) == kernel(T));
}

TEST_CASE("extension and staircase classes") {
  for (int p : {2, 3}) {
    auto R = F(p);
    auto G = FiniteGroup::cyclic(p);
    // Jordan block: nonsplit extension of F_p by F_p
    GModule J{R, 2, {}};
    for (int g = 0; g < p; ++g) J.action.push_back(Mat::from_rows(R, {{1, g}, {0, 1}}));
    Mat sub = Mat::from_rows(R, {{1}, {0}});
    auto e = extension_class(G, J, sub);
    CHECK(is_cocycle(G, e.cls));
    CHECK_FALSE(is_zero_class(G, e.cls));
    std::mt19937_64 rng(10 + p);
    for (int t = 0; t < 10; ++t) CHECK(same_class(G, extension_class(G, J, sub, &rng).cls, e.cls));
    CHECK(is_zero_class(G, extension_class(G, trivial_module(R, 2, p), sub).cls));
    // 0 -> F_p -> R[C_p] -> R[C_p] -> F_p -> 0: the periodicity class in H^2
    auto Reg = regular_cyclic(R, p);
    Mat d = Reg.action[1] - Mat::identity(R, p);
    EquivariantComplex D{CochainComplex(R, 0, {p, p}, {d}), {}};
    for (int g = 0; g < p; ++g) D.action.push_back({Reg.action[g], Reg.action[g]});
    CHECK_NOTHROW(D.validate());
    auto s = hyperext_class(G, D);
    CHECK(s.cls.degree == 2);
    CHECK(is_cocycle(G, s.cls));
    CHECK_FALSE(is_zero_class(G, s.cls));
    for (int t = 0; t < 10; ++t) CHECK(same_class(G, hyperext_class(G, D, &rng).cls, s.cls));
    // split complex: zero class
    EquivariantComplex Z{CochainComplex(R, 0, {1, 1}, {Mat(R, 1, 1)}), {}};
    for (int g = 0; g < p; ++g) Z.action.push_back({Mat::identity(R, 1), Mat::identity(R, 1)});
    CHECK(is_zero_class(G, hyperext_class(G, Z).cls));
    auto T = truncate_between(D, 0, 1);
    CHECK(cohomology_dims(T.C) == std::vector<int>{0, 1, 1});
  }
  auto R = F(3);
  EquivariantComplex one{CochainComplex(R, 0, {1}, {}), {{Mat::identity(R, 1)}}};
  CHECK_THROWS_AS(hyperext_class(FiniteGroup::trivial(), one), Error);
}

TEST_CASE("group Bockstein") {
  for (int p : {2, 3}) {
    auto G = FiniteGroup::cyclic(p);
    auto M = trivial_module(F(p), 1, p);
    auto Mt = trivial_module(Z(p, 2), 1, p);
    CochainModel model = [&](const GModule& N) { return bar_complex(G, N, 4); };
    auto C = model(M);
    auto h1 = cohomology(C, 1), h2 = cohomology(C, 2), h3 = cohomology(C, 3);
    auto b = group_bockstein(model, M, Mt, 1, h1.basis.column(0));
    CHECK(h2.is_cocycle(b));
    CHECK_FALSE(h2.is_coboundary(b));
    auto b0 = group_bockstein(model, M, Mt, 0, cohomology(C, 0).basis.column(0));
    CHECK(cohomology(C, 1).is_coboundary(b0));
    auto bb = group_bockstein(model, M, Mt, 2, b);
    CHECK(h3.is_coboundary(bb));
    CHECK_THROWS_AS(group_bockstein(model, M, trivial_module(Z(p, 2), 2, p), 1, h1.basis.column(0)), Error);
  }
}

TEST_CASE("derived symmetric power matches homotopy orbits of S_p") {
  for (int p : {2, 3})
    for (int r = 1; r <= 3; ++r) {
      CAPTURE(p);
      CAPTURE(r);
      auto R = F(p);
      auto Sp = FiniteGroup::symmetric(p);
      auto M = tensor_power_module(Sp, R, r, true);
      M.validate(Sp);
      auto orbits = symmetric_orbit_dims(R, r, p);
      // the module is self-dual, so group homology dims are bar cohomology dims
      auto h = bar_cohomology(Sp, M, p - 1);
      for (int j = 0; j < p; ++j) CHECK(orbits[p - j] == h[j].dim());
      auto S = derived_power({FunctorKind::Sym, p}, CochainComplex::concentrated(R, 1, r), p + 1).complex;
      for (int i = 1; i <= p; ++i) CHECK(orbits[i] == cohomology(S, i).dim());
    }
}
