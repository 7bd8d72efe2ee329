#include "charp/alpha.hpp"
#include "doctest.h"

using namespace charp;

namespace {
RingPtr F(int p, int r = 1) { return Ring::make(RingSpec::galois_field(p, r)); }
}  // namespace

TEST_CASE("concrete groups") {
  CHECK(sl2(F(2, 2)).MG.G.order == 60);
  CHECK(unipotent2(F(2, 2)).MG.G.order == 2);
  CHECK(additive_group(3, F(3, 2)).MG.G.order == 81);
  CHECK(torus(3, F(3, 2)).MG.G.order == 64);
  CHECK(borel_pair(F(2, 2)).MG.G.order == 12);
  CHECK(additive_group(2, F(2, 2)).MG.G.order == 4);
  CHECK(torus(2, F(2, 2)).MG.G.order == 3);
}

TEST_CASE("semidirect reduction agrees with the Borel subgroup of SL_2(F_4)") {
  auto R = F(2, 2);
  auto A = additive_group(2, R), T = torus(2, R), B = borel_pair(R);
  std::vector<Mat> chiT;
  for (auto& t : T.MG.elements) chiT.push_back(Mat(R, 1, 1));
  for (size_t k = 0; k < chiT.size(); ++k) chiT[k](0, 0) = R->mul(T.MG.elements[k](0, 0), T.MG.elements[k](0, 0));
  auto red = semidirect_reduce(A.MG.G, trivial_module(R, 1, A.MG.G.order), conjugation_symmetry(A, T, chiT), 2);
  std::vector<elt> vals;
  for (auto& m : B.MG.elements) vals.push_back(R->mul(m(0, 0), m(0, 0)));
  auto direct = bar_cohomology(B.MG.G, character_module(R, vals), 2);
  for (int i = 0; i <= 2; ++i) CHECK(red[i].dim() == direct[i].dim());
  CHECK(red[1].dim() == 1);
}

TEST_CASE("the chi_1^p line carries one invariant class") {
  CHECK(chi1_invariant_dim(2, 2) == 1);
  CHECK(chi1_invariant_dim(3, 2) == 1);
}

TEST_CASE("equivariant models commute with the action") {
  auto A = additive_group(3, F(3, 2));
  std::vector<Mat> few(A.MG.elements.begin(), A.MG.elements.begin() + 5);
  auto O = omega_truncated(few, 3);
  CHECK_NOTHROW(O.validate());
  CHECK(cohomology_dims(O.C) == std::vector<int>{3, 3, 1});
  auto S = sym_shifted(few, 3, 4);
  CHECK_NOTHROW(S.validate());
  auto d = cohomology_dims(S.C);
  CHECK(d[1] == 3);
  CHECK(d[2] == 3);
  CHECK(d[3] == 1);
  CHECK(d[4] == 0);
}

TEST_CASE("alpha for p = 2 over SL_2(F_4)") {
  auto r = alpha_p2(5);
  CHECK(r.group_order == 60);
  CHECK(r.nonzero);
  CHECK(r.restricted_zero);
  CHECK(r.choice_independent);
}

TEST_CASE("alpha for p = 3 over T_3 A_3 (F_9)") {
  auto r = alpha_borel(3, 2);
  CHECK(r.order_A == 81);
  CHECK(r.order_T == 64);
  CHECK(r.omega_nonzero);
  CHECK(r.sym_nonzero);
  CHECK(r.models_agree());
  CHECK(r.omega_factors);
  CHECK(r.sym_factors);
  CHECK(r.character_ok);
  CHECK(r.h_line == 1);
  CHECK(r.h_full == 1);
  CHECK(r.line_map_nonzero);
}

TEST_CASE("integral facts for p = 2 over Q(sqrt 5)") {
  auto r = integral_p2();
  CHECK(r.h0_chi1sq == 0);
  CHECK(r.h0_chi1msq == 0);
  CHECK(r.chi_tilde_torsion);
  CHECK(r.vtilde_torsion);
  CHECK(r.alpha_nonzero);
  CHECK(r.bock_nonzero);
  CHECK(r.restriction_injective);
  MESSAGE("H^1(chi_1^-2) dim " << r.h1_chi2sq);
}
