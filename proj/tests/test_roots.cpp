#include "charp/roots.hpp"
#include "doctest.h"

using namespace charp;

TEST_CASE("positive roots") {
  auto r2 = positive_roots(2);
  CHECK(r2.U == std::vector<Weight>{{2}});
  auto r3 = positive_roots(3);
  CHECK(r3.U == std::vector<Weight>{{1, -1}, {2, 1}, {1, 2}});
  for (int p : {2, 3, 5, 7}) {
    auto r = positive_roots(p);
    CHECK(r.U.size() == (size_t)((p - 1) * (p - 2) / 2 + (p - 1)));
    CHECK(r.A.size() == (size_t)(p - 1));
    for (auto& a : r.A) CHECK(std::find(r.U.begin(), r.U.end(), a) != r.U.end());
    for (auto& u : r.U) CHECK(height2(u, p) >= 2);
  }
  CHECK(chi(3, 3) == Weight{-1, -1});
}

TEST_CASE("enumerate") {
  auto U = positive_roots(3).U;
  auto one = enumerate(scale(3, chi(3, 1)), U, {3, 2, -1, 0});
  REQUIRE(one.found.size() == 1);
  CHECK(one.certified);
  CHECK(evaluate(one.found[0], U, 3) == Weight{3, 0});
  CHECK(one.found[0] == Expression{{0, 0}, {0, 1}});
  for (int j : {2, 3}) CHECK(enumerate(scale(3, chi(3, j)), U, {3, 2, -1, 8}).found.empty());
  auto S = borel_set(3);
  auto b = enumerate(scale(3, chi(3, 1)), S, {3, 2, 0, 4});
  REQUIRE(b.found.size() == 1);
  CHECK(evaluate(b.found[0], S, 3) == scale(3, chi(3, 1)));
  // every equality is a congruence
  for (int j = 1; j <= 3; ++j) {
    auto eq = enumerate(scale(3, chi(3, j)), U, {3, 2, 1, 0}).found;
    auto cg = enumerate(scale(3, chi(3, j)), U, {3, 2, 1, 8}).found;
    for (auto& e : eq) CHECK(std::find(cg.begin(), cg.end(), e) != cg.end());
  }
  CHECK(multiplicative_order(3, 8) == 2);
  CHECK(multiplicative_order(2, 3) == 2);
}

TEST_CASE("weight claims") {
  for (int p : {3, 5}) {
    for (int c = 1; c <= 4; ++c) {
      auto r = weights_claim(c, p, 2);
      CHECK_MESSAGE(r.holds, "p=" << p << " claim " << c << ": " << r.detail);
      CHECK(r.certified);
    }
    for (int c = 1; c <= 3; ++c) CHECK_MESSAGE(borel_claim(c, p).holds, "p=" << p << " borel " << c);
  }
  // at p = 2 claims (1), (2), (4) hold; (3) fails since 2 chi_2 = 4 chi_1 mod 3
  CHECK(weights_claim(1, 2, 2).holds);
  CHECK(weights_claim(2, 2, 2).holds);
  CHECK(weights_claim(4, 2, 2).holds);
  auto w3 = weights_claim(3, 2, 2);
  CHECK_FALSE(w3.holds);
  CHECK(w3.solutions == 1);
  // borel (1) fails at p = 2 for the same reason; (2), (3) hold
  CHECK_FALSE(borel_claim(1, 2).holds);
  CHECK(borel_claim(2, 2).holds);
  CHECK(borel_claim(3, 2).holds);
}

TEST_CASE("quadratic field search") {
  auto f2 = find_quadratic_field(2);
  CHECK(f2.N == 5);
  CHECK(f2.cond1);
  CHECK(f2.cond2);
  for (int p : {3, 5, 7}) {
    auto f = find_quadratic_field(p);
    CHECK(f.N == f.d * f.d + 1);
    CHECK(f.unit_order == 2 * (p + 1));
    CHECK(f.required_order == 2 * (p + 1));
    CHECK(f.wieferich != 0);
    CHECK(f.cond2);
    CHECK(recheck_quadratic_field(f));
  }
  auto f3 = find_quadratic_field(3);
  CHECK((f3.d * f3.d + 1) % 3 == 2);
}
