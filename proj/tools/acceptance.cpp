// Acceptance suite: one status line per criterion.
// PASS: every case passed (skips are budget-limited and listed).
// XFAIL: the only failures are the documented counterexamples in kKnownFailures;
//        they are re-verified on every run and printed with their witnesses.
// FAIL: anything else, including a documented counterexample that stops failing.
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "charp/alpha.hpp"
#include "charp/csa.hpp"
#include "charp/verify.hpp"

using namespace charp;

namespace {

struct Case {
  std::string id;
  Params params;
};

std::string show(const Case& c) {
  std::string s = c.id;
  for (auto& [k, v] : c.params) s += " " + k + "=" + std::to_string(v);
  return s;
}

// claims that are false as stated at p = 2: 2 chi_2 = -2 chi_1 = 4 chi_1 = 2 (2 chi_1) mod 3
const std::set<std::string> kKnownFailures{"weights-3 p=2 q=4", "borel-1 p=2"};

struct Check {
  std::string name;
  bool ok;
};

struct Criterion {
  int number;
  std::string title;
  double limit_s;
  std::vector<Case> cases;
  std::function<std::vector<Check>()> direct;  // checks outside the registry
};

RingPtr F(int p, int r = 1) { return Ring::make(RingSpec::galois_field(p, r)); }

std::vector<Check> cross_oracles() {
  std::vector<Check> out;
  // bar cochains against the nerve algebra
  bool bar_nerve = true;
  std::vector<std::pair<FiniteGroup, int>> groups{{FiniteGroup::cyclic(2), 2},
                                                  {FiniteGroup::cyclic(3), 3},
                                                  {FiniteGroup::cyclic(4), 2},
                                                  {FiniteGroup::cyclic(5), 5},
                                                  {FiniteGroup::cyclic(6), 3},
                                                  {FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)), 2},
                                                  {FiniteGroup::symmetric(3), 2},
                                                  {FiniteGroup::symmetric(3), 3}};
  for (auto& [G, p] : groups) {
    auto A = nerve_algebra(G, F(p), 4);
    auto h = bar_cohomology(G, trivial_module(F(p), 1, G.order), 3);
    for (int i = 0; i <= 3; ++i) bar_nerve &= h[i].dim() == A.H(i).dim();
  }
  out.push_back({"bar cochains vs nerve algebra on 8 (group, p) pairs", bar_nerve});

  // staircase class of the periodicity complex of C_p under 10 random splittings
  bool choice = true;
  std::mt19937_64 rng(2024);
  for (int p : {2, 3, 5}) {
    auto R = F(p);
    auto G = FiniteGroup::cyclic(p);
    std::vector<Mat> reg;
    for (int g = 0; g < p; ++g) {
      Mat m(R, p, p);
      for (int i = 0; i < p; ++i) m((i + g) % p, i) = R->one();
      reg.push_back(m);
    }
    EquivariantComplex D{CochainComplex(R, 0, {p, p}, {reg[1] - Mat::identity(R, p)}), {}};
    for (int g = 0; g < p; ++g) D.action.push_back({reg[g], reg[g]});
    auto base = hyperext_class(G, D);
    choice &= !is_zero_class(G, base.cls);
    for (int t = 0; t < 10; ++t) choice &= same_class(G, hyperext_class(G, D, &rng).cls, base.cls);
  }
  out.push_back({"staircase class independent of 10 random splittings (C_2, C_3, C_5)", choice});

  // derived powers do not depend on the level bound
  bool stable = true;
  for (int t = 0; t < 12; ++t) {
    auto R = t % 2 ? F(2) : F(3);
    auto C = random_complex(R, 0, {(int)(rng() % 2), 1, (int)(rng() % 2)}, 1, rng);
    for (auto k : {FunctorKind::Sym, FunctorKind::Div, FunctorKind::Ext}) {
      PolyFunctor P{k, 2 + (int)(rng() % 2)};
      auto a = derived_power(P, C, 2), b = derived_power(P, C, 3);
      for (int i = 0; i <= 2; ++i) stable &= cohomology(a.complex, i).dim() == cohomology(b.complex, i).dim();
    }
  }
  out.push_back({"derived powers stable under raising the level bound (36 random cases)", stable});
  return out;
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> cs;
  auto push = [&](int n, std::string title, double limit) { cs.push_back({n, std::move(title), limit, {}, nullptr}); };

  push(1, "decalage: Gamma^n(E[-1]) = Lambda^n E in degree n, p in {2,3}, n <= p, rank <= 4", 10);
  for (int p : {2, 3})
    for (int n = 1; n <= p; ++n)
      for (int e = 1; e <= 4; ++e) cs.back().cases.push_back({"decalage", {{"p", p}, {"n", n}, {"dim", e}}});

  push(2, "S^p(E[-1]) cohomology, p in {2,3} rank <= 3, p = 5 rank 2 (full)", 60);
  for (int p : {2, 3})
    for (int e = 1; e <= 3; ++e) cs.back().cases.push_back({"sym-cohomology", {{"p", p}, {"dim", e}}});
  cs.back().cases.push_back({"sym-cohomology", {{"p", 5}, {"dim", 2}}});

  push(3, "four-term exactness, p in {2,3}, rank <= 3", 5);
  for (int p : {2, 3})
    for (int e = 1; e <= 3; ++e) cs.back().cases.push_back({"four-term-exact", {{"p", p}, {"dim", e}}});

  push(4, "norm cokernel over Z/p^2 is (Z/p)^rank, p in {2,3}, rank <= 3", 5);
  for (int p : {2, 3})
    for (int e = 1; e <= 3; ++e) cs.back().cases.push_back({"norm-cokernel-zp2", {{"p", p}, {"dim", e}}});

  push(5, "Cartier: Omega_n acyclic for p !| n, H(Omega_p), truncation, p in {2,3,5}", 30);
  for (int p : {2, 3, 5}) cs.back().cases.push_back({"cartier", {{"p", p}}});
  for (int p : {2, 3}) cs.back().cases.push_back({"omega-trunc-vs-symp", {{"p", p}}});

  push(6, "Steenrod: P^0 = id, P^1 = Bockstein = Witt Bockstein, algebra Bockstein, p in {2,3}", 120);
  for (int p : {2, 3})
    for (auto id : {"steenrod-p0", "steenrod-p1", "witt-bockstein-agree", "algebra-bockstein"})
      cs.back().cases.push_back({id, {{"p", p}}});

  push(7, "Witt vectors: p^2 = V(p), ghost(V(a)) = (0, p a_0), p in {2,3,5}", 1);
  for (int p : {2, 3, 5}) {
    cs.back().cases.push_back({"witt-identity", {{"p", p}}});
    cs.back().cases.push_back({"ghost-v", {{"p", p}, {"samples", 1000}}});
  }

  push(8, "additive and lattice cohomology, nontrivial characters", 10);
  for (auto [p, q, n] : std::vector<std::array<int, 3>>{
           {2, 2, 1}, {2, 4, 1}, {2, 8, 1}, {2, 4, 2}, {2, 2, 3}, {3, 3, 1}, {3, 9, 1}, {3, 3, 2}, {5, 5, 1}})
    cs.back().cases.push_back({"additive-cohomology-dims", {{"p", p}, {"q", q}, {"dim", n}}});
  for (int p : {2, 3})
    for (int m = 1; m <= 4; ++m) cs.back().cases.push_back({"lattice-vanishing", {{"p", p}, {"dim", m}}});

  push(9, "weight combinatorics, certified search, p in {2,3} with q = p^2, p = 5 (full)", 60);
  for (int p : {2, 3, 5}) {
    for (int c = 1; c <= 4; ++c) {
      Params a{{"p", p}};
      if (c >= 3) a["q"] = p * p;
      cs.back().cases.push_back({"weights-" + std::to_string(c), a});
    }
    for (int c = 1; c <= 3; ++c) cs.back().cases.push_back({"borel-" + std::to_string(c), {{"p", p}}});
  }

  push(10, "alpha: SL_2(F_4) nonzero, U_2(F_2) zero, (T_3 A_3)(F_9) nonzero through chi_1^3", 300);
  cs.back().cases = {{"alpha-sl2-f4", {}}, {"alpha-u2-f2-zero", {}}, {"alpha-ta-f9", {{"p", 3}, {"q", 9}}},
                     {"chi1-iso", {{"p", 3}, {"q", 9}}}, {"chi1-iso", {{"p", 2}, {"q", 4}}}};

  push(11, "integral chain for p = 2 over Q(sqrt 5): H^0 = 0, p-torsion, Bock(alpha) != 0", 60);
  cs.back().cases = {{"integral-facts-p2", {}}, {"bock-alpha-nonzero-p2", {}}};

  push(12, "cross-oracles: bar vs nerve, semidirect vs direct (|G| <= 200), splittings, level bounds", 180);
  for (auto [p, q, d] : std::vector<std::array<int, 3>>{
           {2, 4, 2}, {3, 3, 2}, {5, 5, 2}, {7, 7, 1}, {2, 8, 1}, {3, 9, 1}})
    cs.back().cases.push_back({"semidirect-agree", {{"p", p}, {"q", q}, {"degree", d}}});
  cs.back().cases.push_back({"alpha-sl2-f4", {{"seed", 7}}});
  cs.back().direct = cross_oracles;
  return cs;
}

}  // namespace

int main() {
  Budget budget;
  try {
    budget = Budget::from_environment();
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  const Registry& reg = default_registry();
  std::cout << "budget profile " << budget.profile << ", version " << version() << "\n";
  int unexpected = 0;
  for (auto& c : criteria()) {
    auto t0 = std::chrono::steady_clock::now();
    int passed = 0, skipped = 0;
    std::vector<std::string> failures, xfails, skips;
    for (auto& k : c.cases) {
      auto r = run(reg, k.id, k.params, budget);
      Case resolved{k.id, r.params};
      std::string name = show(resolved);
      if (r.skipped) {
        ++skipped;
        skips.push_back(name + ": " + r.notes);
      } else if (r.pass) {
        ++passed;
        if (kKnownFailures.count(name)) failures.push_back(name + " (documented counterexample no longer fails)");
      } else if (kKnownFailures.count(name)) {
        xfails.push_back(name + ": " + r.notes);
      } else {
        failures.push_back(name + (r.notes.empty() ? "" : ": " + r.notes));
      }
    }
    int direct_total = 0;
    if (c.direct)
      for (auto& chk : c.direct()) {
        ++direct_total;
        if (chk.ok) ++passed;
        else failures.push_back(chk.name);
      }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) failures.push_back("time " + std::to_string(secs) + " s exceeds " + std::to_string(c.limit_s) + " s");
    const char* status = !failures.empty() ? "FAIL " : !xfails.empty() ? "XFAIL" : "PASS ";
    int total = (int)c.cases.size() + direct_total;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << status << " " << c.number << ". " << c.title << "  [" << passed << "/" << total << " passed";
    if (skipped) line << ", " << skipped << " skipped";
    if (!xfails.empty()) line << ", " << xfails.size() << " documented counterexamples";
    line << ", " << secs << " s]";
    std::cout << line.str() << "\n";
    for (auto& s : failures) std::cout << "      failed: " << s << "\n";
    for (auto& s : xfails) std::cout << "      counterexample: " << s << "\n";
    for (auto& s : skips) std::cout << "      skipped: " << s << "\n";
    if (!failures.empty()) ++unexpected;
  }
  return unexpected ? 1 : 0;
}
