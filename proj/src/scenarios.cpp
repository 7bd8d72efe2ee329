#include <algorithm>

#include "charp/alpha.hpp"
#include "charp/csa.hpp"
#include "charp/roots.hpp"
#include "charp/verify.hpp"

namespace charp {
namespace {

constexpr Provenance PAPER = Provenance::Paper, TRIVIAL = Provenance::Trivial, DERIVED = Provenance::Derived;

// largest monomial count a derived power may reach before the scenario is skipped
constexpr long long kMaxMonomials = 200000;

RingPtr F(int p, int r = 1) { return Ring::make(RingSpec::galois_field(p, r)); }

long long binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// parameter checks

void need_prime(const Params& a, long long lo = 2, long long hi = 7) {
  long long p = a.at("p");
  if (!is_prime(p) || p < lo || p > hi)
    throw UsageError("p must be a prime in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                     std::to_string(p));
}

void need_range(const Params& a, const std::string& key, long long lo, long long hi) {
  long long v = a.at(key);
  if (v < lo || v > hi)
    throw UsageError(key + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                     std::to_string(v));
}

void default_to(Params& a, const std::string& key, long long v) {
  if (a.at(key) == -1) a[key] = v;
}

// q = p^r with r >= min_r; -1 resolves to p^2
int resolve_q(Params& a, int min_r) {
  const long long p = a.at("p");
  default_to(a, "q", p * p);
  long long q = a.at("q");
  int r = 0;
  while (q > 1 && q % p == 0) {
    q /= p;
    ++r;
  }
  if (q != 1 || r < min_r)
    throw UsageError("q must be a power p^r with r >= " + std::to_string(min_r) + ", got " +
                     std::to_string(a.at("q")));
  if (r > 6) throw UsageError("q is too large");
  return r;
}

int exponent_of(const Params& a) {
  long long q = a.at("q"), p = a.at("p");
  int r = 0;
  while (q > 1) {
    q /= p;
    ++r;
  }
  return r;
}

// budget guards

void need_level(const Budget& b, int level) {
  if (level > b.max_level)
    throw BudgetExceeded("needs cosimplicial level " + std::to_string(level) + " > max_level " +
                         std::to_string(b.max_level));
}

void need_order(const Budget& b, long long order) {
  if (order > b.max_group_order)
    throw BudgetExceeded("needs a group of order " + std::to_string(order) + " > max_group_order " +
                         std::to_string(b.max_group_order));
}

void need_terms(const Budget& b, long long terms) {
  if (terms > b.max_terms)
    throw BudgetExceeded("needs " + std::to_string(terms) + " summands > max_terms " + std::to_string(b.max_terms));
}

// Sym^p of the Dold-Kan levels of E[-1] up to level L
void need_monomials(int p, int dim, int L) {
  long long m = binom((long long)L * dim + p - 1, p);
  if (m > kMaxMonomials)
    throw BudgetExceeded("level " + std::to_string(L) + " has " + std::to_string(m) + " monomials");
}

// helpers

std::vector<int> dims_upto(const CochainComplex& C, int B) {
  std::vector<int> out;
  for (int i = 0; i <= B; ++i) out.push_back(cohomology(C, i).dim());
  return out;
}

std::vector<int> nonzero_degrees(const std::vector<int>& h) {
  std::vector<int> out;
  for (int i = 0; i < (int)h.size(); ++i)
    if (h[i]) out.push_back(i);
  return out;
}

elt trace(const Mat& m) {
  elt t = m.R->zero();
  for (int i = 0; i < m.rows; ++i) t = m.R->add(t, m(i, i));
  return t;
}

// the homomorphism C_p -> F_p, g -> g, as a normalized 1-cocycle
HClass generator1(const CosimplicialAlgebra& A) {
  std::vector<elt> v;
  for (simplex g : A.nd[1]) v.push_back(A.R->from_int(g));
  return make_class(A, 1, v);
}

std::vector<int> structure_vector(const ModuleStructure& s) {
  std::vector<int> out = s.torsion;
  for (int k = 0; k < s.free_rank; ++k) out.push_back(s.e);
  return out;
}

const std::vector<std::string> kTags{"fast", "full"};
const std::vector<std::string> kCombinatoricsTags{"fast", "full", "combinatorics"};

// scenario groups

void add_derived_powers(Registry& reg) {
  reg.add({"decalage", "decalage for divided powers",
           "Gamma^n(E[-1]) has cohomology Lambda^n E, concentrated in degree n", kTags,
           {{"p", 3}, {"dim", 3}, {"n", -1}},
           [](Params& a) {
             need_prime(a);
             need_range(a, "dim", 1, 6);
             default_to(a, "n", a.at("p"));
             need_range(a, "n", 1, 6);
           },
           [](const Params& a, const Budget& b, Outcome& o) {
             const int p = (int)a.at("p"), dim = (int)a.at("dim"), n = (int)a.at("n");
             need_level(b, n + 2);
             auto D = derived_power({FunctorKind::Div, n}, CochainComplex::concentrated(F(p), 1, dim), n + 1);
             auto h = dims_upto(D.complex, n + 1);
             std::vector<int> e(n + 2, 0);
             e[n] = (int)binom(dim, n);
             o.computed("H", h);
             std::vector<int> nz;
             for (int i : nonzero_degrees(h)) nz.push_back(h[i]);
             o.computed("nonzero_degrees", nonzero_degrees(h));
             o.computed("nonzero_dims", nz);
             o.expect("H", e, DERIVED);
             o.expect("nonzero_degrees", nonzero_degrees(e), PAPER);
           }});

  reg.add({"sym-cohomology", "cohomology of S^p(E[-1])",
           "S^p(E[-1]) has cohomology of dims rank E, rank E, C(rank E, p) in degrees 1, 2, p, as do the S_p homotopy orbits of E[-1]^p", kTags,
           {{"p", 3}, {"dim", 3}},
           [](Params& a) {
             need_prime(a);
             need_range(a, "dim", 1, 6);
           },
           [](const Params& a, const Budget& b, Outcome& o) {
             const int p = (int)a.at("p"), dim = (int)a.at("dim");
             need_level(b, p + 3);
             need_monomials(p, dim, p + 3);
             PolyFunctor S{FunctorKind::Sym, p};
             auto C = CochainComplex::concentrated(F(p), 1, dim);
             auto h = dims_upto(derived_power(S, C, p + 1).complex, p + 1);
             auto h2 = dims_upto(derived_power(S, C, p + 2).complex, p + 1);
             std::vector<int> e(p + 2, 0);
             e[1] += dim;
             e[2] += dim;
             e[p] += (int)binom(dim, p);
             o.computed("H", h);
             o.computed("stable_under_level_increase", h == h2);
             o.expect("H", e, PAPER);
             o.expect("stable_under_level_increase", true, DERIVED);
             if (p <= 3) {
               auto orbits = symmetric_orbit_dims(F(p), dim, p);
               orbits.resize(p + 2, 0);
               o.computed("orbits_H", orbits);
               o.expect("orbits_H", e, PAPER);
             }
           }});

  reg.add({"four-term-exact", "four-term exact sequence of the norm",
           "0 -> F*M -> S^p M -> Gamma^p M -> F*M -> 0 is exact (Delta, norm, psi)", kTags,
           {{"p", 3}, {"dim", 3}},
           [](Params& a) {
             need_prime(a);
             need_range(a, "dim", 1, 6);
           },
           [](const Params& a, const Budget&, Outcome& o) {
             const int p = (int)a.at("p"), d = (int)a.at("dim");
             auto R = F(p);
             Mat D = delta_matrix(R, d), N = norm_matrix(R, p, d), P = psi_matrix(R, d);
             const int s = (int)binom(d + p - 1, p);
             const int rD = rank(D), rN = rank(N), rP = rank(P);
             o.computed("rank_delta", rD);
             o.computed("rank_norm", rN);
             o.computed("rank_psi", rP);
             o.computed("compositions_zero", (N * D).is_zero() && (P * N).is_zero());
             o.computed("delta_injective", rD == d);
             o.computed("exact_at_sym", rD == s - rN);
             o.computed("exact_at_div", rN == s - rP);
             o.computed("psi_surjective", rP == d);
             o.expect("rank_delta", d, DERIVED);
             o.expect("rank_norm", s - d, DERIVED);
             o.expect("rank_psi", d, DERIVED);
             for (auto k : {"compositions_zero", "delta_injective", "exact_at_sym", "exact_at_div", "psi_surjective"})
               o.expect(k, true, PAPER);
           }});

  reg.add({"norm-cokernel-zp2", "cokernel of the norm over Z/p^2",
           "the cokernel of S^p M -> Gamma^p M over Z/p^2 is (Z/p)^{rank M}", kTags,
           {{"p", 3}, {"dim", 3}},
           [](Params& a) {
             need_prime(a);
             need_range(a, "dim", 1, 5);
           },
           [](const Params& a, const Budget&, Outcome& o) {
             const int p = (int)a.at("p"), d = (int)a.at("dim");
             auto R = Ring::make(RingSpec::integers_mod(p, 2));
             auto sm = diagonalize(norm_matrix(R, p, d));
             o.computed("cokernel_torsion", sm.coker.torsion);
             o.computed("cokernel_free_rank", sm.coker.free_rank);
             o.expect("cokernel_torsion", std::vector<int>(d, 1), PAPER);
             o.expect("cokernel_free_rank", 0, PAPER);
           }});
}

void add_cartier(Registry& reg) {
  reg.add({"cartier", "Cartier isomorphism on weight pieces of the de Rham complex",
           "Omega_n is acyclic for p not dividing n; H(Omega_p) = V^(1), V^(1) in degrees 0, 1; "
           "the truncation Omega_p^{<= p-1} has H^0 = H^1 = V^(1) and H^{p-1} = Lambda^p V",
           kTags, {{"p", 3}, {"dim", -1}},
           [](Params& a) {
             need_prime(a);
             default_to(a, "dim", a.at("p"));
             need_range(a, "dim", 1, 7);
           },
           [](const Params& a, const Budget&, Outcome& o) {
             const int p = (int)a.at("p"), dim = (int)a.at("dim");
             auto R = F(p);
             bool acyclic = true;
             for (int n = 1; n <= p + 2; ++n) {
               if (n % p == 0) continue;
               for (int x : cohomology_dims(omega_complex(R, dim, n))) acyclic &= x == 0;
             }
             auto Om = omega_complex(R, dim, p);
             auto h = cohomology_dims(Om);
             std::vector<int> e(h.size(), 0);
             e[0] = dim;
             e[1] = dim;
             auto ht = cohomology_dims(brutal_le(Om, p - 1));
             std::vector<int> et(ht.size(), 0);
             et[0] += dim;
             et[1] += dim;
             if (p - 1 < (int)et.size()) et[p - 1] += (int)binom(dim, p);
             o.computed("acyclic_prime_to_p", acyclic);
             o.computed("H", h);
             o.computed("H_truncated", ht);
             o.expect("acyclic_prime_to_p", true, PAPER);
             o.expect("H", e, PAPER);
             o.expect("H_truncated", et, PAPER);
           }});

  reg.add({"omega-trunc-vs-symp", "truncated de Rham piece against S^p(V[-1])",
           "Omega_p^{<= p-1}, shifted by one, has the same cohomology as S^p(V[-1]) as GL(V)-modules", kTags,
           {{"p", 3}, {"dim", -1}, {"seed", 1}},
           [](Params& a) {
             need_prime(a);
             default_to(a, "dim", a.at("p"));
             need_range(a, "dim", 1, 6);
           },
           [](const Params& a, const Budget& b, Outcome& o) {
             const int p = (int)a.at("p"), dim = (int)a.at("dim");
             need_level(b, p + 2);
             need_monomials(p, dim, p + 2);
             auto R = F(p);
             std::mt19937_64 rng((std::uint64_t)a.at("seed"));
             std::vector<Mat> mats{Mat::identity(R, dim)};
             for (int k = 0; k < 4; ++k) mats.push_back(random_invertible(R, dim, rng));
             auto O = omega_truncated(mats, p);
             auto S = sym_shifted(mats, p, p + 1);
             auto ho = cohomology_dims(O.C);
             std::vector<int> hs;
             for (int i = 1; i <= p; ++i) hs.push_back(cohomology(S.C, i).dim());
             bool traces = ho == hs;
             for (size_t k = 0; traces && k < mats.size(); ++k) {
               ComplexMap fo(O.C, O.C, O.action[k]), fs(S.C, S.C, S.action[k]);
               for (int i = 0; i < (int)ho.size(); ++i)
                 traces &= trace(induced_on_H(fo, i)) == trace(induced_on_H(fs, i + 1));
             }
             o.computed("H_omega", ho);
             o.computed("H_sym_from_degree_1", hs);
             o.computed("dims_agree", ho == hs);
             o.computed("traces_agree", traces);
             o.expect("dims_agree", true, PAPER);
             o.expect("traces_agree", true, PAPER);
           }});
}

void add_steenrod(Registry& reg) {
  reg.add({"steenrod-p0", "P^0 on the nerve of C_p", "P^0 is the identity on H^i(C_p, F_p) for i <= 3", kTags,
           {{"p", 3}}, [](Params& a) { need_prime(a, 2, 5); },
           [](const Params& a, const Budget& b, Outcome& o) {
             const int p = (int)a.at("p");
             need_level(b, 5);
             auto A = nerve_algebra(FiniteGroup::cyclic(p), F(p), 5);
             int checked = 0;
             bool ident = true;
             for (int i = 0; i <= 3; ++i)
               for (auto& x : cohomology_basis(A, i)) {
                 ident &= same_class(A, steenrod(A, x, 0), x);
                 ++checked;
               }
             o.computed("identity", ident);
             o.computed("classes_checked", checked);
             o.expect("identity", true, PAPER);
             o.expect("classes_checked", 4, DERIVED);
           }});

  reg.add({"steenrod-p1", "P^1 on the nerve of C_p",
           "P^1 agrees with the Bockstein of 0 -> F_p -> Z/p^2 -> F_p -> 0 on H^i(C_p, F_p), i <= 2", kTags,
           {{"p", 3}}, [](Params& a) { need_prime(a, 2, 5); },
           [](const Params& a, const Budget& b, Outcome& o) {
             const int p = (int)a.at("p");
             need_level(b, 4);
             auto A = nerve_algebra(FiniteGroup::cyclic(p), F(p), 4);
             bool eq = true;
             for (int i = 0; i <= 2; ++i)
               for (auto& x : cohomology_basis(A, i)) eq &= same_class(A, steenrod(A, x, 1), bockstein(A, x));
             o.computed("equals_bockstein", eq);
             o.computed("degree0_zero", is_zero_class(A, steenrod(A, cohomology_basis(A, 0)[0], 1)));
             o.computed("degree1_nonzero", !is_zero_class(A, steenrod(A, generator1(A), 1)));
             o.expect("equals_bockstein", true, PAPER);
             o.expect("degree0_zero", true, DERIVED);
             o.expect("degree1_nonzero", true, DERIVED);
           }});

  reg.add({"witt-bockstein-agree", "P^1 against the Witt vector Bockstein",
           "the Bockstein of 0 -> F -> W_2 -> F -> 0 equals P^1 on H^i(C_p, F_p), i <= 2", kTags, {{"p", 3}},
           [](Params& a) { need_prime(a, 2, 5); },
           [](const Params& a, const Budget& b, Outcome& o) {
             const int p = (int)a.at("p");
             need_level(b, 4);
             auto A = nerve_algebra(FiniteGroup::cyclic(p), F(p), 4);
             bool eq = true;
             for (int i = 0; i <= 2; ++i)
               for (auto& x : cohomology_basis(A, i)) eq &= same_class(A, witt_bockstein(A, x), steenrod(A, x, 1));
             // over F_{p^2}: W_2(F_{p^2}) against the Galois ring GR(p^2, 2)
             auto A2 = nerve_algebra(FiniteGroup::cyclic(p), F(p, 2), 4);
             bool gr = true;
             for (auto& x : cohomology_basis(A2, 1)) gr &= same_class(A2, witt_bockstein(A2, x), bockstein(A2, x));
             o.computed("equals_p1", eq);
             o.computed("galois_ring_agree", gr);
             o.expect("equals_p1", true, PAPER);
             o.expect("galois_ring_agree", true, DERIVED);
           }});

  reg.add({"algebra-bockstein", "Bockstein of a cosimplicial Z/p^2-algebra",
           "for A over Z/p^2 and x in H^i(A/p), m(gamma(x)) = Bock(phi(x)) in H^{i+1}(A)", kTags, {{"p", 3}},
           [](Params& a) { need_prime(a, 2, 5); },
           [](const Params& a, const Budget& b, Outcome& o) {
             const int p = (int)a.at("p");
             need_level(b, 4);
             auto A = nerve_algebra(FiniteGroup::cyclic(p), Ring::make(RingSpec::integers_mod(p, 2)), 4);
             auto A0 = A.over(F(p));
             auto r1 = algebra_bockstein_check(A, generator1(A0));
             auto r0 = algebra_bockstein_check(A, cohomology_basis(A0, 0)[0]);
             o.computed("degree1_equal", r1.equal);
             o.computed("degree1_nonzero", !is_zero_class(A, r1.lhs));
             o.computed("degree0_equal", r0.equal);
             o.computed("degree0_zero", is_zero_class(A, r0.lhs));
             o.expect("degree1_equal", true, PAPER);
             o.expect("degree0_equal", true, PAPER);
             o.expect("degree1_nonzero", true, DERIVED);
             o.expect("degree0_zero", true, DERIVED);
           }});
}

void add_witt(Registry& reg) {
  reg.add({"witt-identity", "p^2 = V(p) in W_2(Z/p^2)", "p^2 = V(p) in W_2(Z/p^2)", kTags, {{"p", 3}},
           [](Params& a) { need_prime(a, 2, 97); },
           [](const Params& a, const Budget&, Outcome& o) {
             const int p = (int)a.at("p");
             Witt2Ops W(Ring::make(RingSpec::integers_mod(p, 2)));
             auto pw = W.from_int(p);
             o.computed("p_squared_equals_Vp", W.mul(pw, pw) == W.V(pw));
             o.expect("p_squared_equals_Vp", true, PAPER);
           }});

  reg.add({"ghost-v", "ghost components of V", "ghost(V(a)) = (0, p a_0) for a in W_2(Z/p^2)", kTags,
           {{"p", 3}, {"seed", 1}, {"samples", 1000}},
           [](Params& a) {
             need_prime(a, 2, 97);
             need_range(a, "samples", 1, 1000000);
           },
           [](const Params& a, const Budget&, Outcome& o) {
             const int p = (int)a.at("p");
             auto base = Ring::make(RingSpec::integers_mod(p, 2));
             Witt2Ops W(base);
             std::mt19937_64 rng((std::uint64_t)a.at("seed"));
             long long ok = 0, n = a.at("samples");
             for (long long t = 0; t < n; ++t) {
               Witt2Ops::W x{base->random(rng), base->random(rng)};
               auto g = W.ghost(W.V(x));
               ok += g.first == 0 && g.second == base->mul(base->from_int(p), x.a0);
             }
             o.computed("samples_satisfying", ok);
             o.expect("samples_satisfying", n, PAPER);
           }});
}

void add_group_cohomology(Registry& reg) {
  reg.add({"additive-cohomology-dims", "H^1 of additive groups",
           "dim H^1(F_{p^r}^n, F_p) = n r", kTags, {{"p", 3}, {"q", -1}, {"dim", 1}},
           [](Params& a) {
             need_prime(a);
             resolve_q(a, 1);
             need_range(a, "dim", 1, 4);
           },
           [](const Params& a, const Budget& b, Outcome& o) {
             const int p = (int)a.at("p"), r = exponent_of(a), n = (int)a.at("dim");
             need_order(b, ipow(a.at("q"), n));
             auto A = additive_group(n + 1, F(p, r));
             auto h = bar_cohomology(A.MG.G, trivial_module(F(p), 1, A.MG.G.order), 1);
             o.computed("H0", h[0].dim());
             o.computed("H1", h[1].dim());
             o.computed("group_order", A.MG.G.order);
             o.expect("H0", 1, TRIVIAL);
             o.expect("H1", n * r, PAPER);
             o.expect("group_order", ipow(a.at("q"), n), TRIVIAL);
           }});

  reg.add({"lattice-vanishing", "cohomology of Z^m",
           "H^i(Z^m, k) = C(m, i) for the trivial module; a nontrivial character has no cohomology", kTags,
           {{"p", 3}, {"dim", 3}},
           [](Params& a) {
             need_prime(a);
             need_range(a, "dim", 1, 8);
           },
           [](const Params& a, const Budget&, Outcome& o) {
             const int p = (int)a.at("p"), m = (int)a.at("dim");
             auto R = p == 2 ? F(2, 2) : F(p);
             std::vector<int> triv, chi, et, ec(m + 1, 0);
             for (auto& s : lattice_cohomology(trivial_module(R, 1, m))) triv.push_back(s.dim());
             std::vector<elt> vals(m, R->one());
             vals[0] = field_generator(R);
             for (auto& s : lattice_cohomology(character_module(R, vals))) chi.push_back(s.dim());
             for (int i = 0; i <= m; ++i) et.push_back((int)binom(m, i));
             o.computed("H_trivial", triv);
             o.computed("H_character", chi);
             o.expect("H_trivial", et, PAPER);
             o.expect("H_character", ec, PAPER);
           }});

  reg.add({"semidirect-agree", "semidirect reduction on Borel subgroups of SL_2",
           "H^i(T A, M) = H^i(A, M)^T for |T| prime to p, on (T_2 A_2)(F_q) and every character t^k", kTags,
           {{"p", 2}, {"q", -1}, {"degree", 2}},
           [](Params& a) {
             need_prime(a);
             resolve_q(a, 1);
             need_range(a, "degree", 0, 3);
           },
           [](const Params& a, const Budget& b, Outcome& o) {
             const int p = (int)a.at("p"), r = exponent_of(a), D = (int)a.at("degree");
             const long long q = a.at("q");
             need_order(b, q * (q - 1));
             need_level(b, D + 1);
             auto R = F(p, r);
             auto A = additive_group(2, R), T = torus(2, R), B = borel_pair(R);
             bool agree = true, idem = true;
             std::vector<int> h1;
             for (int k = 0; k < q - 1; ++k) {
               std::vector<Mat> chiT;
               for (auto& t : T.MG.elements) {
                 Mat c(R, 1, 1);
                 c(0, 0) = R->pow(t(0, 0), k);
                 chiT.push_back(c);
               }
               auto M = trivial_module(R, 1, A.MG.G.order);
               auto sym = conjugation_symmetry(A, T, chiT);
               auto red = semidirect_reduce(A.MG.G, M, sym, D);
               std::vector<elt> vals;
               for (auto& g : B.MG.elements) vals.push_back(R->pow(g(0, 0), k));
               auto direct = bar_cohomology(B.MG.G, character_module(R, vals), D);
               auto byidem = invariant_dims_by_idempotent(A.MG.G, M, sym, D);
               for (int i = 0; i <= D; ++i) {
                 agree &= red[i].dim() == direct[i].dim();
                 idem &= byidem[i] == direct[i].dim();
               }
               h1.push_back(D >= 1 ? direct[1].dim() : 0);
             }
             o.computed("invariant_cochains_agree", agree);
             o.computed("idempotent_agree", idem);
             o.computed("H1_by_character", h1);
             o.expect("invariant_cochains_agree", true, PAPER);
             o.expect("idempotent_agree", true, PAPER);
           }});
}

long long weights_terms(int claim, int p) {
  if (claim != 1) return p - 1;
  long long t = 2 * (p - 1);
  for (int j = 2; j <= p; ++j) t = std::max(t, height2(scale(p, chi(p, j)), p) / 2);
  return t;
}

void add_combinatorics(Registry& reg) {
  const char* wclaims[] = {
      "p chi_j (2 <= j <= p) is not in the monoid spanned by the positive roots of U_p",
      "p chi_1 is, up to order, uniquely a sum of <= p-1 elements of p^N Delta_U",
      "for q > p, p chi_j (2 <= j <= p) is not congruent mod q-1 to a sum of <= p-1 elements of p^N Delta_U",
      "for q > p, every congruence mod q-1 between p chi_1 and a sum of <= p-1 elements of p^{<= r-1} Delta_U "
      "is an equality"};
  const int wsolutions[] = {0, 1, 0, 1};
  for (int c = 1; c <= 4; ++c) {
    Params defaults{{"p", 3}};
    if (c >= 3) defaults["q"] = -1;
    reg.add({"weights-" + std::to_string(c), "weights of the Frobenius twist, claim " + std::to_string(c),
             wclaims[c - 1], kCombinatoricsTags, defaults,
             [c](Params& a) {
               need_prime(a);
               if (c >= 3) resolve_q(a, 2);
             },
             [c, sols = wsolutions[c - 1]](const Params& a, const Budget& b, Outcome& o) {
               const int p = (int)a.at("p");
               need_terms(b, weights_terms(c, p));
               auto res = weights_claim(c, p, c >= 3 ? exponent_of(a) : 1);
               o.computed("holds", res.holds);
               o.computed("solutions", res.solutions);
               o.computed("certified", res.certified);
               o.expect("holds", true, PAPER);
               o.expect("solutions", sols, PAPER);
               o.expect("certified", true, DERIVED);
               o.note(res.detail);
             }});
  }

  const char* bclaims[] = {"p chi_i (2 <= i <= p) is not congruent mod p+1 to a sum of <= p-1 elements of S",
                           "p chi_1 is not congruent mod p+1 to a sum of <= p-2 elements of S",
                           "the only congruence mod p+1 between p chi_1 and a sum of <= p-1 elements of S is "
                           "p chi_1 = sum (chi_1 - chi_j)"};
  const int bsolutions[] = {0, 0, 1};
  for (int c = 1; c <= 3; ++c) {
    reg.add({"borel-" + std::to_string(c), "Borel combinatorics, claim " + std::to_string(c), bclaims[c - 1],
             kCombinatoricsTags, {{"p", 3}}, [](Params& a) { need_prime(a); },
             [c, sols = bsolutions[c - 1]](const Params& a, const Budget& b, Outcome& o) {
               const int p = (int)a.at("p");
               need_terms(b, p - 1);
               auto res = borel_claim(c, p);
               o.computed("holds", res.holds);
               o.computed("solutions", res.solutions);
               o.expect("holds", true, PAPER);
               o.expect("solutions", sols, PAPER);
               o.note(res.detail);
             }});
  }

  reg.add({"field-search", "real quadratic field with the required unit",
           "there is a real quadratic field in which p is inert whose fundamental unit generates the norm +-1 "
           "subgroup mod p and satisfies the trace condition mod p^2",
           kCombinatoricsTags, {{"p", 3}}, [](Params& a) { need_prime(a, 2, 31); },
           [](const Params& a, const Budget&, Outcome& o) {
             const int p = (int)a.at("p");
             auto f = find_quadratic_field(p);
             o.computed("N", f.N);
             o.computed("d", f.d);
             o.computed("inert", f.nonsplit);
             o.computed("unit_condition", f.cond1);
             o.computed("trace_condition", f.cond2);
             o.computed("unit_order", f.unit_order);
             o.computed("independent_recheck", recheck_quadratic_field(f));
             o.expect("inert", true, PAPER);
             o.expect("unit_condition", true, PAPER);
             o.expect("trace_condition", true, PAPER);
             o.expect("independent_recheck", true, DERIVED);
             if (p == 2) o.expect("N", 5, PAPER);
           }});
}

void add_alpha(Registry& reg) {
  reg.add({"alpha-sl2-f4", "alpha(V) over SL_2(F_4)", "alpha(V) != 0 in H^1(SL_2(F_4), V^(1))", kTags,
           {{"seed", 1}}, nullptr,
           [](const Params& a, const Budget& b, Outcome& o) {
             need_order(b, 60);
             auto r = alpha_p2((std::uint64_t)a.at("seed"));
             o.computed("nonzero", r.nonzero);
             o.computed("choice_independent", r.choice_independent);
             o.computed("group_order", r.group_order);
             o.computed("H1_dim", r.h1_dim);
             o.expect("nonzero", true, PAPER);
             o.expect("choice_independent", true, DERIVED);
             o.expect("group_order", 60, TRIVIAL);
           }});

  reg.add({"alpha-u2-f2-zero", "alpha(V) restricted to U_2(F_2)", "alpha(V) restricts to zero on U_2(F_2)", kTags,
           {{"seed", 1}}, nullptr,
           [](const Params& a, const Budget& b, Outcome& o) {
             need_order(b, 60);
             auto r = alpha_p2((std::uint64_t)a.at("seed"));
             o.computed("restricted_zero", r.restricted_zero);
             o.computed("nonzero", r.nonzero);
             o.expect("restricted_zero", true, PAPER);
             o.expect("nonzero", true, PAPER);
           }});

  reg.add({"alpha-ta-f9", "alpha(V) over (T_3 A_3)(F_9)",
           "alpha(V) != 0 in H^{p-1}((T_p A_p)(F_q), V^(1)) for q > p, and it factors through the chi_1^p line; "
           "the de Rham and symmetric power models agree",
           kTags, {{"p", 3}, {"q", -1}, {"seed", 1}},
           [](Params& a) {
             need_prime(a, 3, 7);
             resolve_q(a, 2);
           },
           [](const Params& a, const Budget& b, Outcome& o) {
             const int p = (int)a.at("p"), r = exponent_of(a);
             need_order(b, ipow(a.at("q"), p - 1));
             need_level(b, p + 2);
             auto res = alpha_borel(p, r, true, (std::uint64_t)a.at("seed"));
             o.computed("omega_nonzero", res.omega_nonzero);
             o.computed("sym_nonzero", res.sym_nonzero);
             o.computed("omega_factors", res.omega_factors);
             o.computed("sym_factors", res.sym_factors);
             o.computed("models_agree", res.models_agree());
             o.computed("character_ok", res.character_ok);
             o.computed("H_line_invariant", res.h_line);
             o.computed("H_full_invariant", res.h_full);
             o.computed("line_map_nonzero", res.line_map_nonzero);
             o.computed("order_A", res.order_A);
             o.computed("order_T", res.order_T);
             for (auto k : {"omega_nonzero", "sym_nonzero", "omega_factors", "sym_factors"}) o.expect(k, true, PAPER);
             o.expect("models_agree", true, DERIVED);
             o.expect("character_ok", true, DERIVED);
             o.expect("H_line_invariant", 1, PAPER);
           }});

  reg.add({"chi1-iso", "invariant cohomology of the chi_1^p line",
           "H^{p-1}(A_p(F_q), chi_1^p)^{T_p(F_q)} is one-dimensional for q > p", kTags, {{"p", 3}, {"q", -1}},
           [](Params& a) {
             need_prime(a, 2, 7);
             resolve_q(a, 2);
           },
           [](const Params& a, const Budget& b, Outcome& o) {
             const int p = (int)a.at("p");
             need_order(b, ipow(a.at("q"), p - 1));
             need_level(b, p);
             o.computed("invariant_dim", chi1_invariant_dim(p, exponent_of(a)));
             o.expect("invariant_dim", 1, PAPER);
           }});

  reg.add({"integral-facts-p2", "restriction facts over the integers of Q(sqrt 5)",
           "for G = (T_2 A_2)(O_F): H^0(G, chi_1^{-2}) = 0 and the chi~_1^(1)- and V~^(1)-cohomology is killed "
           "by 2",
           kTags, {}, nullptr,
           [](const Params&, const Budget&, Outcome& o) {
             auto r = integral_p2();
             o.computed("H0_chi1_sq", r.h0_chi1sq);
             o.computed("H0_chi1_inverse_sq", r.h0_chi1msq);
             o.computed("chi_tilde_killed_by_p", r.chi_tilde_torsion);
             o.computed("V_tilde_killed_by_p", r.vtilde_torsion);
             o.computed("H1_chi_tilde_structure", structure_vector(r.h1_chi_tilde));
             o.computed("H1_V_tilde_structure", structure_vector(r.h1_vtilde));
             o.computed("H1_chi1_sq_dim", r.h1_chi2sq);
             o.expect("H0_chi1_inverse_sq", 0, PAPER);
             o.expect("H0_chi1_sq", 0, DERIVED);
             o.expect("chi_tilde_killed_by_p", true, PAPER);
             o.expect("V_tilde_killed_by_p", true, PAPER);
           }});

  reg.add({"bock-alpha-nonzero-p2", "Bockstein of alpha(V) over the integers of Q(sqrt 5)",
           "Bock(alpha(V)) != 0 in H^2((T_2 A_2)(O_F), V^(1)) for F = Q(sqrt 5)", kTags, {}, nullptr,
           [](const Params&, const Budget&, Outcome& o) {
             auto r = integral_p2();
             o.computed("alpha_nonzero", r.alpha_nonzero);
             o.computed("bockstein_nonzero", r.bock_nonzero);
             o.computed("restriction_injective", r.restriction_injective);
             o.expect("alpha_nonzero", true, PAPER);
             o.expect("bockstein_nonzero", true, PAPER);
             o.expect("restriction_injective", true, PAPER);
           }});
}

Registry build() {
  Registry reg;
  add_derived_powers(reg);
  add_cartier(reg);
  add_steenrod(reg);
  add_witt(reg);
  add_group_cohomology(reg);
  add_combinatorics(reg);
  add_alpha(reg);
  return reg;
}

}  // namespace

const Registry& default_registry() {
  static const Registry reg = build();
  return reg;
}

}  // namespace charp
