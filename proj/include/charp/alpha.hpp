#pragma once
// Concrete groups over finite fields and rings of integers, their natural
// modules, equivariant models of the truncated symmetric power, the class
// alpha(V) and its Bockstein.

#include <map>

#include "charp/dk.hpp"
#include "charp/gcoh.hpp"

namespace charp {

// element lookup for matrix groups
struct Indexed {
  MatrixGroup MG;
  std::map<std::vector<elt>, int> index;
  int find(const Mat& m) const;  // -1 when absent
};
Indexed indexed(MatrixGroup MG);

elt field_generator(const RingPtr& Fq);  // generator of F_q^*

Indexed sl2(const RingPtr& Fq);                      // SL_2(F_q)
Indexed unipotent2(const RingPtr& R);                // U_2(F_p) inside SL_2(R)
Indexed additive_group(int p, const RingPtr& Fq);    // A_p(F_q): I + sum x_i E_{1i}
Indexed torus(int p, const RingPtr& Fq);             // diagonal, determinant one
Indexed borel_pair(const RingPtr& Fq);               // T_2 semidirect A_2 over F_q, as matrices

// T acting on A by conjugation and on M through on_module
Symmetry conjugation_symmetry(const Indexed& A, const Indexed& T, const std::vector<Mat>& on_module);

GModule natural_module(const Indexed& G);
GModule functor_module(PolyFunctor F, const GModule& V);
std::vector<int> embedding(const Indexed& H, const Indexed& G);  // H element -> G element

// restriction of a bar cocycle along an embedding of finite groups
GroupClass restrict_class(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& embed,
                          const GroupClass& x);

// Omega^{<= n-1}_n over the matrices of G (degrees 0..n-1)
EquivariantComplex omega_truncated(const std::vector<Mat>& mats, int n);
// derived Sym^p(V[-1]) with its levelwise action, degrees 0..B+1
EquivariantComplex sym_shifted(const std::vector<Mat>& mats, int p, int B);

struct AlphaP2 {
  bool nonzero = false;             // in H^1(SL_2(F_4), V^(1))
  bool restricted_zero = false;     // on U_2(F_2)
  bool choice_independent = false;  // 10 random splittings
  int group_order = 0;
  int h1_dim = 0;                   // dim H^1(SL_2(F_4), V^(1))
};
AlphaP2 alpha_p2(std::uint64_t seed = 1);

struct BorelAlpha {
  int p = 0, q = 0;
  int order_A = 0, order_T = 0;
  bool omega_nonzero = false, sym_nonzero = false;
  bool omega_factors = false, sym_factors = false;  // through the chi_1^p line
  bool character_ok = false;                        // T acts on the A-invariant line by t_1^p
  int h_line = 0, h_full = 0;                       // dims of H^{p-1}(A, line)^T and H^{p-1}(A, W)^T
  bool line_map_nonzero = false;
  bool models_agree() const { return omega_nonzero == sym_nonzero; }
};
// p = 3: staircase on A_p(F_q) for both models, then T-invariant cochains
BorelAlpha alpha_borel(int p, int r, bool with_sym = true, std::uint64_t seed = 1);

// H^{p-1}(A_p(F_q), chi_1^p)^{T_p(F_q)}
int chi1_invariant_dim(int p, int r);

struct IntegralP2 {
  int h0_chi1sq = -1, h0_chi1msq = -1;  // H^0 with chi_1^2 and chi_1^{-2}
  bool chi_tilde_torsion = false;       // H^1(G, chi~_1^(1)) killed by 2
  bool vtilde_torsion = false;          // H^1(G, V~^(1)) killed by 2
  ModuleStructure h1_chi_tilde, h1_vtilde;
  bool alpha_nonzero = false;           // in H^1(G, V^(1))
  bool bock_nonzero = false;            // Bock^1(alpha) in H^2
  bool restriction_injective = false;   // H^1((T A)(F_4), chi_1^2) -> H^1(G, chi_1^2)
  int h1_chi2sq = -1;                   // informational
};
// G = (T_2 semidirect A_2)(O_F), F = Q(sqrt 5), by a presentation
IntegralP2 integral_p2();

}  // namespace charp
