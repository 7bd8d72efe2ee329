#pragma once
// Group cohomology: normalized bar cochains of finite groups, Koszul complexes
// of lattices, presentation complexes of finitely presented groups, invariants
// under a prime-to-p symmetry group, equivariant staircase classes, Bocksteins.

#include <functional>
#include <random>

#include "charp/cx.hpp"
#include "charp/group.hpp"

namespace charp {

// action[g] is the matrix of a group element (finite groups), of a lattice
// generator (Z^m) or of a presentation generator
struct GModule {
  RingPtr R;
  int rank = 0;
  std::vector<Mat> action;

  void validate(const FiniteGroup& G) const;  // homomorphism, exhaustive for |G| <= 100
  void validate_lattice() const;              // generators invertible and commuting
};

GModule trivial_module(const RingPtr& R, int rank, int count);
GModule character_module(const RingPtr& R, const std::vector<elt>& values);
GModule hom_module(const GModule& B, const GModule& A);  // Hom(B, A), g.f = a(g) f b(g)^-1, column-major
GModule reduce_mod_p(const GModule& M);
GModule restrict_module(const GModule& M, const std::vector<int>& elements);
GModule frobenius_twist(const GModule& M);  // entrywise Frobenius of every matrix

// normalized inhomogeneous cochains: coordinates tuple * rank + i, tuples of
// non-identity elements in base |G|-1 with the first element least significant
CochainComplex bar_complex(const FiniteGroup& G, const GModule& M, int top, long long budget = 30000000);
std::vector<CohomologySlice> bar_cohomology(const FiniteGroup& G, const GModule& M, int D,
                                            long long budget = 30000000);

struct TupleCodec {
  const FiniteGroup* G = nullptr;
  std::vector<int> nid;   // element -> non-identity index or -1
  std::vector<int> elem;  // non-identity index -> element
  explicit TupleCodec(const FiniteGroup& G);
  long long count(int n) const;
  long long encode(const std::vector<int>& t) const;  // -1 when some entry is the identity
  std::vector<int> decode(int n, long long code) const;
};

// cohomology of Z^m through the Koszul complex of the operators action[j] - 1
CochainComplex koszul_complex(const GModule& M);
std::vector<CohomologySlice> lattice_cohomology(const GModule& M);

// words are (generator, +1 or -1) sequences
struct Presentation {
  int gens = 0;
  std::vector<std::vector<std::pair<int, int>>> relators;
};
// Fox calculus cochains of the presentation complex in degrees 0..2; H^0, H^1
// agree with group cohomology and H^2 of the group injects into H^2 here
CochainComplex presentation_complex(const Presentation& P, const GModule& M);

// Phi acts on G by automorphisms perm[phi] and on M compatibly through on_module
struct Symmetry {
  std::vector<std::vector<int>> perm;
  GModule on_module;
};

// Phi-invariant normalized cochains; a basis vector is given by an orbit of
// tuples and a vector of M fixed by the stabilizer of the orbit representative
struct InvariantCochains {
  const FiniteGroup* G = nullptr;
  GModule M;
  Symmetry S;
  int top = 0;
  struct Level {
    std::vector<int> orbit;            // tuple -> orbit
    std::vector<std::uint16_t> moved;  // tuple = perm[moved](representative)
    std::vector<long long> rep;
    std::vector<Mat> basis;  // per orbit: rank x k columns fixed by the stabilizer
    std::vector<Mat> left;   // per orbit: k x rank with left * basis = 1
    std::vector<int> offset;
    int dim = 0;
  };
  std::vector<Level> level;
  std::vector<Mat> d;  // full (possibly tall) differentials

  // averaged invariant coordinates of a full normalized cochain
  std::vector<elt> average(int n, const std::vector<elt>& full) const;
  std::vector<elt> expand(int n, const std::vector<elt>& coords) const;
  // H^n of the invariant subcomplex, with the outgoing differential row-compressed
  CohomologySlice H(int n, std::uint64_t seed = 1) const;
};

InvariantCochains invariant_cochains(const FiniteGroup& G, const GModule& M, const Symmetry& S, int top);
// H^i(G, M)^Phi for i <= D; requires |Phi| prime to p
std::vector<CohomologySlice> semidirect_reduce(const FiniteGroup& G, const GModule& M, const Symmetry& S, int D);
// the same through the averaging idempotent acting on bar cohomology (small groups)
std::vector<int> invariant_dims_by_idempotent(const FiniteGroup& G, const GModule& M, const Symmetry& S, int D);

// S_n permuting the factors of (R^rank)^{(x)n}, optionally twisted by the sign
GModule tensor_power_module(const FiniteGroup& Sn, const RingPtr& R, int rank, bool sign_twist);
// dims in degrees 0..p of tau>=1 (E[-1]^{(x)p})_{hS_p} for E of the given rank, through the
// 2-periodic C_p complex and the averaging idempotent of S_p/C_p; p in {2, 3}
std::vector<int> symmetric_orbit_dims(const RingPtr& R, int rank, int p);

// rows of a tall matrix spanning its row space, found by sampling and verified exactly
Mat row_basis(const Mat& m, std::uint64_t seed = 1);

// complexes of G-modules: action[g][k] acts on degree lo + k
struct EquivariantComplex {
  CochainComplex C;
  std::vector<std::vector<Mat>> action;
  void validate() const;  // commutation with d
  GModule module(int degree) const;
};

// [B^a -> C^a -> ... -> C^{b-1} -> Z^b] in degrees a-1..b
EquivariantComplex truncate_between(const EquivariantComplex& D, int a, int b);

struct GroupClass {
  int degree = 0;
  GModule W;
  std::vector<elt> cocycle;  // normalized bar coordinates
};

bool is_cocycle(const FiniteGroup& G, const GroupClass& x);
bool is_zero_class(const FiniteGroup& G, const GroupClass& x);
bool same_class(const FiniteGroup& G, const GroupClass& x, const GroupClass& y);

struct StaircaseResult {
  GroupClass cls;   // values in Hom(B, A)
  GModule A, B;     // induced actions on the two cohomology modules
  int a = 0, b = 0;
  Mat Abasis;       // cocycles of degree a representing the basis of A
};
// D must have exactly two nonzero cohomology modules A@a and B@b, a < b; the
// class lives in H^{b-a+1}(G, Hom(B, A)); rng randomizes every choice
StaircaseResult hyperext_class(const FiniteGroup& G, const EquivariantComplex& D, std::mt19937_64* rng = nullptr);
// 0 -> A -> E -> E/A -> 0 on any list of matrices: induced actions and the
// values a(g) sigma b(g)^-1 - sigma of a linear section sigma, in A coordinates
struct ExtensionData {
  GModule A, B;
  std::vector<Mat> value;
};
ExtensionData extension_values(const GModule& E, const Mat& sub, std::mt19937_64* rng = nullptr);
// 0 -> A -> E -> E/A -> 0 with A spanned by the columns of sub: class in H^1(G, Hom(E/A, A))
StaircaseResult extension_class(const FiniteGroup& G, const GModule& E, const Mat& sub, std::mt19937_64* rng = nullptr);

// connecting map of 0 -> M -> Mt -> M -> 0 on cochains of a model complex; Mt
// over Z/p^2 or W2(F_q) with Mt / p equal to M
using CochainModel = std::function<CochainComplex(const GModule&)>;
std::vector<elt> group_bockstein(const CochainModel& model, const GModule& M, const GModule& Mt, int i,
                                 const std::vector<elt>& x);

}  // namespace charp
