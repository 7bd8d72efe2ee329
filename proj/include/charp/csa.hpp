#pragma once
// Cosimplicial commutative algebras of functions on finite simplicial sets
// (nerves of finite groups, the simplicial circle, products), their Frobenius,
// Steenrod operations through universal classes, and Witt vector Bocksteins.

#include <memory>

#include "charp/dk.hpp"
#include "charp/group.hpp"

namespace charp {

using simplex = long long;

struct SimplicialSet {
  virtual ~SimplicialSet() = default;
  virtual std::string name() const = 0;
  virtual simplex count(int n) const = 0;
  virtual simplex face(int n, int i, simplex x) const = 0;   // X_n -> X_{n-1}
  virtual simplex degen(int n, int j, simplex x) const = 0;  // X_n -> X_{n+1}
  // x = s_j y for some j and y
  bool degenerate(int n, simplex x) const;
  std::vector<simplex> nondegenerate(int n) const;
};
using SSetPtr = std::shared_ptr<const SimplicialSet>;

SSetPtr nerve(const FiniteGroup& G);  // n-simplices are tuples (g_1..g_n) in base |G|
SSetPtr circle();                     // Delta^1 / boundary: n+1 simplices at level n
SSetPtr product(const SSetPtr& X, const SSetPtr& Y);

// functions X_n -> R with pointwise product; the normalized cochains are the
// functions vanishing on degenerate simplices
struct CosimplicialAlgebra {
  SSetPtr X;
  RingPtr R;
  int L = 0;
  std::vector<std::vector<simplex>> nd;  // nondegenerate simplices per level
  std::vector<std::map<simplex, int>> nd_index;
  CochainComplex normalized;  // degrees 0..L, correct in degrees <= L-1
  std::vector<std::map<std::pair<int, int>, long long>> dint;  // integer entries of the differential

  CosimplicialAlgebra over(const RingPtr& R2) const;  // same simplicial set, new coefficients
  CosimplicialModule module() const;                  // full levels with structure maps
  // multiplication tensor of level n on basis indicators: e_a e_b = delta_ab e_a
  std::vector<elt> mul(int n, const std::vector<elt>& a, const std::vector<elt>& b) const;
  std::vector<elt> unit(int n) const;
  void validate() const;  // commutativity, associativity, unit, cofaces multiplicative
  const CohomologySlice& H(int i) const;  // cached

  mutable std::shared_ptr<std::map<int, CohomologySlice>> hcache;
};

CosimplicialAlgebra function_algebra(const SSetPtr& X, const RingPtr& R, int L, long long budget = 4000000);
CosimplicialAlgebra nerve_algebra(const FiniteGroup& G, const RingPtr& R, int L, long long budget = 4000000);

struct HClass {
  int degree = 0;
  std::vector<elt> cocycle;  // normalized coordinates
};

HClass make_class(const CosimplicialAlgebra& A, int degree, const std::vector<elt>& cocycle);  // checks d = 0
bool same_class(const CosimplicialAlgebra& A, const HClass& x, const HClass& y);
bool is_zero_class(const CosimplicialAlgebra& A, const HClass& x);
HClass add(const CosimplicialAlgebra& A, const HClass& x, const HClass& y);
HClass cup(const CosimplicialAlgebra& A, const HClass& x, const HClass& y);  // Alexander-Whitney
std::vector<HClass> cohomology_basis(const CosimplicialAlgebra& A, int degree);

// F*(N A) -> N A induced by x -> x^p at every level
ComplexMap frobenius_map(const CosimplicialAlgebra& A);

// cosimplicial map DK(R[-i]) -> A realizing a normalized cocycle, levels 0..n
std::vector<Mat> realize_cocycle(const CosimplicialAlgebra& A, const HClass& x, int n);

struct UniversalClasses {
  int p = 0, i = 0;
  DerivedPower sym;        // Sym^p(F_p[-i]) with levels up to i+2
  std::vector<elt> p0;     // degree i cocycle: the Delta-generator
  std::vector<elt> p1;     // degree i+1 cocycle: the norm fiber generator through Z/p^2
};
const UniversalClasses& universal_classes(int p, int i);  // cached, thread safe

HClass steenrod(const CosimplicialAlgebra& A, const HClass& x, int m);  // m in {0, 1}
HClass witt_bockstein(const CosimplicialAlgebra& A, const HClass& x);
HClass bockstein(const CosimplicialAlgebra& A, const HClass& x);  // through Z/p^2 coefficients

struct BockCheck {
  HClass lhs, rhs;  // classes of degree i+1 with Z/p^2 coefficients
  bool equal = false;
};
// A over Z/p^2, x a cocycle of A/p: m o gamma against Bock o phi
BockCheck algebra_bockstein_check(const CosimplicialAlgebra& A, const HClass& x);

}  // namespace charp
