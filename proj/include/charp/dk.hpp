#pragma once
// Dold-Kan correspondence, levelwise power functors, derived powers and their
// natural transformations; the de Rham type complexes Omega_n.

#include <map>

#include "charp/cx.hpp"

namespace charp {

enum class FunctorKind { Sym, Div, Ext };

struct PolyFunctor {
  FunctorKind kind = FunctorKind::Sym;
  int n = 1;
  std::string name() const;
};

// basis of F(R^rank): weakly increasing tuples (Sym, Div) or strictly increasing (Ext), lex order
std::vector<std::vector<int>> functor_basis(PolyFunctor F, int rank);
int functor_rank(PolyFunctor F, int rank);

using SparseCol = std::vector<std::pair<int, elt>>;
using SparseMat = std::vector<SparseCol>;  // one sparse column per source basis vector
SparseMat to_sparse(const Mat& m);

// F applied to one basis tuple of the source, as coefficients on target tuples
std::map<std::vector<int>, elt> functor_image(PolyFunctor F, const Ring& R, const SparseMat& f,
                                              const std::vector<int>& tuple);
Mat apply_functor(PolyFunctor F, const Mat& f);

struct CosimplicialModule {
  RingPtr R;
  int L = 0;
  std::vector<int> ranks;                  // levels 0..L
  std::vector<std::vector<Mat>> coface;    // coface[n][i]: level n-1 -> n, 1 <= n <= L
  std::vector<std::vector<Mat>> codeg;     // codeg[n][j]: level n+1 -> n, 0 <= n < L
  void validate() const;                   // cosimplicial identities
};

// Layout of the Dold-Kan cosimplicial module of C: level n is the sum over monotone
// surjections [n] -> [k] (encoded by the bitmask of their jumps) of C^k.
struct DKLayout {
  struct Summand {
    unsigned mask;
    int k;
    int offset;
  };
  CochainComplex C;
  int L = 0;
  std::vector<std::vector<Summand>> lev;
  std::vector<std::map<unsigned, int>> index;
  std::vector<int> rank;
  std::vector<std::vector<unsigned>> jumps;  // per level basis vector: jump mask of its summand

  DKLayout(const CochainComplex& C, int L);
  // structure map along a monotone theta: [n] -> [m]
  SparseMat structure(int n, int m, const std::vector<int>& theta) const;
  SparseMat coface(int n, int i) const;  // level n-1 -> n
  SparseMat codeg(int n, int j) const;   // level n+1 -> n
};

CosimplicialModule dold_kan(const CochainComplex& C, int L);

struct Conormalized {
  CochainComplex complex;
  std::vector<Mat> incl;  // incl[n]: N^n -> A^n
};
// N^n = intersection of kernels of codegeneracies; d = alternating sum of cofaces.
// All levels are normalized; degrees [0, L-1] of the result are correct.
Conormalized conormalize(const CosimplicialModule& A);
CosimplicialModule levelwise(PolyFunctor F, const CosimplicialModule& A);
std::vector<Mat> dold_kan_map(const ComplexMap& g, int L);  // levelwise components

struct DerivedPower {
  PolyFunctor F;
  int L = 0;
  bool twisted = false;
  CochainComplex complex;  // degrees 0..L, correct in degrees <= L-1
  std::vector<std::vector<std::vector<int>>> mono;  // normalized basis tuples per level
  std::vector<std::map<std::vector<int>, int>> index;
  std::shared_ptr<DKLayout> layout;
  int find(int n, const std::vector<int>& t) const;
};

// conormalize(levelwise(F, dold_kan(C, B+1))) computed on normalized monomials
DerivedPower derived_power(PolyFunctor F, const CochainComplex& C, int B, int level_cap = 8);
DerivedPower frobenius_twist(const DerivedPower& P);

enum class NatKind { Norm, Restr, Delta, Psi };
// Norm: Sym^n -> Div^n, Restr: Div^n -> Sym^n, Delta: twisted Sym^1 -> Sym^p, Psi: Div^p -> twisted Sym^1
ComplexMap natural_map(NatKind kind, const DerivedPower& src, const DerivedPower& tgt);

// module level (complex in degree 0) versions, over R^rank
Mat norm_matrix(const RingPtr& R, int n, int rank);
Mat restriction_matrix(const RingPtr& R, int n, int rank);
Mat delta_matrix(const RingPtr& R, int rank);  // F*M -> S^p M
Mat psi_matrix(const RingPtr& R, int rank);    // Gamma^p M -> F*M

// Omega^i_n = S^{n-i} V (x) Lambda^i V with the de Rham differential
CochainComplex omega_complex(const RingPtr& R, int dimV, int n);
std::vector<Mat> omega_action(const Mat& g, int n);  // per degree, commuting with d

}  // namespace charp
