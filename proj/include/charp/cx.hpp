#pragma once
// Bounded cochain complexes of free modules, cohomology, cones, truncations,
// connecting maps of degreewise split short exact sequences.

#include <functional>
#include <memory>

#include "charp/ralg.hpp"

namespace charp {

struct CochainComplex {
  RingPtr R;
  int lo = 0;
  std::vector<int> ranks;  // ranks[k] is the rank in degree lo+k
  std::vector<Mat> d;      // d[k]: degree lo+k -> lo+k+1

  CochainComplex() = default;
  CochainComplex(RingPtr ring, int lo_, std::vector<int> ranks_, std::vector<Mat> d_);
  int hi() const { return lo + (int)ranks.size() - 1; }
  int rank(int i) const { return i < lo || i > hi() ? 0 : ranks[i - lo]; }
  Mat diff(int i) const;  // degree i -> i+1, zero outside the range
  void validate() const;  // shapes and d^2 = 0
  int euler_rank() const;
  static CochainComplex concentrated(RingPtr R, int degree, int rank);
};

struct ComplexMap {
  CochainComplex src, tgt;
  std::vector<Mat> f;  // f[k]: src degree src.lo+k -> tgt same degree
  ComplexMap() = default;
  ComplexMap(CochainComplex s, CochainComplex t, std::vector<Mat> comps);
  Mat at(int i) const;
  void validate() const;
  static ComplexMap identity(const CochainComplex& C);
  static ComplexMap zero(const CochainComplex& S, const CochainComplex& T);
};
ComplexMap compose(const ComplexMap& g, const ComplexMap& f);  // g after f

struct CohomologySlice {
  int degree = 0;
  RingPtr R;
  ModuleStructure structure;
  Mat basis;  // columns: cocycles whose classes generate H
  int dim() const { return structure.free_rank + (int)structure.torsion.size(); }

  bool is_cocycle(const std::vector<elt>& v) const;
  bool is_coboundary(const std::vector<elt>& v) const;
  bool equal(const std::vector<elt>& v, const std::vector<elt>& w) const;
  // coordinates of the class of a cocycle in the basis (fields)
  std::vector<elt> coords(const std::vector<elt>& v) const;
  // some w with d w = v, for coboundaries
  std::vector<elt> preimage(const std::vector<elt>& v) const;

  Mat dprev, dnext;
  std::shared_ptr<Span> span;  // boundaries first, then tracked basis (fields)
  std::shared_ptr<Smith> sprev;  // local rings
  mutable std::shared_ptr<Solver> solver;
};

CohomologySlice cohomology(const CochainComplex& C, int i);
std::vector<int> cohomology_dims(const CochainComplex& C);  // fields, indexed from lo
std::vector<ModuleStructure> cohomology_structures(const CochainComplex& C);

CochainComplex shift(const CochainComplex& C, int s);  // H^i(shift(C,s)) = H^{i-s}(C)
CochainComplex cone(const ComplexMap& f);
CochainComplex tensor(const CochainComplex& C, const CochainComplex& D);
CochainComplex brutal_le(const CochainComplex& C, int n);  // drop degrees > n
CochainComplex brutal_ge(const CochainComplex& C, int n);  // drop degrees < n

struct Truncation {
  CochainComplex complex;
  ComplexMap map;  // inclusion tau<=n C -> C, or projection C -> tau>=n C
};
Truncation truncate_le(const CochainComplex& C, int n);
Truncation truncate_ge(const CochainComplex& C, int n);  // fields

Mat induced_on_H(const ComplexMap& f, int i);
Mat induced_on_H(const ComplexMap& f, const CohomologySlice& hs, const CohomologySlice& ht);

// Degreewise split short exact sequence 0 -> A -> B -> C -> 0, given through
// a set-theoretic lift C^i -> B^i, the middle differential, and the retraction
// onto A of elements of B^{i+1} killed by the projection.
struct SES {
  CochainComplex sub, quot;
  std::function<std::vector<elt>(int, const std::vector<elt>&)> lift;
  std::function<std::vector<elt>(int, const std::vector<elt>&)> mid_d;
  std::function<std::vector<elt>(int, const std::vector<elt>&)> retract;
  std::function<bool(int, const std::vector<elt>&)> in_sub;  // optional exactness probe
};
std::vector<elt> connecting_cocycle(const SES& s, int i, const std::vector<elt>& x);
// matrix H^i(quot) -> H^{i+1}(sub) in cohomology bases (fields)
Mat connecting(const SES& s, int i);
Mat connecting(const SES& s, const CohomologySlice& hq, const CohomologySlice& hs);

// Split SES of complexes over one field from explicit maps; exactness checked by ranks.
SES split_ses(const ComplexMap& incl, const ComplexMap& proj);
// 0 -> C/p -> C -> C/p -> 0 for C free over a ring with p^2 = 0 (Z/p^2, GR(p^2,r), W2(F_q))
SES bockstein_ses(const CochainComplex& C);
CochainComplex reduce_mod_p(const CochainComplex& C);

// random complex over a field with prescribed cohomology dims (degrees lo..lo+h.size()-1)
// and random acyclic pairs, conjugated by random invertible matrices
CochainComplex random_complex(const RingPtr& R, int lo, const std::vector<int>& hdims, int max_pairs,
                              std::mt19937_64& rng);
Mat random_invertible(const RingPtr& R, int n, std::mt19937_64& rng);

}  // namespace charp
