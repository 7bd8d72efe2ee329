#pragma once
// Finite groups as multiplication tables, with constructors for cyclic,
// symmetric, product and matrix groups over finite rings.

#include <functional>
#include <string>
#include <vector>

#include "charp/ralg.hpp"

namespace charp {

struct FiniteGroup {
  std::string name;
  int order = 1;
  std::vector<int> table;  // table[a * order + b] = a * b
  std::vector<int> inverse;
  int identity = 0;

  int mul(int a, int b) const { return table[(size_t)a * order + b]; }
  int inv(int a) const { return inverse[a]; }
  int pow(int a, long long k) const;
  int element_order(int a) const;
  bool is_abelian() const;
  void validate() const;  // associativity, identity, inverses

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);  // elements are permutations in lex order
  static FiniteGroup product(const FiniteGroup& G, const FiniteGroup& H);  // (g,h) -> g * H.order + h
  // closure of generators under a multiplication on encoded elements (identity first)
  static FiniteGroup generated(const std::string& name, const std::vector<std::vector<elt>>& gens,
                               const std::vector<elt>& identity,
                               const std::function<std::vector<elt>(const std::vector<elt>&, const std::vector<elt>&)>& mul,
                               std::vector<std::vector<elt>>* elements = nullptr, int max_order = 100000);
};

std::vector<int> permutation(const FiniteGroup& G, int index);  // symmetric groups: the permutation
int sign_of(const std::vector<int>& perm);

// group generated by invertible matrices over R; elements[k] is the matrix of element k
struct MatrixGroup {
  FiniteGroup G;
  std::vector<Mat> elements;
};
MatrixGroup matrix_group(const std::string& name, const RingPtr& R, const std::vector<Mat>& gens, int max_order = 100000);

}  // namespace charp
