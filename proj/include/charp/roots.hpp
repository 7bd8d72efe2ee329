#pragma once
// Weights of the maximal torus of SL_p in the basis chi_1..chi_{p-1}, sums of
// p-power multiples of roots, and the search for a real quadratic field.

#include <string>
#include <vector>

namespace charp {

using Weight = std::vector<long long>;  // coordinates on chi_1..chi_{p-1}

Weight chi(int p, int i);  // chi_i, 1 <= i <= p; chi_p = -(chi_1 + ... + chi_{p-1})
Weight add(const Weight& a, const Weight& b);
Weight scale(long long c, const Weight& a);
std::string show(const Weight& w);

struct RootSets {
  std::vector<Weight> U, A;  // positive roots of U_p, and those of A_p
};
RootSets positive_roots(int p);
std::vector<Weight> borel_set(int p);  // chi_1 - chi_j and p (chi_1 - chi_j), 2 <= j <= p

struct Term {
  int exponent = 0;  // the summand is p^exponent * gens[gen]
  int gen = 0;
  bool operator<(const Term& o) const { return exponent != o.exponent ? exponent < o.exponent : gen < o.gen; }
  bool operator==(const Term& o) const { return exponent == o.exponent && gen == o.gen; }
};
using Expression = std::vector<Term>;  // sorted multiset

struct SearchSpec {
  int p = 2;
  int max_terms = 1;
  int exponent_bound = 0;  // largest exponent, -1 for unbounded
  long long modulus = 0;   // 0: equality; m > 0: coordinatewise congruence mod m
};

struct SearchResult {
  std::vector<Expression> found;
  int exponent_cap = 0;     // exponents actually searched: 0..exponent_cap
  bool certified = false;   // the finite search provably covers the requested set
  std::string certificate;  // how the bound was obtained
};

// all multisets of at most max_terms summands p^r * gens[i] whose sum equals
// (or is congruent to) target, in lexicographic order
SearchResult enumerate(const Weight& target, const std::vector<Weight>& gens, const SearchSpec& s);
Weight evaluate(const Expression& e, const std::vector<Weight>& gens, int p);
std::string show(const Expression& e, const std::vector<Weight>& gens, int p);

int multiplicative_order(long long a, long long m);
// the height functional 2h with 2h(chi_i - chi_j) = 2(j - i); at least 2 on every positive root
long long height2(const Weight& w, int p);

// claim checks; each returns the number of solutions and the certificate
struct ClaimResult {
  bool holds = false;
  long long solutions = 0;
  bool certified = false;
  std::string detail;
};
ClaimResult weights_claim(int claim, int p, int r);  // claims 1..4, q = p^r
ClaimResult borel_claim(int claim, int p);           // claims 1..3

struct QuadraticField {
  int p = 0;
  long long d = 0, N = 0;   // F = Q(sqrt N), N = d^2 + 1 (p = 2: N = 5)
  int unit_order = 0;       // order of the reduced unit in F_{p^2}^*
  int required_order = 0;   // size of the norm +-1 subgroup (p > 2) or of F_4^* (p = 2)
  long long wieferich = 0;  // the trace expression mod p^2
  bool nonsplit = false, cond1 = false, cond2 = false;
};
QuadraticField find_quadratic_field(int p, long long search_bound = 100000);
// independent recheck of a returned field
bool recheck_quadratic_field(const QuadraticField& f);

}  // namespace charp
