#include "charp/roots.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "charp/ralg.hpp"

namespace charp {

Weight chi(int p, int i) {
  if (i < 1 || i > p) throw Error("chi: index out of range");
  Weight w(p - 1, 0);
  if (i < p)
    w[i - 1] = 1;
  else
    std::fill(w.begin(), w.end(), -1);
  return w;
}

Weight add(const Weight& a, const Weight& b) {
  Weight c(a.size());
  for (size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
  return c;
}

Weight scale(long long c, const Weight& a) {
  Weight out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = c * a[k];
  return out;
}

std::string show(const Weight& w) {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < w.size(); ++k) {
    if (!w[k]) continue;
    long long c = w[k];
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    if (std::llabs(c) != 1) os << std::llabs(c);
    os << "x" << k + 1;
    first = false;
  }
  return first ? "0" : os.str();
}

RootSets positive_roots(int p) {
  RootSets out;
  Weight sum(p - 1, 1);
  for (int i = 1; i < p; ++i)
    for (int j = i + 1; j < p; ++j) out.U.push_back(add(chi(p, i), scale(-1, chi(p, j))));
  for (int i = 1; i < p; ++i) out.U.push_back(add(chi(p, i), sum));
  for (int i = 2; i < p; ++i) out.A.push_back(add(chi(p, 1), scale(-1, chi(p, i))));
  out.A.push_back(add(chi(p, 1), sum));
  return out;
}

std::vector<Weight> borel_set(int p) {
  std::vector<Weight> out;
  for (int j = 2; j <= p; ++j) out.push_back(add(chi(p, 1), scale(-1, chi(p, j))));
  for (int j = 2; j <= p; ++j) out.push_back(scale(p, add(chi(p, 1), scale(-1, chi(p, j)))));
  return out;
}

long long height2(const Weight& w, int p) {
  long long h = 0;
  for (int k = 1; k < p; ++k) h += w[k - 1] * (p + 1 - 2 * k);
  return h;
}

int multiplicative_order(long long a, long long m) {
  if (m == 1) return 1;
  if (std::gcd(a, m) != 1) throw Error("multiplicative_order: not a unit");
  long long x = ((a % m) + m) % m, y = x;
  int ord = 1;
  while (y != 1 % m) {
    y = y * x % m;
    ++ord;
  }
  return ord;
}

Weight evaluate(const Expression& e, const std::vector<Weight>& gens, int p) {
  Weight w(gens.empty() ? p - 1 : gens[0].size(), 0);
  for (auto& t : e) {
    long long c = 1;
    for (int k = 0; k < t.exponent; ++k) c *= p;
    w = add(w, scale(c, gens[t.gen]));
  }
  return w;
}

std::string show(const Expression& e, const std::vector<Weight>& gens, int p) {
  if (e.empty()) return "0";
  std::string s;
  for (auto& t : e) {
    if (!s.empty()) s += " + ";
    if (t.exponent) s += std::to_string(p) + "^" + std::to_string(t.exponent) + "*";
    s += "(" + show(gens[t.gen]) + ")";
  }
  return s;
}

// Finite search with a completeness certificate.
// Congruences mod m with gcd(p, m) = 1: p^(r + ord_m(p)) = p^r mod m, so exponents
// 0..ord_m(p)-1 represent every exponent. Equalities over positive roots: every
// positive root has 2h >= 2, and 2h(p^r lambda) = p^r 2h(lambda), so a summand
// of a sum equal to the target has p^r <= 2h(target) / 2, and there are at most
// 2h(target) / 2 summands.
SearchResult enumerate(const Weight& target, const std::vector<Weight>& gens, const SearchSpec& s) {
  SearchResult res;
  const int p = s.p;
  bool positive = true;
  for (auto& g : gens) positive &= height2(g, p) >= 2;
  const long long ht = height2(target, p);
  int cap;
  if (s.modulus > 0) {
    if (std::gcd((long long)p, s.modulus) != 1) throw Error("enumerate: modulus must be prime to p");
    const int period = multiplicative_order(p, s.modulus);
    cap = period - 1;
    res.certified = true;
    res.certificate = "exponents modulo ord_" + std::to_string(s.modulus) + "(" + std::to_string(p) +
                      ") = " + std::to_string(period);
    if (s.exponent_bound >= 0 && s.exponent_bound < cap) {
      cap = s.exponent_bound;
      res.certificate = "explicit exponent bound " + std::to_string(cap);
    }
  } else if (s.exponent_bound >= 0 && !positive) {
    cap = s.exponent_bound;
    res.certified = true;
    res.certificate = "explicit exponent bound " + std::to_string(cap);
  } else if (positive) {
    cap = 0;
    long long pw = p;
    while (2 * pw <= ht) {
      ++cap;
      pw *= p;
    }
    if (s.exponent_bound >= 0) cap = std::min(cap, s.exponent_bound);
    res.certified = true;
    res.certificate = "height bound: 2h(target) = " + std::to_string(ht) + ", exponents <= " + std::to_string(cap);
  } else {
    cap = 6;
    res.certified = false;
    res.certificate = "unbounded exponents over non-positive generators, searched up to 6";
  }
  res.exponent_cap = cap;
  std::vector<Weight> vals;
  std::vector<Term> types;
  for (int r = 0; r <= cap; ++r) {
    long long c = 1;
    for (int k = 0; k < r; ++k) c *= p;
    for (int g = 0; g < (int)gens.size(); ++g) {
      types.push_back({r, g});
      vals.push_back(scale(c, gens[g]));
    }
  }
  const size_t dim = target.size();
  auto matches = [&](const Weight& rest) {
    for (size_t k = 0; k < dim; ++k) {
      if (s.modulus > 0 ? rest[k] % s.modulus != 0 : rest[k] != 0) return false;
    }
    return true;
  };
  Expression cur;
  std::function<void(size_t, const Weight&)> dfs = [&](size_t from, const Weight& rest) {
    if (matches(rest)) res.found.push_back(cur);
    if ((int)cur.size() == s.max_terms) return;
    for (size_t t = from; t < types.size(); ++t) {
      if (s.modulus == 0 && positive && height2(rest, p) < height2(vals[t], p)) continue;
      cur.push_back(types[t]);
      dfs(t, add(rest, scale(-1, vals[t])));
      cur.pop_back();
    }
  };
  dfs(0, target);
  std::sort(res.found.begin(), res.found.end());
  return res;
}

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string list(const std::vector<Expression>& es, const std::vector<Weight>& gens, int p) {
  std::string s;
  for (auto& e : es) s += (s.empty() ? "" : "; ") + show(e, gens, p);
  return s.empty() ? "none" : s;
}

}  // namespace

ClaimResult weights_claim(int claim, int p, int r) {
  auto roots = positive_roots(p);
  const auto& D = roots.U;
  const long long q = ipow(p, r);
  ClaimResult out;
  out.certified = true;
  if (claim == 1 || claim == 3) {
    out.holds = true;
    for (int j = 2; j <= p; ++j) {
      Weight t = scale(p, chi(p, j));
      // claim 1 concerns the whole monoid: the height bound caps the number of summands
      SearchSpec s{p, p - 1, -1, claim == 3 ? q - 1 : 0};
      if (claim == 1) s.max_terms = (int)std::max<long long>(2 * (p - 1), height2(t, p) / 2);
      auto res = enumerate(t, D, s);
      out.solutions += (long long)res.found.size();
      out.certified &= res.certified;
      out.holds &= res.found.empty();
      out.detail += "j=" + std::to_string(j) + ": " + list(res.found, D, p) + " [" + res.certificate + "] ";
    }
    return out;
  }
  Weight t = scale(p, chi(p, 1));
  if (claim == 2) {
    auto res = enumerate(t, D, {p, p - 1, -1, 0});
    out.solutions = (long long)res.found.size();
    out.certified = res.certified;
    // (chi_1 - chi_2) + ... + (chi_1 - chi_{p-1}) + (chi_1 + (chi_1 + ... + chi_{p-1}))
    Expression expect;
    for (int i = 2; i < p; ++i) expect.push_back({0, i - 2});
    expect.push_back({0, (int)((p - 1) * (p - 2) / 2)});
    std::sort(expect.begin(), expect.end());
    out.holds = res.found.size() == 1 && res.found[0] == expect;
    out.detail = list(res.found, D, p) + " [" + res.certificate + "]";
    return out;
  }
  if (claim == 4) {
    if (r < 2) throw Error("weights claim 4 needs q > p");
    auto res = enumerate(t, D, {p, p - 1, r - 1, q - 1});
    out.solutions = (long long)res.found.size();
    out.certified = res.certified;
    out.holds = res.found.size() <= 1;
    for (auto& e : res.found) out.holds &= evaluate(e, D, p) == t;
    out.detail = list(res.found, D, p) + " [" + res.certificate + "]";
    return out;
  }
  throw Error("weights claim must be 1..4");
}

ClaimResult borel_claim(int claim, int p) {
  auto S = borel_set(p);
  ClaimResult out;
  out.certified = true;
  const long long m = p + 1;
  if (claim == 1) {
    out.holds = true;
    for (int i = 2; i <= p; ++i) {
      auto res = enumerate(scale(p, chi(p, i)), S, {p, p - 1, 0, m});
      out.solutions += (long long)res.found.size();
      out.holds &= res.found.empty();
      out.detail += "i=" + std::to_string(i) + ": " + list(res.found, S, p) + " ";
    }
    return out;
  }
  Weight t = scale(p, chi(p, 1));
  if (claim == 2) {
    auto res = enumerate(t, S, {p, p - 2, 0, m});
    out.solutions = (long long)res.found.size();
    out.holds = res.found.empty();
    out.detail = list(res.found, S, p);
    return out;
  }
  if (claim == 3) {
    auto res = enumerate(t, S, {p, p - 1, 0, m});
    out.solutions = (long long)res.found.size();
    Expression expect;
    for (int j = 2; j <= p; ++j) expect.push_back({0, j - 2});
    out.holds = res.found.size() == 1 && res.found[0] == expect && evaluate(expect, S, p) == t;
    out.detail = list(res.found, S, p);
    return out;
  }
  throw Error("borel claim must be 1..3");
}

namespace {

// a + b sqrt(D) modulo n
struct Quad {
  long long a, b;
};
Quad qmul(Quad x, Quad y, long long D, long long n) {
  auto m = [n](long long u) { return ((u % n) + n) % n; };
  return {m(m(x.a * y.a) + m(m(x.b * y.b) * m(D))), m(m(x.a * y.b) + m(x.b * y.a))};
}
Quad qpow(Quad x, long long e, long long D, long long n) {
  Quad r{1 % n, 0};
  while (e-- > 0) r = qmul(r, x, D, n);
  return r;
}
int qorder(Quad x, long long D, long long n) {
  Quad y = x;
  int ord = 1;
  while (!(y.a == 1 % n && y.b == 0)) {
    y = qmul(y, x, D, n);
    if (++ord > n * n) return 0;
  }
  return ord;
}
bool nonresidue(long long D, int p) {
  D = ((D % p) + p) % p;
  if (D == 0) return false;
  for (long long x = 1; x < p; ++x)
    if (x * x % p == D) return false;
  return true;
}
// size of {x in F_p[sqrt D]^* : N(x) = +-1}
int norm_pm1_size(long long D, int p) {
  int c = 0;
  for (long long a = 0; a < p; ++a)
    for (long long b = 0; b < p; ++b) {
      long long n = ((a * a - D % p * b % p * b) % p + p) % p;
      if (n == 1 || n == p - 1) ++c;
    }
  return c;
}
long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
// Tr((d + sqrt N)^p) - 2 d modulo p^2
long long wieferich(long long d, long long N, int p) {
  const long long m = (long long)p * p;
  long long s = 0;
  for (int k = 0; k <= p; k += 2) {
    long long term = binom(p, k) % m;
    for (int t = 0; t < p - k; ++t) term = term * (d % m) % m;
    for (int t = 0; t < k / 2; ++t) term = term * (N % m) % m;
    s = (s + term) % m;
  }
  return ((2 * s - 2 * d) % m + m) % m;
}
// F_4 = F_2[w] / (w^2 + w + 1) and W_2(F_4) = Z/4[w] / (w^2 - w - 1) written as (a, b) = a + b w
Quad wmul(Quad x, Quad y, long long n) {
  // w^2 = w + 1
  long long c0 = x.a * y.a, c1 = x.a * y.b + x.b * y.a, c2 = x.b * y.b;
  return {((c0 + c2) % n + n) % n, ((c1 + c2) % n + n) % n};
}
}  // namespace

bool recheck_quadratic_field(const QuadraticField& f) {
  const int p = f.p;
  if (p == 2) {
    if (f.N != 5) return false;
    // x^2 - x - 1 has no root mod 2
    bool irreducible = true;
    for (int x = 0; x < 2; ++x) irreducible &= ((x * x - x - 1) % 2 + 2) % 2 != 0;
    // (1 + sqrt 5) / 2 reduces to w, of order 3 in F_4^*
    Quad w{0, 1}, y = w;
    int ord = 1;
    while (!(y.a == 1 && y.b == 0)) {
      y = wmul(y, w, 2);
      ++ord;
    }
    // u = -1: the Witt vector Frobenius fixes -1 while (-1)^2 = 1
    Quad m1{3, 0}, sq = wmul(m1, m1, 4);
    return irreducible && ord == 3 && !(sq.a == m1.a && sq.b == m1.b);
  }
  if (f.N != f.d * f.d + 1 || !nonresidue(f.N, p)) return false;
  const long long d0 = f.d % p;
  Quad u0{d0, 1};
  if (qorder(u0, f.N % p, p) != norm_pm1_size(f.N % p, p)) return false;
  // Frobenius of the reduction of u in Z/p^2[sqrt N] is d - sqrt N
  const long long m = (long long)p * p;
  Quad up = qpow({f.d % m, 1}, p, f.N % m, m);
  return !(up.a == f.d % m && up.b == m - 1);
}

QuadraticField find_quadratic_field(int p, long long search_bound) {
  QuadraticField f;
  f.p = p;
  if (p == 2) {
    f.d = 2;
    f.N = 5;
    f.nonsplit = true;
    f.unit_order = 3;
    f.required_order = 3;
    f.cond1 = f.cond2 = recheck_quadratic_field(f);
    f.nonsplit = f.cond1;
    return f;
  }
  for (long long d0 = 0; d0 < p; ++d0) {
    const long long D = (d0 * d0 + 1) % p;
    if (!nonresidue(D, p)) continue;
    const int need = norm_pm1_size(D, p);
    const int ord = qorder({d0, 1}, D, p);
    if (ord != need) continue;
    for (long long d = d0; d < search_bound; d += p) {
      if (d == 0) continue;
      const long long N = d * d + 1;
      const long long w = wieferich(d, N, p);
      if (w == 0) continue;
      f.d = d;
      f.N = N;
      f.unit_order = ord;
      f.required_order = need;
      f.wieferich = w;
      f.nonsplit = true;
      f.cond1 = true;
      f.cond2 = recheck_quadratic_field(f);
      return f;
    }
  }
  throw Error("find_quadratic_field: search bound exhausted for p = " + std::to_string(p));
}

}  // namespace charp
