#include <random>
#include "charp/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace charp {

int FiniteGroup::pow(int a, long long k) const {
  if (k < 0) return pow(inv(a), -k);
  int r = identity;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

void FiniteGroup::validate() const {
  for (int a = 0; a < order; ++a) {
    if (mul(identity, a) != a || mul(a, identity) != a) throw Error(name + ": identity law fails");
    if (mul(a, inv(a)) != identity) throw Error(name + ": inverse law fails");
    if (order > 100) continue;
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error(name + ": associativity fails");
  }
  if (order <= 100) return;
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10000; ++t) {
    int a = rng() % order, b = rng() % order, c = rng() % order;
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error(name + ": associativity fails");
  }
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error("cyclic group order must be positive");
  FiniteGroup G;
  G.name = "C" + std::to_string(n);
  G.order = n;
  G.table.resize((size_t)n * n);
  G.inverse.resize(n);
  for (int a = 0; a < n; ++a) {
    G.inverse[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) G.table[(size_t)a * n + b] = (a + b) % n;
  }
  return G;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < (int)perms.size(); ++i) idx[perms[i]] = i;
  FiniteGroup G;
  G.name = "S" + std::to_string(n);
  G.order = (int)perms.size();
  G.table.resize((size_t)G.order * G.order);
  G.inverse.resize(G.order);
  for (int a = 0; a < G.order; ++a) {
    std::vector<int> inv(n);
    for (int k = 0; k < n; ++k) inv[perms[a][k]] = k;
    G.inverse[a] = idx[inv];
    for (int b = 0; b < G.order; ++b) {
      std::vector<int> c(n);
      for (int k = 0; k < n; ++k) c[k] = perms[a][perms[b][k]];  // a after b
      G.table[(size_t)a * G.order + b] = idx[c];
    }
  }
  return G;
}

std::vector<int> permutation(const FiniteGroup& G, int index) {
  int n = 1;
  for (long long f = 1; f < G.order; f *= ++n) {
  }
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int k = 0; k < index; ++k) std::next_permutation(p.begin(), p.end());
  return p;
}

int sign_of(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t a = 0; a < perm.size(); ++a)
    for (size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv % 2 ? -1 : 1;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& G, const FiniteGroup& H) {
  FiniteGroup P;
  P.name = G.name + "x" + H.name;
  P.order = G.order * H.order;
  P.identity = G.identity * H.order + H.identity;
  P.table.resize((size_t)P.order * P.order);
  P.inverse.resize(P.order);
  for (int a = 0; a < P.order; ++a) {
    P.inverse[a] = G.inv(a / H.order) * H.order + H.inv(a % H.order);
    for (int b = 0; b < P.order; ++b)
      P.table[(size_t)a * P.order + b] = G.mul(a / H.order, b / H.order) * H.order + H.mul(a % H.order, b % H.order);
  }
  return P;
}

FiniteGroup FiniteGroup::generated(
    const std::string& name, const std::vector<std::vector<elt>>& gens, const std::vector<elt>& identity,
    const std::function<std::vector<elt>(const std::vector<elt>&, const std::vector<elt>&)>& mul,
    std::vector<std::vector<elt>>* elements, int max_order) {
  std::vector<std::vector<elt>> els{identity};
  std::map<std::vector<elt>, int> idx{{identity, 0}};
  for (size_t k = 0; k < els.size(); ++k)
    for (auto& g : gens) {
      auto h = mul(els[k], g);
      if (idx.emplace(h, (int)els.size()).second) {
        els.push_back(h);
        if ((int)els.size() > max_order)
          throw SizeLimit(name + ": group order exceeds the budget of " + std::to_string(max_order));
      }
    }
  FiniteGroup G;
  G.name = name;
  G.order = (int)els.size();
  G.table.resize((size_t)G.order * G.order);
  G.inverse.assign(G.order, -1);
  for (int a = 0; a < G.order; ++a)
    for (int b = 0; b < G.order; ++b) {
      int c = idx.at(mul(els[a], els[b]));
      G.table[(size_t)a * G.order + b] = c;
      if (c == 0) G.inverse[a] = b;
    }
  if (elements) *elements = els;
  return G;
}

MatrixGroup matrix_group(const std::string& name, const RingPtr& R, const std::vector<Mat>& gens, int max_order) {
  int n = gens.empty() ? 0 : gens[0].rows;
  std::vector<std::vector<elt>> g;
  for (auto& m : gens) g.push_back(m.a);
  std::vector<std::vector<elt>> els;
  auto mul = [&](const std::vector<elt>& a, const std::vector<elt>& b) {
    Mat A(R, n, n), B(R, n, n);
    A.a = a;
    B.a = b;
    return (A * B).a;
  };
  MatrixGroup out;
  out.G = FiniteGroup::generated(name, g, Mat::identity(R, n).a, mul, &els, max_order);
  for (auto& e : els) {
    Mat m(R, n, n);
    m.a = e;
    out.elements.push_back(m);
  }
  return out;
}

}  // namespace charp
