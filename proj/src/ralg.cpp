#include "charp/ralg.hpp"

#include <algorithm>
#include <sstream>

namespace charp {

namespace {

long long ipow(long long b, int k) {
  long long r = 1;
  while (k-- > 0) r *= b;
  return r;
}

int vp(long long x, int p) {
  int k = 0;
  while (x % p == 0 && x != 0) {
    x /= p;
    ++k;
  }
  return k;
}

// polynomial helpers over Z/q with q = p^e, digits low to high
std::vector<int> polymulmod(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& mod, int q) {
  int r = (int)mod.size() - 1;
  std::vector<long long> c(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + (long long)a[i] * b[j]) % q;
  for (int k = (int)c.size() - 1; k >= r; --k) {
    long long t = c[k] % q;
    if (!t) continue;
    for (int i = 0; i <= r; ++i) c[k - r + i] = ((c[k - r + i] - t * mod[i]) % q + q) % q;
  }
  std::vector<int> out(r, 0);
  for (int i = 0; i < r && i < (int)c.size(); ++i) out[i] = (int)((c[i] % q + q) % q);
  return out;
}

bool has_factor_of_degree(const std::vector<int>& f, int p, int d) {
  // trial division of f (monic) by every monic polynomial of degree d over F_p
  long long count = ipow(p, d);
  int n = (int)f.size() - 1;
  for (long long idx = 0; idx < count; ++idx) {
    std::vector<int> g(d + 1, 0);
    long long t = idx;
    for (int i = 0; i < d; ++i) {
      g[i] = (int)(t % p);
      t /= p;
    }
    g[d] = 1;
    std::vector<int> rem(f.begin(), f.end());
    for (int k = n; k >= d; --k) {
      int c = ((rem[k] % p) + p) % p;
      if (!c) continue;
      for (int i = 0; i <= d; ++i) rem[k - d + i] = ((rem[k - d + i] - c * g[i]) % p + p) % p;
    }
    bool zero = true;
    for (int i = 0; i < d; ++i)
      if (rem[i] % p) zero = false;
    if (zero) return true;
  }
  return false;
}

bool irreducible_mod_p(const std::vector<int>& f, int p) {
  int n = (int)f.size() - 1;
  if (n < 1 || f[n] % p != 1) return false;
  for (int d = 1; 2 * d <= n; ++d)
    if (has_factor_of_degree(f, p, d)) return false;
  return true;
}

std::vector<int> default_modulus(int p, int r) {
  if (r == 1) return {0, 1};
  long long count = ipow(p, r);
  for (long long idx = 0; idx < count; ++idx) {
    std::vector<int> f(r + 1, 0);
    long long t = idx;
    for (int i = 0; i < r; ++i) {
      f[i] = (int)(t % p);
      t /= p;
    }
    f[r] = 1;
    if (irreducible_mod_p(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

RingSpec RingSpec::prime_field(int p) {
  RingSpec s;
  s.kind = RingKind::PrimeField;
  s.p = p;
  return s;
}

RingSpec RingSpec::galois_field(int p, int r, std::vector<int> modulus) {
  RingSpec s;
  s.kind = r == 1 ? RingKind::PrimeField : RingKind::GaloisField;
  s.p = p;
  s.r = r;
  if (r > 1) s.modulus = modulus.empty() ? default_modulus(p, r) : std::move(modulus);
  return s;
}

RingSpec RingSpec::integers_mod(int p, int e) {
  RingSpec s;
  s.kind = e == 1 ? RingKind::PrimeField : RingKind::IntegersModPE;
  s.p = p;
  s.e = e;
  return s;
}

RingSpec RingSpec::galois_ring(int p, int e, int r, std::vector<int> modulus) {
  if (r == 1) return integers_mod(p, e);
  if (e == 1) return galois_field(p, r, std::move(modulus));
  RingSpec s;
  s.kind = RingKind::GaloisRing;
  s.p = p;
  s.e = e;
  s.r = r;
  s.modulus = modulus.empty() ? default_modulus(p, r) : std::move(modulus);
  return s;
}

RingSpec RingSpec::witt2(const RingSpec& base) {
  RingSpec s;
  s.kind = RingKind::Witt2;
  s.p = base.p;
  s.base = std::make_shared<RingSpec>(base);
  return s;
}

std::string RingSpec::name() const {
  std::ostringstream o;
  switch (kind) {
    case RingKind::PrimeField: o << "F" << p; break;
    case RingKind::GaloisField: o << "F" << ipow(p, r); break;
    case RingKind::IntegersModPE: o << "Z/" << ipow(p, e); break;
    case RingKind::GaloisRing: o << "GR(" << ipow(p, e) << "," << r << ")"; break;
    case RingKind::Witt2: o << "W2(" << base->name() << ")"; break;
  }
  return o.str();
}

RingPtr Ring::make(const RingSpec& spec) {
  auto r = std::shared_ptr<Ring>(new Ring(spec));
  r->build();
  return r;
}

Ring::Ring(const RingSpec& spec) : spec_(spec) {}

void Ring::build() {
  const int p = spec_.p;
  if (!is_prime(p)) throw Error("ring construction: p = " + std::to_string(p) + " is not prime");
  if (spec_.kind == RingKind::Witt2) {
    if (!spec_.base) throw Error("Witt2 without base");
    base_ = Ring::make(*spec_.base);
    if (base_->p() != p) throw Error("Witt2 base characteristic mismatch");
    n_ = base_->size() * base_->size();
    deg_ = base_->degree();
    one_ = wpair(base_->one(), 0);
  } else {
    if (spec_.e < 1 || spec_.r < 1) throw Error("ring construction: e, r must be >= 1");
    q_ = (elt)ipow(p, spec_.e);
    deg_ = spec_.r;
    if (spec_.r == 1) {
      prime_ = true;
      n_ = q_;
    } else {
      const auto& f = spec_.modulus;
      if ((int)f.size() != spec_.r + 1) throw Error("modulus must have degree r");
      std::vector<int> fp(f.size());
      for (size_t i = 0; i < f.size(); ++i) fp[i] = ((f[i] % p) + p) % p;
      if (!irreducible_mod_p(fp, p))
        throw Error("ring construction: modulus is reducible mod " + std::to_string(p));
      if (((f.back() % (int)q_) + (int)q_) % (int)q_ != 1) throw Error("modulus must be monic");
      n_ = (elt)ipow(q_, spec_.r);
    }
    one_ = 1;
  }
  if (n_ > 0x7fffffffu) throw Error("ring too large");
  // p as a ring element and the nilpotency exponent of p
  p_elt_ = from_int(p);
  {
    exp_ = 1;
    elt t = p_elt_;
    while (t != 0) {
      t = mul_slow(t, p_elt_);
      ++exp_;
      if (exp_ > 64) throw Error("p is not nilpotent");
    }
  }

  if (spec_.kind == RingKind::GaloisRing) {
    // Galois lift of Frobenius: the root of the modulus congruent to x^p mod p
    std::vector<int> xp(spec_.r, 0);
    xp[1] = 1;
    elt x = from_digits(xp);
    elt target = 1;
    for (int i = 0; i < p; ++i) target = mul_slow(target, x);
    auto red = [&](elt a) {
      auto d = digits(a);
      for (auto& c : d) c %= p;
      return d;
    };
    auto tr = red(target);
    bool found = false;
    for (elt eta = 0; eta < n_ && !found; ++eta) {
      if (red(eta) != tr) continue;
      elt acc = 0, pw = 1;
      for (int i = 0; i <= spec_.r; ++i) {
        acc = add_slow(acc, mul_slow(from_int(spec_.modulus[i]), pw));
        pw = mul_slow(pw, eta);
      }
      if (acc == 0) {
        xfrob_ = {eta};
        found = true;
      }
    }
    if (!found) throw Error("Galois lift of Frobenius not found");
  }

  if (n_ <= 1024) {
    tab_ = false;
    std::vector<std::uint16_t> at(n_ * n_), mt(n_ * n_), nt(n_);
    for (elt a = 0; a < n_; ++a) {
      nt[a] = (std::uint16_t)neg_slow(a);
      for (elt b = 0; b < n_; ++b) {
        at[a * n_ + b] = (std::uint16_t)add_slow(a, b);
        mt[a * n_ + b] = (std::uint16_t)mul_slow(a, b);
      }
    }
    addt_ = std::move(at);
    mult_ = std::move(mt);
    negt_ = std::move(nt);
    tab_ = true;
    invt_.assign(n_, 0xffffffffu);
    for (elt a = 0; a < n_; ++a)
      for (elt b = 0; b < n_; ++b)
        if (mul(a, b) == one_) {
          invt_[a] = b;
          break;
        }
    frobt_.resize(n_);
    frobinvt_.assign(n_, 0);
    for (elt a = 0; a < n_; ++a) frobt_[a] = frob_raw(a);
    for (elt a = 0; a < n_; ++a) frobinvt_[frobt_[a]] = a;
    divpt_.assign(n_, 0xffffffffu);
    for (elt b = n_; b-- > 0;) divpt_[mul(p_elt_, b)] = b;
  }
  residue_field();
}

void Ring::axpy(elt* y, elt f, const elt* x, std::size_t len) const {
  if (f == 0) return;
  if (tab_) {
    const std::uint16_t* mf = mult_.data() + (std::size_t)f * n_;
    const std::uint16_t* at = addt_.data();
    for (std::size_t j = 0; j < len; ++j)
      if (x[j]) y[j] = at[(std::size_t)y[j] * n_ + mf[x[j]]];
    return;
  }
  if (prime_) {
    for (std::size_t j = 0; j < len; ++j)
      if (x[j]) y[j] = (elt)((y[j] + (std::uint64_t)f * x[j]) % q_);
    return;
  }
  for (std::size_t j = 0; j < len; ++j)
    if (x[j]) y[j] = add(y[j], mul(f, x[j]));
}

void Ring::scal(elt* y, elt f, std::size_t len) const {
  for (std::size_t j = 0; j < len; ++j) y[j] = mul(f, y[j]);
}

elt Ring::from_int(long long v) const {
  if (spec_.kind == RingKind::Witt2) {
    Witt2Ops W(base_);
    auto w = W.from_int(v);
    return wpair(w.a0, w.a1);
  }
  long long m = ((v % (long long)q_) + q_) % q_;
  return (elt)m;
}

std::vector<int> Ring::digits(elt a) const {
  std::vector<int> d(deg_, 0);
  if (spec_.kind == RingKind::Witt2) throw Error("digits on Witt2");
  for (int i = 0; i < deg_; ++i) {
    d[i] = (int)(a % q_);
    a /= q_;
  }
  return d;
}

elt Ring::from_digits(const std::vector<int>& d) const {
  elt a = 0;
  for (int i = deg_ - 1; i >= 0; --i) {
    long long c = i < (int)d.size() ? ((d[i] % (long long)q_) + q_) % q_ : 0;
    a = a * q_ + (elt)c;
  }
  return a;
}

elt Ring::add_slow(elt a, elt b) const {
  if (spec_.kind == RingKind::Witt2) {
    Witt2Ops W(base_);
    auto s = W.add({w0(a), w1(a)}, {w0(b), w1(b)});
    return wpair(s.a0, s.a1);
  }
  if (prime_) return (a + b) % q_;
  auto x = digits(a), y = digits(b);
  for (int i = 0; i < deg_; ++i) x[i] = (x[i] + y[i]) % (int)q_;
  return from_digits(x);
}

elt Ring::neg_slow(elt a) const {
  if (spec_.kind == RingKind::Witt2) {
    Witt2Ops W(base_);
    auto s = W.neg({w0(a), w1(a)});
    return wpair(s.a0, s.a1);
  }
  if (prime_) return a ? q_ - a : 0;
  auto x = digits(a);
  for (auto& c : x) c = c ? (int)q_ - c : 0;
  return from_digits(x);
}

elt Ring::mul_slow(elt a, elt b) const {
  if (spec_.kind == RingKind::Witt2) {
    Witt2Ops W(base_);
    auto s = W.mul({w0(a), w1(a)}, {w0(b), w1(b)});
    return wpair(s.a0, s.a1);
  }
  if (prime_) return (elt)((std::uint64_t)a * b % q_);
  return from_digits(polymulmod(digits(a), digits(b), spec_.modulus, (int)q_));
}

bool Ring::is_unit(elt a) const {
  if (spec_.kind == RingKind::Witt2) return base_->is_unit(w0(a));
  return reduce_mod_p(a) != 0;
}

elt Ring::pow(elt a, std::uint64_t k) const {
  elt r = one_, b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

elt Ring::inv(elt a) const {
  if (!is_unit(a)) throw Error("inverse of non-unit " + str(a) + " in " + name());
  if (tab_) return invt_[a];
  if (prime_) {
    long long t = 0, nt = 1, r = q_, nr = a;
    while (nr) {
      long long qq = r / nr;
      std::tie(t, nt) = std::make_pair(nt, t - qq * nt);
      std::tie(r, nr) = std::make_pair(nr, r - qq * nr);
    }
    return (elt)(((t % (long long)q_) + q_) % q_);
  }
  // unit group order: |R| - |m| where m is the maximal ideal
  std::uint64_t res = residue_field()->size();
  std::uint64_t units = (std::uint64_t)n_ / res * (res - 1);
  return pow(a, units - 1);
}

elt Ring::frob_raw(elt a) const {
  switch (spec_.kind) {
    case RingKind::PrimeField:
    case RingKind::IntegersModPE: return a;
    case RingKind::GaloisField: return pow(a, (std::uint64_t)spec_.p);
    case RingKind::GaloisRing: {
      auto d = digits(a);
      elt s = xfrob_[0], acc = 0, pw = one_;
      for (int i = 0; i < deg_; ++i) {
        acc = add_slow(acc, mul_slow(from_int(d[i]), pw));
        pw = mul_slow(pw, s);
      }
      return acc;
    }
    case RingKind::Witt2: return wpair(base_->frobenius(w0(a)), base_->frobenius(w1(a)));
  }
  return a;
}

elt Ring::frobenius(elt a) const { return tab_ ? frobt_[a] : frob_raw(a); }

elt Ring::frobenius_inverse(elt a) const {
  if (tab_) return frobinvt_[a];
  elt b = a;
  for (int i = 1; i < deg_; ++i) b = frob_raw(b);
  return b;
}

int Ring::valuation(elt a) const {
  if (a == 0) return exp_;
  switch (spec_.kind) {
    case RingKind::PrimeField:
    case RingKind::GaloisField: return 0;
    case RingKind::IntegersModPE: return vp(a, spec_.p);
    case RingKind::GaloisRing: {
      int v = exp_;
      for (int c : digits(a))
        if (c) v = std::min(v, vp(c, spec_.p));
      return v;
    }
    case RingKind::Witt2: {
      int k = 0;
      elt t = a;
      while (t != 0 && k < exp_) {
        if (divpt_.empty() || divpt_[t] == 0xffffffffu) return k;
        t = divpt_[t];
        ++k;
      }
      return k;
    }
  }
  return 0;
}

elt Ring::div_p(elt a) const {
  if (tab_) {
    if (divpt_[a] == 0xffffffffu) throw Error("div_p of element not divisible by p: " + str(a));
    return divpt_[a];
  }
  if (spec_.kind == RingKind::IntegersModPE || prime_) {
    if (a % spec_.p) throw Error("div_p of element not divisible by p");
    return a / spec_.p;
  }
  auto d = digits(a);
  for (auto& c : d) {
    if (c % spec_.p) throw Error("div_p of element not divisible by p");
    c /= spec_.p;
  }
  return from_digits(d);
}

RingPtr Ring::residue_field() const {
  if (residue_) return residue_;
  switch (spec_.kind) {
    case RingKind::PrimeField:
    case RingKind::GaloisField: residue_ = shared_from_this(); break;
    case RingKind::IntegersModPE: residue_ = Ring::make(RingSpec::prime_field(spec_.p)); break;
    case RingKind::GaloisRing: {
      std::vector<int> fm(spec_.modulus);
      for (auto& c : fm) c = ((c % spec_.p) + spec_.p) % spec_.p;
      residue_ = Ring::make(RingSpec::galois_field(spec_.p, spec_.r, fm));
      break;
    }
    case RingKind::Witt2: residue_ = base_->residue_field(); break;
  }
  return residue_;
}

elt Ring::reduce_mod_p(elt a) const {
  switch (spec_.kind) {
    case RingKind::PrimeField:
    case RingKind::GaloisField: return a;
    case RingKind::IntegersModPE: return a % spec_.p;
    case RingKind::GaloisRing: {
      auto d = digits(a);
      elt r = 0;
      for (int i = deg_ - 1; i >= 0; --i) r = r * spec_.p + (elt)(d[i] % spec_.p);
      return r;
    }
    case RingKind::Witt2: return base_->reduce_mod_p(w0(a));
  }
  return a;
}

elt Ring::lift_residue(elt x) const {
  switch (spec_.kind) {
    case RingKind::PrimeField:
    case RingKind::GaloisField:
    case RingKind::IntegersModPE: return x;
    case RingKind::GaloisRing: {
      std::vector<int> d(deg_);
      for (int i = 0; i < deg_; ++i) {
        d[i] = (int)(x % spec_.p);
        x /= spec_.p;
      }
      return from_digits(d);
    }
    case RingKind::Witt2: return wpair(base_->lift_residue(x), 0);
  }
  return x;
}

std::string Ring::str(elt a) const {
  std::ostringstream o;
  if (spec_.kind == RingKind::Witt2) {
    o << "(" << base_->str(w0(a)) << "," << base_->str(w1(a)) << ")";
  } else if (prime_) {
    o << a;
  } else {
    auto d = digits(a);
    o << "[";
    for (int i = 0; i < deg_; ++i) o << (i ? "," : "") << d[i];
    o << "]";
  }
  return o.str();
}

elt Ring::random(std::mt19937_64& rng) const {
  return (elt)std::uniform_int_distribution<std::uint64_t>(0, n_ - 1)(rng);
}

// Witt vectors of length two

Witt2Ops::W Witt2Ops::add(W a, W b) const {
  const Ring& R = *base;
  const int p = R.p();
  elt corr = 0;
  long long binom = 1;
  for (int i = 1; i < p; ++i) {
    binom = binom * (p - i + 1) / i;
    elt t = R.mul(R.pow(a.a0, i), R.pow(b.a0, p - i));
    corr = R.add(corr, R.mul(R.from_int(binom / p), t));
  }
  return {R.add(a.a0, b.a0), R.sub(R.add(a.a1, b.a1), corr)};
}

Witt2Ops::W Witt2Ops::neg(W a) const {
  const Ring& R = *base;
  const int p = R.p();
  elt b0 = R.neg(a.a0);
  elt corr = 0;
  long long binom = 1;
  for (int i = 1; i < p; ++i) {
    binom = binom * (p - i + 1) / i;
    elt t = R.mul(R.pow(a.a0, i), R.pow(b0, p - i));
    corr = R.add(corr, R.mul(R.from_int(binom / p), t));
  }
  return {b0, R.sub(corr, a.a1)};
}

Witt2Ops::W Witt2Ops::mul(W a, W b) const {
  const Ring& R = *base;
  const int p = R.p();
  elt c1 = R.add(R.mul(R.pow(a.a0, p), b.a1), R.mul(R.pow(b.a0, p), a.a1));
  c1 = R.add(c1, R.mul(R.from_int(p), R.mul(a.a1, b.a1)));
  return {R.mul(a.a0, b.a0), c1};
}

Witt2Ops::W Witt2Ops::from_int(long long n) const {
  W acc{0, 0}, one{base->one(), 0};
  bool negative = n < 0;
  unsigned long long m = negative ? -(unsigned long long)n : (unsigned long long)n;
  W pw = one;
  while (m) {
    if (m & 1) acc = add(acc, pw);
    pw = add(pw, pw);
    m >>= 1;
  }
  return negative ? neg(acc) : acc;
}

std::pair<elt, elt> Witt2Ops::ghost(W a) const {
  const Ring& R = *base;
  return {a.a0, R.add(R.pow(a.a0, R.p()), R.mul(R.from_int(R.p()), a.a1))};
}

int ModuleStructure::length() const {
  int s = free_rank * e;
  for (int t : torsion) s += t;
  return s;
}

bool ModuleStructure::annihilated_by_p() const {
  if (free_rank > 0 && e > 1) return false;
  for (int t : torsion)
    if (t > 1) return false;
  return true;
}

std::string ModuleStructure::str() const {
  std::ostringstream o;
  bool first = true;
  auto emit = [&](const std::string& s) {
    o << (first ? "" : " + ") << s;
    first = false;
  };
  if (free_rank) emit("R^" + std::to_string(free_rank));
  for (int t : torsion) emit("R/p^" + std::to_string(t));
  if (first) o << "0";
  return o.str();
}

}  // namespace charp
