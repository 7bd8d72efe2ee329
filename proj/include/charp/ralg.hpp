#pragma once
// Exact arithmetic over small finite rings and the linear algebra kernel.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace charp {

using elt = std::uint32_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// a computation would exceed a size limit
struct SizeLimit : Error {
  using Error::Error;
};

enum class RingKind { PrimeField, GaloisField, IntegersModPE, GaloisRing, Witt2 };

struct RingSpec {
  RingKind kind = RingKind::PrimeField;
  int p = 2;
  int e = 1;
  int r = 1;
  std::vector<int> modulus;  // monic, low to high, length r+1 (empty: r == 1)
  std::shared_ptr<const RingSpec> base;  // Witt2 only

  static RingSpec prime_field(int p);
  static RingSpec galois_field(int p, int r, std::vector<int> modulus = {});
  static RingSpec integers_mod(int p, int e);
  static RingSpec galois_ring(int p, int e, int r, std::vector<int> modulus = {});
  static RingSpec witt2(const RingSpec& base);
  std::string name() const;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr make(const RingSpec& spec);

  const RingSpec& spec() const { return spec_; }
  RingKind kind() const { return spec_.kind; }
  int p() const { return spec_.p; }
  // length of the ring as a module over itself: p^len kills everything
  int exponent() const { return exp_; }
  int degree() const { return deg_; }
  elt size() const { return n_; }
  bool is_field() const { return exp_ == 1; }
  std::string name() const { return spec_.name(); }

  elt zero() const { return 0; }
  elt one() const { return one_; }
  elt from_int(long long v) const;

  elt add(elt a, elt b) const {
    if (tab_) return addt_[a * n_ + b];
    if (prime_) return (a + b) % q_;
    return add_slow(a, b);
  }
  elt neg(elt a) const {
    if (tab_) return negt_[a];
    if (prime_) return a ? q_ - a : 0;
    return neg_slow(a);
  }
  elt sub(elt a, elt b) const { return add(a, neg(b)); }
  elt mul(elt a, elt b) const {
    if (tab_) return mult_[a * n_ + b];
    if (prime_) return static_cast<elt>((std::uint64_t)a * b % q_);
    return mul_slow(a, b);
  }
  // y += f*x and y *= f on raw arrays
  void axpy(elt* y, elt f, const elt* x, std::size_t len) const;
  void scal(elt* y, elt f, std::size_t len) const;
  bool is_unit(elt a) const;
  elt inv(elt a) const;  // throws naming the element on non-units
  elt pow(elt a, std::uint64_t k) const;
  elt frobenius(elt a) const;
  elt frobenius_inverse(elt a) const;

  // p-adic structure (local rings)
  int valuation(elt a) const;  // largest k with a in p^k R; exponent() for 0
  elt div_p(elt a) const;      // some b with p*b = a; requires valuation >= 1
  elt mul_p(elt a) const { return mul(a, p_elt_); }

  RingPtr residue_field() const;  // R/p
  elt reduce_mod_p(elt a) const;
  elt lift_residue(elt x) const;  // canonical lift of a residue field element

  // coefficient vector (digits) of polynomial-type encodings
  std::vector<int> digits(elt a) const;
  elt from_digits(const std::vector<int>& d) const;
  std::string str(elt a) const;

  // Witt2 coordinates
  bool is_witt2() const { return spec_.kind == RingKind::Witt2; }
  RingPtr witt_base() const { return base_; }
  elt wpair(elt a0, elt a1) const { return a0 + base_->size() * a1; }
  elt w0(elt a) const { return a % base_->size(); }
  elt w1(elt a) const { return a / base_->size(); }

  elt random(std::mt19937_64& rng) const;

 private:
  explicit Ring(const RingSpec& spec);
  void build();
  elt add_slow(elt a, elt b) const;
  elt neg_slow(elt a) const;
  elt mul_slow(elt a, elt b) const;
  elt frob_raw(elt a) const;

  RingSpec spec_;
  int exp_ = 1;
  int deg_ = 1;
  elt q_ = 2;  // p^e for polynomial types
  elt n_ = 2;
  elt one_ = 1;
  elt p_elt_ = 0;
  bool prime_ = false;
  bool tab_ = false;
  std::vector<std::uint16_t> addt_, mult_, negt_;
  std::vector<elt> invt_, frobt_, frobinvt_, divpt_;
  std::vector<elt> xfrob_;  // digits image of x under the Galois lift of Frobenius
  RingPtr base_;
  mutable RingPtr residue_;
};

// Witt vectors of length two over a base ring, as explicit pair formulas.
struct Witt2Ops {
  RingPtr base;
  explicit Witt2Ops(RingPtr b) : base(std::move(b)) {}
  struct W {
    elt a0, a1;
    bool operator==(const W&) const = default;
  };
  W add(W a, W b) const;
  W neg(W a) const;
  W mul(W a, W b) const;
  W V(W a) const { return {0, a.a0}; }
  W teichmuller(elt x) const { return {x, 0}; }
  W from_int(long long n) const;
  std::pair<elt, elt> ghost(W a) const;
};

struct ModuleStructure {
  int p = 2;
  int e = 1;
  std::vector<int> torsion;  // exponents 0 < e_i < e, sorted
  int free_rank = 0;         // summands R = R/p^e
  bool is_zero() const { return torsion.empty() && free_rank == 0; }
  int length() const;  // composition length
  bool annihilated_by_p() const;
  std::string str() const;
};

struct Mat {
  RingPtr R;
  int rows = 0, cols = 0;
  std::vector<elt> a;

  Mat() = default;
  Mat(RingPtr ring, int r, int c) : R(std::move(ring)), rows(r), cols(c), a((size_t)r * c, 0) {}
  elt& operator()(int i, int j) { return a[(size_t)i * cols + j]; }
  elt operator()(int i, int j) const { return a[(size_t)i * cols + j]; }
  const elt* row(int i) const { return a.data() + (size_t)i * cols; }
  elt* row(int i) { return a.data() + (size_t)i * cols; }
  bool is_zero() const;
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  static Mat identity(RingPtr R, int n);
  static Mat zeros(RingPtr R, int r, int c) { return Mat(std::move(R), r, c); }
  static Mat random(RingPtr R, int r, int c, std::mt19937_64& rng);
  static Mat from_rows(RingPtr R, const std::vector<std::vector<long long>>& rows);
  std::vector<elt> column(int j) const;
  void set_column(int j, const std::vector<elt>& v);
};

Mat operator*(const Mat& A, const Mat& B);
Mat operator+(const Mat& A, const Mat& B);
Mat operator-(const Mat& A, const Mat& B);
Mat scale(const Mat& A, elt c);
Mat transpose(const Mat& A);
Mat hstack(const Mat& A, const Mat& B);
Mat vstack(const Mat& A, const Mat& B);
Mat kron(const Mat& A, const Mat& B);
Mat blockdiag(const Mat& A, const Mat& B);
Mat submatrix(const Mat& A, const std::vector<int>& rows, const std::vector<int>& cols);
Mat frobenius(const Mat& A);  // entrywise
Mat reduce_mod_p(const Mat& A);
Mat lift_residue(const Mat& A, const RingPtr& to);
std::vector<elt> matvec(const Mat& A, const std::vector<elt>& v);
Mat from_columns(const RingPtr& R, int n, const std::vector<std::vector<elt>>& cols);

struct Echelon {
  Mat rref;
  std::vector<int> pivots;  // pivot column per nonzero row
  int rank = 0;
};
Echelon echelon(const Mat& m);
int rank(const Mat& m);
Mat kernel(const Mat& m);  // columns spanning {x : m x = 0}
Mat image(const Mat& m);   // independent columns of m spanning its column space
Mat inverse(const Mat& m);

// Incrementally maintained subspace of R^n over a field, with optional tracked
// coordinates for inserted vectors.
class Span {
 public:
  Span(RingPtr R, int n, int tracked = 0) : R_(std::move(R)), n_(n), t_(tracked) {}
  // returns true when v was independent; trackvec (length tracked) travels along
  bool insert(std::vector<elt> v, std::vector<elt> trackvec = {});
  // reduces v in place; fills tracked coordinates of the removed part
  void reduce(std::vector<elt>& v, std::vector<elt>* track = nullptr) const;
  bool contains(std::vector<elt> v) const;
  int dim() const { return (int)vecs_.size(); }
  int ambient() const { return n_; }

 private:
  RingPtr R_;
  int n_, t_;
  std::vector<std::vector<elt>> vecs_;   // normalized: pivot entry 1
  std::vector<std::vector<elt>> track_;
  std::vector<int> piv_;
};

// Particular solutions of m x = b for b in the column space (fields).
class Solver {
 public:
  Solver() = default;
  explicit Solver(const Mat& m);
  bool solve(const std::vector<elt>& b, std::vector<elt>& x) const;
  int rank() const { return (int)pc_.size(); }

 private:
  Mat m_;
  std::vector<int> pr_, pc_;
  Mat inv_;
};

// Smith form over a local ring with maximal ideal (p): U m V = D.
struct Smith {
  Mat U, V, D, Uinv, Vinv;
  std::vector<int> val;  // valuation of each diagonal entry (exponent() when zero)
  ModuleStructure coker;
};
Smith diagonalize(const Mat& m);
// generators of {x : m x = 0} over a local ring
Mat kernel_local(const Mat& m);
// solve m x = b over a local ring
bool solve_local(const Smith& s, const std::vector<elt>& b, std::vector<elt>& x);

}  // namespace charp
