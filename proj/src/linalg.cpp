#include <algorithm>

#include "charp/ralg.hpp"

namespace charp {

namespace {
void check_same(const Mat& A, const Mat& B, const char* what) {
  if (A.rows != B.rows || A.cols != B.cols) throw Error(std::string(what) + ": shape mismatch");
}
}  // namespace

bool Mat::is_zero() const {
  for (elt x : a)
    if (x) return false;
  return true;
}

Mat Mat::identity(RingPtr R, int n) {
  Mat m(R, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = R->one();
  return m;
}

Mat Mat::random(RingPtr R, int r, int c, std::mt19937_64& rng) {
  Mat m(R, r, c);
  for (auto& x : m.a) x = R->random(rng);
  return m;
}

Mat Mat::from_rows(RingPtr R, const std::vector<std::vector<long long>>& rows) {
  int r = (int)rows.size(), c = r ? (int)rows[0].size() : 0;
  Mat m(R, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = R->from_int(rows[i][j]);
  return m;
}

std::vector<elt> Mat::column(int j) const {
  std::vector<elt> v(rows);
  for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_column(int j, const std::vector<elt>& v) {
  for (int i = 0; i < rows; ++i) (*this)(i, j) = v[i];
}

Mat operator*(const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw Error("matmul: shape mismatch");
  Mat C(A.R, A.rows, B.cols);
  const Ring& R = *A.R;
  for (int i = 0; i < A.rows; ++i) {
    const elt* ai = A.row(i);
    elt* ci = C.row(i);
    for (int k = 0; k < A.cols; ++k)
      if (ai[k]) R.axpy(ci, ai[k], B.row(k), B.cols);
  }
  return C;
}

Mat operator+(const Mat& A, const Mat& B) {
  check_same(A, B, "add");
  Mat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.R->add(A.a[i], B.a[i]);
  return C;
}

Mat operator-(const Mat& A, const Mat& B) {
  check_same(A, B, "sub");
  Mat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.R->sub(A.a[i], B.a[i]);
  return C;
}

Mat scale(const Mat& A, elt c) {
  Mat C = A;
  for (auto& x : C.a) x = A.R->mul(c, x);
  return C;
}

Mat transpose(const Mat& A) {
  Mat T(A.R, A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
  return T;
}

Mat hstack(const Mat& A, const Mat& B) {
  if (A.rows != B.rows) throw Error("hstack: row mismatch");
  Mat C(A.R ? A.R : B.R, A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    std::copy(A.row(i), A.row(i) + A.cols, C.row(i));
    std::copy(B.row(i), B.row(i) + B.cols, C.row(i) + A.cols);
  }
  return C;
}

Mat vstack(const Mat& A, const Mat& B) {
  if (A.cols != B.cols) throw Error("vstack: column mismatch");
  Mat C(A.R ? A.R : B.R, A.rows + B.rows, A.cols);
  std::copy(A.a.begin(), A.a.end(), C.a.begin());
  std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
  return C;
}

Mat kron(const Mat& A, const Mat& B) {
  Mat C(A.R, A.rows * B.rows, A.cols * B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      elt x = A(i, j);
      if (!x) continue;
      for (int k = 0; k < B.rows; ++k)
        for (int l = 0; l < B.cols; ++l) C(i * B.rows + k, j * B.cols + l) = A.R->mul(x, B(k, l));
    }
  return C;
}

Mat blockdiag(const Mat& A, const Mat& B) {
  Mat C(A.R ? A.R : B.R, A.rows + B.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) C(i, j) = A(i, j);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) C(A.rows + i, A.cols + j) = B(i, j);
  return C;
}

Mat submatrix(const Mat& A, const std::vector<int>& rows, const std::vector<int>& cols) {
  Mat C(A.R, (int)rows.size(), (int)cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) C((int)i, (int)j) = A(rows[i], cols[j]);
  return C;
}

Mat frobenius(const Mat& A) {
  Mat C = A;
  for (auto& x : C.a) x = A.R->frobenius(x);
  return C;
}

Mat reduce_mod_p(const Mat& A) {
  Mat C(A.R->residue_field(), A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = A.R->reduce_mod_p(A.a[i]);
  return C;
}

Mat lift_residue(const Mat& A, const RingPtr& to) {
  Mat C(to, A.rows, A.cols);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = to->lift_residue(A.a[i]);
  return C;
}

std::vector<elt> matvec(const Mat& A, const std::vector<elt>& v) {
  if ((int)v.size() != A.cols) throw Error("matvec: shape mismatch");
  std::vector<elt> out(A.rows, 0);
  const Ring& R = *A.R;
  for (int i = 0; i < A.rows; ++i) {
    const elt* ai = A.row(i);
    elt s = 0;
    for (int j = 0; j < A.cols; ++j)
      if (ai[j] && v[j]) s = R.add(s, R.mul(ai[j], v[j]));
    out[i] = s;
  }
  return out;
}

Mat from_columns(const RingPtr& R, int n, const std::vector<std::vector<elt>>& cols) {
  Mat m(R, n, (int)cols.size());
  for (size_t j = 0; j < cols.size(); ++j) m.set_column((int)j, cols[j]);
  return m;
}

Echelon echelon(const Mat& m) {
  if (!m.R->is_field()) throw Error("echelon requires a field, got " + m.R->name());
  const Ring& R = *m.R;
  Echelon e;
  e.rref = m;
  Mat& A = e.rref;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int piv = -1;
    for (int i = r; i < A.rows; ++i)
      if (A(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) std::swap_ranges(A.row(piv), A.row(piv) + A.cols, A.row(r));
    elt iv = R.inv(A(r, c));
    R.scal(A.row(r) + c, iv, A.cols - c);
    for (int i = 0; i < A.rows; ++i) {
      if (i == r) continue;
      elt f = A(i, c);
      if (f) R.axpy(A.row(i) + c, R.neg(f), A.row(r) + c, A.cols - c);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

int rank(const Mat& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  // eliminate along the shorter side
  if (m.rows > m.cols) return echelon(transpose(m)).rank;
  return echelon(m).rank;
}

Mat kernel(const Mat& m) {
  Echelon e = echelon(m);
  const Ring& R = *m.R;
  std::vector<char> isp(m.cols, 0);
  for (int c : e.pivots) isp[c] = 1;
  std::vector<int> free;
  for (int c = 0; c < m.cols; ++c)
    if (!isp[c]) free.push_back(c);
  Mat K(m.R, m.cols, (int)free.size());
  for (size_t k = 0; k < free.size(); ++k) {
    int f = free[k];
    K(f, (int)k) = R.one();
    for (int i = 0; i < e.rank; ++i) K(e.pivots[i], (int)k) = R.neg(e.rref(i, f));
  }
  return K;
}

Mat image(const Mat& m) {
  Echelon e = echelon(m);
  std::vector<int> rows(m.rows);
  for (int i = 0; i < m.rows; ++i) rows[i] = i;
  return submatrix(m, rows, e.pivots);
}

Mat inverse(const Mat& m) {
  if (m.rows != m.cols) throw Error("inverse of non-square matrix");
  int n = m.rows;
  if (m.R->is_field()) {
    Echelon e = echelon(hstack(m, Mat::identity(m.R, n)));
    if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw Error("inverse of singular matrix");
    std::vector<int> rows(n), cols(n);
    for (int i = 0; i < n; ++i) rows[i] = i, cols[i] = n + i;
    return submatrix(e.rref, rows, cols);
  }
  Smith s = diagonalize(m);
  for (int i = 0; i < n; ++i)
    if (s.val[i] != 0) throw Error("inverse of singular matrix over " + m.R->name());
  // D = U m V with D = identity after normalization, so m^{-1} = V U
  return s.V * s.U;
}

bool Span::insert(std::vector<elt> v, std::vector<elt> trackvec) {
  if (t_ && trackvec.empty()) trackvec.assign(t_, 0);
  const Ring& R = *R_;
  for (size_t k = 0; k < vecs_.size(); ++k) {
    elt c = v[piv_[k]];
    if (!c) continue;
    elt nc = R.neg(c);
    R.axpy(v.data(), nc, vecs_[k].data(), n_);
    if (t_) R.axpy(trackvec.data(), nc, track_[k].data(), t_);
  }
  int piv = -1;
  for (int i = 0; i < n_; ++i)
    if (v[i]) {
      piv = i;
      break;
    }
  if (piv < 0) return false;
  elt iv = R.inv(v[piv]);
  R.scal(v.data(), iv, n_);
  if (t_) R.scal(trackvec.data(), iv, t_);
  vecs_.push_back(std::move(v));
  piv_.push_back(piv);
  if (t_) track_.push_back(std::move(trackvec));
  return true;
}

void Span::reduce(std::vector<elt>& v, std::vector<elt>* track) const {
  const Ring& R = *R_;
  if (track) track->assign(t_, 0);
  for (size_t k = 0; k < vecs_.size(); ++k) {
    elt c = v[piv_[k]];
    if (!c) continue;
    R.axpy(v.data(), R.neg(c), vecs_[k].data(), n_);
    if (track && t_) R.axpy(track->data(), c, track_[k].data(), t_);
  }
}

bool Span::contains(std::vector<elt> v) const {
  reduce(v);
  for (elt x : v)
    if (x) return false;
  return true;
}

Solver::Solver(const Mat& m) : m_(m) {
  if (m.rows == 0 || m.cols == 0) return;
  Echelon et = echelon(transpose(m));
  pr_ = et.pivots;
  std::vector<int> allc(m.cols);
  for (int j = 0; j < m.cols; ++j) allc[j] = j;
  Mat sub = submatrix(m, pr_, allc);
  pc_ = echelon(sub).pivots;
  inv_ = inverse(submatrix(m, pr_, pc_));
}

bool Solver::solve(const std::vector<elt>& b, std::vector<elt>& x) const {
  x.assign(m_.cols, 0);
  int k = (int)pc_.size();
  const Ring& R = *m_.R;
  for (int i = 0; i < k; ++i) {
    elt s = 0;
    for (int j = 0; j < k; ++j) s = R.add(s, R.mul(inv_(i, j), b[pr_[j]]));
    x[pc_[i]] = s;
  }
  return matvec(m_, x) == b;
}

Smith diagonalize(const Mat& m) {
  const Ring& R = *m.R;
  const int E = R.exponent();
  Smith s;
  s.D = m;
  s.U = Mat::identity(m.R, m.rows);
  s.Uinv = Mat::identity(m.R, m.rows);
  s.V = Mat::identity(m.R, m.cols);
  s.Vinv = Mat::identity(m.R, m.cols);
  Mat& D = s.D;
  const int n = std::min(m.rows, m.cols);
  auto divpk = [&](elt a, int k) {
    for (int i = 0; i < k; ++i) a = R.div_p(a);
    return a;
  };
  int t = 0;
  for (; t < n; ++t) {
    int bi = -1, bj = -1, bv = E;
    for (int i = t; i < D.rows && bv > 0; ++i)
      for (int j = t; j < D.cols; ++j) {
        elt x = D(i, j);
        if (!x) continue;
        int v = R.valuation(x);
        if (v < bv) {
          bv = v, bi = i, bj = j;
          if (v == 0) break;
        }
      }
    if (bi < 0) break;
    if (bi != t) {
      std::swap_ranges(D.row(bi), D.row(bi) + D.cols, D.row(t));
      std::swap_ranges(s.U.row(bi), s.U.row(bi) + s.U.cols, s.U.row(t));
      for (int i = 0; i < s.Uinv.rows; ++i) std::swap(s.Uinv(i, bi), s.Uinv(i, t));
    }
    if (bj != t) {
      for (int i = 0; i < D.rows; ++i) std::swap(D(i, bj), D(i, t));
      for (int i = 0; i < s.V.rows; ++i) std::swap(s.V(i, bj), s.V(i, t));
      std::swap_ranges(s.Vinv.row(bj), s.Vinv.row(bj) + s.Vinv.cols, s.Vinv.row(t));
    }
    // normalize pivot to p^k
    elt u = divpk(D(t, t), bv);
    elt ui = R.inv(u);
    R.scal(D.row(t), ui, D.cols);
    R.scal(s.U.row(t), ui, s.U.cols);
    for (int i = 0; i < s.Uinv.rows; ++i) s.Uinv(i, t) = R.mul(s.Uinv(i, t), u);
    // clear column t below and row t to the right
    for (int i = 0; i < D.rows; ++i) {
      if (i == t || !D(i, t)) continue;
      elt f = divpk(D(i, t), bv);
      R.axpy(D.row(i), R.neg(f), D.row(t), D.cols);
      R.axpy(s.U.row(i), R.neg(f), s.U.row(t), s.U.cols);
      for (int k = 0; k < s.Uinv.rows; ++k) s.Uinv(k, t) = R.add(s.Uinv(k, t), R.mul(s.Uinv(k, i), f));
    }
    for (int j = 0; j < D.cols; ++j) {
      if (j == t || !D(t, j)) continue;
      elt f = divpk(D(t, j), bv);
      elt nf = R.neg(f);
      for (int i = 0; i < D.rows; ++i) D(i, j) = R.add(D(i, j), R.mul(D(i, t), nf));
      for (int i = 0; i < s.V.rows; ++i) s.V(i, j) = R.add(s.V(i, j), R.mul(s.V(i, t), nf));
      R.axpy(s.Vinv.row(t), f, s.Vinv.row(j), s.Vinv.cols);
    }
    s.val.push_back(bv);
  }
  for (; t < n; ++t) s.val.push_back(E);
  s.coker.p = R.p();
  s.coker.e = E;
  for (int i = 0; i < m.rows; ++i) {
    int v = i < n ? s.val[i] : E;
    if (v == E)
      ++s.coker.free_rank;
    else if (v > 0)
      s.coker.torsion.push_back(v);
  }
  std::sort(s.coker.torsion.begin(), s.coker.torsion.end());
  return s;
}

Mat kernel_local(const Mat& m) {
  Smith s = diagonalize(m);
  const Ring& R = *m.R;
  const int E = R.exponent();
  std::vector<std::vector<elt>> gens;
  int n = std::min(m.rows, m.cols);
  for (int j = 0; j < m.cols; ++j) {
    int v = j < n ? s.val[j] : E;
    if (v == 0) continue;
    std::vector<elt> g = s.V.column(j);
    if (v < E) {
      elt pk = R.pow(R.from_int(R.p()), E - v);
      for (auto& x : g) x = R.mul(x, pk);
    }
    gens.push_back(std::move(g));
  }
  return from_columns(m.R, m.cols, gens);
}

bool solve_local(const Smith& s, const std::vector<elt>& b, std::vector<elt>& x) {
  const Ring& R = *s.D.R;
  const int E = R.exponent();
  std::vector<elt> y = matvec(s.U, b);
  int n = std::min(s.D.rows, s.D.cols);
  std::vector<elt> z(s.D.cols, 0);
  for (int t = 0; t < s.D.rows; ++t) {
    int v = t < n ? s.val[t] : E;
    if (v == E) {
      if (y[t]) return false;
      continue;
    }
    if (R.valuation(y[t]) < v) return false;
    elt w = y[t];
    for (int i = 0; i < v; ++i) w = R.div_p(w);
    z[t] = w;
  }
  x = matvec(s.V, z);
  return true;
}

}  // namespace charp
