#include "fflog/tate.hpp"

#include <algorithm>
#include <sstream>

namespace fflog {

TateElem::TateElem(WFieldPtr W, long long D, bool tail)
    : W_(std::move(W)), D_(D), tail_(tail) {
  if (D < 0) raise(err::DIMENSION_MISMATCH, "negative degree bound");
  c_.assign(D_ + 1, WElem::zero(W_));
}

TateElem TateElem::constant(const WElem& c, long long D, bool tail) {
  TateElem r(c.field(), D, tail);
  r.c_[0] = c;
  return r;
}

TateElem TateElem::t_power(const WFieldPtr& W, long long k, long long D) {
  TateElem r(W, D);
  if (k <= D) r.c_[k] = WElem::one(W);
  return r;
}

TateElem TateElem::from_coeffs(std::vector<WElem> coeffs, long long D, bool tail) {
  if (coeffs.empty()) raise(err::DIMENSION_MISMATCH, "empty coefficient list");
  TateElem r(coeffs[0].field(), D, tail);
  for (std::size_t i = 0; i < coeffs.size() && (long long)i <= D; ++i)
    r.c_[i] = std::move(coeffs[i]);
  return r;
}

TateElem TateElem::with_tail(bool t) const {
  TateElem r = *this;
  r.tail_ = t;
  return r;
}

const WElem& TateElem::coeff(long long i) const {
  if (i < 0 || i > D_) raise(err::DIMENSION_MISMATCH, "coefficient index out of range");
  return c_[i];
}

TateElem TateElem::operator+(const TateElem& o) const {
  long long D = std::min(D_, o.D_);
  TateElem r(W_, D, tail_ || o.tail_);
  for (long long i = 0; i <= D; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

TateElem TateElem::operator-(const TateElem& o) const { return *this + (-o); }

TateElem TateElem::operator-() const {
  TateElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

TateElem TateElem::operator*(const TateElem& o) const {
  long long D = std::min(D_, o.D_);
  TateElem r(W_, D, tail_ || o.tail_);
  bool overflow = false;
  for (long long i = 0; i <= D_; ++i) {
    if (c_[i].is_apparent_zero() && c_[i].is_exact()) continue;
    for (long long j = 0; j <= o.D_; ++j) {
      if (i + j > D) {
        if (!(c_[i].is_apparent_zero() && c_[i].is_exact()) &&
            !(o.c_[j].is_apparent_zero() && o.c_[j].is_exact()))
          overflow = true;
        break;
      }
      if (o.c_[j].is_apparent_zero() && o.c_[j].is_exact()) continue;
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
  }
  if (overflow) r.tail_ = true;
  return r;
}

TateElem TateElem::scaled(const WElem& c) const {
  TateElem r = *this;
  for (auto& x : r.c_) x = x * c;
  return r;
}

TateElem TateElem::shifted_t(long long k) const {
  TateElem r(W_, D_, tail_ || k > 0);
  for (long long i = 0; i + k <= D_; ++i)
    if (i + k >= 0 && i <= D_) r.c_[i + k] = c_[i];
  return r;
}

TateElem TateElem::twist(long long n) const {
  TateElem r = *this;
  for (auto& x : r.c_) x = x.frobenius_twist(n);
  return r;
}

TateElem TateElem::twist_clipped(long long n, long long cap) const {
  TateElem r = *this;
  for (auto& x : r.c_) x = x.frobenius_twist_clipped(n, cap);
  return r;
}

TateElem TateElem::truncated_coeffs(long long uprec) const {
  TateElem r = *this;
  for (auto& x : r.c_) x = x.truncated(uprec);
  return r;
}

bool TateElem::is_apparent_zero() const {
  for (const auto& x : c_)
    if (!x.is_apparent_zero()) return false;
  return true;
}

GaussValue TateElem::gauss(long long alpha_uval) const {
  GaussValue g;
  g.lower_bound = tail_;
  for (long long i = 0; i <= D_; ++i) {
    if (c_[i].is_apparent_zero()) continue;
    long long u = c_[i].uval() + i * alpha_uval;
    if (g.all_zero || u < g.uval) {
      g.all_zero = false;
      g.uval = u;
    }
  }
  return g;
}

WElem TateElem::eval_theta(long long target_uval) const {
  const long long e = W_->e;
  WElem sum = WElem::zero(W_);
  long long last_i = -1, prev_i = -1;
  long long last_t = 0, prev_t = 0;
  for (long long i = 0; i <= D_; ++i) {
    WElem term = c_[i].shifted(-e * i);  // c_i * theta^i
    sum = sum + term;
    if (!term.is_apparent_zero()) {
      prev_i = last_i;
      prev_t = last_t;
      last_i = i;
      last_t = term.uval();
    }
  }
  if (!tail_) return sum;  // exactly represented polynomial: ring map
  if (last_i < 0) return sum;
  if (last_t < target_uval)
    raise(err::TAIL_NOT_CONVERGED,
          "observed terms do not fall below the target before degree " +
              std::to_string(D_) + " (raise D)");
  long long tail_est;
  if (prev_i < 0) {
    tail_est = last_t;  // single observation: conservative
  } else {
    long long slope_num = last_t - prev_t;
    long long gap = last_i - prev_i;
    if (slope_num <= 0)
      raise(err::TAIL_NOT_CONVERGED, "observed terms are not decaying (raise D)");
    tail_est = last_t + (slope_num / gap) * (D_ + 1 - last_i);
  }
  if (tail_est < target_uval)
    raise(err::TAIL_NOT_CONVERGED,
          "extrapolated tail exceeds the target precision (raise D)");
  return sum.truncated(tail_est);
}

TateElem TateElem::inverse(long long rel_digits) const {
  if (c_[0].is_apparent_zero())
    raise(err::SINGULAR, "constant term is an apparent zero");
  TateElem r(W_, D_, tail_);
  WElem b0i = c_[0].inv(rel_digits);
  r.c_[0] = b0i;
  for (long long k = 1; k <= D_; ++k) {
    WElem acc = WElem::zero(W_);
    for (long long j = 1; j <= k; ++j) acc = acc + c_[j] * r.c_[k - j];
    r.c_[k] = -(b0i * acc);
  }
  return r;
}

std::string TateElem::to_string(long long max_terms) const {
  std::ostringstream os;
  long long shown = 0;
  for (long long i = 0; i <= D_ && shown < max_terms; ++i) {
    if (c_[i].is_apparent_zero() && c_[i].is_exact()) continue;
    if (shown) os << " + ";
    os << "(" << c_[i].to_string(4) << ")*t^" << i;
    ++shown;
  }
  if (!shown) os << "0";
  if (tail_) os << " + O(t^" << D_ + 1 << ")";
  return os.str();
}

TateMat::TateMat(WFieldPtr W, long long rows, long long cols, long long D)
    : W_(std::move(W)), rows_(rows), cols_(cols), D_(D) {
  e_.assign(rows_ * cols_, TateElem(W_, D_));
}

TateMat TateMat::identity(const WFieldPtr& W, long long n, long long D) {
  TateMat M(W, n, n, D);
  for (long long i = 0; i < n; ++i)
    M.at_mut(i, i) = TateElem::constant(WElem::one(W), D);
  return M;
}

TateMat TateMat::operator+(const TateMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    raise(err::DIMENSION_MISMATCH, "matrix addition shape mismatch");
  TateMat M(W_, rows_, cols_, std::min(D_, o.D_));
  for (long long k = 0; k < rows_ * cols_; ++k) M.e_[k] = e_[k] + o.e_[k];
  return M;
}

TateMat TateMat::operator-(const TateMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    raise(err::DIMENSION_MISMATCH, "matrix subtraction shape mismatch");
  TateMat M(W_, rows_, cols_, std::min(D_, o.D_));
  for (long long k = 0; k < rows_ * cols_; ++k) M.e_[k] = e_[k] - o.e_[k];
  return M;
}

TateMat TateMat::operator*(const TateMat& o) const {
  if (cols_ != o.rows_) raise(err::DIMENSION_MISMATCH, "matrix product shape mismatch");
  TateMat M(W_, rows_, o.cols_, std::min(D_, o.D_));
  for (long long i = 0; i < rows_; ++i)
    for (long long j = 0; j < o.cols_; ++j) {
      TateElem acc(W_, M.D_);
      for (long long k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
      M.at_mut(i, j) = acc;
    }
  return M;
}

TateMat TateMat::twist(long long n) const {
  TateMat M = *this;
  for (auto& x : M.e_) x = x.twist(n);
  return M;
}

GaussValue TateMat::gauss(long long alpha_uval) const {
  GaussValue g;
  for (const auto& x : e_) {
    GaussValue gx = x.gauss(alpha_uval);
    g.lower_bound = g.lower_bound || gx.lower_bound;
    if (gx.all_zero) continue;
    if (g.all_zero || gx.uval < g.uval) {
      g.all_zero = false;
      g.uval = gx.uval;
    }
  }
  return g;
}

TateMat TateMat::inverse(long long rel_digits) const {
  if (rows_ != cols_) raise(err::DIMENSION_MISMATCH, "inverse of a non-square matrix");
  const long long n = rows_;
  // invert the constant-in-t block over W by Gaussian elimination
  std::vector<WElem> A(n * n), I(n * n);
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      A[i * n + j] = at(i, j).coeff(0);
      I[i * n + j] = i == j ? WElem::one(W_) : WElem::zero(W_);
    }
  for (long long col = 0; col < n; ++col) {
    long long piv = -1;
    for (long long r = col; r < n; ++r)
      if (!A[r * n + col].is_apparent_zero()) {
        if (piv < 0 || A[r * n + col].uval() < A[piv * n + col].uval()) piv = r;
      }
    if (piv < 0) raise(err::SINGULAR, "constant-in-t block is singular over W");
    for (long long j = 0; j < n; ++j) {
      std::swap(A[col * n + j], A[piv * n + j]);
      std::swap(I[col * n + j], I[piv * n + j]);
    }
    WElem pinv = A[col * n + col].inv(rel_digits);
    for (long long j = 0; j < n; ++j) {
      A[col * n + j] = A[col * n + j] * pinv;
      I[col * n + j] = I[col * n + j] * pinv;
    }
    for (long long r = 0; r < n; ++r) {
      if (r == col || A[r * n + col].is_apparent_zero()) continue;
      WElem f = A[r * n + col];
      for (long long j = 0; j < n; ++j) {
        A[r * n + j] = A[r * n + j] - f * A[col * n + j];
        I[r * n + j] = I[r * n + j] - f * I[col * n + j];
      }
    }
  }
  // t-adic series inversion: B_k = -B_0 * sum_{j>=1} A_j B_{k-j}
  auto block = [&](long long k) {  // A_k as an n x n matrix of W elements
    std::vector<WElem> M(n * n);
    for (long long i = 0; i < n; ++i)
      for (long long j = 0; j < n; ++j) M[i * n + j] = at(i, j).coeff(k);
    return M;
  };
  std::vector<std::vector<WElem>> Ab;
  for (long long k = 0; k <= D_; ++k) Ab.push_back(block(k));
  std::vector<std::vector<WElem>> B;  // B[k] row-major n x n
  std::vector<WElem> B0v(n * n);
  for (long long i = 0; i < n * n; ++i) B0v[i] = I[i];
  B.push_back(B0v);
  for (long long k = 1; k <= D_; ++k) {
    std::vector<WElem> S(n * n, WElem::zero(W_));
    for (long long j = 1; j <= k; ++j) {
      for (long long r = 0; r < n; ++r)
        for (long long c2 = 0; c2 < n; ++c2) {
          WElem acc = S[r * n + c2];
          for (long long m = 0; m < n; ++m)
            acc = acc + Ab[j][r * n + m] * B[k - j][m * n + c2];
          S[r * n + c2] = acc;
        }
    }
    std::vector<WElem> Bk2(n * n, WElem::zero(W_));
    for (long long r = 0; r < n; ++r)
      for (long long c2 = 0; c2 < n; ++c2) {
        WElem acc = Bk2[r * n + c2];
        for (long long m = 0; m < n; ++m) acc = acc + I[r * n + m] * S[m * n + c2];
        Bk2[r * n + c2] = -acc;
      }
    B.push_back(std::move(Bk2));
  }
  TateMat R(W_, n, n, D_);
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      std::vector<WElem> coef(D_ + 1);
      for (long long k = 0; k <= D_; ++k) coef[k] = B[k][i * n + j];
      R.at_mut(i, j) = TateElem::from_coeffs(std::move(coef), D_, true);
    }
  return R;
}

TateVec TateMat::row(long long i) const {
  TateVec v;
  for (long long j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

TateVec TateMat::col(long long j) const {
  TateVec v;
  for (long long i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

TateVec vec_add(const TateVec& a, const TateVec& b) {
  if (a.size() != b.size()) raise(err::DIMENSION_MISMATCH, "vector addition shape mismatch");
  TateVec r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

TateVec vec_sub(const TateVec& a, const TateVec& b) {
  if (a.size() != b.size()) raise(err::DIMENSION_MISMATCH, "vector subtraction shape mismatch");
  TateVec r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

TateVec vec_twist(const TateVec& a, long long n) {
  TateVec r;
  for (const auto& x : a) r.push_back(x.twist(n));
  return r;
}

TateVec vec_scaled(const TateVec& a, const WElem& c) {
  TateVec r;
  for (const auto& x : a) r.push_back(x.scaled(c));
  return r;
}

TateVec row_times_mat(const TateVec& a, const TateMat& M) {
  if ((long long)a.size() != M.rows())
    raise(err::DIMENSION_MISMATCH, "row-vector/matrix shape mismatch");
  TateVec r;
  for (long long j = 0; j < M.cols(); ++j) {
    TateElem acc(M.field(), std::min(a[0].degree_bound(), M.degree_bound()));
    for (long long i = 0; i < M.rows(); ++i) acc = acc + a[i] * M.at(i, j);
    r.push_back(acc);
  }
  return r;
}

GaussValue vec_gauss(const TateVec& a, long long alpha_uval) {
  GaussValue g;
  for (const auto& x : a) {
    GaussValue gx = x.gauss(alpha_uval);
    g.lower_bound = g.lower_bound || gx.lower_bound;
    if (gx.all_zero) continue;
    if (g.all_zero || gx.uval < g.uval) {
      g.all_zero = false;
      g.uval = gx.uval;
    }
  }
  return g;
}

}  // namespace fflog
