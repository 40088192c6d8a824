#include "fflog/rational.hpp"

#include <sstream>

namespace fflog {

TPoly::TPoly(WFieldPtr W, std::vector<WElem> coeffs)
    : W_(std::move(W)), c_(std::move(coeffs)) {
  trim();
}

void TPoly::trim() {
  while (!c_.empty() && c_.back().is_apparent_zero() && c_.back().is_exact())
    c_.pop_back();
}

TPoly TPoly::constant(const WElem& c) { return TPoly(c.field(), {c}); }

TPoly TPoly::t_minus_theta_qk(const WFieldPtr& W, long long k) {
  long long qk = 1;
  for (long long i = 0; i < k; ++i) qk *= W->q();
  return TPoly(W, {-WElem::theta(W, 1).pow(qk), WElem::one(W)});
}

bool TPoly::is_apparent_zero() const {
  for (const auto& x : c_)
    if (!x.is_apparent_zero()) return false;
  return true;
}

WElem TPoly::coeff(long long i) const {
  if (i < 0 || i >= (long long)c_.size()) return WElem::zero(W_);
  return c_[i];
}

TPoly TPoly::operator+(const TPoly& o) const {
  std::vector<WElem> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return TPoly(W_, std::move(r));
}

TPoly TPoly::operator-(const TPoly& o) const {
  std::vector<WElem> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return TPoly(W_, std::move(r));
}

TPoly TPoly::operator*(const TPoly& o) const {
  if (c_.empty() || o.c_.empty()) return TPoly(W_);
  std::vector<WElem> r(c_.size() + o.c_.size() - 1, WElem::zero(W_));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = r[i + j] + c_[i] * o.c_[j];
  return TPoly(W_, std::move(r));
}

TPoly TPoly::scaled(const WElem& c) const {
  std::vector<WElem> r = c_;
  for (auto& x : r) x = x * c;
  return TPoly(W_, std::move(r));
}

TPoly TPoly::twist(long long n) const {
  std::vector<WElem> r = c_;
  for (auto& x : r) x = x.frobenius_twist(n);
  return TPoly(W_, std::move(r));
}

WElem TPoly::eval_theta() const {
  WElem acc = WElem::zero(W_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * WElem::theta(W_) + *it;
  return acc;
}

TateElem TPoly::as_tate(long long D) const {
  TateElem r(W_, D, degree() > D);
  for (long long i = 0; i <= std::min<long long>(D, degree()); ++i)
    r.coeff_mut(i) = c_[i];
  return r;
}

RationalTate RationalTate::one(const WFieldPtr& W) {
  return RationalTate(TPoly::constant(WElem::one(W)));
}

RationalTate RationalTate::simple(const WElem& c, long long k) {
  std::map<long long, int> den;
  den[k] = 1;
  return RationalTate(TPoly::constant(c), std::move(den));
}

void RationalTate::prune() {
  for (auto it = den_.begin(); it != den_.end();) {
    if (it->second < 0) raise(err::DIMENSION_MISMATCH, "negative denominator multiplicity");
    if (it->first < 0) raise(err::DIMENSION_MISMATCH, "denominator key must be >= 0");
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
  if (num_.is_apparent_zero()) {
    bool exact_zero = true;
    for (const auto& x : num_.coeffs())
      if (!x.is_exact()) exact_zero = false;
    if (exact_zero) den_.clear();
  }
}

RationalTate RationalTate::operator+(const RationalTate& o) const {
  // common denominator: pointwise max of multiplicities
  std::map<long long, int> den = den_;
  for (const auto& [k, m] : o.den_) den[k] = std::max(den[k], m);
  TPoly lhs = num_, rhs = o.num_;
  const WFieldPtr& W = num_.field() ? num_.field() : o.num_.field();
  for (const auto& [k, m] : den) {
    auto ita = den_.find(k);
    int ma = ita == den_.end() ? 0 : ita->second;
    auto itb = o.den_.find(k);
    int mb = itb == o.den_.end() ? 0 : itb->second;
    TPoly f = TPoly::t_minus_theta_qk(W, k);
    for (int i = ma; i < m; ++i) lhs = lhs * f;
    for (int i = mb; i < m; ++i) rhs = rhs * f;
  }
  return RationalTate(lhs + rhs, std::move(den));
}

RationalTate RationalTate::operator-(const RationalTate& o) const {
  return *this + o.scaled(WElem::from_int(o.field() ? o.field() : field(), -1));
}

RationalTate RationalTate::operator*(const RationalTate& o) const {
  std::map<long long, int> den = den_;
  for (const auto& [k, m] : o.den_) den[k] += m;
  return RationalTate(num_ * o.num_, std::move(den));
}

RationalTate RationalTate::scaled(const WElem& c) const {
  return RationalTate(num_.scaled(c), den_);
}

RationalTate RationalTate::twist(long long n) const {
  if (n < 0) raise(err::NOT_A_POWER, "rational forms support non-negative twists only");
  std::map<long long, int> den;
  for (const auto& [k, m] : den_) den[k + n] = m;
  return RationalTate(num_.twist(n), std::move(den));
}

bool RationalTate::equals(const RationalTate& o) const {
  TPoly lhs = num_ * o.den_expanded();
  TPoly rhs = o.num_ * den_expanded();
  return (lhs - rhs).is_apparent_zero();
}

TPoly RationalTate::den_expanded() const {
  const WFieldPtr& W = num_.field();
  TPoly d = TPoly::constant(WElem::one(W));
  for (const auto& [k, m] : den_) {
    TPoly f = TPoly::t_minus_theta_qk(W, k);
    for (int i = 0; i < m; ++i) d = d * f;
  }
  return d;
}

WElem RationalTate::eval_theta() const {
  const WFieldPtr& W = num_.field();
  WElem acc = num_.eval_theta();
  for (const auto& [k, m] : den_) {
    if (k < 1)
      raise(err::SINGULAR, "evaluation at t = theta requires denominator keys >= 1");
    long long qk = 1;
    for (long long i = 0; i < k; ++i) qk *= W->q();
    WElem f = WElem::theta(W) - WElem::theta(W).pow(qk);
    for (int i = 0; i < m; ++i) acc = acc / f;
  }
  return acc;
}

TateElem RationalTate::expand(long long D) const {
  const WFieldPtr& W = num_.field();
  TateElem r = num_.as_tate(D);
  for (const auto& [k, m] : den_) {
    if (k < 1)
      raise(err::SINGULAR, "geometric expansion requires poles outside the unit disc (k >= 1)");
    long long qk = 1;
    for (long long i = 0; i < k; ++i) qk *= W->q();
    // 1/(t - theta^(q^k)) = -sum_i t^i theta^(-q^k (i+1)), exact coefficients
    TateElem g(W, D, true);
    for (long long i = 0; i <= D; ++i) {
      long long shift = W->e * qk * (i + 1);
      g.coeff_mut(i) = -WElem::monomial(W, 1, shift);
    }
    for (int i = 0; i < m; ++i) r = r * g;
  }
  return r;
}

std::string RationalTate::describe() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (long long i = 0; i <= num_.degree(); ++i) {
    if (num_.coeff(i).is_apparent_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << num_.coeff(i).to_string(4) << ")t^" << i;
  }
  if (first) os << "0";
  os << ")";
  for (const auto& [k, m] : den_)
    os << " / (t - theta^(q^" << k << "))^" << m;
  return os.str();
}

RationalMat rmat_identity(const WFieldPtr& W, long long n) {
  RationalMat M(n, std::vector<RationalTate>(n, RationalTate::zero(W)));
  for (long long i = 0; i < n; ++i) M[i][i] = RationalTate::one(W);
  return M;
}

RationalMat rmat_mul(const RationalMat& A, const RationalMat& B) {
  if (A.empty() || B.empty() || A[0].size() != B.size())
    raise(err::DIMENSION_MISMATCH, "rational matrix product shape mismatch");
  const WFieldPtr& W = A[0][0].field() ? A[0][0].field() : B[0][0].field();
  RationalMat M(A.size(), std::vector<RationalTate>(B[0].size(), RationalTate::zero(W)));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < B[0].size(); ++j) {
      RationalTate acc = RationalTate::zero(W);
      for (std::size_t k = 0; k < B.size(); ++k) acc = acc + A[i][k] * B[k][j];
      M[i][j] = acc;
    }
  return M;
}

}  // namespace fflog
