#include "fflog/skew.hpp"

namespace fflog {

SkewPoly::SkewPoly(WFieldPtr W, std::vector<WElem> coeffs)
    : W_(std::move(W)), a_(std::move(coeffs)) {
  trim();
}

void SkewPoly::trim() {
  while (!a_.empty() && a_.back().is_apparent_zero() && a_.back().is_exact())
    a_.pop_back();
}

WElem SkewPoly::coeff(long long i) const {
  if (i < 0 || i >= (long long)a_.size()) return WElem::zero(W_);
  return a_[i];
}

bool SkewPoly::is_apparent_zero() const {
  for (const auto& x : a_)
    if (!x.is_apparent_zero()) return false;
  return true;
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
  std::vector<WElem> r(std::max(a_.size(), o.a_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return SkewPoly(W_, std::move(r));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const {
  std::vector<WElem> r(std::max(a_.size(), o.a_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return SkewPoly(W_, std::move(r));
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
  if (a_.empty() || o.a_.empty()) return SkewPoly(W_);
  std::vector<WElem> r(a_.size() + o.a_.size() - 1, WElem::zero(W_));
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].is_apparent_zero() && a_[i].is_exact()) continue;
    for (std::size_t j = 0; j < o.a_.size(); ++j)
      r[i + j] = r[i + j] + a_[i] * o.a_[j].frobenius_twist((long long)i);
  }
  return SkewPoly(W_, std::move(r));
}

WElem SkewPoly::apply(const WElem& z) const {
  WElem acc = WElem::zero(W_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    acc = acc + a_[i] * z.frobenius_twist((long long)i);
  return acc;
}

SigmaPoly::SigmaPoly(WFieldPtr W, std::vector<WElem> coeffs)
    : W_(std::move(W)), a_(std::move(coeffs)) {
  trim();
  if (degree() > kMaxDeg)
    raise(err::DIMENSION_MISMATCH, "sigma-degree exceeds the supported cap");
}

void SigmaPoly::trim() {
  while (!a_.empty() && a_.back().is_apparent_zero() && a_.back().is_exact())
    a_.pop_back();
}

WElem SigmaPoly::coeff(long long i) const {
  if (i < 0 || i >= (long long)a_.size()) return WElem::zero(W_);
  return a_[i];
}

SigmaPoly SigmaPoly::operator+(const SigmaPoly& o) const {
  std::vector<WElem> r(std::max(a_.size(), o.a_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return SigmaPoly(W_, std::move(r));
}

SigmaPoly SigmaPoly::operator-(const SigmaPoly& o) const {
  std::vector<WElem> r(std::max(a_.size(), o.a_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return SigmaPoly(W_, std::move(r));
}

SigmaPoly SigmaPoly::operator*(const SigmaPoly& o) const {
  if (a_.empty() || o.a_.empty()) return SigmaPoly(W_);
  std::vector<WElem> r(a_.size() + o.a_.size() - 1, WElem::zero(W_));
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].is_apparent_zero() && a_[i].is_exact()) continue;
    for (std::size_t j = 0; j < o.a_.size(); ++j)
      r[i + j] = r[i + j] + a_[i] * o.a_[j].frobenius_twist(-(long long)i);
  }
  return SigmaPoly(W_, std::move(r));
}

FqLinearSeries::FqLinearSeries(WFieldPtr W, long long N) : W_(std::move(W)) {
  if (N < 0) raise(err::DIMENSION_MISMATCH, "negative truncation order");
  c_.assign(N + 1, WElem::zero(W_));
}

FqLinearSeries::FqLinearSeries(WFieldPtr W, std::vector<WElem> coeffs)
    : W_(std::move(W)), c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(WElem::zero(W_));
}

WElem FqLinearSeries::coeff(long long i) const {
  if (i < 0 || i >= (long long)c_.size()) return WElem::zero(W_);
  return c_[i];
}

FqLinearSeries FqLinearSeries::operator+(const FqLinearSeries& o) const {
  long long N = std::min(order(), o.order());
  FqLinearSeries r(W_, N);
  for (long long i = 0; i <= N; ++i) r.c_[i] = coeff(i) + o.coeff(i);
  return r;
}

FqLinearSeries FqLinearSeries::operator-(const FqLinearSeries& o) const {
  long long N = std::min(order(), o.order());
  FqLinearSeries r(W_, N);
  for (long long i = 0; i <= N; ++i) r.c_[i] = coeff(i) - o.coeff(i);
  return r;
}

FqLinearSeries FqLinearSeries::compose(const FqLinearSeries& g) const {
  long long N = std::min(order(), g.order());
  FqLinearSeries r(W_, N);
  for (long long i = 0; i <= N; ++i) {
    if (c_[i].is_apparent_zero() && c_[i].is_exact()) continue;
    for (long long j = 0; i + j <= N; ++j)
      r.c_[i + j] = r.c_[i + j] + c_[i] * g.coeff(j).frobenius_twist(i);
  }
  return r;
}

WElem FqLinearSeries::evaluate(const WElem& z, long long cap_uval) const {
  WElem acc = WElem::zero(W_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_apparent_zero() && c_[i].is_exact()) continue;
    long long cap = cap_uval >= kExactPrec
                        ? kExactPrec
                        : sat_add(cap_uval, -c_[i].uval_or(0));
    acc = acc + c_[i] * z.frobenius_twist_clipped((long long)i, cap);
  }
  return cap_uval >= kExactPrec ? acc : acc.truncated(cap_uval);
}

FqLinearSeries FqLinearSeries::identity(const WFieldPtr& W, long long N) {
  FqLinearSeries r(W, N);
  r.coeff_mut(0) = WElem::one(W);
  return r;
}

}  // namespace fflog
