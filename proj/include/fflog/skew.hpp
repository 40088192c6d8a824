// Twisted polynomial rings over W: C[tau] with tau a = a^q tau, its sigma
// counterpart with sigma a = a^(1/q) sigma, and truncated F_q-linear power
// series sum c_i X^(q^i).
#pragma once

#include "fflog/laurent.hpp"

namespace fflog {

// sum a_i tau^i
class SkewPoly {
public:
  SkewPoly() = default;
  explicit SkewPoly(WFieldPtr W) : W_(std::move(W)) {}
  SkewPoly(WFieldPtr W, std::vector<WElem> coeffs);

  const WFieldPtr& field() const { return W_; }
  long long degree() const { return (long long)a_.size() - 1; }
  WElem coeff(long long i) const;
  const std::vector<WElem>& coeffs() const { return a_; }
  bool is_apparent_zero() const;

  SkewPoly operator+(const SkewPoly& o) const;
  SkewPoly operator-(const SkewPoly& o) const;
  SkewPoly operator*(const SkewPoly& o) const;  // tau a = a^q tau

  WElem apply(const WElem& z) const;  // sum a_i z^(q^i)
  WElem const_term() const { return coeff(0); }

private:
  WFieldPtr W_;
  std::vector<WElem> a_;
  void trim();
};

// sum alpha_i sigma^i with sigma f = f^(-1) sigma; sigma-degree capped at 16
class SigmaPoly {
public:
  static constexpr long long kMaxDeg = 16;
  SigmaPoly() = default;
  explicit SigmaPoly(WFieldPtr W) : W_(std::move(W)) {}
  SigmaPoly(WFieldPtr W, std::vector<WElem> coeffs);

  const WFieldPtr& field() const { return W_; }
  long long degree() const { return (long long)a_.size() - 1; }
  WElem coeff(long long i) const;
  const std::vector<WElem>& coeffs() const { return a_; }

  SigmaPoly operator+(const SigmaPoly& o) const;
  SigmaPoly operator-(const SigmaPoly& o) const;
  SigmaPoly operator*(const SigmaPoly& o) const;  // may raise NOT_A_POWER

private:
  WFieldPtr W_;
  std::vector<WElem> a_;
  void trim();
};

// F_q-linear series sum_{i<=N} c_i X^(q^i)
class FqLinearSeries {
public:
  FqLinearSeries() = default;
  FqLinearSeries(WFieldPtr W, long long N);
  FqLinearSeries(WFieldPtr W, std::vector<WElem> coeffs);

  const WFieldPtr& field() const { return W_; }
  long long order() const { return (long long)c_.size() - 1; }  // N
  WElem coeff(long long i) const;
  WElem& coeff_mut(long long i) { return c_[i]; }

  FqLinearSeries operator+(const FqLinearSeries& o) const;
  FqLinearSeries operator-(const FqLinearSeries& o) const;
  // composition (f o g), truncated at min(order) in q-power degree
  FqLinearSeries compose(const FqLinearSeries& g) const;
  // cap_uval, when finite, truncates every term at that absolute u-valuation
  // (the twisted windows can otherwise grow like q^N)
  WElem evaluate(const WElem& z, long long cap_uval = kExactPrec) const;

  static FqLinearSeries identity(const WFieldPtr& W, long long N);

private:
  WFieldPtr W_;
  std::vector<WElem> c_;
};

}  // namespace fflog
