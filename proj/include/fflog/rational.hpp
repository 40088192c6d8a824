// Exact rational functions of t over W whose denominators are products of
// factors (t - theta^(q^k)).  These hold the deformation coefficients and the
// twisted frame-product entries in exact form; expansion into a truncated
// Tate element is deferred to the caller.
#pragma once

#include <map>

#include "fflog/tate.hpp"

namespace fflog {

// Dense polynomial in t with W coefficients (no degree cap).
class TPoly {
public:
  TPoly() = default;
  explicit TPoly(WFieldPtr W) : W_(std::move(W)) {}
  TPoly(WFieldPtr W, std::vector<WElem> coeffs);
  static TPoly constant(const WElem& c);
  static TPoly t_minus_theta_qk(const WFieldPtr& W, long long k);  // t - theta^(q^k)

  const WFieldPtr& field() const { return W_; }
  bool is_apparent_zero() const;
  long long degree() const { return (long long)c_.size() - 1; }
  WElem coeff(long long i) const;
  const std::vector<WElem>& coeffs() const { return c_; }

  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  TPoly scaled(const WElem& c) const;
  TPoly twist(long long n) const;

  WElem eval_theta() const;  // exact substitution t = theta
  TateElem as_tate(long long D) const;

private:
  WFieldPtr W_;
  std::vector<WElem> c_;
  void trim();
};

// num / prod_k (t - theta^(q^k))^mult_k
class RationalTate {
public:
  RationalTate() = default;
  explicit RationalTate(TPoly num) : num_(std::move(num)) {}
  RationalTate(TPoly num, std::map<long long, int> den)
      : num_(std::move(num)), den_(std::move(den)) {
    prune();
  }
  static RationalTate zero(const WFieldPtr& W) { return RationalTate(TPoly(W)); }
  static RationalTate one(const WFieldPtr& W);
  // c / (t - theta^(q^k))
  static RationalTate simple(const WElem& c, long long k);

  const TPoly& num() const { return num_; }
  const std::map<long long, int>& den() const { return den_; }
  const WFieldPtr& field() const { return num_.field(); }
  bool is_apparent_zero() const { return num_.is_apparent_zero(); }

  RationalTate operator+(const RationalTate& o) const;
  RationalTate operator-(const RationalTate& o) const;
  RationalTate operator*(const RationalTate& o) const;
  RationalTate scaled(const WElem& c) const;
  RationalTate twist(long long n) const;  // n >= 0

  // equality as rational functions, by cross multiplication
  bool equals(const RationalTate& o) const;

  TPoly den_expanded() const;
  WElem eval_theta() const;            // requires all k >= 1
  TateElem expand(long long D) const;  // geometric expansion, requires k >= 1

  std::string describe() const;

private:
  TPoly num_;
  std::map<long long, int> den_;  // k -> multiplicity, k >= 0
  void prune();
};

using RationalMat = std::vector<std::vector<RationalTate>>;

RationalMat rmat_identity(const WFieldPtr& W, long long n);
RationalMat rmat_mul(const RationalMat& A, const RationalMat& B);

}  // namespace fflog
