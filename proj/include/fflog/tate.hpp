// Degree-truncated Tate algebra elements and matrices: polynomials in t of
// bounded degree with Laurent-series coefficients, Frobenius twisting acting
// on coefficients only, Gauss norms, and evaluation at t = theta.
#pragma once

#include <optional>
#include <vector>

#include "fflog/laurent.hpp"

namespace fflog {

// sup_i |c_i| |alpha|^i reported as a u-valuation: norm = q^(-uval/e).
struct GaussValue {
  bool all_zero = true;
  long long uval = 0;
  bool lower_bound = false;  // set when the element is a truncation
};

class TateElem {
public:
  TateElem() = default;
  TateElem(WFieldPtr W, long long D, bool tail = false);
  static TateElem constant(const WElem& c, long long D, bool tail = false);
  static TateElem t_power(const WFieldPtr& W, long long k, long long D);
  static TateElem from_coeffs(std::vector<WElem> coeffs, long long D, bool tail = false);

  const WFieldPtr& field() const { return W_; }
  long long degree_bound() const { return D_; }
  bool tail_flag() const { return tail_; }
  TateElem with_tail(bool t) const;

  const WElem& coeff(long long i) const;
  WElem& coeff_mut(long long i) { return c_[i]; }
  long long coeff_count() const { return (long long)c_.size(); }

  TateElem operator+(const TateElem& o) const;
  TateElem operator-(const TateElem& o) const;
  TateElem operator-() const;
  TateElem operator*(const TateElem& o) const;  // truncated at min degree bound
  TateElem scaled(const WElem& c) const;
  TateElem shifted_t(long long k) const;  // * t^k, truncated
  TateElem twist(long long n) const;      // coefficientwise Frobenius twist
  TateElem twist_clipped(long long n, long long cap) const;
  TateElem truncated_coeffs(long long uprec) const;

  bool is_apparent_zero() const;

  // alpha_uval: u-valuation of |alpha| (0 for alpha=1, -e for alpha=theta)
  GaussValue gauss(long long alpha_uval) const;

  // Sum of c_i theta^i with a declared tail bound; target is an absolute
  // u-valuation the result must be meaningful to.
  WElem eval_theta(long long target_uval) const;

  // multiplicative inverse as a t-adic series (constant term must be a unit)
  TateElem inverse(long long rel_digits = -1) const;

  std::string to_string(long long max_terms = 6) const;

private:
  WFieldPtr W_;
  long long D_ = 0;
  bool tail_ = false;
  std::vector<WElem> c_;  // size D_+1
};

using TateVec = std::vector<TateElem>;  // row vector

class TateMat {
public:
  TateMat() = default;
  TateMat(WFieldPtr W, long long rows, long long cols, long long D);
  static TateMat identity(const WFieldPtr& W, long long n, long long D);

  long long rows() const { return rows_; }
  long long cols() const { return cols_; }
  long long degree_bound() const { return D_; }
  const WFieldPtr& field() const { return W_; }

  const TateElem& at(long long i, long long j) const { return e_[i * cols_ + j]; }
  TateElem& at_mut(long long i, long long j) { return e_[i * cols_ + j]; }

  TateMat operator+(const TateMat& o) const;
  TateMat operator-(const TateMat& o) const;
  TateMat operator*(const TateMat& o) const;
  TateMat twist(long long n) const;
  GaussValue gauss(long long alpha_uval) const;

  // Ψ^-1 as a t-adic power series; requires the constant-in-t block to be
  // invertible over W.
  TateMat inverse(long long rel_digits = -1) const;

  TateVec row(long long i) const;
  TateVec col(long long j) const;

private:
  WFieldPtr W_;
  long long rows_ = 0, cols_ = 0, D_ = 0;
  std::vector<TateElem> e_;
};

TateVec vec_add(const TateVec& a, const TateVec& b);
TateVec vec_sub(const TateVec& a, const TateVec& b);
TateVec vec_twist(const TateVec& a, long long n);
TateVec vec_scaled(const TateVec& a, const WElem& c);
TateVec row_times_mat(const TateVec& a, const TateMat& M);
GaussValue vec_gauss(const TateVec& a, long long alpha_uval);

}  // namespace fflog
