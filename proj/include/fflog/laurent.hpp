// Truncated Laurent series over F_{q^s} in a uniformizer u, with theta = u^-e.
// Every element carries an absolute precision: digits at u-exponents >= prec
// are unknown.  Exact Laurent polynomials carry infinite precision, so ring
// operations on them stay exact; division and root extraction introduce
// truncation at a requested number of digits.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "fflog/gf.hpp"

namespace fflog {

inline constexpr long long kExactPrec = (1LL << 60);

inline long long sat_add(long long a, long long b) {
  if (a >= kExactPrec || b >= kExactPrec) return kExactPrec;
  long long s = a + b;
  return s >= kExactPrec ? kExactPrec : s;
}

// Deterministic choice rule for multi-root solves: Least picks the
// lexicographically least residue solution; KInfty restricts residue
// solutions to the embedded F_q and asserts length-one polygon edges.
enum class BranchMode { Least, KInfty };
struct BranchPolicy {
  BranchMode mode = BranchMode::Least;
  static BranchPolicy least() { return {BranchMode::Least}; }
  static BranchPolicy kinfty() { return {BranchMode::KInfty}; }
  const char* name() const { return mode == BranchMode::Least ? "least" : "kinfty"; }
};

// W = F_{q^s}((u)) with theta = u^-e and |theta| = q.
struct WorkingField {
  FieldConfig F;
  long long e = 1;
  long long default_prec = 200;  // relative u-digits for series inversions

  long long q() const { return F.q(); }
  static std::shared_ptr<const WorkingField> make(int p, int m, int s, long long e,
                                                  long long default_prec = 200);
  static std::shared_ptr<const WorkingField> make(FieldConfig F, long long e,
                                                  long long default_prec = 200);
};

using WFieldPtr = std::shared_ptr<const WorkingField>;

// Exact infinity-adic order as a rational number in theta units: |x| = q^-ord.
struct OrdValue {
  long long num = 0;  // u-valuation
  long long den = 1;  // ramification e
};

class WElem {
public:
  WElem() = default;

  static WElem zero(WFieldPtr W, long long prec = kExactPrec);
  static WElem one(const WFieldPtr& W);
  static WElem monomial(WFieldPtr W, gf_t coeff, long long uval,
                        long long prec = kExactPrec);
  static WElem theta(const WFieldPtr& W, long long power = 1);
  // digits c[i] at u^(v+i)
  static WElem from_digits(WFieldPtr W, long long v, std::vector<gf_t> digits,
                           long long prec = kExactPrec);
  static WElem from_int(const WFieldPtr& W, long long n);  // image of n in F_p

  const WFieldPtr& field() const { return W_; }
  bool valid() const { return W_ != nullptr; }

  // apparent zero: no known nonzero digit at this precision
  bool is_apparent_zero() const { return c_.empty(); }
  bool is_exact() const { return prec_ >= kExactPrec; }
  bool is_exact_zero() const { return c_.empty() && is_exact(); }

  long long uval() const;            // throws INDETERMINATE on apparent zero
  long long uval_or(long long) const;
  long long abs_prec() const { return prec_; }
  long long rel_prec() const;        // known digits past the leading one
  OrdValue ord_theta() const;        // ord_infty with ord(theta) = -1
  // -log_q |x| as a rational (uval/e); apparent zero -> nullopt
  std::optional<OrdValue> norm_exponent() const;

  gf_t digit(long long k) const;     // coefficient of u^k (0 outside window)
  bool digit_known(long long k) const { return k < prec_; }
  long long support_begin() const { return v_; }
  long long support_end() const { return v_ + (long long)c_.size(); }
  const std::vector<gf_t>& digits() const { return c_; }

  WElem operator+(const WElem& o) const;
  WElem operator-(const WElem& o) const;
  WElem operator-() const;
  WElem operator*(const WElem& o) const;
  WElem mul_gf(gf_t c) const;
  WElem shifted(long long k) const;  // * u^k

  // Multiplicative inverse.  For inexact input the precision follows the
  // propagation rule; for exact input the result carries rel_digits known
  // digits (default: the working field's default_prec).
  WElem inv(long long rel_digits = -1) const;
  WElem div(const WElem& o, long long rel_digits = -1) const;
  WElem operator/(const WElem& o) const { return div(o); }
  WElem pow(long long k) const;

  // n-fold Frobenius twist x -> x^(q^n).  Negative n requires the known
  // support to sit on multiples of q^|n| (NOT_A_POWER otherwise).
  WElem frobenius_twist(long long n) const;
  // same, but only digits at exponents < cap are produced
  WElem frobenius_twist_clipped(long long n, long long cap) const;

  WElem truncated(long long new_prec) const;
  WElem with_prec(long long prec) const;  // declare (not derive) a precision

  // y with y^(q-1) = *this, branch fixed by policy.
  WElem root_q_minus_1(const BranchPolicy& policy, long long rel_digits = -1) const;

  bool equal_at_precision(const WElem& o) const { return (*this - o).is_apparent_zero(); }

  std::string to_string(long long max_digits = 12) const;

private:
  WFieldPtr W_;
  long long v_ = 0;
  long long prec_ = kExactPrec;
  std::vector<gf_t> c_;
  void normalize();
  friend class WSerde;
};

// true when all known digits sit on multiples of e with embedded-F_q
// coefficients, i.e. the element lies in k_infty = F_q((theta^-1))
bool is_kinfty_rational(const WElem& x);

}  // namespace fflog
