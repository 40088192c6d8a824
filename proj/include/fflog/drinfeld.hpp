// Drinfeld F_q[t]-modules over W: the skew action phi_a, exponential and
// logarithm coefficient recursions, the companion frame matrix and its exact
// rational inverse, the dual-motive evaluation maps, and the exponentiation
// cross-check.
#pragma once

#include "fflog/rational.hpp"
#include "fflog/skew.hpp"

namespace fflog {

struct DrinfeldModule {
  WFieldPtr W;
  std::vector<WElem> kappa;  // kappa[i] multiplies tau^(i+1); kappa.back() != 0

  long long rank() const { return (long long)kappa.size(); }
  static DrinfeldModule make(WFieldPtr W, std::vector<WElem> kappa);
  static DrinfeldModule carlitz(const WFieldPtr& W);

  SkewPoly phi_t() const;  // theta + kappa_1 tau + ... + kappa_r tau^r
};

// image of a in F_q[t] under the module map; d(phi_a) = a(theta)
SkewPoly phi_of(const DrinfeldModule& E, const CoeffPoly& a);
WElem apply_skew(const SkewPoly& f, const WElem& z);

// exp_E coefficients from alpha_0 = 1 and
//   alpha_n (theta^(q^n) - theta) = sum_j kappa_j alpha_(n-j)^(q^j)
FqLinearSeries exp_series(const DrinfeldModule& E, long long N);
// log_E coefficients from Q_0 = 1 and
//   Q_n (theta - theta^(q^n)) = sum_j Q_(n-j) kappa_j^(q^(n-j))
FqLinearSeries log_series(const DrinfeldModule& E, long long N);

// Empirical convergence radius of log_E: min over observed n of
// |Q_n|^(-1/(q^n - 1)) reported as log_q R = num/den, with a flag telling
// whether the minimum already stabilized on the first half of the range.
struct RadiusEstimate {
  long long num = 0;
  long long den = 1;
  bool stabilized = false;
};
RadiusEstimate radius_estimate(const DrinfeldModule& E, long long N);
// true when |xi| < q^(num/den) * safety, safety given as a power of q
bool inside_radius(const WElem& xi, const RadiusEstimate& R, long long safety_logq = 0);

// companion frame matrix and its exact rational inverse; entries of the
// inverse require each kappa_i to be a q^i-th power in W
TateMat frame_matrix(const DrinfeldModule& E, long long D);
RationalMat frame_inverse(const DrinfeldModule& E);
// (frame_inverse)^(twist n), built directly so only non-negative twists of
// the kappa roots appear for n >= r
RationalMat frame_inverse_twisted(const DrinfeldModule& E, long long n);

// dual-motive evaluation maps on C[sigma]
WElem epsilon0(const SigmaPoly& m);
WElem epsilon1(const SigmaPoly& m);
// t-action: m -> m * (theta + kappa_1^(-1) sigma + ... + kappa_r^(-r) sigma^r)
SigmaPoly t_action(const DrinfeldModule& E, const SigmaPoly& m);

// bounded evaluation map: first entry of the row vector at t = theta
WElem script_E0(const TateVec& a, long long target_uval);

// residual |exp_E(E0(g_xi + h_xi)) - xi| of the exponentiation identity,
// with g_xi = sum_{i>=1} (xi^(q^i), 0, ..) R_i truncated at order N, degree D
struct AndersonCheck {
  WElem residual;
  bool ok(long long target_uval) const {
    return residual.is_apparent_zero() ? residual.abs_prec() >= target_uval
                                       : residual.uval() >= target_uval;
  }
};
AndersonCheck anderson_exp_check(const DrinfeldModule& E, const WElem& xi,
                                 long long N, long long D,
                                 long long tail_udigits = 60);

}  // namespace fflog
