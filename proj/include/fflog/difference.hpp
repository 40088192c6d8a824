// The difference operator Z -> Z - Z^(1), its geometric-series section on the
// contracting region, coefficientwise Artin-Schreier inversion with Newton
// polygon leading-term extraction, the omega series for the rank-one
// trivialization, and trivialization validation.
#pragma once

#include "fflog/drinfeld.hpp"
#include "fflog/tate.hpp"

namespace fflog {

struct NewtonPoint {
  long long i;     // monomial exponent
  long long uval;  // u-valuation of its coefficient
};

struct NewtonEdge {
  long long i0 = 0, i1 = 0;  // horizontal span, i0 < i1
  long long rise = 0;        // uval(i1) - uval(i0)
  long long length() const { return i1 - i0; }
  // valuation of the associated roots: (uval(i0) - uval(i1)) / (i1 - i0)
  bool integral_root_val() const { return (-rise) % length() == 0; }
  long long root_uval() const { return (-rise) / length(); }
};

struct NewtonPolygonData {
  std::vector<NewtonPoint> points;  // nonzero coefficients only
  std::vector<NewtonEdge> edges;    // lower convex hull, left to right
};

// lower convex hull of (exponent, valuation) for the given coefficients
NewtonPolygonData newton_polygon(const std::vector<WElem>& coeffs);

TateElem wp(const TateElem& Z);   // Z - Z^(1)
TateVec wp_r(const TateVec& Z);

// sum_{i>=0} Z^(i); requires Gauss norm strictly below one
TateVec L0_series(const TateVec& Z, long long prec_udigits);
TateElem L0_series_single(const TateElem& Z, long long prec_udigits);

// per-step diagnostics of the leading-term extraction, for the assertions the
// k_infty branch construction makes
struct SolveStep {
  long long mu;        // u-valuation of the extracted term
  bool edge_01;        // leading edge joins exponents 0 and 1
  bool length_one;     // horizontal length of that edge is 1
};

// a root of Y^q + a Y = c in W, to absolute u-valuation target; the branch
// is fixed by the policy at every multi-root residue step
WElem solve_artin_schreier(const WElem& a, const WElem& c, const BranchPolicy& policy,
                           long long target_uval,
                           std::vector<SolveStep>* steps = nullptr);

// a representative f with wp_r(f) = h exactly through the degree bound;
// coefficientwise Artin-Schreier with a = -1
TateVec wp_inverse(const TateVec& h, const BranchPolicy& policy, long long prec_udigits);

// coefficients of the rank-one trivialization series from the difference
// equation a_i + theta^q a_i^q = a_(i-1)^q, a_0 = (-theta)^(-q/(q-1))
TateElem omega_series(const WFieldPtr& W, long long D, long long prec_udigits,
                      const BranchPolicy& policy = BranchPolicy::least());

// rank-one trivialization: c * omega with c^(q-1) = kappa_1
TateMat psi_rank1(const DrinfeldModule& E, long long D, long long prec_udigits,
                  const BranchPolicy& policy = BranchPolicy::least());

// Gauss-norm residual of the difference equation for a candidate Psi,
// measured through the positively twisted form Psi - Phi^(1) Psi^(1) and
// reported as the exact q-th root of that norm.
struct PsiResidual {
  bool zero = false;        // no known nonzero digit in the residual
  long long uval_num = 0;   // norm = q^(-uval_num / (uval_den * e))
  long long uval_den = 1;
  bool ok(long long target_uval) const {
    return zero || uval_num >= target_uval * uval_den;
  }
};
PsiResidual validate_psi(const DrinfeldModule& E, const TateMat& Psi);

}  // namespace fflog
