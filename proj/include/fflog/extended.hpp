// The extended maps built from the difference-operator section: continuation
// of the deformation series, the extended logarithm with branches, period
// recovery through the bounded evaluation map, lattice membership with
// explicit witnesses, and the verification bundle for the main identities.
#pragma once

#include "fflog/deformation.hpp"
#include "fflog/difference.hpp"

namespace fflog {

struct LatticeBasis {
  WFieldPtr W;
  std::vector<WElem> gens;   // F_q[theta]-basis, smallest norms first
  long long cert_uval = 0;   // generators certified modulo u^cert_uval

  long long rank() const { return (long long)gens.size(); }
};

struct CosetValue {
  WElem rep;           // the policy-fixed branch value
  std::string branch;  // policy name that produced it
};

// continuation representative: section of the difference operator applied to
// Z e_1 Psi, then contracted with the first column of Psi^-1
TateElem ext_LE(const DrinfeldModule& E, const TateMat& Psi, const TateElem& Z,
                const BranchPolicy& policy, long long prec_udigits);

// the extended logarithm: evaluation of the continuation at t = theta
CosetValue ext_log(const DrinfeldModule& E, const TateMat& Psi, const WElem& xi,
                   const BranchPolicy& policy, long long prec_udigits);

// Lambda_E as bounded evaluations of F_q[t]-rows times Psi^-1, with greedy
// minimal-norm generator selection
LatticeBasis period_lattice(const DrinfeldModule& E, const TateMat& Psi,
                            long long degree_bound, long long prec_udigits);

enum class MemberStatus { Member, NonMember, Stall };
struct Membership {
  MemberStatus status = MemberStatus::Stall;
  CoeffPoly witness;          // single F_q[theta] multiplier (rank 1)
  std::vector<CoeffPoly> witnesses;  // one per generator (rank >= 2)
  long long residual_uval = 0;
  bool member() const { return status == MemberStatus::Member; }
};
Membership lattice_membership(const WElem& w, const LatticeBasis& L,
                              long long prec_udigits);

struct VerifyOutcome {
  bool pass = false;
  std::string detail;
  long long residual_uval = 0;
};

// |xi| < R_E: the branch value agrees with the specialized series mod Lambda
VerifyOutcome verify_inside_radius(const DrinfeldModule& E, const TateMat& Psi,
                                   const LatticeBasis& L, const WElem& xi,
                                   const BranchPolicy& policy, long long prec_udigits);

// the extended logarithm transports the module action to multiplication by
// theta, mod Lambda
VerifyOutcome verify_functional_equation(const DrinfeldModule& E, const TateMat& Psi,
                                         const LatticeBasis& L, const WElem& xi,
                                         const BranchPolicy& policy,
                                         long long prec_udigits);

// two-sided inverse checks against the exponential
VerifyOutcome verify_inverse_of_exp(const DrinfeldModule& E, const TateMat& Psi,
                                    const LatticeBasis& L, const WElem& xi,
                                    const BranchPolicy& policy, long long prec_udigits,
                                    long long exp_order = 14);

// the k_infty-rational branch for the rank-one module with kappa = 1: solves
// the coefficient equations (f_i/a_0)^q + theta^q (f_i/a_0) = alpha theta^q
// (a_i/a_0) along length-one polygon edges and evaluates f/omega at theta
WElem carlitz_kinfty_branch(const WFieldPtr& W, const WElem& alpha, long long D,
                            long long prec_udigits,
                            std::vector<SolveStep>* steps = nullptr);

// truncated lattice exponential z * prod (1 - z/lambda) over multipliers of
// degree <= H (rank one)
WElem exp_from_lattice_product(const LatticeBasis& L, const WElem& z, long long H);

}  // namespace fflog
