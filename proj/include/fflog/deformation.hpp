// Shadowed partitions, the deformation coefficients B_n(t) by two independent
// constructions, the twisted frame products R_m, the deformation series of the
// logarithm, its specialization at t = theta, and the inverse-Frobenius maps.
#pragma once

#include "fflog/drinfeld.hpp"

namespace fflog {

// r-tuple (S_1,..,S_r) of subsets of {0..n-1} whose staircase translates
// S_i + j (0 <= j < i) tile {0..n-1}
struct ShadowedPartition {
  std::vector<std::vector<int>> sets;  // sets[i] sorted ascending
  bool is_valid(int n) const;          // disjoint-cover invariant
};

// complete duplicate-free enumeration of P_r(n), sorted lexicographically by
// the concatenated membership vectors of (S_1,..,S_r)
std::vector<ShadowedPartition> enumerate_partitions(int r, int n);
long long partition_count(int r, int n);  // |P_r(n)| by the additive recurrence

// B_n(t) as the partition sum: for each (S_1..S_r), prod_i prod_{j in S_i}
// kappa_i^(q^j) / (t - theta^(q^(i+j)))
RationalTate b_series_direct(const DrinfeldModule& E, int n);
// same value from B_m = sum_j kappa_j^(q^(m-j)) B_(m-j) / (t - theta^(q^m))
RationalTate b_series_recursive(const DrinfeldModule& E, int n);

// R_0 = Id, R_m = (frame_inverse)^((m)) ... (frame_inverse)^((1))
RationalMat r_matrix(const DrinfeldModule& E, long long m);

enum class DeformationRoute { Direct, MatrixProduct };

// sum_{n<=N} B_n(t) xi^(q^n), expanded to degree D
TateElem deformation_series(const DrinfeldModule& E, const WElem& xi, long long N,
                            long long D,
                            DeformationRoute route = DeformationRoute::Direct);

// default truncation order: smallest n with |B_n(theta) xi^(q^n)| below
// q^-(prec+10), capped at 64
long long default_series_order(const DrinfeldModule& E, const WElem& xi,
                               long long prec_udigits);

// deformation series evaluated at t = theta: log_E(xi) for |xi| < R_E
WElem specialize_log(const DrinfeldModule& E, const WElem& xi, long long N,
                     long long prec_udigits);

// j-th inverse of the Frobenius: xi -> bounded evaluation of
// (xi^(q^j),0,..,0) R_j, which must equal Q_j xi^(q^j)
WElem frobenius_inverse_phi_j(const DrinfeldModule& E, const WElem& xi, long long j);

}  // namespace fflog
