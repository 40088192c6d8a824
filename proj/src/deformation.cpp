#include "fflog/deformation.hpp"

#include <algorithm>

namespace fflog {

bool ShadowedPartition::is_valid(int n) const {
  std::vector<int> covered(n, 0);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (int j = 0; j <= (int)i; ++j)  // translates S_(i+1) + j, 0 <= j <= i
      for (int s : sets[i]) {
        int x = s + j;
        if (x < 0 || x >= n) return false;
        covered[x]++;
      }
  for (int x = 0; x < n; ++x)
    if (covered[x] != 1) return false;
  return true;
}

namespace {

// every tiling of {0..n-1} decomposes by the block covering 0: the unique i
// with 0 in S_i contributes {0..i-1}, and the rest is a shifted tiling of
// {i..n-1}
void enumerate_rec(int r, int n, std::vector<ShadowedPartition>& out) {
  if (n == 0) {
    ShadowedPartition empty;
    empty.sets.assign(r, {});
    out.push_back(std::move(empty));
    return;
  }
  for (int i = 1; i <= std::min(r, n); ++i) {
    std::vector<ShadowedPartition> tails;
    enumerate_rec(r, n - i, tails);
    for (auto& q : tails) {
      ShadowedPartition p;
      p.sets.assign(r, {});
      for (int ell = 0; ell < r; ++ell)
        for (int s : q.sets[ell]) p.sets[ell].push_back(s + i);
      p.sets[i - 1].insert(p.sets[i - 1].begin(), 0);
      out.push_back(std::move(p));
    }
  }
}

std::vector<std::uint8_t> membership_key(const ShadowedPartition& p, int n) {
  std::vector<std::uint8_t> key;
  for (const auto& S : p.sets) {
    std::vector<std::uint8_t> bits(n, 0);
    for (int s : S) bits[s] = 1;
    key.insert(key.end(), bits.begin(), bits.end());
  }
  return key;
}

}  // namespace

std::vector<ShadowedPartition> enumerate_partitions(int r, int n) {
  if (r < 1 || n < 0) raise(err::DIMENSION_MISMATCH, "need r >= 1, n >= 0");
  std::vector<ShadowedPartition> out;
  enumerate_rec(r, n, out);
  std::sort(out.begin(), out.end(), [&](const ShadowedPartition& a, const ShadowedPartition& b) {
    return membership_key(a, n) < membership_key(b, n);
  });
  return out;
}

long long partition_count(int r, int n) {
  std::vector<long long> c(std::max(n + 1, 1), 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= std::min(r, k); ++i) c[k] += c[k - i];
  return c[n];
}

RationalTate b_series_direct(const DrinfeldModule& E, int n) {
  const WFieldPtr& W = E.W;
  if (n == 0) return RationalTate::one(W);
  RationalTate acc = RationalTate::zero(W);
  for (const auto& p : enumerate_partitions((int)E.rank(), n)) {
    RationalTate term = RationalTate::one(W);
    for (std::size_t i = 0; i < p.sets.size(); ++i)
      for (int j : p.sets[i]) {
        WElem kq = E.kappa[i].frobenius_twist(j);
        term = term * RationalTate::simple(kq, (long long)(i + 1) + j);
      }
    acc = acc + term;
  }
  return acc;
}

RationalTate b_series_recursive(const DrinfeldModule& E, int n) {
  const WFieldPtr& W = E.W;
  std::vector<RationalTate> B(n + 1, RationalTate::zero(W));
  B[0] = RationalTate::one(W);
  for (int m = 1; m <= n; ++m) {
    RationalTate acc = RationalTate::zero(W);
    for (int j = 1; j <= std::min<int>((int)E.rank(), m); ++j) {
      WElem kq = E.kappa[j - 1].frobenius_twist(m - j);
      acc = acc + RationalTate::simple(kq, m) * B[m - j];
    }
    B[m] = acc;
  }
  return B[n];
}

RationalMat r_matrix(const DrinfeldModule& E, long long m) {
  RationalMat R = rmat_identity(E.W, E.rank());
  for (long long i = 1; i <= m; ++i) R = rmat_mul(frame_inverse_twisted(E, i), R);
  return R;
}

TateElem deformation_series(const DrinfeldModule& E, const WElem& xi, long long N,
                            long long D, DeformationRoute route) {
  const WFieldPtr& W = E.W;
  TateElem acc = TateElem::constant(xi, D).with_tail(true);
  // ultrametric decay need not be monotone step by step; inside the radius it
  // is monotone with lag equal to the recursion depth r
  const long long lag = E.rank();
  std::vector<long long> uvals;
  RationalMat R = rmat_identity(W, E.rank());
  for (long long n = 1; n <= N; ++n) {
    TateElem term(W, D);
    if (route == DeformationRoute::Direct) {
      term = b_series_direct(E, (int)n).expand(D).scaled(xi.frobenius_twist(n));
    } else {
      R = rmat_mul(frame_inverse_twisted(E, n), R);
      term = R[0][0].expand(D).scaled(xi.frobenius_twist(n));
    }
    GaussValue g = term.gauss(-W->e);
    if (!g.all_zero) {
      if ((long long)uvals.size() >= lag && g.uval <= uvals[uvals.size() - lag])
        raise(err::NORM_NOT_CONTRACTING,
              "deformation terms are not decaying at order " + std::to_string(n) +
                  " (|xi| too large)");
      uvals.push_back(g.uval);
    }
    acc = acc + term;
  }
  return acc;
}

long long default_series_order(const DrinfeldModule& E, const WElem& xi,
                               long long prec_udigits) {
  if (xi.is_apparent_zero()) return 0;
  const long long e = E.W->e;
  long long target = e * prec_udigits + 10 * e;
  for (long long n = 1; n <= 64; ++n) {
    WElem bn = b_series_recursive(E, (int)n).eval_theta();
    WElem term = bn * xi.frobenius_twist(n);
    if (term.is_apparent_zero() || term.uval() > target) return n;
  }
  return 64;
}

WElem specialize_log(const DrinfeldModule& E, const WElem& xi, long long N,
                     long long prec_udigits) {
  if (xi.is_apparent_zero()) return WElem::zero(E.W, xi.abs_prec());
  const long long e = E.W->e;
  long long target = xi.uval() + e * prec_udigits;
  // evaluate the exact rational coefficients at t = theta, term by term
  WElem acc = xi;
  const long long lag = E.rank();
  std::vector<long long> uvals;
  for (long long n = 1; n <= N; ++n) {
    WElem term = b_series_recursive(E, (int)n).eval_theta() * xi.frobenius_twist(n);
    if (!term.is_apparent_zero()) {
      if ((long long)uvals.size() >= lag && term.uval() <= uvals[uvals.size() - lag])
        raise(err::NORM_NOT_CONTRACTING,
              "specialized terms are not decaying at order " + std::to_string(n) +
                  " (|xi| too large)");
      uvals.push_back(term.uval());
    }
    acc = acc + term;
  }
  return acc.truncated(target);
}

WElem frobenius_inverse_phi_j(const DrinfeldModule& E, const WElem& xi, long long j) {
  if (j == 0) return xi;
  RationalMat R = r_matrix(E, j);
  // first entry of (xi^(q^j), 0, ..., 0) R_j evaluated at t = theta; the
  // (theta - theta^(q^k))^-1 constants play the role of the localized
  // inverses of (t - theta^(q^k))
  return R[0][0].eval_theta() * xi.frobenius_twist(j);
}

}  // namespace fflog
