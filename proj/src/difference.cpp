#include "fflog/difference.hpp"

#include <algorithm>

namespace fflog {

NewtonPolygonData newton_polygon(const std::vector<WElem>& coeffs) {
  NewtonPolygonData d;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_apparent_zero())
      d.points.push_back({(long long)i, coeffs[i].uval()});
  if (d.points.empty()) raise(err::DEGENERATE, "all coefficients vanish");
  // lower convex hull, monotone chain over points already sorted by exponent
  std::vector<NewtonPoint> hull;
  for (const auto& p : d.points) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // keep the chain turning upward: drop b when it lies on or above a-p
      if ((__int128)(b.uval - a.uval) * (p.i - a.i) >=
          (__int128)(p.uval - a.uval) * (b.i - a.i))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  for (std::size_t k = 0; k + 1 < hull.size(); ++k)
    d.edges.push_back({hull[k].i, hull[k + 1].i, hull[k + 1].uval - hull[k].uval});
  return d;
}

TateElem wp(const TateElem& Z) { return Z - Z.twist(1); }

TateVec wp_r(const TateVec& Z) {
  TateVec r;
  for (const auto& z : Z) r.push_back(wp(z));
  return r;
}

TateElem L0_series_single(const TateElem& Z, long long prec_udigits) {
  const WFieldPtr& W = Z.field();
  GaussValue g = Z.gauss(0);
  if (!g.all_zero && g.uval <= 0)
    raise(err::NORM_NOT_CONTRACTING, "Gauss norm is not strictly below one");
  if (g.all_zero) return Z;
  long long target = W->e * prec_udigits;
  TateElem acc = Z;
  long long term_uval = g.uval;
  long long i = 1;
  while (term_uval < target) {
    acc = acc + Z.twist_clipped(i, target);
    term_uval *= W->q();
    ++i;
    if (i > 200) raise(err::ITERATION_LIMIT, "geometric section failed to converge");
  }
  return acc.truncated_coeffs(target);
}

TateVec L0_series(const TateVec& Z, long long prec_udigits) {
  GaussValue g = vec_gauss(Z, 0);
  if (!g.all_zero && g.uval <= 0)
    raise(err::NORM_NOT_CONTRACTING, "Gauss norm is not strictly below one");
  TateVec r;
  for (const auto& z : Z) r.push_back(L0_series_single(z, prec_udigits));
  return r;
}

WElem solve_artin_schreier(const WElem& a, const WElem& c, const BranchPolicy& policy,
                           long long target_uval, std::vector<SolveStep>* steps) {
  const WFieldPtr& W = a.field() ? a.field() : c.field();
  const FieldConfig& F = W->F;
  const GFTable& L = F.Fqs();
  const long long q = W->q();
  if (a.is_apparent_zero()) raise(err::DEGENERATE, "a must be nonzero");

  WElem y = WElem::zero(W, target_uval);
  WElem r = c;
  long long va = a.uval();
  long long iterations = 0;
  const long long cap = 4 * std::max<long long>(16, target_uval - std::min(c.uval_or(0), 0LL)) + 64;
  while (!r.is_apparent_zero() && r.uval() < target_uval) {
    if (++iterations > cap)
      raise(err::ITERATION_LIMIT, "leading-term extraction exceeded the step cap");
    long long v0 = r.uval();
    // polygon of Y^q + aY - r: points (0, v0), (1, va), (q, 0); the correction
    // must cancel the constant term, so only the leftmost hull edge applies
    __int128 s1 = (__int128)(va - v0);          // slope to (1, va), times 1
    __int128 sq = (__int128)(0 - v0);           // slope to (q, 0), times q
    bool edge01 = s1 * q < sq;                  // strictly smaller slope
    bool collinear = s1 * q == sq;
    long long mu;
    gf_t lambda;
    gf_t res_r = r.digit(v0);
    if (edge01) {
      mu = v0 - va;
      gf_t res_a = a.digit(va);
      lambda = L.div(res_r, res_a);
      if (policy.mode == BranchMode::KInfty && !F.in_Fq(lambda))
        raise(err::RESIDUE_UNSOLVABLE,
              "leading coefficient leaves the embedded F_q on the k_infty branch");
      if (steps) steps->push_back({mu, true, true});
    } else if (!collinear) {
      // edge {0, q}: q-th root of the leading coefficient
      if (v0 % q != 0)
        raise(err::NO_INTEGRAL_SLOPE,
              "leading edge has non-integral slope at u-valuation " +
                  std::to_string(v0) + " (enlarge e)");
      mu = v0 / q;
      lambda = F.frob_q_pow(res_r, -1);
      if (policy.mode == BranchMode::KInfty && !F.in_Fq(lambda))
        raise(err::RESIDUE_UNSOLVABLE,
              "leading coefficient leaves the embedded F_q on the k_infty branch");
      if (steps) steps->push_back({mu, false, false});
    } else {
      // exponents 0, 1, q collinear: full residue equation
      //   lambda^q + res(a) lambda = res(r)
      mu = v0 - va;
      gf_t res_a = a.digit(va);
      std::optional<gf_t> best;
      for (int z = 0; z < L.size(); ++z) {
        gf_t lhs = L.add(F.frob_q((gf_t)z), L.mul(res_a, (gf_t)z));
        if (lhs != res_r) continue;
        if (policy.mode == BranchMode::KInfty && !F.in_Fq((gf_t)z)) continue;
        if (!best || L.lex_less((gf_t)z, *best)) best = (gf_t)z;
      }
      if (!best)
        raise(err::RESIDUE_UNSOLVABLE, "residue equation has no admissible root (enlarge s)");
      lambda = *best;
      if (steps) steps->push_back({mu, false, false});
    }
    WElem corr = WElem::monomial(W, lambda, mu);
    y = y + corr;
    r = r - (corr.frobenius_twist(1) + a * corr);
  }
  return y.with_prec(std::min(y.abs_prec(), target_uval));
}

TateVec wp_inverse(const TateVec& h, const BranchPolicy& policy, long long prec_udigits) {
  if (h.empty()) raise(err::DIMENSION_MISMATCH, "empty vector");
  const WFieldPtr& W = h[0].field();
  WElem minus_one = WElem::from_int(W, -1);
  long long target = W->e * prec_udigits;
  TateVec f;
  for (const auto& hi : h) {
    TateElem fi(W, hi.degree_bound(), hi.tail_flag());
    for (long long k = 0; k <= hi.degree_bound(); ++k) {
      const WElem& c = hi.coeff(k);
      if (c.is_apparent_zero()) {
        fi.coeff_mut(k) = WElem::zero(W, std::min(c.abs_prec(), target));
        continue;
      }
      long long tk = std::min(target, c.abs_prec());
      // f_k - f_k^q = h_k  <=>  Y^q + (-1) Y = -h_k
      fi.coeff_mut(k) = solve_artin_schreier(minus_one, -c, policy, tk);
    }
    f.push_back(std::move(fi));
  }
  return f;
}

TateElem omega_series(const WFieldPtr& W, long long D, long long prec_udigits,
                      const BranchPolicy& policy) {
  const long long q = W->q();
  if ((q - 1) != 1 && W->e % (q - 1) != 0)
    raise(err::FIELD_CONSTRAINT, "need (q-1) | e for the canonical (q-1)-st root");
  WElem neg_theta = -WElem::theta(W);
  WElem rho = neg_theta.root_q_minus_1(policy);  // rho^(q-1) = -theta
  WElem a0 = (neg_theta * rho).inv();            // (-theta)^(-q/(q-1)), exact monomial
  WElem theta_q = WElem::theta(W).pow(q);
  long long target = a0.uval() + W->e * prec_udigits;
  TateElem omega(W, D, true);
  omega.coeff_mut(0) = a0;
  WElem prev = a0;
  for (long long i = 1; i <= D; ++i) {
    // a_i + theta^q a_i^q = a_(i-1)^q: contraction from x = a_(i-1)^q
    WElem rhs = prev.frobenius_twist(1);
    WElem x = rhs;
    for (int it = 0; it < 200; ++it) {
      WElem xn = (rhs - theta_q * x.frobenius_twist_clipped(1, target + W->e * q)).truncated(target);
      if ((xn - x).is_apparent_zero()) {
        x = xn;
        break;
      }
      x = xn;
    }
    x = x.with_prec(target);
    omega.coeff_mut(i) = x;
    prev = x;
  }
  return omega;
}

TateMat psi_rank1(const DrinfeldModule& E, long long D, long long prec_udigits,
                  const BranchPolicy& policy) {
  if (E.rank() != 1) raise(err::DIMENSION_MISMATCH, "rank-one construction only");
  TateElem omega = omega_series(E.W, D, prec_udigits, policy);
  WElem c = E.kappa[0].root_q_minus_1(policy, prec_udigits);
  TateMat Psi(E.W, 1, 1, D);
  Psi.at_mut(0, 0) = omega.scaled(c);
  return Psi;
}

PsiResidual validate_psi(const DrinfeldModule& E, const TateMat& Psi) {
  if (Psi.rows() != E.rank() || Psi.cols() != E.rank())
    raise(err::DIMENSION_MISMATCH, "trivialization shape does not match the rank");
  const WFieldPtr& W = E.W;
  TateMat Phi = frame_matrix(E, Psi.degree_bound());
  // the difference equation Psi^(-1) = Phi Psi, twisted once so only positive
  // twists occur: residual V = Psi - Phi^(1) Psi^(1) equals R^(1) for the true
  // residual R, so ||R|| is the exact q-th root of ||V||
  TateMat V = Psi - Phi.twist(1) * Psi.twist(1);
  GaussValue g = V.gauss(0);
  PsiResidual out;
  if (g.all_zero) {
    out.zero = true;
    long long minprec = kExactPrec;
    for (long long i = 0; i < V.rows(); ++i)
      for (long long j = 0; j < V.cols(); ++j)
        for (long long k = 0; k <= V.at(i, j).degree_bound(); ++k)
          minprec = std::min(minprec, V.at(i, j).coeff(k).abs_prec());
    out.uval_num = minprec >= kExactPrec ? kExactPrec : minprec;
    out.uval_den = W->q();
    return out;
  }
  out.zero = false;
  out.uval_num = g.uval;
  out.uval_den = W->q();
  return out;
}

}  // namespace fflog
