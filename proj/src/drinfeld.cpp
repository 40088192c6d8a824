#include "fflog/drinfeld.hpp"

namespace fflog {

DrinfeldModule DrinfeldModule::make(WFieldPtr W, std::vector<WElem> kappa) {
  if (kappa.empty()) raise(err::DIMENSION_MISMATCH, "rank must be >= 1");
  if (kappa.back().is_apparent_zero())
    raise(err::DEGENERATE, "kappa_r must be nonzero");
  DrinfeldModule E;
  E.W = std::move(W);
  E.kappa = std::move(kappa);
  return E;
}

DrinfeldModule DrinfeldModule::carlitz(const WFieldPtr& W) {
  return make(W, {WElem::one(W)});
}

SkewPoly DrinfeldModule::phi_t() const {
  std::vector<WElem> c;
  c.push_back(WElem::theta(W));
  for (const auto& k : kappa) c.push_back(k);
  return SkewPoly(W, std::move(c));
}

SkewPoly phi_of(const DrinfeldModule& E, const CoeffPoly& a) {
  if (a.var() != "t") raise(err::PARSE, "phi takes polynomials in t");
  SkewPoly acc(E.W);
  SkewPoly pt = E.phi_t();
  // Horner from the top coefficient: acc = acc * phi_t + a_i
  for (long long i = a.degree(); i >= 0; --i) {
    acc = acc * pt;
    gf_t ci = a.coeff(i);
    if (ci) {
      WElem c = WElem::monomial(E.W, E.W->F.embed(ci), 0);
      acc = acc + SkewPoly(E.W, {c});
    }
  }
  return acc;
}

WElem apply_skew(const SkewPoly& f, const WElem& z) { return f.apply(z); }

FqLinearSeries exp_series(const DrinfeldModule& E, long long N) {
  const WFieldPtr& W = E.W;
  FqLinearSeries alpha(W, N);
  alpha.coeff_mut(0) = WElem::one(W);
  WElem th = WElem::theta(W);
  for (long long n = 1; n <= N; ++n) {
    WElem rhs = WElem::zero(W);
    long long jmax = std::min<long long>(E.rank(), n);
    for (long long j = 1; j <= jmax; ++j)
      rhs = rhs + E.kappa[j - 1] * alpha.coeff(n - j).frobenius_twist(j);
    WElem den = th.frobenius_twist(n) - th;
    alpha.coeff_mut(n) = rhs / den;
  }
  return alpha;
}

FqLinearSeries log_series(const DrinfeldModule& E, long long N) {
  const WFieldPtr& W = E.W;
  FqLinearSeries Q(W, N);
  Q.coeff_mut(0) = WElem::one(W);
  WElem th = WElem::theta(W);
  for (long long n = 1; n <= N; ++n) {
    WElem rhs = WElem::zero(W);
    long long jmax = std::min<long long>(E.rank(), n);
    for (long long j = 1; j <= jmax; ++j)
      rhs = rhs + Q.coeff(n - j) * E.kappa[j - 1].frobenius_twist(n - j);
    WElem den = th - th.frobenius_twist(n);
    Q.coeff_mut(n) = rhs / den;
  }
  return Q;
}

RadiusEstimate radius_estimate(const DrinfeldModule& E, long long N) {
  if (N < 2) raise(err::DIMENSION_MISMATCH, "radius estimate needs N >= 2");
  FqLinearSeries Q = log_series(E, N);
  const long long e = E.W->e;
  // candidate exponents log_q |Q_n|^(-1/(q^n-1)) = uval(Q_n) / (e (q^n - 1))
  auto better = [](long long an, long long ad, long long bn, long long bd) {
    return (__int128)an * bd < (__int128)bn * ad;  // a < b
  };
  long long best_num = 0, best_den = 1, half_num = 0, half_den = 1;
  bool have = false, have_half = false;
  long long qn = 1;
  for (long long n = 1; n <= N; ++n) {
    qn *= E.W->q();
    if (Q.coeff(n).is_apparent_zero()) continue;
    long long num = Q.coeff(n).uval();
    long long den = e * (qn - 1);
    if (!have || better(num, den, best_num, best_den)) {
      best_num = num;
      best_den = den;
      have = true;
    }
    if (n <= (N + 1) / 2 && (!have_half || better(num, den, half_num, half_den))) {
      half_num = num;
      half_den = den;
      have_half = true;
    }
  }
  if (!have) raise(err::DEGENERATE, "all observed log coefficients vanish");
  RadiusEstimate R;
  R.num = best_num;
  R.den = best_den;
  R.stabilized = have_half && (__int128)half_num * best_den == (__int128)best_num * half_den;
  return R;
}

bool inside_radius(const WElem& xi, const RadiusEstimate& R, long long safety_logq) {
  if (xi.is_apparent_zero()) return true;
  // |xi| = q^(-uval/e) < q^(num/den - safety)
  long long e = xi.field()->e;
  return (__int128)(-xi.uval()) * R.den < ((__int128)R.num - (__int128)safety_logq * R.den) * e;
}

TateMat frame_matrix(const DrinfeldModule& E, long long D) {
  const WFieldPtr& W = E.W;
  const long long r = E.rank();
  WElem kr_root;
  try {
    kr_root = E.kappa[r - 1].frobenius_twist(-r);
  } catch (const math_error&) {
    raise(err::NOT_A_POWER,
          "kappa_" + std::to_string(r) + " is not a q^" + std::to_string(r) +
              "-th power in W");
  }
  WElem kinv = kr_root.inv();
  TateMat M(W, r, r, D);
  for (long long i = 0; i + 1 < r; ++i)
    M.at_mut(i, i + 1) = TateElem::constant(WElem::one(W), D);
  // last row: (t - theta)/kappa_r^(-r), then -kappa_i^(-i)/kappa_r^(-r)
  TateElem t_minus_theta(W, D);
  t_minus_theta.coeff_mut(0) = -WElem::theta(W);
  if (D >= 1) t_minus_theta.coeff_mut(1) = WElem::one(W);
  M.at_mut(r - 1, 0) = t_minus_theta.scaled(kinv);
  for (long long j = 1; j < r; ++j) {
    WElem kj;
    try {
      kj = E.kappa[j - 1].frobenius_twist(-j);
    } catch (const math_error&) {
      raise(err::NOT_A_POWER,
            "kappa_" + std::to_string(j) + " is not a q^" + std::to_string(j) +
                "-th power in W");
    }
    M.at_mut(r - 1, j) = TateElem::constant(-(kj * kinv), D);
  }
  return M;
}

RationalMat frame_inverse(const DrinfeldModule& E) { return frame_inverse_twisted(E, 0); }

RationalMat frame_inverse_twisted(const DrinfeldModule& E, long long n) {
  const WFieldPtr& W = E.W;
  const long long r = E.rank();
  RationalMat M(r, std::vector<RationalTate>(r, RationalTate::zero(W)));
  // first row: kappa_j^(n-j) / (t - theta^(q^n)); subdiagonal: 1
  for (long long j = 1; j <= r; ++j) {
    WElem kj;
    try {
      kj = E.kappa[j - 1].frobenius_twist(n - j);
    } catch (const math_error& e) {
      raise(err::NOT_A_POWER,
            "kappa_" + std::to_string(j) + " is not a q^" + std::to_string(j - n) +
                "-th power in W");
    }
    M[0][j - 1] = RationalTate::simple(kj, n);
  }
  for (long long i = 1; i < r; ++i) M[i][i - 1] = RationalTate::one(W);
  return M;
}

WElem epsilon0(const SigmaPoly& m) { return m.coeff(0); }

WElem epsilon1(const SigmaPoly& m) {
  WElem acc = WElem::zero(m.field());
  for (long long i = 0; i <= m.degree(); ++i)
    acc = acc + m.coeff(i).frobenius_twist(i);
  return acc;
}

SigmaPoly t_action(const DrinfeldModule& E, const SigmaPoly& m) {
  std::vector<WElem> star;
  star.push_back(WElem::theta(E.W));
  for (long long i = 1; i <= E.rank(); ++i)
    star.push_back(E.kappa[i - 1].frobenius_twist(-i));
  return m * SigmaPoly(E.W, std::move(star));
}

WElem script_E0(const TateVec& a, long long target_uval) {
  if (a.empty()) raise(err::DIMENSION_MISMATCH, "empty row vector");
  return a[0].eval_theta(target_uval);
}

AndersonCheck anderson_exp_check(const DrinfeldModule& E, const WElem& xi,
                                 long long N, long long D, long long tail_udigits) {
  const WFieldPtr& W = E.W;
  const long long r = E.rank();
  // g_xi + h_xi as a row vector of degree-D truncations
  TateVec acc;
  for (long long j = 0; j < r; ++j) acc.push_back(TateElem(W, D));
  acc[0] = TateElem::constant(xi, D);
  RationalMat R = rmat_identity(W, r);
  const long long lag = r;  // decay is monotone with lag equal to the rank
  std::vector<long long> uvals;
  for (long long i = 1; i <= N; ++i) {
    R = rmat_mul(frame_inverse_twisted(E, i), R);
    WElem xiqi = xi.frobenius_twist(i);
    TateVec term;
    for (long long j = 0; j < r; ++j) term.push_back(R[0][j].expand(D).scaled(xiqi));
    GaussValue g = vec_gauss(term, -W->e);
    if (!g.all_zero) {
      if ((long long)uvals.size() >= lag && g.uval <= uvals[uvals.size() - lag])
        raise(err::NORM_NOT_CONTRACTING,
              "series terms are not decaying at order " + std::to_string(i) +
                  " (|xi| too large)");
      uvals.push_back(g.uval);
    }
    acc = vec_add(acc, term);
  }
  long long target = xi.is_apparent_zero() ? W->e
                                           : xi.uval() + W->e * tail_udigits;
  WElem value = script_E0(acc, target);
  FqLinearSeries expE = exp_series(E, std::max<long long>(N, 8));
  AndersonCheck out;
  out.residual = expE.evaluate(value, sat_add(target, 8 * W->e)) - xi;
  return out;
}

}  // namespace fflog
