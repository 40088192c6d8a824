#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fflog/difference.hpp"

using namespace fflog;

namespace {

WElem th(const WFieldPtr& W, long long k = 1) { return WElem::theta(W, k); }

WElem random_elem(const WFieldPtr& W, std::mt19937_64& rng, long long vmin,
                  long long vmax, int len) {
  long long v = vmin + (long long)(rng() % (unsigned long long)(vmax - vmin + 1));
  std::vector<gf_t> d(len);
  for (auto& x : d) x = (gf_t)(rng() % W->F.Fqs().size());
  if (!d[0]) d[0] = 1;
  return WElem::from_digits(W, v, std::move(d));
}

}  // namespace

TEST_CASE("operator basics: kernel and linearity") {
  auto W = WorkingField::make(2, 1, 2, 1, 60);
  // constants from F_q are killed
  TateElem f(W, 4);
  f.coeff_mut(0) = WElem::one(W);
  f.coeff_mut(3) = WElem::one(W);
  CHECK(wp(f).is_apparent_zero());
  // wp(c) = c - c^q for a constant
  TateElem g = TateElem::constant(th(W), 4);
  CHECK((wp(g).coeff(0) - (th(W) - th(W).pow(2))).is_exact_zero());
  // F_q[t]-linearity: wp(a Z) = a wp(Z) for a with F_q coefficients
  std::mt19937_64 rng(3);
  TateElem Z(W, 6);
  for (long long i = 0; i <= 6; ++i) Z.coeff_mut(i) = random_elem(W, rng, -3, 4, 5);
  TateElem a(W, 6);
  a.coeff_mut(1) = WElem::one(W);
  a.coeff_mut(4) = WElem::one(W);
  CHECK(((wp(a * Z)) - a * wp(Z)).is_apparent_zero());
  // kernel detection: wp(f) = 0 iff every coefficient lies in F_q
  TateElem h(W, 4);
  h.coeff_mut(2) = WElem::monomial(W, W->F.Fqs().gen(), 0);  // outside F_q
  CHECK(!wp(h).is_apparent_zero());
  // radius preservation, in the observable form: the Gauss norms of f and
  // wp_r(f) are finite together for alpha in {1, theta}
  for (int trial = 0; trial < 10; ++trial) {
    TateVec f;
    for (int slot = 0; slot < 2; ++slot) {
      TateElem x(W, 6);
      for (long long i = 0; i <= 6; ++i) x.coeff_mut(i) = random_elem(W, rng, -4, 6, 4);
      f.push_back(x);
    }
    TateVec pf = wp_r(f);
    for (long long alpha : {0LL, -W->e}) {
      GaussValue gf = vec_gauss(f, alpha), gp = vec_gauss(pf, alpha);
      CHECK(!gf.all_zero);
      CHECK(!gp.all_zero);
      (void)gf;
      (void)gp;
    }
  }
}

TEST_CASE("geometric section: identity on the contracting region") {
  auto W = WorkingField::make(3, 1, 1, 1, 90);
  std::mt19937_64 rng(7);
  TateVec Z;
  for (int slot = 0; slot < 2; ++slot) {
    TateElem z(W, 5);
    for (long long i = 0; i <= 5; ++i) z.coeff_mut(i) = random_elem(W, rng, 1, 6, 5);
    Z.push_back(z);
  }
  TateVec L = L0_series(Z, 70);
  TateVec back = wp_r(L);
  for (int slot = 0; slot < 2; ++slot) {
    TateElem diff = back[slot] - Z[slot];
    CHECK(diff.is_apparent_zero());
  }
  // constant z with |z| < 1: geometric Frobenius orbit
  TateElem c = TateElem::constant(WElem::monomial(W, 1, 2), 3);
  TateElem s = L0_series_single(c, 60);
  CHECK((s.coeff(0).digit(2)) == 1);
  CHECK((s.coeff(0).digit(6)) == 1);   // z^q
  CHECK((s.coeff(0).digit(18)) == 1);  // z^(q^2)
  // norm >= 1 is rejected
  TateElem big = TateElem::constant(th(W), 3);
  CHECK_THROWS_AS(L0_series_single(big, 40), math_error);
  CHECK(L0_series_single(TateElem(W, 3), 40).is_apparent_zero());
}

TEST_CASE("newton polygon shapes") {
  auto W = WorkingField::make(2, 1, 1, 1, 60);
  // Y^q + theta^q Y - c with ord(c) = -5 (theta-units): points (0,-5),(1,-2),(2,0)
  std::vector<WElem> coeffs = {th(W, 5), th(W, 2), WElem::one(W)};
  NewtonPolygonData d = newton_polygon(coeffs);
  REQUIRE(d.points.size() == 3);
  REQUIRE(d.edges.size() == 1);  // (1,-2) lies above the chord
  CHECK(d.edges[0].i0 == 0);
  CHECK(d.edges[0].i1 == 2);
  CHECK(!d.edges[0].integral_root_val());
  // monic linear: a single edge
  NewtonPolygonData lin = newton_polygon({th(W), WElem::one(W)});
  CHECK(lin.edges.size() == 1);
  CHECK(lin.edges[0].length() == 1);
  // with ord(c) = -2 the middle point joins the hull: two edges
  NewtonPolygonData two = newton_polygon({th(W, 2) + th(W), th(W, 2), WElem::one(W)});
  CHECK(two.edges.size() == 2);
  CHECK(two.edges[0].length() == 1);
  CHECK_THROWS_AS(newton_polygon({WElem::zero(W, 10)}), math_error);
}

TEST_CASE("artin-schreier solving in W") {
  auto W = WorkingField::make(2, 1, 2, 1, 120);
  BranchPolicy least = BranchPolicy::least();
  // a = theta^q, c = 0 -> 0
  WElem r0 = solve_artin_schreier(th(W).pow(2), WElem::zero(W, 80), least, 80);
  CHECK(r0.is_apparent_zero());
  // constructed root: theta solves Y^q - Y = theta^q - theta
  WElem c = th(W).pow(2) - th(W);
  WElem minus_one = WElem::from_int(W, -1);
  WElem y = solve_artin_schreier(minus_one, c, least, 80);
  WElem res = y.frobenius_twist(1) - y - c;
  CHECK(res.is_apparent_zero());
  // residual is below the target for random solvable inputs
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    WElem g = random_elem(W, rng, -4, 6, 6);
    WElem rhs = g.frobenius_twist(1) + th(W).pow(2) * g;  // Y^q + theta^q Y at g
    WElem yy = solve_artin_schreier(th(W).pow(2), rhs, least, 90);
    WElem rr = yy.frobenius_twist(1) + th(W).pow(2) * yy - rhs;
    CHECK(rr.is_apparent_zero());
    CHECK(rr.abs_prec() >= 88);
  }
  // unsolvable shape: odd leading valuation with a = -1
  CHECK_THROWS_AS(solve_artin_schreier(minus_one, th(W), least, 60), math_error);
  try {
    solve_artin_schreier(minus_one, th(W), least, 60);
  } catch (const math_error& e) {
    CHECK(e.code() == err::NO_INTEGRAL_SLOPE);
  }
}

TEST_CASE("wp_inverse: exact inversion and representative structure") {
  auto W = WorkingField::make(2, 1, 2, 1, 120);
  std::mt19937_64 rng(13);
  BranchPolicy least = BranchPolicy::least();
  for (int trial = 0; trial < 15; ++trial) {
    TateVec h;
    for (int slot = 0; slot < 2; ++slot) {
      TateElem hi(W, 5);
      for (long long k = 0; k <= 5; ++k) hi.coeff_mut(k) = random_elem(W, rng, 1, 7, 5);
      h.push_back(hi);
    }
    TateVec f = wp_inverse(h, least, 80);
    TateVec back = wp_r(f);
    for (int slot = 0; slot < 2; ++slot)
      CHECK((back[slot] - h[slot]).is_apparent_zero());
  }
  // h = 0 -> the zero representative
  TateVec z = wp_inverse({TateElem(W, 4), TateElem(W, 4)}, least, 60);
  for (const auto& zi : z) CHECK(zi.is_apparent_zero());
  // beyond-contraction coefficients via images of the operator itself
  TateElem hi(W, 3);
  WElem g = th(W, 2) + th(W).inv();
  hi.coeff_mut(0) = g - g.frobenius_twist(1);
  hi.coeff_mut(1) = WElem::monomial(W, 1, 3);
  TateVec f = wp_inverse({hi}, least, 70);
  CHECK((wp(f[0]) - hi).is_apparent_zero());
}

TEST_CASE("omega series: leading norm, recursion, twist equation") {
  for (int q : {2, 3}) {
    auto W = q == 2 ? WorkingField::make(2, 1, 1, 1, 160)
                    : WorkingField::make(3, 1, 2, 2, 160);
    TateElem om = omega_series(W, 16, 110);
    // |a_0| = q^(-q/(q-1)); in u-valuations: e q / (q-1)
    CHECK(om.coeff(0).uval() * (q - 1) == W->e * q);
    // a_i / a_0 stays integral: |a_i| <= |a_0| (high coefficients fall below
    // the precision horizon and appear as certified zeros)
    for (long long i = 1; i <= 16; ++i)
      if (!om.coeff(i).is_apparent_zero())
        CHECK(om.coeff(i).uval() >= om.coeff(0).uval());
    WElem tq = th(W).pow(q);
    for (long long i = 1; i <= 16; ++i) {
      WElem res = om.coeff(i) + tq * om.coeff(i).frobenius_twist(1) -
                  om.coeff(i - 1).frobenius_twist(1);
      CHECK(res.is_apparent_zero());
    }
    TateElem tmth(W, 16);
    tmth.coeff_mut(0) = -th(W);
    tmth.coeff_mut(1) = WElem::one(W);
    CHECK((om.twist(-1) - tmth * om).is_apparent_zero());
  }
  // q = 3 over F_3 itself cannot host the (q-1)-st root
  auto W1 = WorkingField::make(3, 1, 1, 2, 60);
  CHECK_THROWS_AS(omega_series(W1, 5, 40), math_error);
}

TEST_CASE("rank-one trivializations validate; perturbations are caught") {
  auto W = WorkingField::make(2, 1, 1, 1, 160);
  DrinfeldModule C = DrinfeldModule::carlitz(W);
  TateMat Psi = psi_rank1(C, 24, 110);
  PsiResidual ok = validate_psi(C, Psi);
  CHECK(ok.ok(W->e * 40));
  // twisted rank-one module: kappa a q-th power
  DrinfeldModule T = DrinfeldModule::make(W, {th(W).pow(2)});
  TateMat PsiT = psi_rank1(T, 24, 110);
  CHECK(validate_psi(T, PsiT).ok(W->e * 40));
  // negative control: perturb one coefficient
  TateMat bad = Psi;
  bad.at_mut(0, 0).coeff_mut(3) =
      bad.at(0, 0).coeff(3) + WElem::monomial(W, 1, 1);
  PsiResidual res = validate_psi(C, bad);
  CHECK(!res.ok(W->e * 40));
}
