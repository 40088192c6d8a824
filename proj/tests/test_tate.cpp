#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fflog/rational.hpp"
#include "fflog/tate.hpp"

using namespace fflog;

namespace {

TateElem random_tate(const WFieldPtr& W, std::mt19937_64& rng, long long D) {
  TateElem r(W, D);
  for (long long i = 0; i <= D; ++i) {
    std::vector<gf_t> d(4);
    for (auto& x : d) x = (gf_t)(rng() % W->F.Fqs().size());
    if (!d[0]) d[0] = 1;
    r.coeff_mut(i) = WElem::from_digits(W, (long long)(rng() % 7) - 3, std::move(d));
  }
  return r;
}

}  // namespace

TEST_CASE("t-shift, identity matrix, and basic ring ops") {
  auto W = WorkingField::make(2, 1, 1, 1);
  TateElem a(W, 5);
  a.coeff_mut(0) = WElem::theta(W);
  a.coeff_mut(2) = WElem::one(W);
  TateElem shifted = a.shifted_t(1);
  CHECK((shifted.coeff(1) - WElem::theta(W)).is_exact_zero());
  CHECK((shifted.coeff(3) - WElem::one(W)).is_exact_zero());
  TateMat I = TateMat::identity(W, 3, 5);
  TateMat M(W, 3, 3, 5);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M.at_mut(i, j) = random_tate(W, rng, 5);
  TateMat P = I * M;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK((P.at(i, j) - M.at(i, j)).is_apparent_zero());
}

TEST_CASE("geometric expansion of 1/(t - theta^q) multiplies back to one") {
  auto W = WorkingField::make(3, 1, 1, 1, 80);
  RationalTate r = RationalTate::simple(WElem::one(W), 1);
  TateElem g = r.expand(20);
  TateElem prod = g * TPoly::t_minus_theta_qk(W, 1).as_tate(20);
  CHECK((prod.coeff(0) - WElem::one(W)).is_apparent_zero());
  for (long long i = 1; i <= 19; ++i) CHECK(prod.coeff(i).is_apparent_zero());
  CHECK(prod.tail_flag());
  // the pole at theta itself still lies outside the closed unit disc, so the
  // unit-disc expansion of 1/(t - theta) is geometric as well
  TateElem g0(W, 20, true);
  for (long long i = 0; i <= 20; ++i)
    g0.coeff_mut(i) = -WElem::monomial(W, 1, W->e * (i + 1));
  TateElem prod0 = g0 * TPoly::t_minus_theta_qk(W, 0).as_tate(20);
  CHECK((prod0.coeff(0) - WElem::one(W)).is_apparent_zero());
  for (long long i = 1; i <= 19; ++i) CHECK(prod0.coeff(i).is_apparent_zero());
}

TEST_CASE("twisting fixes t and commutes with matrix products") {
  auto W = WorkingField::make(2, 1, 2, 2, 60);
  // (t - theta)^(1) = t - theta^q
  TateElem tm(W, 4);
  tm.coeff_mut(0) = -WElem::theta(W);
  tm.coeff_mut(1) = WElem::one(W);
  TateElem tw = tm.twist(1);
  CHECK((tw.coeff(0) + WElem::theta(W).pow(2)).is_exact_zero());
  CHECK((tw.coeff(1) - WElem::one(W)).is_exact_zero());
  CHECK((tm.twist(1).twist(-1) - tm).is_apparent_zero());

  std::mt19937_64 rng(9);
  TateMat A(W, 2, 2, 6), B(W, 2, 2, 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      A.at_mut(i, j) = random_tate(W, rng, 6);
      B.at_mut(i, j) = random_tate(W, rng, 6);
    }
  TateMat lhs = (A * B).twist(1);
  TateMat rhs = A.twist(1) * B.twist(1);
  CHECK((lhs - rhs).gauss(0).all_zero);
}

TEST_CASE("Gauss norms: ||t-theta||_1 = q and submultiplicativity") {
  auto W = WorkingField::make(2, 1, 1, 1);
  TateElem tm(W, 4);
  tm.coeff_mut(0) = -WElem::theta(W);
  tm.coeff_mut(1) = WElem::one(W);
  GaussValue g = tm.gauss(0);
  CHECK(!g.all_zero);
  CHECK(g.uval == -1);  // norm q^(1/e) = q
  // ||c||_theta = |c| for constants
  GaussValue gc = TateElem::constant(WElem::theta(W, 2), 4).gauss(-W->e);
  CHECK(gc.uval == -2);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    TateElem a = random_tate(W, rng, 6), b = random_tate(W, rng, 6);
    GaussValue ga = a.gauss(0), gb = b.gauss(0), gab = (a * b).gauss(0);
    if (!gab.all_zero) CHECK(gab.uval >= ga.uval + gb.uval);
    GaussValue gt = a.twist(1).gauss(0);
    CHECK(gt.uval == 2 * ga.uval);  // ||a^(1)|| = ||a||^q
  }
}

TEST_CASE("eval at theta: ring map on exact polynomials, tail control on truncations") {
  auto W = WorkingField::make(2, 1, 1, 1, 100);
  std::mt19937_64 rng(23);
  TateElem a = random_tate(W, rng, 5), b = random_tate(W, rng, 5);
  // exact polynomials: evaluation multiplies once the product degree fits
  WElem ea = a.eval_theta(0), eb = b.eval_theta(0);
  TateElem a10(W, 10), b10(W, 10);
  for (long long i = 0; i <= 5; ++i) {
    a10.coeff_mut(i) = a.coeff(i);
    b10.coeff_mut(i) = b.coeff(i);
  }
  CHECK(((a10 * b10).eval_theta(0) - ea * eb).is_apparent_zero());

  // a truncated geometric series evaluates with a declared tail bound
  RationalTate r = RationalTate::simple(WElem::one(W), 1);
  WElem lo = r.expand(30).eval_theta(-30);
  WElem hi = r.expand(60).eval_theta(-30);
  WElem exact = r.eval_theta();
  for (long long k = lo.support_begin(); k < lo.abs_prec(); ++k) {
    CHECK(lo.digit(k) == hi.digit(k));
    CHECK(lo.digit(k) == exact.digit(k));
  }
  // tail that has not decayed below the target must be refused
  CHECK_THROWS_AS(r.expand(8).eval_theta(100), math_error);
}

TEST_CASE("matrix inverse multiplies back to the identity") {
  auto W = WorkingField::make(3, 1, 1, 1, 60);
  std::mt19937_64 rng(31);
  TateMat A(W, 2, 2, 8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) A.at_mut(i, j) = random_tate(W, rng, 8);
  // make the constant block comfortably invertible
  A.at_mut(0, 0) = A.at(0, 0) + TateElem::constant(WElem::one(W), 8);
  TateMat Ainv = A.inverse();
  TateMat P = A * Ainv;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      TateElem want = i == j ? TateElem::constant(WElem::one(W), 8) : TateElem(W, 8);
      CHECK((P.at(i, j) - want).is_apparent_zero());
    }
  TateMat S(W, 2, 2, 4);  // singular constant block
  S.at_mut(0, 0) = TateElem::t_power(W, 1, 4);
  CHECK_THROWS_AS(S.inverse(), math_error);
}

TEST_CASE("rational forms: cross-multiplied equality and twisting") {
  auto W = WorkingField::make(2, 1, 1, 1);
  // 1/(t-a) + 1/(t-b) == (2t-a-b)/((t-a)(t-b)) with a = theta^q, b = theta^(q^2)
  RationalTate x = RationalTate::simple(WElem::one(W), 1) +
                   RationalTate::simple(WElem::one(W), 2);
  std::map<long long, int> den{{1, 1}, {2, 1}};
  TPoly num(W, {-(WElem::theta(W).pow(2) + WElem::theta(W).pow(4)),
                WElem::from_int(W, 2)});
  RationalTate y(num, den);
  CHECK(x.equals(y));
  RationalTate xt = x.twist(2);
  RationalTate want = RationalTate::simple(WElem::one(W), 3) +
                      RationalTate::simple(WElem::one(W), 4);
  CHECK(xt.equals(want));
  CHECK_THROWS_AS(RationalTate::simple(WElem::one(W), 0).eval_theta(), math_error);
}
