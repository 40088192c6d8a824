#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fflog/extended.hpp"

using namespace fflog;

namespace {

WElem th(const WFieldPtr& W, long long k = 1) { return WElem::theta(W, k); }

struct CarlitzFixture {
  WFieldPtr W;
  DrinfeldModule C;
  TateMat Psi;
  LatticeBasis L;
  CarlitzFixture(int q, long long D, long long prec)
      : W(q == 2 ? WorkingField::make(2, 1, 2, 1, 2 * prec)
                 : WorkingField::make(3, 1, 2, 2, 2 * prec)),
        C(DrinfeldModule::carlitz(W)),
        Psi(psi_rank1(C, D, prec)),
        L(period_lattice(C, Psi, 3, std::min<long long>(prec / 2 + 20, 60))) {}
};

}  // namespace

TEST_CASE("period lattice: fundamental period and membership with witnesses") {
  CarlitzFixture F(2, 64, 130);
  REQUIRE(F.L.rank() == 1);
  WElem pi = F.L.gens[0];
  CHECK(pi.uval() == -2);  // |period| = q^(q/(q-1)) = q^2
  // exp annihilates it
  WElem img = exp_series(F.C, 12).evaluate(pi);
  CHECK((img.is_apparent_zero() ? img.abs_prec() : img.uval()) >= 45);
  // membership: (theta^2 + 1) * period is a lattice point with that witness
  WElem w = (th(F.W, 2) + WElem::one(F.W)) * pi;
  Membership m = lattice_membership(w, F.L, 40);
  REQUIRE(m.member());
  CHECK(m.witness.coeffs() == std::vector<gf_t>{1, 0, 1});
  // period / theta is not in the lattice
  Membership bad = lattice_membership(pi.div(th(F.W)), F.L, 40);
  CHECK(bad.status == MemberStatus::NonMember);
  // zero is a member with the zero witness
  Membership z = lattice_membership(WElem::zero(F.W, 200), F.L, 40);
  CHECK(z.member());
  CHECK(z.witness.is_zero());
  // theta * generator and the t-shifted evaluation differ by a lattice point
  TateMat Psinv = F.Psi.inverse();
  WElem shifted = Psinv.at(0, 0).shifted_t(1).eval_theta(-2 + 40);
  Membership rel = lattice_membership(th(F.W) * pi - shifted, F.L, 30);
  CHECK(rel.member());
}

TEST_CASE("extended log agrees with the series inside the radius (q=3)") {
  CarlitzFixture F(3, 40, 140);
  std::vector<WElem> xs = {th(F.W).inv(), WElem::one(F.W) + th(F.W).inv(), th(F.W)};
  for (const auto& xi : xs) {
    VerifyOutcome v =
        verify_inside_radius(F.C, F.Psi, F.L, xi, BranchPolicy::least(), 45);
    CHECK(v.pass);
  }
  // policy comparison where both branches apply: for q=2 the series data is
  // F_q-rational, so the k_infty-restricted branch is defined as well
  {
    CarlitzFixture G2(2, 64, 130);
    WElem xi = th(G2.W).inv();
    CosetValue a = ext_log(G2.C, G2.Psi, xi, BranchPolicy::least(), 50);
    CosetValue b = ext_log(G2.C, G2.Psi, xi, BranchPolicy::kinfty(), 50);
    Membership m = lattice_membership(a.rep - b.rep, G2.L, 40);
    CHECK(m.member());
  }
  // additivity of a fixed branch, mod the lattice
  WElem x1 = th(F.W).inv(), x2 = WElem::one(F.W);
  CosetValue s = ext_log(F.C, F.Psi, x1 + x2, BranchPolicy::least(), 60);
  CosetValue s1 = ext_log(F.C, F.Psi, x1, BranchPolicy::least(), 60);
  CosetValue s2 = ext_log(F.C, F.Psi, x2, BranchPolicy::least(), 60);
  Membership add = lattice_membership(s.rep - s1.rep - s2.rep, F.L, 40);
  CHECK(add.member());
}

TEST_CASE("functional equation, inside and beyond the radius (q=2)") {
  // e = 2 admits arguments of norm q^(5/2), whose exponentials have norm q^3
  // strictly beyond the convergence disc |.| < q^2
  auto W = WorkingField::make(2, 1, 2, 2, 340);
  DrinfeldModule C = DrinfeldModule::carlitz(W);
  TateMat Psi = psi_rank1(C, 72, 180);
  LatticeBasis L = period_lattice(C, Psi, 3, 55);
  VerifyOutcome in =
      verify_functional_equation(C, Psi, L, th(W).inv(), BranchPolicy::least(), 40);
  CHECK(in.pass);
  // beyond: an exponential value of a large argument is always attainable
  WElem eta = WElem::monomial(W, 1, -5);
  WElem xi = exp_series(C, 12).evaluate(eta, eta.uval() + W->e * 140);
  CHECK(xi.uval() == -6);  // |xi| = q^3 > q^2
  VerifyOutcome out =
      verify_functional_equation(C, Psi, L, xi, BranchPolicy::least(), 35);
  CHECK(out.pass);
  // zero input
  VerifyOutcome z =
      verify_functional_equation(C, Psi, L, WElem::zero(W, 300), BranchPolicy::least(), 40);
  CHECK(z.pass);
}

TEST_CASE("inverse law against the exponential (q=3)") {
  CarlitzFixture F(3, 40, 150);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<gf_t> d(5);
    for (auto& x : d) x = (gf_t)(rng() % F.W->F.Fqs().size());
    if (!d[0]) d[0] = 1;
    WElem xi = WElem::from_digits(F.W, -2 + (long long)(rng() % 6), std::move(d));
    VerifyOutcome v =
        verify_inverse_of_exp(F.C, F.Psi, F.L, xi, BranchPolicy::least(), 40);
    CHECK(v.pass);
  }
  // a period maps to zero and back to the zero coset
  WElem pi = F.L.gens[0];
  WElem img = exp_series(F.C, 12).evaluate(pi);
  CosetValue back = ext_log(F.C, F.Psi, img, BranchPolicy::least(), 50);
  Membership m = lattice_membership(back.rep, F.L, 35);
  CHECK(m.member());
}

TEST_CASE("local analytic lifts: shifted arguments agree through the series") {
  // on a disk around an attainable point, the branch difference equals the
  // series logarithm of the displacement, mod the lattice
  auto W = WorkingField::make(2, 1, 2, 2, 340);
  DrinfeldModule C = DrinfeldModule::carlitz(W);
  TateMat Psi = psi_rank1(C, 72, 180);
  LatticeBasis L = period_lattice(C, Psi, 3, 55);
  WElem eta = WElem::monomial(W, 1, -5);
  WElem xi0 = exp_series(C, 12).evaluate(eta, eta.uval() + W->e * 140);
  REQUIRE(xi0.uval() == -6);  // a point beyond the convergence disc
  for (const auto& delta : {th(W).inv(), WElem::one(W) + th(W, 2).inv()}) {
    CosetValue a = ext_log(C, Psi, xi0 + delta, BranchPolicy::least(), 45);
    CosetValue b = ext_log(C, Psi, xi0, BranchPolicy::least(), 45);
    long long N = default_series_order(C, delta, 50);
    WElem small = specialize_log(C, delta, N, 50);
    Membership m = lattice_membership(a.rep - b.rep - small, L, 35);
    CHECK(m.member());
  }
}

TEST_CASE("the pinned large inputs are not attainable in this working field") {
  // theta^3 requires continuation data outside every F_{q^s}((u)): the solver
  // reports the obstruction instead of fabricating digits
  for (int q : {2, 3}) {
    CarlitzFixture F(q, q == 2 ? 64 : 40, 120);
    CHECK_THROWS_AS(ext_log(F.C, F.Psi, th(F.W, 3), BranchPolicy::least(), 50),
                    math_error);
  }
}

TEST_CASE("k_infty branch equals the logarithm below the radius") {
  // the geometric tails decay like (q-1) digits per degree, so q = 2 needs
  // the degree bound well above the certification level
  auto W = WorkingField::make(2, 1, 1, 1, 260);
  DrinfeldModule C = DrinfeldModule::carlitz(W);
  std::vector<WElem> alphas = {WElem::zero(W, 200), WElem::one(W), th(W),
                               th(W).inv() + th(W)};
  FqLinearSeries Q = log_series(C, 24);
  for (const auto& a : alphas) {
    std::vector<SolveStep> steps;
    WElem got = carlitz_kinfty_branch(W, a, 64, 55, &steps);
    for (const auto& s : steps) CHECK((s.length_one && s.edge_01));
    if (a.is_apparent_zero()) {
      CHECK(got.is_apparent_zero());
      continue;
    }
    WElem want = Q.evaluate(a);
    WElem diff = got - want;
    CHECK(diff.is_apparent_zero());
    CHECK(diff.abs_prec() >= a.uval() + 40);
  }
  // non-rational input is rejected
  auto W2 = WorkingField::make(2, 1, 2, 2, 80);
  CHECK_THROWS_AS(
      carlitz_kinfty_branch(W2, WElem::monomial(W2, 1, 1), 10, 40, nullptr),
      math_error);
}

TEST_CASE("lattice-product exponential matches the coefficient series") {
  CarlitzFixture F(2, 64, 120);
  FqLinearSeries ex = exp_series(F.C, 8);
  // z = 0 and z = lambda_1 vanish
  CHECK(exp_from_lattice_product(F.L, WElem::zero(F.W, 100), 4).is_apparent_zero());
  WElem at_gen = exp_from_lattice_product(F.L, F.L.gens[0], 4);
  CHECK(at_gen.is_apparent_zero());
  for (const auto& z : {WElem::one(F.W), th(F.W).inv()}) {
    WElem prod = exp_from_lattice_product(F.L, z, 6);
    WElem diff = prod - ex.evaluate(z);
    CHECK((diff.is_apparent_zero() ? diff.abs_prec() : diff.uval()) >= 20);
  }
}
