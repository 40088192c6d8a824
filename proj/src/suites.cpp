#include "fflog/suites.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace fflog {

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["all_pass"] = all_pass();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = arr;
  return j;
}

namespace {

// ---- small assertion collector -------------------------------------------

struct Collector {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
  void note(const std::string& what) {
    detail << (detail.tellp() > 0 ? "; " : "") << what;
  }
};

CheckLine guarded(const std::string& name, const std::function<void(Collector&)>& body) {
  Collector c;
  try {
    body(c);
  } catch (const math_error& e) {
    c.ok = false;
    c.detail << (c.detail.tellp() > 0 ? "; " : "") << "error " << e.what();
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << (c.detail.tellp() > 0 ? "; " : "") << "exception " << e.what();
  }
  return {name, c.ok, c.detail.str()};
}

bool residual_ok(const WElem& x, long long target_uval) {
  return x.is_apparent_zero() ? x.abs_prec() >= target_uval : x.uval() >= target_uval;
}

WElem random_elem(const WFieldPtr& W, std::mt19937_64& rng, long long vmin,
                  long long vmax, int len) {
  long long v = vmin + (long long)(rng() % (unsigned long long)(vmax - vmin + 1));
  std::vector<gf_t> d(len);
  for (auto& x : d) x = (gf_t)(rng() % W->F.Fqs().size());
  if (!d[0]) d[0] = 1;
  return WElem::from_digits(W, v, std::move(d));
}

// ---- module/field fixtures -------------------------------------------------

WFieldPtr field_q2(long long e = 1, int s = 1, long long prec = 200) {
  return WorkingField::make(2, 1, s, e, prec);
}
WFieldPtr field_q3(long long e = 1, int s = 1, long long prec = 200) {
  return WorkingField::make(3, 1, s, e, prec);
}
WFieldPtr field_q4(long long e = 1, int s = 1, long long prec = 200) {
  return WorkingField::make(2, 2, s, e, prec);
}

WElem th(const WFieldPtr& W, long long k = 1) { return WElem::theta(W, k); }

// ---- acceptance criteria ----------------------------------------------------

CheckLine crit1_partition_counts() {
  return guarded("criterion 1: shadowed-partition counts", [](Collector& c) {
    const long long want2[] = {1, 1, 2, 3, 5, 8};
    for (int n = 0; n <= 5; ++n) {
      auto parts = enumerate_partitions(2, n);
      c.expect((long long)parts.size() == want2[n],
               "|P_2(" + std::to_string(n) + ")| = " + std::to_string(parts.size()));
      for (const auto& p : parts)
        c.expect(p.is_valid(n), "invalid tuple in P_2(" + std::to_string(n) + ")");
    }
    for (int n = 0; n <= 10; ++n) {
      auto parts = enumerate_partitions(3, n);
      c.expect((long long)parts.size() == partition_count(3, n),
               "|P_3(" + std::to_string(n) + ")| mismatch with the recurrence");
      for (const auto& p : parts)
        c.expect(p.is_valid(n), "invalid tuple in P_3(" + std::to_string(n) + ")");
    }
  });
}

CheckLine crit2_b_series_equality() {
  return guarded("criterion 2: direct = recursive coefficient series", [](Collector& c) {
    auto W2 = field_q2();
    auto W3 = field_q3();
    std::vector<DrinfeldModule> mods = {
        DrinfeldModule::make(W2, {th(W2)}),
        DrinfeldModule::make(W2, {th(W2), th(W2) + WElem::one(W2)}),
        DrinfeldModule::make(W2, {th(W2), WElem::one(W2), th(W2, 2) + th(W2)}),
        DrinfeldModule::make(W3, {th(W3, 2), th(W3)}),
    };
    for (const auto& E : mods)
      for (int n = 0; n <= 7; ++n) {
        RationalTate a = b_series_direct(E, n);
        RationalTate b = b_series_recursive(E, n);
        c.expect(a.equals(b), "mismatch at rank " + std::to_string(E.rank()) +
                                  ", n = " + std::to_string(n));
      }
  });
}

CheckLine crit3_first_column_law() {
  return guarded("criterion 3: frame-product first column", [](Collector& c) {
    auto W2 = field_q2();
    auto W3 = field_q3();
    auto pw = [](const WElem& x, long long k) { return x.pow(k); };
    std::vector<DrinfeldModule> mods = {
        DrinfeldModule::make(W2, {pw(th(W2), 2)}),
        DrinfeldModule::make(W2, {pw(th(W2), 4), pw(th(W2) + WElem::one(W2), 4)}),
        DrinfeldModule::make(W2, {pw(th(W2), 8), pw(th(W2) + WElem::one(W2), 8),
                                  pw(th(W2, 2) + th(W2), 8)}),
        DrinfeldModule::make(W3, {pw(th(W3), 9), pw(th(W3, 2), 9)}),
    };
    for (const auto& E : mods) {
      std::vector<RationalTate> B;
      for (int n = 0; n <= 6; ++n) B.push_back(b_series_direct(E, n));
      for (long long m = 0; m <= 6; ++m) {
        RationalMat R = r_matrix(E, m);
        for (long long i = 1; i <= E.rank(); ++i) {
          long long idx = m - (i - 1);
          RationalTate expect = idx < 0 ? RationalTate::zero(E.W) : B[idx];
          c.expect(R[i - 1][0].equals(expect),
                   "rank " + std::to_string(E.rank()) + " m=" + std::to_string(m) +
                       " i=" + std::to_string(i));
        }
      }
    }
  });
}

CheckLine crit4_specialization_law() {
  return guarded("criterion 4: B_n(theta) equals the log coefficients", [](Collector& c) {
    auto W2 = field_q2(1, 1, 420);
    auto W3 = field_q3(1, 1, 420);
    auto W4 = field_q4(1, 1, 420);
    std::vector<DrinfeldModule> mods = {
        DrinfeldModule::carlitz(W2),
        DrinfeldModule::make(W2, {th(W2), th(W2, 3) + WElem::one(W2)}),
        DrinfeldModule::carlitz(W3),
        DrinfeldModule::carlitz(W4),
    };
    for (const auto& E : mods) {
      FqLinearSeries Q = log_series(E, 8);
      for (int n = 0; n <= 8; ++n) {
        WElem bn = b_series_recursive(E, n).eval_theta();
        WElem diff = bn - Q.coeff(n);
        c.expect(diff.is_apparent_zero(),
                 "nonzero residual at q=" + std::to_string(E.W->q()) +
                     " n=" + std::to_string(n));
        long long scale = Q.coeff(n).is_apparent_zero() ? 0 : Q.coeff(n).uval();
        c.expect(diff.abs_prec() - scale >= 150,
                 "tracked precision below 150 digits at n=" + std::to_string(n));
      }
    }
  });
}

CheckLine crit5_carlitz_closed_forms() {
  return guarded("criterion 5: rank-one closed forms and omega equations", [](Collector& c) {
    for (int q : {2, 3}) {
      auto W = q == 2 ? field_q2(1, 1, 260) : field_q3(2, 2, 260);
      DrinfeldModule C = DrinfeldModule::carlitz(W);
      // B_n = 1 / prod_(i<=n) (t - theta^(q^i))
      for (int n = 0; n <= 6; ++n) {
        std::map<long long, int> den;
        for (long long i = 1; i <= n; ++i) den[i] = 1;
        RationalTate expect(TPoly::constant(WElem::one(W)), den);
        c.expect(b_series_direct(C, n).equals(expect),
                 "closed form fails at q=" + std::to_string(q) + " n=" + std::to_string(n));
      }
      TateElem om = omega_series(W, 30, 200);
      GaussValue g = om.gauss(0);
      c.expect(!g.all_zero && g.uval * (q - 1) == W->e * q,
               "Gauss norm of omega at q=" + std::to_string(q));
      WElem theta_q = th(W).pow(q);
      for (long long i = 1; i <= 30; ++i) {
        WElem res = om.coeff(i) + theta_q * om.coeff(i).frobenius_twist(1) -
                    om.coeff(i - 1).frobenius_twist(1);
        c.expect(res.is_apparent_zero(), "difference-equation residual at i=" +
                                             std::to_string(i) + ", q=" + std::to_string(q));
      }
      // omega^(-1) = (t - theta) omega through the degree bound
      TateElem tmth(W, 30);
      tmth.coeff_mut(0) = -th(W);
      tmth.coeff_mut(1) = WElem::one(W);
      TateElem lhs = om.twist(-1);
      TateElem rhs = tmth * om;
      c.expect((lhs - rhs).is_apparent_zero(),
               "twist equation fails at q=" + std::to_string(q));
    }
  });
}

CheckLine crit6_exp_log_inversion() {
  return guarded("criterion 6: exp/log mutual inversion", [](Collector& c) {
    auto W2 = field_q2(1, 1, 300);
    auto W3 = field_q3(1, 1, 300);
    std::vector<DrinfeldModule> mods = {
        DrinfeldModule::carlitz(W2),
        DrinfeldModule::make(W2, {th(W2), th(W2, 2) + th(W2)}),
        DrinfeldModule::make(W3, {th(W3, 2), WElem::one(W3) + th(W3)}),
    };
    for (const auto& E : mods) {
      FqLinearSeries ex = exp_series(E, 6), lg = log_series(E, 6);
      FqLinearSeries a = ex.compose(lg), b = lg.compose(ex);
      for (long long i = 0; i <= 6; ++i) {
        WElem ea = a.coeff(i) - (i == 0 ? WElem::one(E.W) : WElem::zero(E.W));
        WElem eb = b.coeff(i) - (i == 0 ? WElem::one(E.W) : WElem::zero(E.W));
        c.expect(ea.is_apparent_zero() && eb.is_apparent_zero(),
                 "composition defect at q^" + std::to_string(i) +
                     " (rank " + std::to_string(E.rank()) + ")");
      }
    }
  });
}

CheckLine crit7_wp_machinery() {
  return guarded("criterion 7: difference-operator inversion", [](Collector& c) {
    auto W = field_q2(1, 2, 160);  // F_4 residues
    std::mt19937_64 rng(2024);
    const long long prec = 80;
    BranchPolicy least = BranchPolicy::least();
    for (int trial = 0; trial < 50; ++trial) {
      TateVec h;
      for (int slot = 0; slot < 2; ++slot) {
        TateElem hi(W, 6);
        for (long long k = 0; k <= 6; ++k) {
          WElem x = random_elem(W, rng, 1, 8, 6);
          if (trial % 5 == 0 && k == 3) {
            // include solvable valuation-zero components: images of the
            // operator hit trace zero automatically
            WElem g = random_elem(W, rng, 0, 0, 4);
            x = g - g.frobenius_twist(1);
          }
          hi.coeff_mut(k) = x;
        }
        h.push_back(hi);
      }
      TateVec f = wp_inverse(h, least, prec);
      TateVec back = wp_r(f);
      for (int slot = 0; slot < 2; ++slot)
        c.expect((back[slot] - h[slot]).is_apparent_zero(),
                 "inversion residual in trial " + std::to_string(trial));
      // a second representative differing by an F_q[t] vector is also a
      // preimage, and the difference is detected as constant coefficients
      TateVec f2 = f;
      f2[0].coeff_mut(2) = f2[0].coeff(2) + WElem::one(W);
      TateVec back2 = wp_r(f2);
      for (int slot = 0; slot < 2; ++slot)
        c.expect((back2[slot] - h[slot]).is_apparent_zero(),
                 "shifted representative fails in trial " + std::to_string(trial));
      // branch policies differ by embedded-F_q constants only; the
      // k_infty-restricted mode needs F_q-rational data, so compare on a
      // separate rational input
      if (trial < 8) {
        TateVec hr;
        for (int slot = 0; slot < 2; ++slot) {
          TateElem hi(W, 6);
          for (long long k = 0; k <= 6; ++k) {
            long long v = 1 + (long long)(rng() % 6);
            gf_t cq = W->F.embed((gf_t)(1 + rng() % (W->F.q() - 1)));
            hi.coeff_mut(k) = WElem::monomial(W, cq, v) +
                              WElem::monomial(W, W->F.embed(1), v + 2);
          }
          hr.push_back(hi);
        }
        TateVec fl = wp_inverse(hr, least, prec);
        TateVec fk = wp_inverse(hr, BranchPolicy::kinfty(), prec);
        for (int slot = 0; slot < 2; ++slot)
          for (long long k = 0; k <= 6; ++k) {
            WElem d = fl[slot].coeff(k) - fk[slot].coeff(k);
            bool const_fq = d.is_apparent_zero() ||
                            (d.uval() == 0 && d.support_end() == 1 &&
                             W->F.in_Fq(d.digit(0)));
            c.expect(const_fq, "policy difference is not an F_q constant");
          }
      }
    }
    // contracting inputs match the geometric section modulo F_q[t]
    for (int trial = 0; trial < 10; ++trial) {
      TateVec h;
      for (int slot = 0; slot < 2; ++slot) {
        TateElem hi(W, 6);
        for (long long k = 0; k <= 6; ++k) hi.coeff_mut(k) = random_elem(W, rng, 1, 6, 5);
        h.push_back(hi);
      }
      TateVec f = wp_inverse(h, least, prec);
      TateVec l0 = L0_series(h, prec);
      for (int slot = 0; slot < 2; ++slot)
        for (long long k = 0; k <= 6; ++k) {
          WElem d = f[slot].coeff(k) - l0[slot].coeff(k);
          bool fq_const = d.is_apparent_zero() ||
                          (d.uval() == 0 && d.support_end() == 1 && W->F.in_Fq(d.digit(0)));
          c.expect(fq_const, "geometric-section comparison fails");
          if (!d.is_apparent_zero()) continue;
          c.expect(d.abs_prec() >= 79, "comparison precision too low");
        }
    }
  });
}

CheckLine crit8_anderson() {
  return guarded("criterion 8: exponentiation identity", [](Collector& c) {
    auto W3 = field_q3(1, 1, 260);
    DrinfeldModule C3 = DrinfeldModule::carlitz(W3);
    AndersonCheck a = anderson_exp_check(C3, th(W3).inv(), 10, 40);
    c.expect(a.ok(W3->e * 50), "rank-one residual above q^-50");
    // q^2-power coefficients with a comfortable convergence radius
    DrinfeldModule E2 = DrinfeldModule::make(W3, {th(W3).inv().pow(9), WElem::one(W3)});
    AndersonCheck b = anderson_exp_check(E2, th(W3).pow(2).inv(), 10, 40);
    c.expect(b.ok(W3->e * 50), "rank-two residual above q^-50");
  });
}

CheckLine crit9_period_recovery() {
  return guarded("criterion 9: period recovery", [](Collector& c) {
    struct Cfg {
      int q;
      WFieldPtr W;
      long long D;
      long long expect_uval;  // of the fundamental period
    };
    std::vector<Cfg> cfgs = {{2, field_q2(1, 1, 200), 64, -2},
                             {3, field_q3(2, 2, 200), 40, -3}};
    for (auto& cfg : cfgs) {
      DrinfeldModule C = DrinfeldModule::carlitz(cfg.W);
      TateMat Psi = psi_rank1(C, cfg.D, 120);
      LatticeBasis L = period_lattice(C, Psi, 3, 60);
      c.expect(L.rank() == 1, "rank mismatch at q=" + std::to_string(cfg.q));
      c.expect(L.gens[0].uval() == cfg.expect_uval,
               "fundamental period valuation at q=" + std::to_string(cfg.q) + ": " +
                   std::to_string(L.gens[0].uval()));
      WElem img = exp_series(C, 12).evaluate(L.gens[0]);
      c.expect(residual_ok(img, cfg.W->e * 50),
               "exp does not annihilate the recovered period at q=" + std::to_string(cfg.q));
    }
  });
}

CheckLine crit10_inside_radius() {
  return guarded("criterion 10: agreement inside the radius", [](Collector& c) {
    std::mt19937_64 rng(91);
    auto W = field_q3(2, 2, 260);
    DrinfeldModule C = DrinfeldModule::carlitz(W);
    TateMat PsiC = psi_rank1(C, 40, 140);
    LatticeBasis LC = period_lattice(C, PsiC, 3, 70);
    RadiusEstimate RC = radius_estimate(C, 8);
    std::vector<WElem> xs = {th(W).inv(), th(W), th(W) + WElem::one(W),
                             WElem::one(W) + th(W).inv(),
                             random_elem(W, rng, -2, 4, 6)};
    for (const auto& xi : xs) {
      c.expect(inside_radius(xi, RC), "sample outside the estimated radius");
      VerifyOutcome v = verify_inside_radius(C, PsiC, LC, xi, BranchPolicy::least(), 50);
      c.expect(v.pass, "rank-one sample fails: " + v.detail);
    }
    DrinfeldModule T = DrinfeldModule::make(W, {th(W).pow(3)});
    TateMat PsiT = psi_rank1(T, 40, 140);
    LatticeBasis LT = period_lattice(T, PsiT, 3, 70);
    RadiusEstimate RT = radius_estimate(T, 8);
    for (int i = 0; i < 5; ++i) {
      WElem xi = random_elem(W, rng, 1, 6, 6);
      c.expect(inside_radius(xi, RT), "twist sample outside the estimated radius");
      VerifyOutcome v = verify_inside_radius(T, PsiT, LT, xi, BranchPolicy::least(), 50);
      c.expect(v.pass, "twist-module sample fails: " + v.detail);
    }
  });
}

CheckLine crit11_functional_equation() {
  return guarded("criterion 11: functional equation of the continuation", [](Collector& c) {
    std::mt19937_64 rng(417);
    for (int q : {2, 3}) {
      auto W = q == 2 ? field_q2(2, 2, 300) : field_q3(2, 2, 300);
      DrinfeldModule C = DrinfeldModule::carlitz(W);
      long long D = q == 2 ? 72 : 40;
      TateMat Psi = psi_rank1(C, D, 170);
      LatticeBasis L = period_lattice(C, Psi, 3, 60);
      // the two pinned inputs: no working field of this shape contains the
      // required roots (wildly ramified continuation data); an honest error
      // is expected and counts as a failure of this criterion as stated
      for (const char* name : {"theta^3", "theta^3 + 1/theta"}) {
        WElem xi = name[7] == '3' && name[8] == '\0'
                       ? th(W, 3)
                       : th(W, 3) + th(W).inv();
        try {
          VerifyOutcome v = verify_functional_equation(C, Psi, L, xi,
                                                       BranchPolicy::least(), 50);
          c.expect(v.pass, std::string(name) + " fails: " + v.detail);
        } catch (const math_error& e) {
          c.expect(false, std::string(name) + " at q=" + std::to_string(q) +
                              " unattainable in W (" + e.code() + ")");
        }
      }
      // random |xi| <= q^3 drawn from the attainable locus: exponentials of
      // random arguments, which always admit continuation data in W
      FqLinearSeries ex = exp_series(C, 12);
      for (int i = 0; i < 3; ++i) {
        WElem eta = random_elem(W, rng, -4, 2, 6);
        WElem xi = ex.evaluate(eta, eta.uval() + W->e * 120);
        if (xi.is_apparent_zero()) continue;
        c.expect((__int128)(-xi.uval()) <= (__int128)3 * W->e, "sample exceeds q^3");
        VerifyOutcome v = verify_functional_equation(C, Psi, L, xi,
                                                     BranchPolicy::least(), 45);
        c.expect(v.pass, "random sample at q=" + std::to_string(q) +
                             " fails: " + v.detail);
      }
    }
  });
}

CheckLine crit12_inverse_of_exp() {
  return guarded("criterion 12: inverse law against the exponential", [](Collector& c) {
    std::mt19937_64 rng(1729);
    auto W = field_q3(2, 2, 300);
    DrinfeldModule C = DrinfeldModule::carlitz(W);
    TateMat Psi = psi_rank1(C, 40, 170);
    LatticeBasis L = period_lattice(C, Psi, 3, 60);
    // pinned input theta^3: the continuation data does not exist in any
    // working field of this shape; an honest error counts as failure here
    try {
      CosetValue cv = ext_log(C, Psi, th(W, 3), BranchPolicy::least(), 60);
      WElem back = exp_series(C, 12).evaluate(cv.rep) - th(W, 3);
      c.expect(residual_ok(back, W->e * 50), "round trip misses theta^3");
    } catch (const math_error& e) {
      c.expect(false, std::string("theta^3 unattainable in W (") + e.code() + ")");
    }
    // branch(exp(xi)) = xi mod Lambda for random xi; exponential values are
    // always attainable, whatever the size of xi
    FqLinearSeries ex = exp_series(C, 14);
    for (int i = 0; i < 5; ++i) {
      WElem xi = random_elem(W, rng, -3, 3, 6);
      WElem w = ex.evaluate(xi, sat_add(W->e * 82, std::min(xi.uval(), 0LL)));
      CosetValue cw = ext_log(C, Psi, w, BranchPolicy::least(), 58);
      Membership m = lattice_membership(cw.rep - xi, L, 50);
      c.expect(m.member(), "random sample " + std::to_string(i) + " fails membership");
    }
    // the two-sided check runs on a sample inside the convergence disc
    VerifyOutcome v = verify_inverse_of_exp(C, Psi, L, th(W).inv() + WElem::one(W),
                                            BranchPolicy::least(), 45);
    c.expect(v.pass, "two-sided inverse check fails: " + v.detail);
  });
}

CheckLine crit13_kinfty_branch() {
  return guarded("criterion 13: k_infty-rational branch", [](Collector& c) {
    for (int q : {2, 3}) {
      auto W = q == 2 ? field_q2(1, 1, 260) : field_q3(2, 2, 260);
      DrinfeldModule C = DrinfeldModule::carlitz(W);
      std::vector<WElem> alphas = {WElem::one(W), th(W).inv(),
                                   WElem::one(W) + th(W).inv()};
      if (q == 2) alphas.push_back(th(W));  // |theta| = q < q^(q/(q-1))
      if (q == 3) alphas.push_back(th(W));  // q < q^(3/2)
      RadiusEstimate R = radius_estimate(C, 8);
      // the evaluation tail decays like (q-1) digits per degree
      const long long D = q == 2 ? 64 : 40;
      const long long prec = q == 2 ? 55 : 75;
      for (const auto& alpha : alphas) {
        c.expect(inside_radius(alpha, R), "alpha outside the radius");
        std::vector<SolveStep> steps;
        WElem got = carlitz_kinfty_branch(W, alpha, D, prec, &steps);
        bool len1 = true;
        for (const auto& s : steps) len1 = len1 && s.length_one && s.edge_01;
        c.expect(len1, "a polygon step without a length-one edge occurred");
        long long N = default_series_order(C, alpha, prec + 10);
        WElem want = specialize_log(C, alpha, N, prec + 10);
        WElem diff = got - want;
        c.expect(residual_ok(diff, alpha.uval() + W->e * 45),
                 "branch value differs from the logarithm at q=" + std::to_string(q));
      }
    }
  });
}

CheckLine crit14_inverse_frobenius() {
  return guarded("criterion 14: inverse-Frobenius coefficients", [](Collector& c) {
    auto W = field_q2(1, 1, 300);
    std::vector<DrinfeldModule> mods = {
        DrinfeldModule::carlitz(W),
        DrinfeldModule::make(W, {th(W).pow(4), (th(W) + WElem::one(W)).pow(4)}),
    };
    for (const auto& E : mods) {
      FqLinearSeries Q = log_series(E, 5);
      WElem xi = th(W) + th(W).inv();
      for (long long j = 0; j <= 5; ++j) {
        WElem got = frobenius_inverse_phi_j(E, xi, j);
        WElem want = Q.coeff(j) * xi.frobenius_twist(j);
        c.expect((got - want).is_apparent_zero(),
                 "phi_" + std::to_string(j) + " mismatch (rank " +
                     std::to_string(E.rank()) + ")");
      }
      // partial sums converge to the logarithm for xi inside the radius of
      // the module at hand
      WElem xs = E.rank() == 1 ? th(W).inv() : th(W, 3).inv();
      WElem sum = WElem::zero(W);
      for (long long j = 0; j <= 9; ++j) sum = sum + frobenius_inverse_phi_j(E, xs, j);
      FqLinearSeries Q9 = log_series(E, 9);
      WElem direct = Q9.evaluate(xs);
      c.expect(residual_ok(sum - direct, xs.uval() + W->e * 100),
               "partial sums do not match the logarithm");
    }
  });
}

CheckLine crit15_lattice_product() {
  return guarded("criterion 15: lattice-product exponential", [](Collector& c) {
    auto W = field_q2(1, 1, 220);
    DrinfeldModule C = DrinfeldModule::carlitz(W);
    TateMat Psi = psi_rank1(C, 64, 120);
    LatticeBasis L = period_lattice(C, Psi, 3, 60);
    FqLinearSeries ex = exp_series(C, 8);
    std::mt19937_64 rng(55);
    std::vector<WElem> zs = {WElem::one(W), th(W).inv(),
                             WElem::one(W) + th(W, 3).inv(),
                             random_elem(W, rng, 0, 3, 6),
                             random_elem(W, rng, 1, 4, 6)};
    for (const auto& z : zs) {
      WElem prod = exp_from_lattice_product(L, z, 6);
      WElem diff = prod - ex.evaluate(z);
      c.expect(residual_ok(diff, 20), "product/series gap above q^-20 at |z| <= 1");
    }
  });
}

}  // namespace

std::vector<CheckLine> acceptance_criteria() {
  std::vector<CheckLine> out;
  out.push_back(crit1_partition_counts());
  out.push_back(crit2_b_series_equality());
  out.push_back(crit3_first_column_law());
  out.push_back(crit4_specialization_law());
  out.push_back(crit5_carlitz_closed_forms());
  out.push_back(crit6_exp_log_inversion());
  out.push_back(crit7_wp_machinery());
  out.push_back(crit8_anderson());
  out.push_back(crit9_period_recovery());
  out.push_back(crit10_inside_radius());
  out.push_back(crit11_functional_equation());
  out.push_back(crit12_inverse_of_exp());
  out.push_back(crit13_kinfty_branch());
  out.push_back(crit14_inverse_frobenius());
  out.push_back(crit15_lattice_product());
  return out;
}

namespace {

SuiteReport suite_identities() {
  SuiteReport r;
  r.suite = "identities";
  r.checks.push_back(crit1_partition_counts());
  r.checks.push_back(crit2_b_series_equality());
  r.checks.push_back(crit3_first_column_law());
  r.checks.push_back(guarded("specialization law (rank one, q=2)", [](Collector& c) {
    auto W = field_q2(1, 1, 300);
    DrinfeldModule C = DrinfeldModule::carlitz(W);
    FqLinearSeries Q = log_series(C, 6);
    for (int n = 0; n <= 6; ++n)
      c.expect((b_series_recursive(C, n).eval_theta() - Q.coeff(n)).is_apparent_zero(),
               "mismatch at n=" + std::to_string(n));
  }));
  r.checks.push_back(crit6_exp_log_inversion());
  return r;
}

SuiteReport suite_carlitz_e2e() {
  SuiteReport r;
  r.suite = "carlitz_e2e";
  r.checks.push_back(crit5_carlitz_closed_forms());
  r.checks.push_back(crit9_period_recovery());
  r.checks.push_back(guarded("round trip inside the radius (q=2)", [](Collector& c) {
    auto W = field_q2(1, 2, 240);
    DrinfeldModule C = DrinfeldModule::carlitz(W);
    TateMat Psi = psi_rank1(C, 64, 140);
    LatticeBasis L = period_lattice(C, Psi, 3, 55);
    VerifyOutcome v = verify_inside_radius(C, Psi, L, th(W).inv(), BranchPolicy::least(), 45);
    c.expect(v.pass, v.detail);
  }));
  r.checks.push_back(guarded("functional equation beyond the radius (q=2)", [](Collector& c) {
    auto W = field_q2(1, 2, 300);
    DrinfeldModule C = DrinfeldModule::carlitz(W);
    TateMat Psi = psi_rank1(C, 72, 170);
    LatticeBasis L = period_lattice(C, Psi, 3, 55);
    // an attainable input beyond the radius: an exponential value
    WElem eta = th(W, 2) + th(W);
    WElem xi = exp_series(C, 12).evaluate(eta, eta.uval() + W->e * 130);
    VerifyOutcome v = verify_functional_equation(C, Psi, L, xi, BranchPolicy::least(), 40);
    c.expect(v.pass, v.detail);
  }));
  r.checks.push_back(crit13_kinfty_branch());
  return r;
}

SuiteReport suite_rank2_smallxi() {
  SuiteReport r;
  r.suite = "rank2_smallxi";
  auto W = field_q2(1, 1, 300);
  DrinfeldModule E = DrinfeldModule::make(W, {th(W).pow(4), (th(W) + WElem::one(W)).pow(4)});
  r.checks.push_back(guarded("coefficient series agree", [&](Collector& c) {
    for (int n = 0; n <= 5; ++n)
      c.expect(b_series_direct(E, n).equals(b_series_recursive(E, n)),
               "mismatch at n=" + std::to_string(n));
  }));
  r.checks.push_back(guarded("first-column law", [&](Collector& c) {
    for (long long m = 0; m <= 4; ++m) {
      RationalMat R = r_matrix(E, m);
      for (long long i = 1; i <= 2; ++i) {
        long long idx = m - (i - 1);
        RationalTate expect = idx < 0 ? RationalTate::zero(W) : b_series_direct(E, (int)idx);
        c.expect(R[i - 1][0].equals(expect), "m=" + std::to_string(m));
      }
    }
  }));
  r.checks.push_back(guarded("specialization law", [&](Collector& c) {
    FqLinearSeries Q = log_series(E, 6);
    for (int n = 0; n <= 6; ++n)
      c.expect((b_series_recursive(E, n).eval_theta() - Q.coeff(n)).is_apparent_zero(),
               "mismatch at n=" + std::to_string(n));
  }));
  r.checks.push_back(guarded("exponentiation identity at small xi", [&](Collector& c) {
    // the kappa_1 chain pins this module's radius at q^-2
    AndersonCheck a = anderson_exp_check(E, th(W, 3).inv(), 9, 72);
    c.expect(a.ok(W->e * 45), "residual too large");
  }));
  r.checks.push_back(guarded("deformation routes agree", [&](Collector& c) {
    WElem xi = th(W, 3).inv();
    TateElem d1 = deformation_series(E, xi, 7, 24, DeformationRoute::Direct);
    TateElem d2 = deformation_series(E, xi, 7, 24, DeformationRoute::MatrixProduct);
    c.expect((d1 - d2).is_apparent_zero(), "route mismatch");
  }));
  return r;
}

}  // namespace

SuiteReport run_suite(const std::string& name) {
  if (name == "identities") return suite_identities();
  if (name == "carlitz_e2e") return suite_carlitz_e2e();
  if (name == "rank2_smallxi") return suite_rank2_smallxi();
  raise(err::PARSE, "unknown suite '" + name + "'");
}

}  // namespace fflog
