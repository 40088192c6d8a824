#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "fflog/io.hpp"

using namespace fflog;

TEST_CASE("element expressions") {
  auto W = WorkingField::make(2, 1, 2, 2, 80);
  CHECK((parse_welem(W, "theta^2 + 1") - (WElem::theta(W, 2) + WElem::one(W)))
            .is_exact_zero());
  CHECK((parse_welem(W, "1/theta") - WElem::theta(W).inv()).is_apparent_zero());
  CHECK((parse_welem(W, "u^3*g") - WElem::monomial(W, W->F.Fqs().gen(), 3))
            .is_exact_zero());
  CHECK((parse_welem(W, "-(theta + u)^2") - (-(WElem::theta(W) + WElem::monomial(W, 1, 1)).pow(2)))
            .is_exact_zero());
  CHECK_THROWS_AS(parse_welem(W, "theta +"), math_error);
  CHECK_THROWS_AS(parse_welem(W, "]bogus["), math_error);
  CHECK_THROWS_AS(parse_welem(W, "t"), math_error);  // the Tate variable is not an element
}

TEST_CASE("serialization round trips") {
  auto W = WorkingField::make(3, 1, 2, 2, 90);
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<gf_t> d(6);
    for (auto& x : d) x = (gf_t)(rng() % W->F.Fqs().size());
    if (!d[0]) d[0] = 1;
    WElem x = WElem::from_digits(W, -4 + (long long)(rng() % 9), std::move(d),
                                 trial % 2 ? 60 : kExactPrec);
    WElem back = welem_from_json(W, welem_to_json(x));
    CHECK((back - x).is_apparent_zero());
    CHECK(back.abs_prec() == x.abs_prec());
  }
  WFieldPtr W2 = field_from_json(field_to_json(*W));
  CHECK(W2->e == W->e);
  CHECK(W2->F.q() == W->F.q());
  CHECK(W2->F.Fqs().modulus() == W->F.Fqs().modulus());

  TateElem om = omega_series(W, 6, 50);
  TateElem om2 = tate_from_json(W, tate_to_json(om));
  CHECK((om - om2).is_apparent_zero());

  DrinfeldModule C = DrinfeldModule::carlitz(W);
  TateMat Psi = psi_rank1(C, 6, 50);
  TateMat Psi2 = tatemat_from_json(tatemat_to_json(Psi));
  CHECK((Psi - Psi2).gauss(0).all_zero);

  // unknown keys are rejected
  json j = welem_to_json(WElem::one(W));
  j["bogus"] = 1;
  CHECK_THROWS_AS(welem_from_json(W, j), math_error);
}

TEST_CASE("job runner: coefficient op and determinism") {
  JobSpec job;
  job.p = 2;
  job.m = 1;
  job.s = 1;
  job.e = 1;
  job.rank = 2;
  job.kappas = {"theta", "theta^3+theta"};
  job.op = "b_series_direct";
  job.n = 3;
  RunResult a = run_job(job);
  RunResult b = run_job(job);
  CHECK(a.exit_code == 0);
  CHECK(a.report.at("result").at("partitions_count") == 3);
  CHECK(a.report.dump() == b.report.dump());  // byte-identical reports
}

TEST_CASE("job runner: verification ops, suites, error mapping") {
  JobSpec job;
  job.p = 3;
  job.m = 1;
  job.s = 2;
  job.e = 2;
  job.rank = 1;
  job.kappas = {"1"};
  job.op = "verify_inside_radius";
  job.xi = "1/theta";
  job.prec = 70;
  job.tdeg = 40;
  RunResult v = run_job(job);
  CHECK(v.exit_code == 0);
  CHECK(v.report.at("result").at("pass") == true);

  JobSpec bad = job;
  bad.kappas = {"]exp["};
  CHECK_THROWS_AS(run_job(bad), math_error);
  try {
    run_job(bad);
  } catch (const math_error& e) {
    CHECK(e.code() == err::PARSE);
  }

  JobSpec s;
  s.op = "suite";
  s.suite = "identities";
  RunResult sr = run_job(s);
  CHECK(sr.exit_code == 0);
  CHECK(sr.report.at("suite").at("all_pass") == true);

  JobSpec unknown;
  unknown.op = "suite";
  unknown.suite = "nope";
  CHECK_THROWS_AS(run_job(unknown), math_error);
}

TEST_CASE("job runner: supplied trivialization file") {
  auto W = WorkingField::make(3, 1, 2, 2, 200);
  DrinfeldModule C = DrinfeldModule::carlitz(W);
  TateMat Psi = psi_rank1(C, 36, 110);
  {
    std::ofstream out("psi_roundtrip_test.json");
    out << tatemat_to_json(Psi).dump();
  }
  JobSpec job;
  job.p = 3;
  job.m = 1;
  job.s = 2;
  job.e = 2;
  job.rank = 1;
  job.kappas = {"1"};
  job.op = "validate_psi";
  job.psi_file = "psi_roundtrip_test.json";
  job.prec = 60;
  job.tdeg = 36;
  RunResult r = run_job(job);
  CHECK(r.report.at("result").at("residual_zero") == true);

  // a corrupted trivialization is rejected
  TateMat bad = Psi;
  bad.at_mut(0, 0).coeff_mut(2) =
      bad.at(0, 0).coeff(2) + WElem::monomial(W, 1, 1);
  {
    std::ofstream out("psi_roundtrip_bad.json");
    out << tatemat_to_json(bad).dump();
  }
  job.psi_file = "psi_roundtrip_bad.json";
  CHECK_THROWS_AS(run_job(job), math_error);
  std::remove("psi_roundtrip_test.json");
  std::remove("psi_roundtrip_bad.json");
}

TEST_CASE("job runner: radius and phi_j ops") {
  JobSpec job;
  job.p = 2;
  job.m = 1;
  job.s = 1;
  job.e = 1;
  job.rank = 1;
  job.kappas = {"1"};
  job.op = "radius_estimate";
  job.order = 8;
  RunResult r = run_job(job);
  CHECK(r.report.at("result").at("logq_num").get<long long>() * 1 ==
        2 * r.report.at("result").at("logq_den").get<long long>());
  CHECK(r.report.at("result").at("stabilized") == true);

  job.op = "phi_j";
  job.xi = "theta";
  job.j = 2;
  RunResult p = run_job(job);
  CHECK(p.report.at("result").at("matches_log_coefficient") == true);
}
