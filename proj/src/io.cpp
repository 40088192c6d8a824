#include "fflog/io.hpp"

#include <fstream>

#include "fflog/suites.hpp"

namespace fflog {

json field_to_json(const WorkingField& W) {
  json j;
  j["p"] = W.F.p();
  j["m"] = W.F.m();
  j["s"] = W.F.s();
  j["e"] = W.e;
  j["default_prec"] = W.default_prec;
  j["modulus_q"] = W.F.Fq().modulus();
  j["modulus_qs"] = W.F.Fqs().modulus();
  return j;
}

WFieldPtr field_from_json(const json& j) {
  for (auto& [key, value] : j.items()) {
    (void)value;
    if (key != "p" && key != "m" && key != "s" && key != "e" &&
        key != "default_prec" && key != "modulus_q" && key != "modulus_qs")
      raise(err::PARSE, "unknown field key '" + key + "'");
  }
  FieldConfig F = j.contains("modulus_q")
                      ? FieldConfig::make(j.at("p"), j.at("m"), j.at("s"),
                                          j.at("modulus_q").get<std::vector<int>>(),
                                          j.at("modulus_qs").get<std::vector<int>>())
                      : FieldConfig::make(j.at("p"), j.at("m"), j.at("s"));
  long long prec = j.value("default_prec", 200);
  return WorkingField::make(std::move(F), j.at("e"), prec);
}

json welem_to_json(const WElem& x) {
  json j;
  j["v"] = x.is_apparent_zero() ? 0 : x.uval();
  j["prec"] = x.is_exact() ? json("exact") : json(x.abs_prec());
  json coeffs = json::array();
  const auto& L = x.field()->F.Fqs();
  for (long long k = x.support_begin(); k < x.support_end(); ++k)
    coeffs.push_back(L.coords(x.digit(k)));
  j["coeffs"] = coeffs;
  return j;
}

WElem welem_from_json(const WFieldPtr& W, const json& j) {
  for (auto& [key, value] : j.items()) {
    (void)value;
    if (key != "v" && key != "prec" && key != "coeffs")
      raise(err::PARSE, "unknown element key '" + key + "'");
  }
  long long v = j.at("v");
  long long prec = kExactPrec;
  if (j.at("prec").is_number()) prec = j.at("prec");
  std::vector<gf_t> digits;
  const auto& L = W->F.Fqs();
  for (const auto& c : j.at("coeffs"))
    digits.push_back(L.encode(c.get<std::vector<int>>()));
  return WElem::from_digits(W, v, std::move(digits), prec);
}

json tate_to_json(const TateElem& x) {
  json j;
  j["D"] = x.degree_bound();
  j["tail"] = x.tail_flag();
  json coeffs = json::array();
  for (long long i = 0; i <= x.degree_bound(); ++i)
    coeffs.push_back(welem_to_json(x.coeff(i)));
  j["coeffs"] = coeffs;
  return j;
}

TateElem tate_from_json(const WFieldPtr& W, const json& j) {
  long long D = j.at("D");
  std::vector<WElem> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(welem_from_json(W, c));
  while ((long long)coeffs.size() <= D) coeffs.push_back(WElem::zero(W));
  return TateElem::from_coeffs(std::move(coeffs), D, j.value("tail", true));
}

json tatemat_to_json(const TateMat& M) {
  json j;
  j["field"] = field_to_json(*M.field());
  j["rows"] = M.rows();
  j["cols"] = M.cols();
  j["D"] = M.degree_bound();
  json ent = json::array();
  for (long long i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (long long k = 0; k < M.cols(); ++k) row.push_back(tate_to_json(M.at(i, k)));
    ent.push_back(row);
  }
  j["entries"] = ent;
  return j;
}

TateMat tatemat_from_json(const json& j) {
  WFieldPtr W = field_from_json(j.at("field"));
  long long rows = j.at("rows"), cols = j.at("cols"), D = j.at("D");
  TateMat M(W, rows, cols, D);
  for (long long i = 0; i < rows; ++i)
    for (long long k = 0; k < cols; ++k)
      M.at_mut(i, k) = tate_from_json(W, j.at("entries").at(i).at(k));
  return M;
}

json module_to_json(const DrinfeldModule& E) {
  json j;
  j["r"] = E.rank();
  json ks = json::array();
  for (const auto& k : E.kappa) ks.push_back(welem_to_json(k));
  j["kappa"] = ks;
  j["field"] = field_to_json(*E.W);
  return j;
}

json rational_to_json(const RationalTate& r) {
  json j;
  json num = json::array();
  for (long long i = 0; i <= r.num().degree(); ++i)
    num.push_back(welem_to_json(r.num().coeff(i)));
  j["num"] = num;
  json den = json::array();
  for (const auto& [k, m] : r.den()) den.push_back({{"k", k}, {"mult", m}});
  j["den"] = den;
  return j;
}

json norm_to_json(const WElem& x) {
  json j;
  if (x.is_apparent_zero()) {
    j["zero"] = true;
    j["known_below_logq"] = x.is_exact() ? json("exact")
                                          : json(json::array(
                                                {x.abs_prec(), x.field()->e}));
  } else {
    j["zero"] = false;
    j["logq_num"] = -x.uval();
    j["logq_den"] = x.field()->e;
    j["prec"] = x.is_exact() ? json("exact") : json(x.abs_prec());
  }
  return j;
}

namespace {

DrinfeldModule module_from_job(const JobSpec& job, const WFieldPtr& W) {
  if (job.rank <= 0) raise(err::PARSE, "module rank must be positive");
  if ((long long)job.kappas.size() != job.rank)
    raise(err::PARSE, "expected " + std::to_string(job.rank) + " kappa expressions");
  std::vector<WElem> kappa;
  long long qr = 1;
  for (long long i = 0; i < job.rank; ++i) qr *= W->q();
  for (const auto& ks : job.kappas) {
    WElem k = parse_welem(W, ks);
    if (job.power_wrap) k = k.pow(qr);
    kappa.push_back(std::move(k));
  }
  return DrinfeldModule::make(W, std::move(kappa));
}

BranchPolicy policy_from_string(const std::string& s) {
  if (s == "least") return BranchPolicy::least();
  if (s == "kinfty") return BranchPolicy::kinfty();
  raise(err::PARSE, "unknown policy '" + s + "'");
}

json verify_to_json(const VerifyOutcome& v) {
  json j;
  j["pass"] = v.pass;
  j["residual_uval"] = v.residual_uval;
  j["detail"] = v.detail;
  return j;
}

}  // namespace

RunResult run_job(const JobSpec& job) {
  RunResult out;
  json& rep = out.report;
  rep["op"] = job.op;
  rep["params"] = {{"prec", job.prec}, {"tdeg", job.tdeg}, {"order", job.order},
                   {"policy", job.policy}, {"n", job.n}, {"j", job.j},
                   {"power_wrap", job.power_wrap}};

  if (job.op == "suite") {
    SuiteReport sr = run_suite(job.suite);
    rep["suite"] = sr.to_json();
    out.exit_code = sr.all_pass() ? 0 : 1;
    return out;
  }

  // series inversions inherit this relative precision; the verification
  // chain loses about e*D digits at the evaluation step, so pad accordingly
  WFieldPtr W = WorkingField::make(
      job.p, job.m, job.s, job.e,
      std::max<long long>(job.prec, 40) + job.tdeg + 40);
  rep["field"] = field_to_json(*W);
  BranchPolicy policy = policy_from_string(job.policy);

  auto need_module = [&]() { return module_from_job(job, W); };
  auto need_xi = [&]() {
    if (job.xi.empty()) raise(err::PARSE, "operation requires --xi");
    return parse_welem(W, job.xi);
  };
  auto need_psi = [&](const DrinfeldModule& E) {
    if (!job.psi_file.empty()) {
      std::ifstream in(job.psi_file);
      if (!in) raise(err::PARSE, "cannot open psi file '" + job.psi_file + "'");
      json pj;
      in >> pj;
      TateMat Psi = tatemat_from_json(pj);
      PsiResidual res = validate_psi(E, Psi);
      if (!res.ok(W->e * std::min<long long>(job.prec / 2, 40)))
        raise(err::DEGENERATE, "supplied trivialization fails the difference equation");
      return Psi;
    }
    if (E.rank() != 1)
      raise(err::PARSE, "rank >= 2 requires a supplied trivialization (--psi)");
    // evaluation at theta costs e*D digits, so the trivialization is built
    // deeper than the requested certification level
    return psi_rank1(E, job.tdeg, job.prec + job.tdeg + 24, policy);
  };

  if (job.op == "b_series_direct" || job.op == "b_series_recursive") {
    DrinfeldModule E = need_module();
    rep["module"] = module_to_json(E);
    if (job.n < 0) raise(err::PARSE, "operation requires --n");
    RationalTate B = job.op == "b_series_direct" ? b_series_direct(E, (int)job.n)
                                                 : b_series_recursive(E, (int)job.n);
    rep["result"]["partitions_count"] = partition_count((int)E.rank(), (int)job.n);
    rep["result"]["rational_form"] = rational_to_json(B);
    rep["result"]["expansion"] = tate_to_json(B.expand(std::min<long long>(job.tdeg, 12)));
    return out;
  }
  if (job.op == "partitions") {
    if (job.n < 0) raise(err::PARSE, "operation requires --n");
    long long r = job.rank > 0 ? job.rank : 2;
    auto parts = enumerate_partitions((int)r, (int)job.n);
    rep["result"]["count"] = (long long)parts.size();
    json arr = json::array();
    for (const auto& p : parts) {
      json sets = json::array();
      for (const auto& S : p.sets) sets.push_back(S);
      arr.push_back(sets);
    }
    rep["result"]["partitions"] = arr;
    return out;
  }
  if (job.op == "r_matrix") {
    DrinfeldModule E = need_module();
    rep["module"] = module_to_json(E);
    if (job.n < 0) raise(err::PARSE, "operation requires --n");
    RationalMat R = r_matrix(E, job.n);
    json rows = json::array();
    for (const auto& row : R) {
      json r2 = json::array();
      for (const auto& x : row) r2.push_back(rational_to_json(x));
      rows.push_back(r2);
    }
    rep["result"]["entries"] = rows;
    return out;
  }
  if (job.op == "log_coeffs" || job.op == "exp_coeffs") {
    DrinfeldModule E = need_module();
    rep["module"] = module_to_json(E);
    FqLinearSeries ser = job.op == "log_coeffs" ? log_series(E, job.order)
                                                : exp_series(E, job.order);
    json arr = json::array();
    for (long long i = 0; i <= ser.order(); ++i) arr.push_back(welem_to_json(ser.coeff(i)));
    rep["result"]["coeffs"] = arr;
    return out;
  }
  if (job.op == "radius_estimate") {
    DrinfeldModule E = need_module();
    rep["module"] = module_to_json(E);
    RadiusEstimate R = radius_estimate(E, std::max<long long>(job.order, 2));
    rep["result"] = {{"logq_num", R.num}, {"logq_den", R.den}, {"stabilized", R.stabilized}};
    return out;
  }
  if (job.op == "deformation_series") {
    DrinfeldModule E = need_module();
    rep["module"] = module_to_json(E);
    WElem xi = need_xi();
    TateElem L1 = deformation_series(E, xi, job.order, job.tdeg, DeformationRoute::Direct);
    TateElem L2 = deformation_series(E, xi, job.order, job.tdeg, DeformationRoute::MatrixProduct);
    rep["result"]["series"] = tate_to_json(L1);
    rep["result"]["routes_agree"] = (L1 - L2).is_apparent_zero();
    return out;
  }
  if (job.op == "specialize_log") {
    DrinfeldModule E = need_module();
    rep["module"] = module_to_json(E);
    WElem xi = need_xi();
    long long N = job.order > 0 ? job.order : default_series_order(E, xi, job.prec);
    WElem v = specialize_log(E, xi, N, job.prec);
    rep["result"]["value"] = welem_to_json(v);
    rep["result"]["order_used"] = N;
    return out;
  }
  if (job.op == "phi_j") {
    DrinfeldModule E = need_module();
    rep["module"] = module_to_json(E);
    WElem xi = need_xi();
    if (job.j < 0) raise(err::PARSE, "operation requires --j");
    WElem v = frobenius_inverse_phi_j(E, xi, job.j);
    rep["result"]["value"] = welem_to_json(v);
    // cross-check against the logarithm coefficient
    WElem oracle = log_series(E, job.j).coeff(job.j) * xi.frobenius_twist(job.j);
    rep["result"]["matches_log_coefficient"] = (v - oracle).is_apparent_zero();
    return out;
  }
  if (job.op == "anderson_check") {
    DrinfeldModule E = need_module();
    rep["module"] = module_to_json(E);
    WElem xi = need_xi();
    AndersonCheck ac = anderson_exp_check(E, xi, job.order, job.tdeg);
    rep["result"]["residual"] = norm_to_json(ac.residual);
    bool ok = ac.ok(W->e * std::min<long long>(job.prec, 50));
    rep["result"]["pass"] = ok;
    out.exit_code = ok ? 0 : 1;
    return out;
  }
  if (job.op == "omega") {
    TateElem om = omega_series(W, job.tdeg, job.prec, policy);
    rep["result"]["series"] = tate_to_json(om);
    return out;
  }
  if (job.op == "psi_rank1" || job.op == "validate_psi") {
    DrinfeldModule E = need_module();
    rep["module"] = module_to_json(E);
    TateMat Psi = need_psi(E);
    PsiResidual res = validate_psi(E, Psi);
    rep["result"]["residual_zero"] = res.zero;
    rep["result"]["residual_uval_num"] = res.uval_num;
    rep["result"]["residual_uval_den"] = res.uval_den;
    if (job.op == "psi_rank1") rep["result"]["psi"] = tatemat_to_json(Psi);
    return out;
  }
  if (job.op == "period_lattice") {
    DrinfeldModule E = need_module();
    rep["module"] = module_to_json(E);
    TateMat Psi = need_psi(E);
    LatticeBasis L =
        period_lattice(E, Psi, job.degree_bound, std::min<long long>(job.prec, 60));
    json gens = json::array();
    for (const auto& g : L.gens) gens.push_back(welem_to_json(g));
    rep["result"]["generators"] = gens;
    rep["result"]["cert_uval"] = L.cert_uval;
    return out;
  }
  if (job.op == "ext_log") {
    DrinfeldModule E = need_module();
    rep["module"] = module_to_json(E);
    WElem xi = need_xi();
    TateMat Psi = need_psi(E);
    CosetValue cv = ext_log(E, Psi, xi, policy, job.prec);
    rep["result"]["representative"] = welem_to_json(cv.rep);
    rep["result"]["branch"] = cv.branch;
    return out;
  }
  if (job.op == "ord_norm") {
    WElem x = need_xi();
    if (x.is_apparent_zero())
      raise(err::INDETERMINATE, "norm of an apparent zero is indeterminate");
    OrdValue o = x.ord_theta();
    rep["result"] = {{"ord_num", o.num}, {"ord_den", o.den},
                     {"norm", norm_to_json(x)}};
    return out;
  }
  if (job.op == "root_q_minus_1") {
    WElem x = need_xi();
    WElem y = x.root_q_minus_1(policy, job.prec);
    rep["result"]["root"] = welem_to_json(y);
    long long qm1 = W->q() - 1;
    rep["result"]["residual"] = norm_to_json(y.pow(qm1) - x);
    return out;
  }
  if (job.op == "newton_polygon") {
    // diagnostic dump for the coefficient-equation shape Y^q + theta^q Y - c
    WElem c = need_xi();
    std::vector<WElem> coeffs((std::size_t)W->q() + 1, WElem::zero(W));
    coeffs[0] = -c;
    coeffs[1] = WElem::theta(W).pow(W->q());
    coeffs[(std::size_t)W->q()] = WElem::one(W);
    NewtonPolygonData d = newton_polygon(coeffs);
    json pts = json::array(), edges = json::array();
    for (const auto& p : d.points) pts.push_back({{"i", p.i}, {"uval", p.uval}});
    for (const auto& ed : d.edges)
      edges.push_back({{"i0", ed.i0}, {"i1", ed.i1}, {"rise", ed.rise},
                       {"length", ed.length()},
                       {"integral_root_val", ed.integral_root_val()}});
    rep["result"] = {{"points", pts}, {"edges", edges}};
    return out;
  }
  if (job.op == "carlitz_kinfty_branch") {
    WElem alpha = need_xi();
    std::vector<SolveStep> steps;
    WElem v = carlitz_kinfty_branch(W, alpha, job.tdeg, job.prec, &steps);
    rep["result"]["value"] = welem_to_json(v);
    bool all_len1 = true;
    for (const auto& s : steps) all_len1 = all_len1 && s.length_one;
    rep["result"]["all_edges_length_one"] = all_len1;
    rep["result"]["steps"] = (long long)steps.size();
    return out;
  }
  if (job.op == "verify_inside_radius" || job.op == "verify_functional_equation" ||
      job.op == "verify_inverse_of_exp") {
    DrinfeldModule E = need_module();
    rep["module"] = module_to_json(E);
    WElem xi = need_xi();
    TateMat Psi = need_psi(E);
    LatticeBasis L =
        period_lattice(E, Psi, job.degree_bound, std::min<long long>(job.prec, 60));
    VerifyOutcome v;
    if (job.op == "verify_inside_radius")
      v = verify_inside_radius(E, Psi, L, xi, policy, std::min<long long>(job.prec, 60));
    else if (job.op == "verify_functional_equation")
      v = verify_functional_equation(E, Psi, L, xi, policy, std::min<long long>(job.prec, 60));
    else
      v = verify_inverse_of_exp(E, Psi, L, xi, policy, std::min<long long>(job.prec, 60));
    rep["result"] = verify_to_json(v);
    out.exit_code = v.pass ? 0 : 1;
    return out;
  }
  if (job.op == "exp_lattice_product") {
    DrinfeldModule E = need_module();
    rep["module"] = module_to_json(E);
    WElem z = need_xi();
    TateMat Psi = need_psi(E);
    LatticeBasis L =
        period_lattice(E, Psi, job.degree_bound, std::min<long long>(job.prec, 60));
    WElem v = exp_from_lattice_product(L, z, std::max<long long>(job.j, 4));
    rep["result"]["value"] = welem_to_json(v);
    return out;
  }
  raise(err::PARSE, "unknown operation '" + job.op + "'");
}

}  // namespace fflog
