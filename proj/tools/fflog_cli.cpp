// Command-line driver: define a working field and a module, run one
// operation or a named suite, and emit a deterministic JSON report.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "fflog/io.hpp"

using namespace fflog;

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fflog: exact Drinfeld-module logarithm computations"};
  app.failure_message(CLI::FailureMessage::simple);

  std::string field = "2,1,1,1";
  std::string module;
  JobSpec job;
  app.add_option("--field", field, "p,m,s,e for W = F_{q^s}((u)), theta = u^-e");
  app.add_option("--module", module, "r,kappa_1,...,kappa_r (theta expressions)");
  app.add_option("--op", job.op, "operation name or 'suite'")->required();
  app.add_option("--xi", job.xi, "element expression (also used for alpha/z)");
  app.add_option("--prec", job.prec, "working precision in u-digits");
  app.add_option("--tdeg", job.tdeg, "t-degree bound D");
  app.add_option("--order", job.order, "series truncation order N");
  app.add_option("--n", job.n, "coefficient index n");
  app.add_option("--j", job.j, "twist index j (also the product height)");
  app.add_option("--dbound", job.degree_bound, "multiplier degree bound for periods");
  app.add_option("--policy", job.policy, "branch policy: least or kinfty");
  app.add_option("--psi", job.psi_file, "trivialization matrix file (JSON)");
  app.add_option("--out", job.out_file, "report output path (default stdout)");
  app.add_option("--suite", job.suite, "suite name for --op suite");
  app.add_flag("--power-wrap", job.power_wrap, "replace each kappa by kappa^(q^r)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << "\n" << e.what() << "\n";
    return 2;
  }

  int code = 0;
  json report;
  try {
    auto fp = split_commas(field);
    if (fp.size() != 4) throw math_error(err::PARSE, "--field wants p,m,s,e");
    job.p = std::stoi(fp[0]);
    job.m = std::stoi(fp[1]);
    job.s = std::stoi(fp[2]);
    job.e = std::stoll(fp[3]);
    if (!module.empty()) {
      auto mp = split_commas(module);
      job.rank = std::stoll(mp[0]);
      job.kappas.assign(mp.begin() + 1, mp.end());
    }
    RunResult res = run_job(job);
    report = std::move(res.report);
    code = res.exit_code;
  } catch (const math_error& e) {
    report["error"] = {{"code", e.code()}, {"message", e.what()}};
    code = e.code() == err::PARSE ? 2 : 3;
  } catch (const std::invalid_argument& e) {
    report["error"] = {{"code", "PARSE"}, {"message", e.what()}};
    code = 2;
  } catch (const std::exception& e) {
    report["error"] = {{"code", "INTERNAL"}, {"message", e.what()}};
    code = 3;
  }

  std::string text = report.dump(2) + "\n";
  if (!job.out_file.empty()) {
    std::ofstream out(job.out_file);
    out << text;
  } else {
    std::cout << text;
  }
  return code;
}
