#include "acceptance.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  namespace acc = isoharmonic::acceptance;
  acc::Options opt;
  std::string json_out;
  CLI::App app{"acceptance suite: one pass/fail line per criterion"};
  app.add_option("--seed", opt.seed, "seed for the randomized criteria");
  app.add_option("--only", opt.only, "criterion ids to run")->check(CLI::Range(1, 12));
  app.add_option("--nodes", opt.quad.nodes, "initial quadrature node count")->check(CLI::PositiveNumber);
  app.add_option("--json", json_out, "write the report as JSON");
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  isoharmonic::io::json report = isoharmonic::io::json::array();
  for (int id = 1; id <= 12; ++id) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    const acc::CriterionResult r = acc::run_criterion(id, opt);
    std::cout << acc::summary_line(r) << std::endl;
    all = all && r.pass();
    report.push_back(acc::to_json(r, opt.seed));
  }
  if (!json_out.empty()) {
    std::ofstream os(json_out);
    os << isoharmonic::io::dump(report) << "\n";
  }
  return all ? 0 : 1;
}
