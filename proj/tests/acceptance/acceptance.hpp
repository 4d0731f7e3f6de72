#pragma once

#include "isoharmonic/contour.hpp"
#include "isoharmonic/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace isoharmonic::acceptance {

struct Check {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool at_least = false;  // pass when value >= bound
  std::string detail;
  bool pass() const;
  double severity() const;  // value / bound, inverted for at_least
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;
  bool pass() const;
  const Check& worst() const;
};

struct Options {
  std::uint64_t seed = 20241014;
  QuadOptions quad;
  std::vector<int> only;  // empty: all twelve
};

std::vector<CriterionResult> run(const Options& opt = {});
CriterionResult run_criterion(int id, const Options& opt = {});

// "[PASS]  7  title  worst-check value <= bound"
std::string summary_line(const CriterionResult& r);
io::json to_json(const CriterionResult& r, std::uint64_t seed);

}  // namespace isoharmonic::acceptance
