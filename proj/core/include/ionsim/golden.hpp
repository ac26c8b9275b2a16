#pragma once

#include <string>
#include <vector>

namespace ionsim::golden {

struct GoldenResult {
  std::string group;  // module tag, e.g. "atomic", "trap"
  std::string name;
  bool pass;
  std::string detail; // measured vs expected summary
};

//! Runs every textbook golden value; filter is a substring match on the
//! group tag ("" runs everything).
std::vector<GoldenResult> run_golden_suite(const std::string& filter = "");

} // namespace ionsim::golden
