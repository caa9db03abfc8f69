#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "serre/parallel.hpp"

namespace serre {

struct CriterionResult {
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

std::vector<CriterionResult> run_acceptance_criteria(bool quick);

// Runs the full acceptance suite (quick = reduced but representative subset),
// printing one pass/fail line per criterion.  Returns true iff all passed.
bool run_acceptance(bool quick, std::ostream& os);

}  // namespace serre
