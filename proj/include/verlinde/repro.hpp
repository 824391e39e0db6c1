#pragma once

#include <string>
#include <vector>

namespace verlinde {

struct ReproCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // set on failure
};

/// Reproduction suite for the quotient-group reference data: SO(3)
/// classification lists at k = 4, 6, 8, 10, SU(3)/Z3 lists at k = 3, 6,
/// the simple-current modular invariants, and the level invariants.
std::vector<ReproCheck> run_repro();

} // namespace verlinde
