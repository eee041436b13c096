#pragma once

#include <string>
#include <vector>

namespace colorideals {

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Seeded oracle-equivalence checks across the library; a few seconds.
std::vector<SelftestResult> run_selftest();

}  // namespace colorideals
