#pragma once

#include <string>
#include <vector>

namespace borel {

struct SelftestResult {
  std::string name;
  bool passed = false;
};

/// Worked examples with known answers, one result per example.
std::vector<SelftestResult> run_selftest();

}  // namespace borel
