#pragma once

#include <span>
#include <string>
#include <vector>

namespace losaw {

// One published cell: mean metric over Monte Carlo runs for one algorithm.
struct ReferenceValue {
  const char* table;      // "2", "3", "5", "A1".."A6"
  const char* data;       // "discrete" or "continuous"
  int p;
  double phi;
  int n;
  int regression;
  const char* metric;     // r2_test, r2_ind, pr_auc, fi_gap
  const char* algorithm;  // rf, losaw-rf, gd, losaw-gd
  double value;
};

std::span<const ReferenceValue> reference_values();
std::vector<std::string> reference_table_ids();

}  // namespace losaw
