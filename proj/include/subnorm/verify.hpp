#pragma once

#include <functional>
#include <string>
#include <vector>

#include "subnorm/config.hpp"

namespace subnorm {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Values behind the verdict, or the error that stopped the check.
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

/// Ids 1..11 in order.
std::vector<int> all_criteria();

/// A criterion fails when any check fails, when it throws, or when it runs
/// past its time budget. DomainError for an unknown id.
CriterionResult run_criterion(int id, const Config& caps = {});

/// Runs the given criteria in order, calling `on_result` after each one.
std::vector<CriterionResult> run_criteria(
    const std::vector<int>& ids, const Config& caps = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  title: detail [0.012s of 60s]"
std::string format_result(const CriterionResult& r);

}  // namespace subnorm
