#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace levyslab::cli {

enum class Bound { at_most, at_least };

/// One measured quantity against its threshold.
struct Check {
  std::string label;
  double measured = 0.0;
  double threshold = 0.0;
  Bound bound = Bound::at_most;

  bool passed() const noexcept;
  /// Fraction of the allowance used: measured/threshold for an upper bound,
  /// threshold/measured for a lower bound. Above 1 means failure.
  double usage() const noexcept;
};

enum class Status { pass, fail, skip };

const char* to_string(Status s) noexcept;

struct CriterionResult {
  std::string name;
  std::vector<Check> checks;
  bool skipped = false;

  Status status() const noexcept;
  /// The check closest to (or furthest past) its threshold.
  const Check* binding() const noexcept;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  bool quick = false;
  bool inject_symbol_fault = false;
};

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<CriterionResult(const SuiteOptions&)> run;
};

/// All criteria, sorted by name.
const std::vector<Criterion>& criteria();

/// Runs every criterion in name order.
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

/// `name,status,measured,threshold` lines under a header row.
std::string format_summary(const std::vector<CriterionResult>& results);

/// Exit code of a suite: 0 when nothing failed, 1 otherwise.
int suite_exit_code(const std::vector<CriterionResult>& results);

}  // namespace levyslab::cli
