#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace abring::acceptance {

struct CriterionResult {
  int id = 0;
  bool passed = false;
  std::string title;
  std::vector<std::string> details;
  double seconds = 0.0;
};

struct Options {
  std::vector<int> only;  // empty runs every criterion
  /// Config used for the determinism criterion; the built-in table1 sweep when empty.
  std::optional<std::string> determinism_config;
};

inline constexpr int kCriterionCount = 10;

/// Runs the acceptance criteria in order, invoking on_result after each one.
std::vector<CriterionResult> run(const Options& options,
                                 const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  [3] Coulomb-limit spectrum (0.01 s)" followed by indented detail lines.
std::string format(const CriterionResult& result);

/// Built-in sweeps, identical to fixtures/table1.ini and fixtures/table2.ini.
std::string_view table1_config();
std::string_view table2_config();

}  // namespace abring::acceptance
