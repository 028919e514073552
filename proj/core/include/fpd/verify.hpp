#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fpd {

/// Quick: reduced grids, no time limits, no oracle. Standard: criteria 1-5,
/// 7 and 8. Oracle: Standard plus the thin/oracle comparison. Full: every
/// criterion with the full grids.
enum class VerifyMode { Quick, Standard, Oracle, Full };

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

std::vector<CriterionResult> run_verification(
    VerifyMode mode, const std::function<void(const CriterionResult&)>& on_result = {});

nlohmann::json to_json(const std::vector<CriterionResult>& results);
/// One line per criterion: "PASS  3  title (1.23 s): detail".
std::string render_results(const std::vector<CriterionResult>& results);

}  // namespace fpd
