#pragma once

#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace levysmile::verify {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    /// Returns pass/fail and fills detail.
    std::function<bool(std::string& detail)> run;
};

[[nodiscard]] std::vector<Criterion> acceptance_criteria();

/// Runs the selected criteria (all when `only` is empty), printing one line
/// per criterion to `out` as each finishes. A criterion that throws fails
/// with the error message as detail; exceeding the runtime budget fails it.
std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::set<int>& only = {});

[[nodiscard]] std::string format_result(const CriterionResult& r);

}  // namespace levysmile::verify
