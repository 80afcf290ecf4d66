#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcover {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double limit_seconds = 0.0;  // 0 means no pinned time budget
    std::string detail;
};

// Runs the twelve release checks in order, streaming one pass/fail line per
// criterion to `out` as each finishes.  A criterion with a pinned time budget
// fails when it exceeds it, even if every identity holds.  `jobs` bounds the
// worker threads used by the parallel criteria.
std::vector<CriterionResult> run_acceptance(int jobs, std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace qcover
