#pragma once

#include <string>
#include <vector>

#include "finkin/linkage.hpp"

namespace finkin::cli {

struct CheckResult {
    std::string name;
    double value = 0.0;      // measured quantity (max error, or the derived value)
    double tolerance = 0.0;  // pass threshold on value
    bool passed = false;
    std::string note;
};

/// Cross-checks the general, symmetric and closed-form solvers against each
/// other and against the assembly relations, the analytic rates against finite
/// differences, and the designer against its inverse, for one mechanism. Also
/// re-derives the reference prototype dimensions. Never throws: a check whose
/// precondition fails is reported as failed.
std::vector<CheckResult> run_consistency_suite(const linkage::MechanismParams& p);

}  // namespace finkin::cli
