#pragma once

#include <optional>
#include <string>
#include <vector>

namespace coulscat {

struct ValidationCheck {
    std::string name;
    double measured = 0.0;   // discrepancy the check produced
    double tolerance = 0.0;  // bound it must stay under
    bool pass = false;
    std::string detail;
};

/// Built-in cross-check battery: analytic principal-value cases, the
/// sinc/log resolvent identity, and special-function identities.  A
/// tolerance override replaces every check's bound (useful for exercising
/// the failure path).
std::vector<ValidationCheck> run_validation(std::optional<double> tolerance_override = {});

bool all_passed(const std::vector<ValidationCheck>& checks);

}  // namespace coulscat
