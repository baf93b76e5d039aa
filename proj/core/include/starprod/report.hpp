#pragma once

#include <string>
#include <vector>

namespace starprod {

/// One verification entry. Every check records the worst residual it saw and
/// the threshold it was held to, so a report is auditable, not just a bool.
struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string detail;  ///< optional context, e.g. the witness point
};

/// Outcome of a verification run: a list of named residual checks.
struct Report {
    std::vector<CheckResult> checks;
    /// Set when the run's stated precondition failed; the remaining checks
    /// were then skipped rather than reported as numeric failures.
    bool precondition_failed = false;

    void add(std::string name, double max_residual, double tol, std::string detail = {});
    bool pass() const;
    /// Largest residual across all entries (0 when empty).
    double max_residual() const;
};

}  // namespace starprod
