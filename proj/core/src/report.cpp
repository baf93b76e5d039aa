#include "starprod/report.hpp"

#include <algorithm>

namespace starprod {

void Report::add(std::string name, double max_residual, double tol, std::string detail) {
    CheckResult r;
    r.name = std::move(name);
    r.max_residual = max_residual;
    r.tol = tol;
    r.pass = max_residual <= tol;
    r.detail = std::move(detail);
    checks.push_back(std::move(r));
}

bool Report::pass() const {
    if (precondition_failed) {
        return false;
    }
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

double Report::max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) {
        m = std::max(m, c.max_residual);
    }
    return m;
}

}  // namespace starprod
