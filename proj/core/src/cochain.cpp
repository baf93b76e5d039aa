#include "starprod/cochain.hpp"

#include "starprod/errors.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

namespace starprod {

NCochain::NCochain(int arity, int dimension, Evaluator evaluator)
    : arity_(arity), dimension_(dimension), evaluator_(std::move(evaluator)) {
    if (arity < 1) {
        throw InputError("cochain arity must be >= 1, got " + std::to_string(arity));
    }
    if (dimension < 1) {
        throw InputError("cochain dimension must be >= 1, got " + std::to_string(dimension));
    }
    if (!evaluator_) {
        throw InputError("cochain evaluator must be callable");
    }
}

NCochain NCochain::zero(int arity, int dimension) {
    return NCochain(arity, dimension,
                    [](std::span<const MomentumVector>) { return Complex{0.0, 0.0}; });
}

Complex NCochain::eval(std::span<const MomentumVector> args) const {
    if (static_cast<int>(args.size()) != arity_) {
        throw InputError("cochain of arity " + std::to_string(arity_) + " called with " +
                         std::to_string(args.size()) + " arguments");
    }
    for (const auto& p : args) {
        if (p.dimension() != dimension_) {
            throw InputError("cochain over R^" + std::to_string(dimension_) +
                             " called with a momentum of dimension " +
                             std::to_string(p.dimension()));
        }
    }
    return evaluator_(args);
}

Complex NCochain::operator()(const MomentumVector& p) const {
    const std::array<MomentumVector, 1> args{p};
    return eval(args);
}

Complex NCochain::operator()(const MomentumVector& p, const MomentumVector& q) const {
    const std::array<MomentumVector, 2> args{p, q};
    return eval(args);
}

Complex NCochain::operator()(const MomentumVector& p, const MomentumVector& q,
                             const MomentumVector& r) const {
    const std::array<MomentumVector, 3> args{p, q, r};
    return eval(args);
}

Complex NCochain::operator()(const MomentumVector& p, const MomentumVector& q,
                             const MomentumVector& r, const MomentumVector& s) const {
    const std::array<MomentumVector, 4> args{p, q, r, s};
    return eval(args);
}

NCochain to_cochain(const Polynomial& beta) {
    if (beta.variables() < 1) {
        throw InputError("1-cochain needs a polynomial over at least one variable");
    }
    return NCochain(1, beta.variables(), [beta](std::span<const MomentumVector> args) {
        return beta.eval(args[0]);
    });
}

NCochain coboundary(const NCochain& c) {
    const int n = c.arity();
    if (n > 3) {
        throw InputError("coboundary implemented for arity 1..3, got arity " +
                         std::to_string(n));
    }
    // Unit scaling per degree: 1 on odd arities, i on even ones. This is what
    // makes d(d c) cancel across the parity step.
    const Complex eps = (n % 2 == 1) ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
    const double shift_sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{n+1}
    return NCochain(
        n + 1, c.dimension(),
        [c, n, eps, shift_sign](std::span<const MomentumVector> args) {
            Complex total{0.0, 0.0};
            std::vector<MomentumVector> sub;
            sub.reserve(static_cast<std::size_t>(n));
            double sign = 1.0;
            for (int omit = 0; omit <= n; ++omit) {
                sub.clear();
                for (int j = 0; j <= n; ++j) {
                    if (j != omit) {
                        sub.push_back(args[static_cast<std::size_t>(j)]);
                    }
                }
                total += sign * c.eval(sub);
                sign = -sign;
            }
            sub.clear();
            const MomentumVector& last = args[static_cast<std::size_t>(n)];
            for (int j = 0; j < n; ++j) {
                sub.push_back(args[static_cast<std::size_t>(j)] - last);
            }
            total += shift_sign * c.eval(sub);
            return eps * total;
        });
}

Report check_d_squared_zero(const NCochain& c,
                            std::span<const std::vector<MomentumVector>> samples,
                            double tol) {
    if (c.arity() > 2) {
        throw InputError("d^2 check needs arity <= 2 so both coboundaries are defined");
    }
    const NCochain dd = coboundary(coboundary(c));
    double worst = 0.0;
    std::string where;
    for (const auto& tuple : samples) {
        if (static_cast<int>(tuple.size()) != dd.arity()) {
            throw InputError("d^2 sample tuple has arity " + std::to_string(tuple.size()) +
                             ", expected " + std::to_string(dd.arity()));
        }
        const double r = std::abs(dd.eval(tuple));
        if (r > worst) {
            worst = r;
            where = "tuple " + std::to_string(&tuple - samples.data());
        }
    }
    Report report;
    report.add("d_squared_zero", worst, tol, where);
    return report;
}

Report check_membership(const NCochain& c, std::span<const MomentumVector> points,
                        double tol) {
    if (points.empty()) {
        throw InputError("membership check needs at least one sample point");
    }
    const int n = c.arity();
    const int dim = c.dimension();
    const MomentumVector zero = MomentumVector::zero(dim);

    // Cycles deterministically through the point pool when a condition needs
    // several free arguments.
    std::size_t cursor = 0;
    const auto draw = [&]() -> const MomentumVector& {
        const MomentumVector& p = points[cursor % points.size()];
        ++cursor;
        return p;
    };

    Report report;
    if (n == 1) {
        report.add("vanishes_at_zero", std::abs(c(zero)), tol);
        return report;
    }

    double last_zero_worst = 0.0;
    double adjacent_worst = 0.0;
    std::vector<MomentumVector> args(static_cast<std::size_t>(n), zero);
    for (std::size_t s = 0; s < points.size(); ++s) {
        // Last argument zero.
        for (int j = 0; j + 1 < n; ++j) {
            args[static_cast<std::size_t>(j)] = draw();
        }
        args[static_cast<std::size_t>(n - 1)] = zero;
        last_zero_worst = std::max(last_zero_worst, std::abs(c.eval(args)));

        // Adjacent equal pair at each position (non-cyclic).
        for (int pos = 0; pos + 1 < n; ++pos) {
            for (int j = 0; j < n; ++j) {
                args[static_cast<std::size_t>(j)] = draw();
            }
            args[static_cast<std::size_t>(pos + 1)] = args[static_cast<std::size_t>(pos)];
            adjacent_worst = std::max(adjacent_worst, std::abs(c.eval(args)));
        }
    }
    report.add("vanishes_last_argument_zero", last_zero_worst, tol);
    report.add("vanishes_adjacent_equal_pair", adjacent_worst, tol);
    return report;
}

}  // namespace starprod
