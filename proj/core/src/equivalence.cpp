#include "starprod/equivalence.hpp"

#include "starprod/errors.hpp"
#include "starprod/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace starprod {

namespace {

constexpr double kExpGuard = 700.0;
constexpr int kBetaDegreeCap = 6;

struct ChainResult {
    Complex value{0.0, 0.0};  ///< integral of the chained product
    double peak = 1.0;        ///< largest coefficient magnitude seen anywhere
};

/// Folds the chain while tracking the largest intermediate coefficient, so
/// residuals can be normalized relative to the scale the computation actually
/// reached.
ChainResult integrate_chain(const Cocycle& alpha, std::span<const ModeField> fields) {
    ChainResult result;
    ModeField acc = fields[0];
    result.peak = std::max(result.peak, acc.max_abs_coefficient());
    for (std::size_t i = 1; i < fields.size(); ++i) {
        result.peak = std::max(result.peak, fields[i].max_abs_coefficient());
        acc = star(alpha, acc, fields[i]);
        result.peak = std::max(result.peak, acc.max_abs_coefficient());
    }
    result.value = integral(acc);
    return result;
}

}  // namespace

GaugeCochain::GaugeCochain(int dimension, Polynomial beta)
    : dimension_(dimension), beta_(std::move(beta)) {
    if (dimension < 1) {
        throw ValidationError("gauge dimension must be >= 1");
    }
    if (beta_.variables() != dimension) {
        throw ValidationError("gauge beta is over " + std::to_string(beta_.variables()) +
                              " variables, expected " + std::to_string(dimension));
    }
    if (std::abs(beta_.constant_term()) != 0.0) {
        throw ValidationError("gauge beta must have a vanishing constant term");
    }
    if (beta_.total_degree() > kBetaDegreeCap) {
        throw ValidationError("gauge beta degree " + std::to_string(beta_.total_degree()) +
                              " exceeds the cap of " + std::to_string(kBetaDegreeCap));
    }
}

Complex GaugeCochain::eval(const MomentumVector& p) const { return beta_.eval(p); }

Complex GaugeCochain::coboundary(const MomentumVector& p, const MomentumVector& q) const {
    return (beta_.eval(q) - beta_.eval(p)) + beta_.eval(p - q);
}

ModeField gauge_transform(const ModeField& f, const GaugeCochain& gauge) {
    if (f.dimension() != gauge.dimension()) {
        throw InputError("gauge transform dimension mismatch (field " +
                         std::to_string(f.dimension()) + ", gauge " +
                         std::to_string(gauge.dimension()) + ")");
    }
    ModeField out(f.dimension());
    for (const auto& [freq, coeff] : f.modes()) {
        const Complex b = gauge.eval(freq);
        if (std::abs(b.real()) > kExpGuard) {
            throw RangeError("exponent overflow in gauge transform: Re beta = " +
                             std::to_string(b.real()));
        }
        out.add_mode(freq, coeff * std::exp(b));
    }
    return out;
}

Report check_quantum_equivalence(const Cocycle& alpha1, const Cocycle& alpha2,
                                 const GaugeCochain& gauge, std::span<const ModeField> fields,
                                 double tol, const EquivalenceOptions& options) {
    const int dim = gauge.dimension();
    if (alpha1.dimension() != dim || alpha2.dimension() != dim) {
        throw InputError("equivalence check dimension mismatch");
    }
    if (fields.empty()) {
        throw InputError("equivalence check needs at least one field");
    }
    for (const auto& f : fields) {
        if (f.dimension() != dim) {
            throw InputError("equivalence check field dimension mismatch");
        }
    }

    Report report;

    // Precondition: the two cocycles differ by exactly the gauge's
    // coboundary. Sampled pointwise; on failure the integral comparison is
    // skipped because the identity is not expected to hold.
    double pre_worst = 0.0;
    for (const auto& [p, q] : sample_pairs(dim, options.precondition_samples, options.seed)) {
        const Complex diff = alpha1.eval(p, q) - alpha2.eval(p, q);
        pre_worst = std::max(pre_worst, std::abs(diff - gauge.coboundary(p, q)));
    }
    report.add("gauge_consistency", pre_worst, options.precondition_tol);
    if (pre_worst > options.precondition_tol) {
        report.precondition_failed = true;
        return report;
    }

    std::vector<ModeField> gauged;
    gauged.reserve(fields.size());
    for (const auto& f : fields) {
        gauged.push_back(gauge_transform(f, gauge));
    }

    // Gauged fields multiply under alpha2; plain fields under alpha1.
    const ChainResult lhs = integrate_chain(alpha2, gauged);
    const ChainResult rhs = integrate_chain(alpha1, fields);
    const double scale = std::max({1.0, lhs.peak, rhs.peak});
    const double residual = std::abs(lhs.value - rhs.value) / scale;
    report.add("integral_identity_n" + std::to_string(fields.size()), residual, tol,
               "lhs=" + std::to_string(std::abs(lhs.value)) +
                   " rhs=" + std::to_string(std::abs(rhs.value)));
    return report;
}

Report check_trace_property(const Cocycle& alpha, std::span<const ModeField> fields,
                            double tol) {
    if (fields.empty()) {
        throw InputError("trace check needs at least one field");
    }
    const ChainResult plain = integrate_chain(alpha, fields);

    std::vector<ModeField> rotated;
    rotated.reserve(fields.size());
    rotated.push_back(fields.back());
    for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
        rotated.push_back(fields[i]);
    }
    const ChainResult cycled = integrate_chain(alpha, rotated);

    const double scale = std::max({1.0, plain.peak, cycled.peak});
    const double residual = std::abs(plain.value - cycled.value) / scale;
    Report report;
    report.add("trace_cyclicity_k" + std::to_string(fields.size()), residual, tol,
               "plain=" + std::to_string(std::abs(plain.value)) +
                   " cycled=" + std::to_string(std::abs(cycled.value)));
    return report;
}

std::optional<ViolationWitness> find_equivalence_violation(
    const Cocycle& alpha1, const Cocycle& alpha2, const GaugeCochain& gauge,
    std::uint64_t seed, int max_trials, double threshold) {
    const int dim = gauge.dimension();
    if (alpha1.dimension() != dim || alpha2.dimension() != dim) {
        throw InputError("violation search dimension mismatch");
    }
    // Plane-wave triples with frequencies summing to zero: only then does
    // the chained product keep a zero mode, making the integrals decisive.
    MomentumSampler sampler(dim, seed, /*bound=*/2, /*denominator_cap=*/4);
    for (int trial = 0; trial < max_trials; ++trial) {
        const MomentumVector a = sampler.next_nonzero();
        const MomentumVector b = sampler.next_nonzero();
        const MomentumVector c = -(a + b);
        std::vector<ModeField> fields{ModeField::plane_wave(a), ModeField::plane_wave(b),
                                      ModeField::plane_wave(c)};
        std::vector<ModeField> gauged;
        gauged.reserve(fields.size());
        for (const auto& f : fields) {
            gauged.push_back(gauge_transform(f, gauge));
        }
        const ChainResult lhs = integrate_chain(alpha2, gauged);
        const ChainResult rhs = integrate_chain(alpha1, fields);
        const double violation = std::abs(lhs.value - rhs.value);
        if (violation > threshold) {
            return ViolationWitness{trial, violation, std::move(fields)};
        }
    }
    return std::nullopt;
}

}  // namespace starprod
