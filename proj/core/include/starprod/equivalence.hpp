#pragma once

#include "starprod/cocycle.hpp"
#include "starprod/modefield.hpp"
#include "starprod/polynomial.hpp"
#include "starprod/report.hpp"

#include <optional>
#include <span>
#include <vector>

namespace starprod {

/// Polynomial 1-cochain beta with beta(0) = 0: the gauge connecting two
/// cohomologous products. Validated on construction (zero constant term,
/// degree <= 6).
class GaugeCochain {
public:
    GaugeCochain(int dimension, Polynomial beta);

    int dimension() const { return dimension_; }
    const Polynomial& beta() const { return beta_; }
    Complex eval(const MomentumVector& p) const;
    /// (d beta)(p, q) = beta(q) - beta(p) + beta(p - q).
    Complex coboundary(const MomentumVector& p, const MomentumVector& q) const;

private:
    int dimension_;
    Polynomial beta_;
};

/// Mode-wise gauge action: each mode coefficient is multiplied by
/// exp(beta(p)). Throws RangeError if Re beta exceeds the overflow guard.
ModeField gauge_transform(const ModeField& f, const GaugeCochain& gauge);

struct EquivalenceOptions {
    double tol = 1e-9;
    /// Sampling of the gauge-consistency precondition alpha1 - alpha2 = d beta.
    int precondition_samples = 48;
    double precondition_tol = 1e-9;
    std::uint64_t seed = 7151;
};

/// Integral identity connecting two cohomologous products: with
/// alpha1 = alpha2 + d beta checked pointwise first (on failure the report
/// comes back with precondition_failed set instead of throwing),
///
///   integral( (e^beta f_1) *_{alpha2} ... *_{alpha2} (e^beta f_n) )
///     = integral( f_1 *_{alpha1} ... *_{alpha1} f_n ).
///
/// The residual is relative: |L - R| / max(1, peak intermediate coefficient
/// magnitude across both chains).
Report check_quantum_equivalence(const Cocycle& alpha1, const Cocycle& alpha2,
                                 const GaugeCochain& gauge, std::span<const ModeField> fields,
                                 double tol, const EquivalenceOptions& options = {});

/// Cyclicity of the integral: integral(f_1 * ... * f_k) equals
/// integral(f_k * f_1 * ... * f_{k-1}), with the same relative residual
/// normalization as check_quantum_equivalence.
Report check_trace_property(const Cocycle& alpha, std::span<const ModeField> fields, double tol);

/// A trial that broke the integral identity: which trial, how badly, and the
/// plane-wave fields that did it.
struct ViolationWitness {
    int trial = 0;
    double violation = 0.0;
    std::vector<ModeField> fields;
};

/// Randomized search for a violation of the integral identity between two
/// products under the given gauge (pass a zero gauge to compare the bare
/// products). Draws zero-sum plane-wave triples so the integrals are
/// decisive, and returns the first trial whose violation exceeds
/// `threshold`, or nullopt after `max_trials`.
std::optional<ViolationWitness> find_equivalence_violation(
    const Cocycle& alpha1, const Cocycle& alpha2, const GaugeCochain& gauge,
    std::uint64_t seed, int max_trials = 1000, double threshold = 1e-6);

}  // namespace starprod
