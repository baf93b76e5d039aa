#include "starprod/cocycle.hpp"

#include "starprod/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace starprod {

namespace {

constexpr double kAntisymmetryTol = 1e-12;
constexpr int kBetaDegreeCap = 6;

/// Canonicalizes an antisymmetric matrix so that a_ji == -a_ij holds
/// bit-for-bit and the diagonal is exactly zero.
CMatrix canonical_antisymmetric(const CMatrix& theta) {
    const int n = theta.size();
    CMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Complex v = (theta(i, j) - theta(j, i)) * 0.5;
            out(i, j) = v;
            out(j, i) = -v;
        }
    }
    return out;
}

std::string format_point(const MomentumVector& p) {
    std::string out = "(";
    for (int i = 0; i < p.dimension(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_rational(p[i]);
    }
    out += ")";
    return out;
}

}  // namespace

StarCocycle::StarCocycle(CMatrix theta, Polynomial beta)
    : dimension_(theta.size()), theta_(std::move(theta)), beta_(std::move(beta)) {
    if (dimension_ < 1) {
        throw ValidationError("cocycle dimension must be >= 1");
    }
    if (theta_.antisymmetry_residual() > kAntisymmetryTol) {
        throw ValidationError("theta is not antisymmetric (residual " +
                              std::to_string(theta_.antisymmetry_residual()) + ")");
    }
    theta_ = canonical_antisymmetric(theta_);
    if (beta_.variables() != dimension_) {
        throw ValidationError("beta is over " + std::to_string(beta_.variables()) +
                              " variables but theta is " + std::to_string(dimension_) + "x" +
                              std::to_string(dimension_));
    }
    if (std::abs(beta_.constant_term()) != 0.0) {
        throw ValidationError("beta must have a vanishing constant term");
    }
    if (beta_.total_degree() > kBetaDegreeCap) {
        throw ValidationError("beta degree " + std::to_string(beta_.total_degree()) +
                              " exceeds the cap of " + std::to_string(kBetaDegreeCap));
    }
}

StarCocycle StarCocycle::harmonic(CMatrix theta) {
    const int n = theta.size();
    return StarCocycle(std::move(theta), Polynomial(n));
}

StarCocycle StarCocycle::pure_coboundary(int dimension, Polynomial beta) {
    return StarCocycle(CMatrix::zero(dimension), std::move(beta));
}

Complex StarCocycle::harmonic_part(const MomentumVector& p, const MomentumVector& q) const {
    require_same_dimension(p, q, "cocycle evaluation");
    if (p.dimension() != dimension_) {
        throw InputError("cocycle over R^" + std::to_string(dimension_) +
                         " evaluated at dimension " + std::to_string(p.dimension()));
    }
    const std::vector<double> pd = p.as_doubles();
    const std::vector<double> qd = q.as_doubles();
    // Antisymmetric pairing written so p == q and q == 0 cancel exactly:
    // each term is Theta_ij (p_i q_j - p_j q_i).
    Complex total{0.0, 0.0};
    for (int i = 0; i < dimension_; ++i) {
        for (int j = i + 1; j < dimension_; ++j) {
            const std::size_t si = static_cast<std::size_t>(i);
            const std::size_t sj = static_cast<std::size_t>(j);
            total += theta_(i, j) * (pd[si] * qd[sj] - pd[sj] * qd[si]);
        }
    }
    return total;
}

Complex StarCocycle::coboundary_part(const MomentumVector& p, const MomentumVector& q) const {
    // beta(q) - beta(p) + beta(p - q); the grouping makes the q == p and
    // q == 0 cases cancel bit-for-bit (beta(0) is exactly 0).
    return (beta_.eval(q) - beta_.eval(p)) + beta_.eval(p - q);
}

Complex StarCocycle::eval(const MomentumVector& p, const MomentumVector& q) const {
    if (beta_.empty()) {
        return harmonic_part(p, q);
    }
    return harmonic_part(p, q) + coboundary_part(p, q);
}

BlackBoxCocycle::BlackBoxCocycle(int dimension, Evaluator evaluator)
    : dimension_(dimension), evaluator_(std::move(evaluator)) {
    if (dimension < 1) {
        throw InputError("cocycle dimension must be >= 1");
    }
    if (!evaluator_) {
        throw InputError("black-box cocycle needs a callable evaluator");
    }
}

Complex BlackBoxCocycle::eval(const MomentumVector& p, const MomentumVector& q) const {
    require_same_dimension(p, q, "cocycle evaluation");
    if (p.dimension() != dimension_) {
        throw InputError("cocycle over R^" + std::to_string(dimension_) +
                         " evaluated at dimension " + std::to_string(p.dimension()));
    }
    return evaluator_(p, q);
}

Cocycle::Cocycle(StarCocycle structured)
    : structured_(std::make_shared<const StarCocycle>(std::move(structured))) {}

Cocycle::Cocycle(BlackBoxCocycle opaque)
    : opaque_(std::make_shared<const BlackBoxCocycle>(std::move(opaque))) {}

int Cocycle::dimension() const {
    return structured_ ? structured_->dimension() : opaque_->dimension();
}

Complex Cocycle::eval(const MomentumVector& p, const MomentumVector& q) const {
    return structured_ ? structured_->eval(p, q) : opaque_->eval(p, q);
}

const StarCocycle* Cocycle::structured() const { return structured_.get(); }

NCochain Cocycle::as_cochain() const {
    Cocycle self = *this;
    return NCochain(2, dimension(), [self](std::span<const MomentumVector> args) {
        return self.eval(args[0], args[1]);
    });
}

bool ThetaClass::pure_imaginary(double tol) const { return matrix.max_abs_real_part() <= tol; }

int ThetaClass::dim_h2_full() const { return dimension * (dimension - 1); }

int ThetaClass::dim_h2_restricted() const { return dimension * (dimension - 1) / 2; }

Complex eval_alpha(const Cocycle& alpha, const MomentumVector& p, const MomentumVector& q) {
    return alpha.eval(p, q);
}

Report check_cocycle_condition(const Cocycle& alpha, std::span<const TripleSample> samples,
                               double tol) {
    double worst = 0.0;
    std::string where;
    for (const auto& [p, q, r] : samples) {
        const Complex lhs = alpha.eval(p, q) + alpha.eval(q, r);
        const Complex rhs = alpha.eval(p, r) + alpha.eval(p - r, q - r);
        const double res = std::abs(lhs - rhs);
        if (res > worst) {
            worst = res;
            where = "p=" + format_point(p) + " q=" + format_point(q) + " r=" + format_point(r);
        }
    }
    Report report;
    report.add("cocycle_condition", worst, tol, where);
    return report;
}

Report check_unitality(const Cocycle& alpha, std::span<const MomentumVector> samples,
                       double tol) {
    double diag = 0.0;
    double zero_slot = 0.0;
    double corollary = 0.0;
    for (const auto& p : samples) {
        const MomentumVector zero = MomentumVector::zero(p.dimension());
        diag = std::max(diag, std::abs(alpha.eval(p, p)));
        zero_slot = std::max(zero_slot, std::abs(alpha.eval(p, zero)));
        corollary = std::max(corollary, std::abs(alpha.eval(zero, p) - alpha.eval(zero, -p)));
    }
    Report report;
    report.add("unitality_diagonal", diag, tol);
    report.add("unitality_zero_slot", zero_slot, tol);
    report.add("unitality_reflection", corollary, tol);
    return report;
}

Report check_harmonic(const Cocycle& alpha, std::span<const PairSample> samples, double tol) {
    double skew = 0.0;
    double parity = 0.0;
    double antisym = 0.0;
    for (const auto& [p, q] : samples) {
        skew = std::max(skew, std::abs(alpha.eval(p, q) + alpha.eval(p, p - q)));
        parity = std::max(parity, std::abs(alpha.eval(p, q) - alpha.eval(-p, -q)));
        antisym = std::max(antisym, std::abs(alpha.eval(p, q) + alpha.eval(q, p)));
    }
    Report report;
    report.add("harmonic_slot_reflection", skew, tol);
    report.add("harmonic_parity", parity, tol);
    report.add("harmonic_antisymmetry", antisym, tol);
    return report;
}

Report check_complex_property(const Cocycle& alpha, std::span<const PairSample> samples,
                              double tol) {
    double worst = 0.0;
    std::string where;
    for (const auto& [r, q] : samples) {
        const Complex lhs = std::conj(alpha.eval(r, q));
        const Complex rhs = alpha.eval(-r, q - r);
        const double res = std::abs(lhs - rhs);
        if (res > worst) {
            worst = res;
            where = "r=" + format_point(r) + " q=" + format_point(q);
        }
    }
    Report report;
    report.add("complex_conjugation_property", worst, tol, where);
    return report;
}

Cocycle harmonic_projection(const Cocycle& alpha) {
    if (const StarCocycle* s = alpha.structured()) {
        return Cocycle(StarCocycle::harmonic(s->theta()));
    }
    Cocycle inner = alpha;
    return Cocycle(BlackBoxCocycle(
        alpha.dimension(), [inner](const MomentumVector& p, const MomentumVector& q) {
            const MomentumVector s = p + q;
            return (inner.eval(s, q) - inner.eval(s, p)) * 0.5;
        }));
}

namespace {

/// Mixed second derivative d^2 alpha / dp_i dq_j at (p, q) by central
/// differences with step h (exact rational shifts).
Complex mixed_partial(const Cocycle& alpha, const MomentumVector& p, const MomentumVector& q,
                      int i, int j, const Rational& h) {
    const int dim = alpha.dimension();
    const MomentumVector ei = MomentumVector::scaled_unit(dim, i, h);
    const MomentumVector ej = MomentumVector::scaled_unit(dim, j, h);
    const Complex pp = alpha.eval(p + ei, q + ej);
    const Complex pm = alpha.eval(p + ei, q - ej);
    const Complex mp = alpha.eval(p - ei, q + ej);
    const Complex mm = alpha.eval(p - ei, q - ej);
    const double hd = to_double(h);
    return (pp - pm - mp + mm) / (4.0 * hd * hd);
}

Complex mixed_partial_refined(const Cocycle& alpha, const MomentumVector& p,
                              const MomentumVector& q, int i, int j, const Rational& h) {
    const Complex coarse = mixed_partial(alpha, p, q, i, j, h);
    const Complex fine = mixed_partial(alpha, p, q, i, j, h / 2);
    return (fine * 4.0 - coarse) / 3.0;  // one Richardson level: O(h^4)
}

}  // namespace

CMatrix extract_sigma(const Cocycle& alpha, const MomentumVector& p, const MomentumVector& q,
                      const Rational& step) {
    const int dim = alpha.dimension();
    if (p.dimension() != dim || q.dimension() != dim) {
        throw InputError("sigma extraction point dimension mismatch");
    }
    if (step <= Rational(0)) {
        throw InputError("sigma extraction needs a positive step");
    }
    CMatrix sigma(dim);
    if (const StarCocycle* s = alpha.structured()) {
        // sigma_ij(p, q) = Theta_ij - (d_i d_j beta)(p - q).
        const MomentumVector diff = p - q;
        for (int i = 0; i < dim; ++i) {
            const Polynomial di = s->beta().derivative(i);
            for (int j = 0; j < dim; ++j) {
                sigma(i, j) = s->theta()(i, j) - di.derivative(j).eval(diff);
            }
        }
        return sigma;
    }
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            sigma(i, j) = mixed_partial_refined(alpha, p, q, i, j, step);
        }
    }
    return sigma;
}

ThetaClass classify(const Cocycle& alpha, const ClassifyOptions& options) {
    const int dim = alpha.dimension();
    if (const StarCocycle* s = alpha.structured()) {
        return ThetaClass{dim, s->theta()};
    }
    // Black-box inputs must demonstrate they are cocycles before the class
    // means anything.
    MomentumSampler sampler(dim, options.seed);
    const auto triples = sampler.take_triples(options.samples);
    const Report assoc = check_cocycle_condition(alpha, triples, options.tol);
    if (!assoc.pass()) {
        throw ValidationError("classification rejected: cocycle identity fails (residual " +
                              std::to_string(assoc.max_residual()) + ")");
    }
    const auto points = sampler.take(options.samples);
    const Report unital = check_unitality(alpha, points, options.tol);
    if (!unital.pass()) {
        throw ValidationError("classification rejected: unitality fails (residual " +
                              std::to_string(unital.max_residual()) + ")");
    }
    const Cocycle projected = harmonic_projection(alpha);
    const MomentumVector zero = MomentumVector::zero(dim);
    const CMatrix sigma = extract_sigma(projected, zero, zero, options.step);
    // The harmonic representative is bilinear, so sigma is its matrix;
    // antisymmetrizing removes residual finite-difference noise.
    CMatrix theta(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            theta(i, j) = (sigma(i, j) - sigma(j, i)) * 0.5;
        }
    }
    return ThetaClass{dim, theta};
}

CMatrix coordinate_commutator(const Cocycle& alpha, const Rational& step) {
    const MomentumVector zero = MomentumVector::zero(alpha.dimension());
    const CMatrix m = extract_sigma(alpha, zero, zero, step);
    return m - m.transpose();
}

bool is_cohomologous(const Cocycle& a1, const Cocycle& a2, double tol,
                     const ClassifyOptions& options) {
    if (a1.dimension() != a2.dimension()) {
        throw InputError("cohomology comparison across different dimensions");
    }
    const ThetaClass c1 = classify(a1, options);
    const ThetaClass c2 = classify(a2, options);
    return max_abs_diff(c1.matrix, c2.matrix) <= tol;
}

}  // namespace starprod
