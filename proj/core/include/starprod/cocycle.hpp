#pragma once

#include "starprod/cochain.hpp"
#include "starprod/matrix.hpp"
#include "starprod/polynomial.hpp"
#include "starprod/report.hpp"
#include "starprod/sampling.hpp"

#include <functional>
#include <memory>
#include <span>

namespace starprod {

/// Structured 2-cocycle
///
///     alpha(p, q) = p^T Theta q + beta(q) - beta(p) + beta(p - q)
///
/// with Theta complex antisymmetric (the harmonic representative) and beta a
/// polynomial 1-cochain (the coboundary part). The associativity identity
/// holds by construction, and alpha(p, p) = alpha(p, 0) = 0 exactly in
/// floating point: the bilinear part is evaluated as
/// sum_{i<j} Theta_ij (p_i q_j - p_j q_i) and the beta terms cancel
/// bit-for-bit, which keeps the unit of the star product exact.
class StarCocycle {
public:
    /// Validates antisymmetry of theta (tolerance 1e-12, then canonicalized
    /// to exact antisymmetry), beta's zero constant term, beta's variable
    /// count, and the degree cap (total degree <= 6). ValidationError on
    /// failure.
    StarCocycle(CMatrix theta, Polynomial beta);

    static StarCocycle harmonic(CMatrix theta);
    static StarCocycle pure_coboundary(int dimension, Polynomial beta);

    int dimension() const { return dimension_; }
    const CMatrix& theta() const { return theta_; }
    const Polynomial& beta() const { return beta_; }

    Complex eval(const MomentumVector& p, const MomentumVector& q) const;
    /// p^T Theta q, via the exact-cancellation form.
    Complex harmonic_part(const MomentumVector& p, const MomentumVector& q) const;
    /// (d beta)(p, q) = beta(q) - beta(p) + beta(p - q).
    Complex coboundary_part(const MomentumVector& p, const MomentumVector& q) const;

private:
    int dimension_;
    CMatrix theta_;
    Polynomial beta_;
};

/// Opaque 2-cochain given only by an evaluator; the entry point for
/// validating and classifying products whose cocycle has no known closed
/// form.
class BlackBoxCocycle {
public:
    using Evaluator = std::function<Complex(const MomentumVector&, const MomentumVector&)>;

    BlackBoxCocycle(int dimension, Evaluator evaluator);

    int dimension() const { return dimension_; }
    Complex eval(const MomentumVector& p, const MomentumVector& q) const;

private:
    int dimension_;
    Evaluator evaluator_;
};

/// Value wrapper accepted by every operation below: either structured or
/// black-box. Operations use the structured closed forms when available and
/// fall back to finite differences otherwise.
class Cocycle {
public:
    Cocycle(StarCocycle structured);   // NOLINT(google-explicit-constructor)
    Cocycle(BlackBoxCocycle opaque);   // NOLINT(google-explicit-constructor)

    int dimension() const;
    Complex eval(const MomentumVector& p, const MomentumVector& q) const;
    /// Null for black-box cocycles.
    const StarCocycle* structured() const;

    /// Views this cocycle as an arity-2 cochain (e.g. to feed coboundary()).
    NCochain as_cochain() const;

private:
    std::shared_ptr<const StarCocycle> structured_;
    std::shared_ptr<const BlackBoxCocycle> opaque_;
};

/// The cohomology class of a product: dimension and the antisymmetric theta
/// matrix of its harmonic representative.
struct ThetaClass {
    int dimension = 0;
    CMatrix matrix;

    bool pure_imaginary(double tol = 1e-9) const;
    /// dim H^2 over the full complex: m(m-1) independent entries.
    int dim_h2_full() const;
    /// dim H^2 in the unitality-restricted (antisymmetric) complex: m(m-1)/2.
    int dim_h2_restricted() const;
};

Complex eval_alpha(const Cocycle& alpha, const MomentumVector& p, const MomentumVector& q);

/// Associativity identity alpha(p,q) + alpha(q,r) = alpha(p,r) + alpha(p-r,q-r)
/// sampled over triples.
Report check_cocycle_condition(const Cocycle& alpha, std::span<const TripleSample> samples,
                               double tol);

/// Unit compatibility: alpha(p,p) = 0, alpha(p,0) = 0, and the corollary
/// alpha(0,p) = alpha(0,-p), sampled over single momenta.
Report check_unitality(const Cocycle& alpha, std::span<const MomentumVector> samples,
                       double tol);

/// The three harmonic-representative axioms, sampled over pairs:
/// alpha(p,q) + alpha(p,p-q), alpha(p,q) - alpha(-p,-q), alpha(p,q) + alpha(q,p).
Report check_harmonic(const Cocycle& alpha, std::span<const PairSample> samples, double tol);

/// Reality transcription conj(alpha(r,q)) = alpha(-r, q-r), the mode-space
/// form of the complex-conjugation property of the product; sampled over
/// pairs (r, q).
Report check_complex_property(const Cocycle& alpha, std::span<const PairSample> samples,
                              double tol);

/// Averaging projection onto harmonic representatives:
/// alpha_H(p,q) = [alpha(p+q, q) - alpha(p+q, p)] / 2. Structured inputs map
/// to StarCocycle::harmonic(theta) exactly; black-box inputs stay black-box.
Cocycle harmonic_projection(const Cocycle& alpha);

/// Mixed second derivative sigma_ij = d^2 alpha / dp_i dq_j at (p, q).
/// Structured: closed form Theta_ij - (d_i d_j beta)(p - q). Black-box:
/// central differences with exact rational step h plus one Richardson level.
CMatrix extract_sigma(const Cocycle& alpha, const MomentumVector& p, const MomentumVector& q,
                      const Rational& step = Rational(1, 1024));

struct ClassifyOptions {
    int samples = 64;        ///< validation sample count for black-box inputs
    double tol = 1e-8;       ///< validation tolerance for black-box inputs
    std::uint64_t seed = 20240901;
    Rational step{1, 1024};  ///< finite-difference step for black-box inputs
};

/// Validates (black-box inputs only: sampled cocycle identity + unitality,
/// ValidationError on failure), projects onto the harmonic representative,
/// and reads off theta. Structured inputs classify exactly.
ThetaClass classify(const Cocycle& alpha, const ClassifyOptions& options = {});

/// Coordinate commutator matrix C_ij = sigma_ij(0,0) - sigma_ji(0,0); equals
/// 2 Theta_ij, so alpha = i p^T theta q yields C = 2 i theta.
CMatrix coordinate_commutator(const Cocycle& alpha, const Rational& step = Rational(1, 1024));

/// True when both products have the same cohomology class, i.e. their
/// harmonic theta matrices agree entrywise within tol.
bool is_cohomologous(const Cocycle& a1, const Cocycle& a2, double tol,
                     const ClassifyOptions& options = {});

}  // namespace starprod
