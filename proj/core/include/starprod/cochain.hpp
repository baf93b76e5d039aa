#pragma once

#include "starprod/momentum.hpp"
#include "starprod/polynomial.hpp"
#include "starprod/report.hpp"

#include <functional>
#include <span>
#include <vector>

namespace starprod {

/// An n-argument complex function on (R^m)^n, the degree-n slice of the
/// translation-invariant cochain complex. Membership conditions (vanishing
/// when the last argument is zero, and on adjacent equal argument pairs) are
/// sampled invariants of the evaluator, not enforced per call.
class NCochain {
public:
    using Evaluator = std::function<Complex(std::span<const MomentumVector>)>;

    NCochain(int arity, int dimension, Evaluator evaluator);

    static NCochain zero(int arity, int dimension);

    int arity() const { return arity_; }
    int dimension() const { return dimension_; }

    /// Evaluates after checking the argument count and each dimension
    /// (InputError on mismatch).
    Complex eval(std::span<const MomentumVector> args) const;

    Complex operator()(const MomentumVector& p) const;
    Complex operator()(const MomentumVector& p, const MomentumVector& q) const;
    Complex operator()(const MomentumVector& p, const MomentumVector& q,
                       const MomentumVector& r) const;
    Complex operator()(const MomentumVector& p, const MomentumVector& q,
                       const MomentumVector& r, const MomentumVector& s) const;

private:
    int arity_;
    int dimension_;
    Evaluator evaluator_;
};

/// Views a polynomial with zero constant term as a 1-cochain.
NCochain to_cochain(const Polynomial& beta);

/// Degree-raising coboundary operator, defined for arity 1..3.
///
/// (d c)(p_0,...,p_n) = eps_n [ sum_{i=0}^{n} (-1)^i c(p_0,..,p̂_i,..,p_n)
///                              + (-1)^{n+1} c(p_0 - p_n, ..., p_{n-1} - p_n) ]
///
/// with eps_n = 1 for odd arity n and eps_n = i for even arity. For a
/// 1-cochain beta this gives (d beta)(p,q) = beta(q) - beta(p) + beta(p-q);
/// for a 2-cochain the vanishing of d c is exactly the associativity
/// (cocycle) identity.
NCochain coboundary(const NCochain& c);

/// Samples (d(d c)) over tuples of arity c.arity()+2 and reports the worst
/// residual. Requires c.arity() <= 2 so the composition stays within the
/// implemented range.
Report check_d_squared_zero(const NCochain& c,
                            std::span<const std::vector<MomentumVector>> samples,
                            double tol);

/// Samples the membership conditions of the degree-n slice using momenta
/// drawn from `points`:
///  - n = 1: value at 0;
///  - n = 2: values at (p, 0) and (p, p);
///  - n >= 3: values with last argument 0, and with an adjacent equal pair
///    inserted at each position (no cyclic wraparound pair).
Report check_membership(const NCochain& c, std::span<const MomentumVector> points,
                        double tol);

}  // namespace starprod
