#pragma once

#include "starprod/cocycle.hpp"
#include "starprod/momentum.hpp"

#include <map>
#include <span>

namespace starprod {

/// Finite sum of plane waves  f(x) = sum_k c_k exp(i p_k . x)  with exact
/// rational frequencies: the computable stand-in for fields with compactly
/// supported spectrum. Modes live in a sorted map keyed by frequency, so
/// iteration and serialization are deterministic; coefficients below
/// kPruneTol are dropped at operation boundaries.
class ModeField {
public:
    /// Magnitude below which a mode coefficient counts as zero.
    static constexpr double kPruneTol = 1e-15;

    explicit ModeField(int dimension);

    /// The constant function 1: a single zero-frequency mode.
    static ModeField unit(int dimension);
    static ModeField plane_wave(MomentumVector frequency, const Complex& coeff = {1.0, 0.0});

    int dimension() const { return dimension_; }
    int mode_count() const { return static_cast<int>(modes_.size()); }
    const std::map<MomentumVector, Complex>& modes() const { return modes_; }

    /// Coefficient of `frequency` (zero when the mode is absent).
    Complex coefficient(const MomentumVector& frequency) const;
    /// Adds `coeff` into the mode at `frequency`, pruning on cancellation.
    void add_mode(const MomentumVector& frequency, const Complex& coeff);

    /// Largest coefficient magnitude (0 for the empty field).
    double max_abs_coefficient() const;

    /// Pointwise evaluation at a real point x.
    Complex eval(std::span<const double> x) const;

    /// Complex conjugate of the function: coefficients conjugate and
    /// frequencies negate.
    ModeField conjugate() const;

    ModeField operator+(const ModeField& other) const;
    ModeField operator-(const ModeField& other) const;
    ModeField operator*(const Complex& s) const;

private:
    int dimension_;
    std::map<MomentumVector, Complex> modes_;
};

/// Largest coefficient difference between the two fields, over the union of
/// their modes. The residual metric used throughout the tests.
double max_abs_diff(const ModeField& f, const ModeField& g);

/// Star product of mode fields:
///
///   f * g = sum_{q in f} sum_{p in g} f_q g_p exp(alpha(p + q, q)) e_{p+q}
///
/// The cocycle's second slot receives the FIRST factor's frequency. Throws
/// RangeError (naming the mode pair) if Re alpha exceeds the overflow guard.
ModeField star(const Cocycle& alpha, const ModeField& f, const ModeField& g);

/// Left-associated product f_1 * f_2 * ... * f_n (n >= 1).
ModeField star_chain(const Cocycle& alpha, std::span<const ModeField> fields);

/// Integral over R^m in the distributional sense: only the zero mode
/// survives, so this is the coefficient of frequency 0.
Complex integral(const ModeField& f);

/// (T_a f)(x) = f(x + a): multiplies each mode by exp(i p . a).
ModeField translate(const ModeField& f, std::span<const double> shift);

/// Partial derivative along `axis` (0-based): multiplies each mode by i p_axis.
ModeField derivative(const ModeField& f, int axis);

}  // namespace starprod
