#pragma once

#include "starprod/rational.hpp"

#include <vector>

namespace starprod {

/// Point of R^m with exact rational coordinates. Serves both as a cochain
/// argument and as a mode frequency; exact arithmetic keeps frequency sums
/// usable as map keys.
class MomentumVector {
public:
    MomentumVector() = default;
    explicit MomentumVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    static MomentumVector zero(int dim);
    /// Basis vector along `axis` scaled by `s` (s = 1 by default).
    static MomentumVector scaled_unit(int dim, int axis, const Rational& s = Rational(1));

    int dimension() const { return static_cast<int>(coords_.size()); }
    const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    std::vector<double> as_doubles() const;

    MomentumVector operator+(const MomentumVector& other) const;
    MomentumVector operator-(const MomentumVector& other) const;
    MomentumVector operator-() const;

    bool operator==(const MomentumVector& other) const = default;

private:
    std::vector<Rational> coords_;
};

/// Lexicographic order; used by the sorted mode maps so iteration (and hence
/// serialization) is deterministic.
bool operator<(const MomentumVector& a, const MomentumVector& b);

/// Throws InputError if dimensions differ.
void require_same_dimension(const MomentumVector& a, const MomentumVector& b,
                            const char* context);

}  // namespace starprod
