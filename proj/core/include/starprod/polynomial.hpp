#pragma once

#include "starprod/momentum.hpp"

#include <map>
#include <vector>

namespace starprod {

/// Multivariate polynomial over m real variables with complex coefficients,
/// stored sparsely by exponent multi-index. Evaluation order follows the
/// sorted term map, so results are bit-reproducible.
class Polynomial {
public:
    using MultiIndex = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(int variables) : vars_(variables) {}

    int variables() const { return vars_; }
    bool empty() const { return terms_.empty(); }
    int total_degree() const;
    Complex constant_term() const;

    /// Replaces the coefficient of `index`; erases the term when c == 0.
    /// Throws InputError if the index length mismatches or an exponent is
    /// negative.
    void set_coefficient(const MultiIndex& index, const Complex& c);
    /// Adds `c` to the coefficient of `index` (erasing on exact cancellation).
    void add_term(const MultiIndex& index, const Complex& c);
    Complex coefficient(const MultiIndex& index) const;
    const std::map<MultiIndex, Complex>& terms() const { return terms_; }

    Complex eval(const MomentumVector& p) const;
    Complex eval(const std::vector<double>& x) const;

    Polynomial derivative(int axis) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Complex& s) const;

    /// True when every term has even total degree, i.e. the polynomial is an
    /// even function.
    bool is_even_function() const;

private:
    int vars_ = 0;
    std::map<MultiIndex, Complex> terms_;
};

}  // namespace starprod
