#include "starprod/polynomial.hpp"

#include "starprod/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace starprod {

namespace {

constexpr double kZeroCoeff = 0.0;

int index_degree(const Polynomial::MultiIndex& index) {
    return std::accumulate(index.begin(), index.end(), 0);
}

double int_pow(double x, int k) {
    double out = 1.0;
    for (int i = 0; i < k; ++i) {
        out *= x;
    }
    return out;
}

}  // namespace

int Polynomial::total_degree() const {
    int deg = 0;
    for (const auto& [index, coeff] : terms_) {
        deg = std::max(deg, index_degree(index));
    }
    return deg;
}

Complex Polynomial::constant_term() const {
    return coefficient(MultiIndex(static_cast<std::size_t>(vars_), 0));
}

void Polynomial::set_coefficient(const MultiIndex& index, const Complex& c) {
    if (static_cast<int>(index.size()) != vars_) {
        throw InputError("multi-index length " + std::to_string(index.size()) +
                         " does not match variable count " + std::to_string(vars_));
    }
    for (int k : index) {
        if (k < 0) {
            throw InputError("negative exponent in multi-index");
        }
    }
    if (c.real() == kZeroCoeff && c.imag() == kZeroCoeff) {
        terms_.erase(index);
    } else {
        terms_[index] = c;
    }
}

void Polynomial::add_term(const MultiIndex& index, const Complex& c) {
    set_coefficient(index, coefficient(index) + c);
}

Complex Polynomial::coefficient(const MultiIndex& index) const {
    const auto it = terms_.find(index);
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

Complex Polynomial::eval(const MomentumVector& p) const {
    if (p.dimension() != vars_) {
        throw InputError("polynomial over " + std::to_string(vars_) +
                         " variables evaluated at a point of dimension " +
                         std::to_string(p.dimension()));
    }
    return eval(p.as_doubles());
}

Complex Polynomial::eval(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != vars_) {
        throw InputError("polynomial evaluation dimension mismatch");
    }
    Complex total{0.0, 0.0};
    for (const auto& [index, coeff] : terms_) {
        double mono = 1.0;
        for (int i = 0; i < vars_; ++i) {
            mono *= int_pow(x[static_cast<std::size_t>(i)], index[static_cast<std::size_t>(i)]);
        }
        total += coeff * mono;
    }
    return total;
}

Polynomial Polynomial::derivative(int axis) const {
    if (axis < 0 || axis >= vars_) {
        throw InputError("derivative axis " + std::to_string(axis) +
                         " out of range for " + std::to_string(vars_) + " variables");
    }
    Polynomial out(vars_);
    for (const auto& [index, coeff] : terms_) {
        const int k = index[static_cast<std::size_t>(axis)];
        if (k == 0) {
            continue;
        }
        MultiIndex lowered = index;
        --lowered[static_cast<std::size_t>(axis)];
        out.add_term(lowered, coeff * static_cast<double>(k));
    }
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (vars_ != other.vars_) {
        throw InputError("polynomial addition over different variable counts");
    }
    Polynomial out = *this;
    for (const auto& [index, coeff] : other.terms_) {
        out.add_term(index, coeff);
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(vars_);
    for (const auto& [index, coeff] : terms_) {
        out.set_coefficient(index, -coeff);
    }
    return out;
}

Polynomial Polynomial::operator*(const Complex& s) const {
    Polynomial out(vars_);
    for (const auto& [index, coeff] : terms_) {
        out.set_coefficient(index, coeff * s);
    }
    return out;
}

bool Polynomial::is_even_function() const {
    for (const auto& [index, coeff] : terms_) {
        if (index_degree(index) % 2 != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace starprod
