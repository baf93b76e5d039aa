#include "starprod/modefield.hpp"

#include "starprod/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace starprod {

namespace {

/// Re alpha beyond this would push exp() toward overflow; refuse loudly
/// instead of returning inf.
constexpr double kExpGuard = 700.0;

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

ModeField::ModeField(int dimension) : dimension_(dimension) {
    if (dimension < 1) {
        throw InputError("mode field dimension must be >= 1, got " +
                         std::to_string(dimension));
    }
}

ModeField ModeField::unit(int dimension) {
    ModeField f(dimension);
    f.add_mode(MomentumVector::zero(dimension), Complex{1.0, 0.0});
    return f;
}

ModeField ModeField::plane_wave(MomentumVector frequency, const Complex& coeff) {
    ModeField f(frequency.dimension());
    f.add_mode(std::move(frequency), coeff);
    return f;
}

Complex ModeField::coefficient(const MomentumVector& frequency) const {
    const auto it = modes_.find(frequency);
    return it == modes_.end() ? Complex{0.0, 0.0} : it->second;
}

void ModeField::add_mode(const MomentumVector& frequency, const Complex& coeff) {
    if (frequency.dimension() != dimension_) {
        throw InputError("mode frequency dimension " + std::to_string(frequency.dimension()) +
                         " does not match field dimension " + std::to_string(dimension_));
    }
    const auto it = modes_.find(frequency);
    const Complex next = (it == modes_.end() ? coeff : it->second + coeff);
    if (std::abs(next) <= kPruneTol) {
        if (it != modes_.end()) {
            modes_.erase(it);
        }
        return;
    }
    modes_[frequency] = next;
}

double ModeField::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [freq, coeff] : modes_) {
        m = std::max(m, std::abs(coeff));
    }
    return m;
}

Complex ModeField::eval(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension_) {
        throw InputError("field over R^" + std::to_string(dimension_) +
                         " evaluated at a point of dimension " + std::to_string(x.size()));
    }
    Complex total{0.0, 0.0};
    for (const auto& [freq, coeff] : modes_) {
        double phase = 0.0;
        for (int i = 0; i < dimension_; ++i) {
            phase += to_double(freq[i]) * x[static_cast<std::size_t>(i)];
        }
        total += coeff * std::exp(Complex{0.0, phase});
    }
    return total;
}

ModeField ModeField::conjugate() const {
    ModeField out(dimension_);
    for (const auto& [freq, coeff] : modes_) {
        out.add_mode(-freq, std::conj(coeff));
    }
    return out;
}

ModeField ModeField::operator+(const ModeField& other) const {
    if (dimension_ != other.dimension_) {
        throw InputError("mode field addition across different dimensions");
    }
    ModeField out = *this;
    for (const auto& [freq, coeff] : other.modes_) {
        out.add_mode(freq, coeff);
    }
    return out;
}

ModeField ModeField::operator-(const ModeField& other) const {
    if (dimension_ != other.dimension_) {
        throw InputError("mode field subtraction across different dimensions");
    }
    ModeField out = *this;
    for (const auto& [freq, coeff] : other.modes_) {
        out.add_mode(freq, -coeff);
    }
    return out;
}

ModeField ModeField::operator*(const Complex& s) const {
    ModeField out(dimension_);
    for (const auto& [freq, coeff] : modes_) {
        out.add_mode(freq, coeff * s);
    }
    return out;
}

double max_abs_diff(const ModeField& f, const ModeField& g) {
    if (f.dimension() != g.dimension()) {
        throw InputError("mode field comparison across different dimensions");
    }
    double m = 0.0;
    for (const auto& [freq, coeff] : f.modes()) {
        m = std::max(m, std::abs(coeff - g.coefficient(freq)));
    }
    for (const auto& [freq, coeff] : g.modes()) {
        m = std::max(m, std::abs(coeff - f.coefficient(freq)));
    }
    return m;
}

ModeField star(const Cocycle& alpha, const ModeField& f, const ModeField& g) {
    if (alpha.dimension() != f.dimension() || f.dimension() != g.dimension()) {
        throw InputError("star product dimension mismatch (cocycle " +
                         std::to_string(alpha.dimension()) + ", fields " +
                         std::to_string(f.dimension()) + " and " +
                         std::to_string(g.dimension()) + ")");
    }
    ModeField out(f.dimension());
    for (const auto& [fq, fc] : f.modes()) {
        for (const auto& [gp, gc] : g.modes()) {
            const MomentumVector sum = fq + gp;
            // The second slot carries the first factor's frequency.
            const Complex a = alpha.eval(sum, fq);
            if (std::abs(a.real()) > kExpGuard) {
                throw RangeError("exponent overflow in star product: Re alpha = " +
                                 std::to_string(a.real()) + " at modes " + format_point(fq) +
                                 " (left) and " + format_point(gp) + " (right)");
            }
            out.add_mode(sum, fc * gc * std::exp(a));
        }
    }
    return out;
}

ModeField star_chain(const Cocycle& alpha, std::span<const ModeField> fields) {
    if (fields.empty()) {
        throw InputError("star chain needs at least one field");
    }
    ModeField acc = fields[0];
    for (std::size_t i = 1; i < fields.size(); ++i) {
        acc = star(alpha, acc, fields[i]);
    }
    return acc;
}

Complex integral(const ModeField& f) {
    return f.coefficient(MomentumVector::zero(f.dimension()));
}

ModeField translate(const ModeField& f, std::span<const double> shift) {
    if (static_cast<int>(shift.size()) != f.dimension()) {
        throw InputError("translation shift dimension mismatch");
    }
    ModeField out(f.dimension());
    for (const auto& [freq, coeff] : f.modes()) {
        double phase = 0.0;
        for (int i = 0; i < f.dimension(); ++i) {
            phase += to_double(freq[i]) * shift[static_cast<std::size_t>(i)];
        }
        out.add_mode(freq, coeff * std::exp(Complex{0.0, phase}));
    }
    return out;
}

ModeField derivative(const ModeField& f, int axis) {
    if (axis < 0 || axis >= f.dimension()) {
        throw InputError("derivative axis " + std::to_string(axis) +
                         " out of range for dimension " + std::to_string(f.dimension()));
    }
    ModeField out(f.dimension());
    for (const auto& [freq, coeff] : f.modes()) {
        out.add_mode(freq, coeff * Complex{0.0, to_double(freq[axis])});
    }
    return out;
}

}  // namespace starprod
