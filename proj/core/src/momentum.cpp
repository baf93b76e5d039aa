#include "starprod/momentum.hpp"

#include "starprod/errors.hpp"

#include <string>

namespace starprod {

MomentumVector MomentumVector::zero(int dim) {
    return MomentumVector(std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
}

MomentumVector MomentumVector::scaled_unit(int dim, int axis, const Rational& s) {
    if (axis < 0 || axis >= dim) {
        throw InputError("axis " + std::to_string(axis) + " out of range for dimension " +
                         std::to_string(dim));
    }
    MomentumVector v = zero(dim);
    v[axis] = s;
    return v;
}

bool MomentumVector::is_zero() const {
    for (const auto& c : coords_) {
        if (c != Rational(0)) {
            return false;
        }
    }
    return true;
}

std::vector<double> MomentumVector::as_doubles() const {
    std::vector<double> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) {
        out.push_back(to_double(c));
    }
    return out;
}

MomentumVector MomentumVector::operator+(const MomentumVector& other) const {
    require_same_dimension(*this, other, "momentum addition");
    std::vector<Rational> out(coords_);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += other.coords_[i];
    }
    return MomentumVector(std::move(out));
}

MomentumVector MomentumVector::operator-(const MomentumVector& other) const {
    require_same_dimension(*this, other, "momentum subtraction");
    std::vector<Rational> out(coords_);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= other.coords_[i];
    }
    return MomentumVector(std::move(out));
}

MomentumVector MomentumVector::operator-() const {
    std::vector<Rational> out(coords_);
    for (auto& c : out) {
        c = -c;
    }
    return MomentumVector(std::move(out));
}

bool operator<(const MomentumVector& a, const MomentumVector& b) {
    require_same_dimension(a, b, "momentum comparison");
    for (int i = 0; i < a.dimension(); ++i) {
        if (a[i] < b[i]) {
            return true;
        }
        if (b[i] < a[i]) {
            return false;
        }
    }
    return false;
}

void require_same_dimension(const MomentumVector& a, const MomentumVector& b,
                            const char* context) {
    if (a.dimension() != b.dimension()) {
        throw InputError(std::string(context) + ": dimension mismatch (" +
                         std::to_string(a.dimension()) + " vs " +
                         std::to_string(b.dimension()) + ")");
    }
}

}  // namespace starprod
