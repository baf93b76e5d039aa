#include "starprod/matrix.hpp"

#include "starprod/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace starprod {

namespace {

void require_same_size(const CMatrix& a, const CMatrix& b) {
    if (a.size() != b.size()) {
        throw InputError("matrix size mismatch (" + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
    }
}

}  // namespace

CMatrix CMatrix::identity(int n) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = Complex{1.0, 0.0};
    }
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

CMatrix CMatrix::operator+(const CMatrix& other) const {
    require_same_size(*this, other);
    CMatrix out(n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            out(i, j) = (*this)(i, j) + other(i, j);
        }
    }
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& other) const {
    require_same_size(*this, other);
    CMatrix out(n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            out(i, j) = (*this)(i, j) - other(i, j);
        }
    }
    return out;
}

CMatrix CMatrix::operator*(const Complex& s) const {
    CMatrix out(n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            out(i, j) = (*this)(i, j) * s;
        }
    }
    return out;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double CMatrix::antisymmetry_residual() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            m = std::max(m, std::abs((*this)(i, j) + (*this)(j, i)));
        }
    }
    return m;
}

double CMatrix::max_abs_real_part() const {
    double m = 0.0;
    for (const auto& z : data_) {
        m = std::max(m, std::abs(z.real()));
    }
    return m;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    require_same_size(a, b);
    double m = 0.0;
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) {
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
        }
    }
    return m;
}

}  // namespace starprod
