#pragma once

#include "starprod/rational.hpp"

#include <vector>

namespace starprod {

/// Small dense complex matrix (m x m with m <= 4 in practice), row major.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, Complex{0.0, 0.0}) {}

    static CMatrix zero(int n) { return CMatrix(n); }
    static CMatrix identity(int n);

    int size() const { return n_; }
    Complex& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * n_ + j];
    }

    CMatrix transpose() const;
    CMatrix operator+(const CMatrix& other) const;
    CMatrix operator-(const CMatrix& other) const;
    CMatrix operator*(const Complex& s) const;

    /// Largest entry magnitude.
    double max_abs() const;
    /// max_ij |a_ij + a_ji|; zero iff the matrix is antisymmetric.
    double antisymmetry_residual() const;
    /// max_ij |Re a_ij|; zero iff every entry is purely imaginary.
    double max_abs_real_part() const;

    bool operator==(const CMatrix& other) const = default;

private:
    int n_ = 0;
    std::vector<Complex> data_;
};

double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace starprod
