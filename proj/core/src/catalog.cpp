#include "starprod/catalog.hpp"

#include "starprod/errors.hpp"
#include "starprod/sampling.hpp"

#include <cmath>
#include <random>
#include <string>
#include <utility>

namespace starprod {

namespace {

constexpr double kRealityTol = 1e-12;

void require_real(const CMatrix& m, const char* name) {
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (std::abs(m(i, j).imag()) > kRealityTol) {
                throw ValidationError(std::string(name) + " must be real (entry " +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      " has imaginary part)");
            }
        }
    }
}

void require_antisymmetric(const CMatrix& m, const char* name) {
    if (m.antisymmetry_residual() > kRealityTol) {
        throw ValidationError(std::string(name) + " must be antisymmetric (residual " +
                              std::to_string(m.antisymmetry_residual()) + ")");
    }
}

void require_symmetric(const CMatrix& m, const char* name) {
    double res = 0.0;
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            res = std::max(res, std::abs(m(i, j) - m(j, i)));
        }
    }
    if (res > kRealityTol) {
        throw ValidationError(std::string(name) + " must be symmetric (residual " +
                              std::to_string(res) + ")");
    }
}

/// Theta = -i theta_a turns alpha(p,q) = i q^T theta_a p into p^T Theta q.
CMatrix harmonic_matrix_from(const CMatrix& theta_a) {
    return theta_a * Complex{0.0, -1.0};
}

/// beta(p) = -1/2 p^T theta_s p as a polynomial.
Polynomial gaussian_beta(const CMatrix& theta_s) {
    const int m = theta_s.size();
    Polynomial beta(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            Polynomial::MultiIndex index(static_cast<std::size_t>(m), 0);
            ++index[static_cast<std::size_t>(i)];
            ++index[static_cast<std::size_t>(j)];
            // Off-diagonal pairs (i,j) and (j,i) collapse onto one monomial.
            const double weight = (i == j) ? -0.5 : -1.0;
            beta.add_term(index, theta_s(i, j) * weight);
        }
    }
    return beta;
}

/// Sparse random polynomial: up to `max_terms` monomials of total degree in
/// [1, degree], coefficient U[-1,1] * 8^(-term degree). The scaling keeps
/// |beta| <= 8 on [-8, 8]^m, the box reachable by sums of catalog-field
/// frequencies, so exp(beta) stays representable.
Polynomial sparse_random_beta(int m, int degree, std::uint64_t seed, bool even_only,
                              int max_terms = 8) {
    if (degree < 0 || degree > 6) {
        throw InputError("beta degree must be in [0, 6], got " + std::to_string(degree));
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Polynomial beta(m);
    if (degree == 0) {
        return beta;
    }
    const int lowest = even_only ? 2 : 1;
    if (degree < lowest) {
        return beta;
    }
    std::uniform_int_distribution<int> degree_dist(lowest, degree);
    std::uniform_int_distribution<int> axis_dist(0, m - 1);
    for (int t = 0; t < max_terms; ++t) {
        int d = degree_dist(rng);
        if (even_only && d % 2 != 0) {
            d = (d + 1 <= degree) ? d + 1 : d - 1;
        }
        Polynomial::MultiIndex index(static_cast<std::size_t>(m), 0);
        for (int k = 0; k < d; ++k) {
            ++index[static_cast<std::size_t>(axis_dist(rng))];
        }
        beta.add_term(index, Complex{unit(rng) * std::pow(8.0, -d), 0.0});
    }
    return beta;
}

}  // namespace

StarCocycle moyal(const CMatrix& theta_a) {
    require_real(theta_a, "theta_a");
    require_antisymmetric(theta_a, "theta_a");
    return StarCocycle::harmonic(harmonic_matrix_from(theta_a));
}

StarCocycle wick_voros(const CMatrix& theta_a, const CMatrix& theta_s) {
    require_real(theta_a, "theta_a");
    require_antisymmetric(theta_a, "theta_a");
    require_real(theta_s, "theta_s");
    require_symmetric(theta_s, "theta_s");
    if (theta_a.size() != theta_s.size()) {
        throw ValidationError("theta_a and theta_s must have matching sizes");
    }
    return StarCocycle(harmonic_matrix_from(theta_a), gaussian_beta(theta_s));
}

GaugeCochain wick_voros_gauge(const CMatrix& theta_s) {
    require_real(theta_s, "theta_s");
    require_symmetric(theta_s, "theta_s");
    return GaugeCochain(theta_s.size(), gaussian_beta(theta_s));
}

StarCocycle random_cocycle(int m, std::uint64_t theta_seed, int beta_degree,
                           std::uint64_t rng_seed, bool even_beta_only) {
    if (m < 1) {
        throw InputError("dimension must be >= 1, got " + std::to_string(m));
    }
    if (beta_degree < 0 || beta_degree > 6) {
        throw InputError("beta degree must be in [0, 6], got " + std::to_string(beta_degree));
    }
    std::mt19937_64 rng(theta_seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    CMatrix theta(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const double v = unit(rng);
            theta(i, j) = Complex{0.0, v};
            theta(j, i) = Complex{0.0, -v};
        }
    }
    return StarCocycle(std::move(theta),
                       sparse_random_beta(m, beta_degree, rng_seed, even_beta_only));
}

GaugeCochain random_gauge(int m, int degree, std::uint64_t rng_seed) {
    if (m < 1) {
        throw InputError("dimension must be >= 1, got " + std::to_string(m));
    }
    return GaugeCochain(m, sparse_random_beta(m, degree, rng_seed, /*even_only=*/false));
}

ModeField random_modefield(int m, int mode_count, double freq_box, std::uint64_t rng_seed) {
    if (m < 1) {
        throw InputError("dimension must be >= 1, got " + std::to_string(m));
    }
    if (mode_count < 1 || mode_count > 64) {
        throw InputError("mode count must be in [1, 64], got " + std::to_string(mode_count));
    }
    if (freq_box < 0.0) {
        throw InputError("frequency box must be >= 0");
    }
    const int bound = static_cast<int>(std::floor(freq_box));
    ModeField field(m);
    MomentumSampler sampler(m, rng_seed, bound, /*denominator_cap=*/8);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    // A zero-width box only contains the zero frequency: the field
    // degenerates to a constant.
    const int target = (bound == 0) ? 1 : mode_count;
    int guard = 0;
    while (field.mode_count() < target) {
        const MomentumVector freq = sampler.next();
        Complex coeff{unit(sampler.engine()), unit(sampler.engine())};
        if (std::abs(coeff) <= ModeField::kPruneTol) {
            coeff = Complex{0.5, 0.0};
        }
        if (field.coefficient(freq) == Complex{0.0, 0.0}) {
            field.add_mode(freq, coeff);
        }
        if (++guard > 100000) {
            throw InputError("frequency box too small to hold " +
                             std::to_string(mode_count) + " distinct modes");
        }
    }
    return field;
}

StarCocycle preset_cocycle(const std::string& name, int m, std::uint64_t seed) {
    if (m < 1 || m > 4) {
        throw InputError("preset dimension must be in [1, 4], got " + std::to_string(m));
    }
    if (name == "moyal" || name == "wick-voros") {
        // Symplectic-style pairing of axes (0,1) and, when present, (2,3).
        CMatrix theta_a(m);
        if (m >= 2) {
            theta_a(0, 1) = Complex{1.0, 0.0};
            theta_a(1, 0) = Complex{-1.0, 0.0};
        }
        if (m >= 4) {
            theta_a(2, 3) = Complex{1.0, 0.0};
            theta_a(3, 2) = Complex{-1.0, 0.0};
        }
        if (name == "moyal") {
            return moyal(theta_a);
        }
        return wick_voros(theta_a, CMatrix::identity(m));
    }
    if (name == "random") {
        return random_cocycle(m, seed, /*beta_degree=*/4, seed + 1);
    }
    throw InputError("unknown preset '" + name + "' (expected moyal, wick-voros, or random)");
}

GaugeCochain preset_gauge(const std::string& name, int m, std::uint64_t seed) {
    const StarCocycle cocycle = preset_cocycle(name, m, seed);
    return GaugeCochain(m, cocycle.beta());
}

}  // namespace starprod
