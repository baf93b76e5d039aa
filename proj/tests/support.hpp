#pragma once

// Shared helpers for the test suites: seeded generators with zero-sum
// engineering, independently coded oracles to hold the library's results
// against, and a tiny subprocess runner for tool tests.

#include <starprod/starprod.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using starprod::CMatrix;
using starprod::Cocycle;
using starprod::Complex;
using starprod::ModeField;
using starprod::MomentumVector;
using starprod::Rational;

// ---------------------------------------------------------------------------
// Generators

/// Random fields whose concatenated frequency lists contain a zero-sum
/// combination: the last field carries the frequency that completes a random
/// pick of earlier modes to zero. Without this, chained integrals are almost
/// surely 0 = 0 and integral-identity tests pass vacuously.
inline std::vector<ModeField> zero_sum_fields(int m, int count, int modes_per_field,
                                              std::uint64_t seed) {
    starprod::MomentumSampler sampler(m, seed, /*bound=*/2, /*denominator_cap=*/4);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    std::vector<ModeField> fields;
    MomentumVector running = MomentumVector::zero(m);
    for (int k = 0; k < count; ++k) {
        ModeField f(m);
        for (int i = 0; i < modes_per_field; ++i) {
            MomentumVector freq = sampler.next();
            const bool completing = (k == count - 1 && i == 0);
            if (completing) {
                freq = -running;
            }
            Complex coeff{unit(rng), unit(rng)};
            if (std::abs(coeff) < 0.05) {
                coeff += Complex{0.5, 0.0};  // keep the engineered mode visible
            }
            if (f.coefficient(freq) == Complex{0.0, 0.0}) {
                f.add_mode(freq, coeff);
            }
        }
        // Track one arbitrary mode per field (the first) so something sums
        // to zero across the chain.
        if (k < count - 1) {
            running = running + f.modes().begin()->first;
        }
        fields.push_back(std::move(f));
    }
    return fields;
}

/// A momentum with all coordinates k/d, |k/d| <= bound, d <= den_cap.
inline MomentumVector random_momentum(int m, std::mt19937_64& rng, int bound = 2,
                                      int den_cap = 8) {
    std::uniform_int_distribution<int> den_dist(1, den_cap);
    std::vector<Rational> coords;
    for (int i = 0; i < m; ++i) {
        const int den = den_dist(rng);
        std::uniform_int_distribution<int> num_dist(-bound * den, bound * den);
        coords.emplace_back(num_dist(rng), den);
    }
    return MomentumVector(std::move(coords));
}

// ---------------------------------------------------------------------------
// Oracles (independent implementations; no calls into the code under test
// beyond plain evaluation)

/// Star product computed directly from the defining double sum, with its own
/// accumulation structure (vector of pairs, then combined), as an oracle for
/// the library's map-based kernel.
inline std::vector<std::pair<MomentumVector, Complex>> oracle_star_modes(
    const Cocycle& alpha, const ModeField& f, const ModeField& g) {
    std::vector<std::pair<MomentumVector, Complex>> raw;
    for (const auto& [fq, fc] : f.modes()) {
        for (const auto& [gp, gc] : g.modes()) {
            const MomentumVector sum = fq + gp;
            const Complex phase = std::exp(alpha.eval(sum, fq));
            bool merged = false;
            for (auto& [freq, acc] : raw) {
                if (freq == sum) {
                    acc += fc * gc * phase;
                    merged = true;
                    break;
                }
            }
            if (!merged) {
                raw.emplace_back(sum, fc * gc * phase);
            }
        }
    }
    return raw;
}

/// Largest coefficient disagreement between the library's product and the
/// oracle's double sum.
inline double star_vs_oracle(const Cocycle& alpha, const ModeField& f, const ModeField& g) {
    const ModeField lib = starprod::star(alpha, f, g);
    const auto oracle = oracle_star_modes(alpha, f, g);
    double worst = 0.0;
    for (const auto& [freq, coeff] : oracle) {
        worst = std::max(worst, std::abs(coeff - lib.coefficient(freq)));
    }
    for (const auto& [freq, coeff] : lib.modes()) {
        Complex expect{0.0, 0.0};
        for (const auto& [ofreq, ocoeff] : oracle) {
            if (ofreq == freq) {
                expect = ocoeff;
                break;
            }
        }
        worst = std::max(worst, std::abs(coeff - expect));
    }
    return worst;
}

/// Coordinate commutator measured through the star product itself: the
/// (i, j) entry is obtained from plane waves along scaled basis directions,
///
///   F(eps, del) = integral-free phase of e_{eps e_i} * e_{del e_j},
///   G = F - F(swapped);  C_ij = -d^2 G / d eps d del at 0
///
/// by central differences with one Richardson level. This never touches
/// extract_sigma, so it is an independent check of the commutator formula.
inline CMatrix commutator_via_star(const Cocycle& alpha, const Rational& h = Rational(1, 128)) {
    const int m = alpha.dimension();

    const auto phase = [&](int i, int j, const Rational& ei, const Rational& ej) {
        const ModeField a = ModeField::plane_wave(MomentumVector::scaled_unit(m, i, ei));
        const ModeField b = ModeField::plane_wave(MomentumVector::scaled_unit(m, j, ej));
        const ModeField ab = starprod::star(alpha, a, b);
        const ModeField ba = starprod::star(alpha, b, a);
        const MomentumVector key =
            MomentumVector::scaled_unit(m, i, ei) + MomentumVector::scaled_unit(m, j, ej);
        return ab.coefficient(key) - ba.coefficient(key);
    };

    const auto mixed = [&](int i, int j, const Rational& step) {
        const Complex pp = phase(i, j, step, step);
        const Complex pm = phase(i, j, step, -step);
        const Complex mp = phase(i, j, -step, step);
        const Complex mm = phase(i, j, -step, -step);
        const double hd = starprod::to_double(step);
        return (pp - pm - mp + mm) / (4.0 * hd * hd);
    };

    CMatrix c(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const Complex coarse = mixed(i, j, h);
            const Complex fine = mixed(i, j, h / 2);
            // G collects exp(difference of cocycle values); its mixed second
            // derivative at 0 is -C_ij because the exponents enter with
            // opposite ordering. One Richardson level scrubs the h^2 term.
            c(i, j) = -(fine * 4.0 - coarse) / 3.0;
        }
    }
    return c;
}

/// Moyal-type cocycle value computed from the index-summed definition
/// i q^mu theta_a[mu][nu] p^nu, written with explicit loops as an oracle for
/// the catalog's matrix form.
inline Complex oracle_moyal_alpha(const std::vector<std::vector<double>>& theta_a,
                                  const MomentumVector& p, const MomentumVector& q) {
    double sum = 0.0;
    for (std::size_t mu = 0; mu < theta_a.size(); ++mu) {
        for (std::size_t nu = 0; nu < theta_a.size(); ++nu) {
            sum += starprod::to_double(q[static_cast<int>(mu)]) * theta_a[mu][nu] *
                   starprod::to_double(p[static_cast<int>(nu)]);
        }
    }
    return Complex{0.0, sum};
}

// ---------------------------------------------------------------------------
// Subprocess runner (tool tests)

struct RunResult {
    int exit_code = -1;
    std::string output;  ///< stdout only
};

/// Runs a shell command, capturing stdout; stderr goes to the test log.
inline RunResult run_command(const std::string& command) {
    RunResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = ::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        result.output.append(buf.data(), n);
    }
    const int status = ::pclose(pipe);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    return result;
}

}  // namespace testsupport
