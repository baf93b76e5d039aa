// Acceptance gate: one binary, seven criteria, one verdict line each.
// Usage: acceptance <path-to-cli-binary>

#include "support.hpp"

#include <starprod/starprod.hpp>

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

using namespace starprod;
using nlohmann::json;

namespace {

int g_failures = 0;

void verdict(int index, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << index << ": " << name
              << " (" << detail << ")\n";
    if (!pass) {
        ++g_failures;
    }
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

// Criterion 1: associativity holds at relative 1e-10 across seeded cocycles
// and fields, and deliberately broken exponents yield witnesses above 1e-6.
void criterion_associativity() {
    double worst_rel = 0.0;
    for (std::uint64_t s = 1; s <= 20; ++s) {
        const Cocycle c(random_cocycle(2, 1000 + s, 4, 2000 + s));
        for (std::uint64_t t = 0; t < 20; ++t) {
            const ModeField f = random_modefield(2, 4, 2.0, 3000 + 100 * s + t);
            const ModeField g = random_modefield(2, 4, 2.0, 4000 + 100 * s + t);
            const ModeField h = random_modefield(2, 4, 2.0, 5000 + 100 * s + t);
            const ModeField left = star(c, star(c, f, g), h);
            const ModeField right = star(c, f, star(c, g, h));
            const double scale = std::max(
                1.0, std::max(left.max_abs_coefficient(), right.max_abs_coefficient()));
            worst_rel = std::max(worst_rel, max_abs_diff(left, right) / scale);
        }
    }

    // Five non-cocycles; for each, search the identity residual for a
    // violating triple and map it onto plane waves.
    using Breaker = std::function<Complex(const MomentumVector&, const MomentumVector&)>;
    const std::vector<std::pair<int, Breaker>> breakers = {
        {2, [](const MomentumVector& p, const MomentumVector& q) {
             return Complex{0.0, to_double(p[0]) * to_double(q[0])};
         }},
        {2, [](const MomentumVector& p, const MomentumVector& q) {
             return Complex{0.0, to_double(p[0]) * to_double(q[1])};
         }},
        {2, [](const MomentumVector& p, const MomentumVector& q) {
             return Complex{0.0, to_double(p[0]) * to_double(q[1]) +
                                     to_double(p[1]) * to_double(q[1])};
         }},
        {1, [](const MomentumVector& p, const MomentumVector& q) {
             return Complex{0.0, to_double(p[0]) * to_double(p[0]) * to_double(q[0])};
         }},
        {2, [](const MomentumVector& p, const MomentumVector& q) {
             const double v = to_double(p[1]) * to_double(q[0]) * to_double(q[0]);
             return Complex{0.0, v};
         }},
    };

    double weakest_witness = 1e300;
    bool all_witnessed = true;
    for (std::size_t b = 0; b < breakers.size(); ++b) {
        const int m = breakers[b].first;
        const Cocycle broken(BlackBoxCocycle(m, breakers[b].second));
        // Find a triple violating the associativity identity...
        MomentumSampler sampler(m, 6000 + b);
        bool found = false;
        for (int trial = 0; trial < 200 && !found; ++trial) {
            const MomentumVector p = sampler.next();
            const MomentumVector q = sampler.next();
            const MomentumVector r = sampler.next();
            const Complex gap = broken.eval(p, q) + broken.eval(q, r) - broken.eval(p, r) -
                                broken.eval(p - r, q - r);
            if (std::abs(gap) < 1e-3) {
                continue;
            }
            // ...and replay it through actual products: the identity's
            // arguments map onto plane waves a = r, b = q - r, c = p - q.
            const ModeField fa = ModeField::plane_wave(r);
            const ModeField fb = ModeField::plane_wave(q - r);
            const ModeField fc = ModeField::plane_wave(p - q);
            const ModeField left = star(broken, star(broken, fa, fb), fc);
            const ModeField right = star(broken, fa, star(broken, fb, fc));
            const double witness = max_abs_diff(left, right);
            if (witness > 1e-6) {
                weakest_witness = std::min(weakest_witness, witness);
                found = true;
            }
        }
        all_witnessed = all_witnessed && found;
    }

    const bool pass = worst_rel < 1e-10 && all_witnessed;
    verdict(1, "associativity iff the exponent identity", pass,
            "worst relative residual " + fmt(worst_rel) + ", weakest broken-witness " +
                (all_witnessed ? fmt(weakest_witness) : std::string("missing")));
}

// Criterion 2: harmonic projection of the Gaussian-ordered product lands on
// the antisymmetric representative pointwise at 1e-12, and projecting twice
// equals projecting once on seeded cocycles.
void criterion_projection() {
    const StarCocycle wv = preset_cocycle("wick-voros", 2);
    const StarCocycle gm = preset_cocycle("moyal", 2);
    Cocycle opaque(BlackBoxCocycle(2, [wv](const MomentumVector& p, const MomentumVector& q) {
        return wv.eval(p, q);
    }));
    const Cocycle projected = harmonic_projection(opaque);
    double worst = 0.0;
    for (const auto& [p, q] : sample_pairs(2, 100, 7100)) {
        worst = std::max(worst, std::abs(projected.eval(p, q) - gm.eval(p, q)));
    }

    double worst_idem = 0.0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        const StarCocycle c = random_cocycle(2, 7200 + s, 4, 7300 + s);
        Cocycle bb(BlackBoxCocycle(2, [c](const MomentumVector& p, const MomentumVector& q) {
            return c.eval(p, q);
        }));
        const Cocycle once = harmonic_projection(bb);
        const Cocycle twice = harmonic_projection(once);
        for (const auto& [p, q] : sample_pairs(2, 10, 7400 + s)) {
            worst_idem = std::max(worst_idem, std::abs(once.eval(p, q) - twice.eval(p, q)));
        }
    }

    const bool pass = worst < 1e-12 && worst_idem < 1e-10;
    verdict(2, "harmonic projection onto the representative", pass,
            "pointwise residual " + fmt(worst) + ", idempotence residual " + fmt(worst_idem));
}

// Criterion 3: classification returns theta exactly for structured cocycles,
// and sigma extraction is constant (and antisymmetric) for harmonic
// representatives across 50 probe pairs.
void criterion_classification() {
    double worst_exact = 0.0;
    for (std::uint64_t s = 0; s < 10; ++s) {
        const StarCocycle c = random_cocycle(3, 7500 + s, 4, 7600 + s);
        const ThetaClass cls = classify(Cocycle(c));
        worst_exact = std::max(worst_exact, max_abs_diff(cls.matrix, c.theta()));
    }

    double worst_spread = 0.0;
    double worst_antisym = 0.0;
    const StarCocycle h = StarCocycle::harmonic(random_cocycle(2, 7700, 2, 7701).theta());
    Cocycle opaque(BlackBoxCocycle(2, [h](const MomentumVector& p, const MomentumVector& q) {
        return h.eval(p, q);
    }));
    const CMatrix base =
        extract_sigma(opaque, MomentumVector::zero(2), MomentumVector::zero(2));
    worst_antisym = base.antisymmetry_residual();
    std::mt19937_64 rng(7702);
    for (int trial = 0; trial < 50; ++trial) {
        const MomentumVector p = testsupport::random_momentum(2, rng, 1, 4);
        const MomentumVector q = testsupport::random_momentum(2, rng, 1, 4);
        const CMatrix probe = extract_sigma(opaque, p, q);
        worst_spread = std::max(worst_spread, max_abs_diff(probe, base));
        worst_antisym = std::max(worst_antisym, probe.antisymmetry_residual());
    }

    const bool pass = worst_exact == 0.0 && worst_spread < 1e-6 && worst_antisym < 1e-6;
    verdict(3, "classification and sigma constancy", pass,
            "exact-theta diff " + fmt(worst_exact) + ", sigma spread " + fmt(worst_spread) +
                ", antisymmetry " + fmt(worst_antisym));
}

// Criterion 4: the coordinate commutator agrees with an oracle that measures
// it through star products of plane waves, within 1e-6, for ten seeded
// cocycles plus the pure-coboundary and harmonic edge cases.
void criterion_commutator() {
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Cocycle c(random_cocycle(2, 7800 + s, 4, 7900 + s));
        const CMatrix direct = coordinate_commutator(c);
        const CMatrix oracle = testsupport::commutator_via_star(c);
        worst = std::max(worst, max_abs_diff(direct, oracle));
    }

    // Zero class: commutator exactly zero.
    Polynomial beta(2);
    beta.set_coefficient({2, 0}, Complex{0.4, 0.0});
    beta.set_coefficient({1, 1}, Complex{-0.2, 0.0});
    const Cocycle pure(StarCocycle::pure_coboundary(2, beta));
    const double pure_norm = coordinate_commutator(pure).max_abs();

    // Harmonic representative: C = 2 Theta exactly.
    const StarCocycle h = preset_cocycle("moyal", 2);
    const double harmonic_diff =
        max_abs_diff(coordinate_commutator(Cocycle(h)), h.theta() * 2.0);

    const bool pass = worst < 1e-6 && pure_norm == 0.0 && harmonic_diff == 0.0;
    verdict(4, "coordinate commutator against the star-product oracle", pass,
            "worst oracle diff " + fmt(worst) + ", pure-coboundary norm " + fmt(pure_norm));
}

// Criterion 5: the integral identity holds at 1e-9 for chains of length 1-4
// between gauged pairs, and a non-cohomologous pair yields a violation above
// 1e-6 within 1000 trials.
void criterion_equivalence() {
    double worst = 0.0;
    bool decisive = true;

    const Cocycle wv(preset_cocycle("wick-voros", 2));
    const Cocycle gm(preset_cocycle("moyal", 2));
    const GaugeCochain wv_gauge = preset_gauge("wick-voros", 2);
    // Seeds chosen so the chained integrals stay well above the decisiveness
    // threshold despite the Gaussian suppression of large frequencies.
    const std::uint64_t chain_seed[5] = {0, 8001, 8002, 8000, 8097};
    for (int n = 1; n <= 4; ++n) {
        const auto fields = testsupport::zero_sum_fields(2, n, 4, chain_seed[n]);
        const Report r = check_quantum_equivalence(wv, gm, wv_gauge, fields, 1e-9);
        for (const auto& entry : r.checks) {
            if (entry.name != "gauge_consistency") {
                worst = std::max(worst, entry.max_residual);
            }
        }
        if (n >= 2 && std::abs(integral(star_chain(wv, fields))) < 1e-6) {
            decisive = false;
        }
    }

    for (std::uint64_t s = 0; s < 10; ++s) {
        const StarCocycle base = random_cocycle(2, 8100 + s, 4, 8200 + s);
        const GaugeCochain gauge = random_gauge(2, 4, 8300 + s);
        const StarCocycle gauged(base.theta(), base.beta() + gauge.beta());
        for (int n = 1; n <= 4; ++n) {
            const auto fields =
                testsupport::zero_sum_fields(2, n, 3, 8400 + 100 * n + s);
            const Report r = check_quantum_equivalence(Cocycle(gauged), Cocycle(base),
                                                       gauge, fields, 1e-9);
            for (const auto& entry : r.checks) {
                if (entry.name != "gauge_consistency") {
                    worst = std::max(worst, entry.max_residual);
                }
            }
            if (std::abs(integral(star_chain(Cocycle(gauged), fields))) < 1e-6) {
                decisive = false;
            }
        }
    }

    const StarCocycle doubled =
        StarCocycle::harmonic(preset_cocycle("moyal", 2).theta() * 2.0);
    const auto witness = find_equivalence_violation(gm, Cocycle(doubled),
                                                    GaugeCochain(2, Polynomial(2)), 8500);

    const bool pass = worst < 1e-9 && decisive && witness.has_value() &&
                      witness->violation > 1e-6;
    verdict(5, "gauge integral identity and its violation witness", pass,
            "worst residual " + fmt(worst) + ", witness " +
                (witness ? fmt(witness->violation) : std::string("missing")) +
                (decisive ? "" : ", VACUOUS INTEGRALS"));
}

// Criterion 6: the structural identity suite at 1e-10 — trace cyclicity,
// translation covariance, Leibniz, unitality, nilpotency of the coboundary,
// and commutativity exactly for vanishing class.
void criterion_structural() {
    double worst = 0.0;
    bool witnessed = true;

    const Cocycle gm(preset_cocycle("moyal", 2));
    const Cocycle wv(preset_cocycle("wick-voros", 2));

    // Trace cyclicity: pairs under the representative, triples under the
    // gauged product.
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto pair_fields = testsupport::zero_sum_fields(2, 2, 4, 8600 + s);
        worst = std::max(worst,
                         check_trace_property(gm, pair_fields, 1e-10).max_residual());
    }
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto triple_fields = testsupport::zero_sum_fields(2, 3, 3, 8700 + s);
        worst = std::max(worst,
                         check_trace_property(wv, triple_fields, 1e-10).max_residual());
    }

    // Translation covariance and Leibniz under a seeded cocycle.
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Cocycle c(random_cocycle(2, 8800 + s, 4, 8900 + s));
        const ModeField f = random_modefield(2, 4, 2.0, 9000 + s);
        const ModeField g = random_modefield(2, 4, 2.0, 9100 + s);
        const std::vector<double> shift{0.4 - 0.05 * static_cast<double>(s), 1.1};
        const ModeField shifted_product = star(c, translate(f, shift), translate(g, shift));
        const ModeField product_shifted = translate(star(c, f, g), shift);
        const double tscale = std::max(1.0, product_shifted.max_abs_coefficient());
        worst = std::max(worst, max_abs_diff(shifted_product, product_shifted) / tscale);
        for (int axis = 0; axis < 2; ++axis) {
            const ModeField lhs = derivative(star(c, f, g), axis);
            const ModeField rhs =
                star(c, derivative(f, axis), g) + star(c, f, derivative(g, axis));
            const double scale = std::max(1.0, lhs.max_abs_coefficient());
            worst = std::max(worst, max_abs_diff(lhs, rhs) / scale);
        }
    }

    // Unitality residuals across the catalog.
    for (const auto* name : {"moyal", "wick-voros", "random"}) {
        const Cocycle c(preset_cocycle(name, 2, 9));
        worst = std::max(
            worst, check_unitality(c, sample_box(2, 40, 9200), 1e-10).max_residual());
    }

    // Nilpotency of the coboundary from arities 1 and 2.
    Polynomial beta(2);
    beta.set_coefficient({2, 0}, Complex{1.0, 0.0});
    beta.set_coefficient({1, 1}, Complex{1.0, 0.0});
    MomentumSampler tuples(2, 9300);
    worst = std::max(worst, check_d_squared_zero(to_cochain(beta), tuples.take_tuples(50, 3),
                                                 1e-10)
                                .max_residual());
    worst = std::max(worst, check_d_squared_zero(gm.as_cochain(), tuples.take_tuples(50, 4),
                                                 1e-10)
                                .max_residual());

    // Commutativity iff the class vanishes: zero theta commutes to 1e-10;
    // nonzero theta shows a visible witness.
    Polynomial cb(2);
    cb.set_coefficient({2, 0}, Complex{0.03, 0.0});
    cb.set_coefficient({0, 3}, Complex{0.002, 0.0});
    const Cocycle commutative(StarCocycle::pure_coboundary(2, cb));
    for (std::uint64_t s = 0; s < 20; ++s) {
        const ModeField f = random_modefield(2, 4, 2.0, 9400 + s);
        const ModeField g = random_modefield(2, 4, 2.0, 9500 + s);
        const ModeField fg = star(commutative, f, g);
        const ModeField gf = star(commutative, g, f);
        const double cscale = std::max(1.0, fg.max_abs_coefficient());
        worst = std::max(worst, max_abs_diff(fg, gf) / cscale);
    }
    for (const auto* name : {"moyal", "wick-voros"}) {
        const Cocycle c(preset_cocycle(name, 2));
        const ModeField a = ModeField::plane_wave(MomentumVector(
            {Rational(1), Rational(0)}));
        const ModeField b = ModeField::plane_wave(MomentumVector(
            {Rational(0), Rational(1)}));
        if (max_abs_diff(star(c, a, b), star(c, b, a)) <= 1e-10) {
            witnessed = false;
        }
    }

    const bool pass = worst < 1e-10 && witnessed;
    verdict(6, "structural identity suite", pass,
            "worst residual " + fmt(worst) +
                (witnessed ? "" : ", noncommutativity witness missing"));
}

// Criterion 7: the installed tool reports the two class-dimension formulas
// for every dimension.
void criterion_cli(const std::string& cli) {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() /
        ("starprod_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);

    bool pass = true;
    std::string detail;
    for (int m = 1; m <= 4 && pass; ++m) {
        const std::string cocycle = (dir / ("c" + std::to_string(m) + ".json")).string();
        const auto preset = testsupport::run_command(cli + " preset moyal --m " +
                                                     std::to_string(m) + " --out " + cocycle);
        if (preset.exit_code != 0) {
            pass = false;
            detail = "preset failed at m=" + std::to_string(m);
            break;
        }
        const auto classify = testsupport::run_command(cli + " classify " + cocycle);
        if (classify.exit_code != 0) {
            pass = false;
            detail = "classify failed at m=" + std::to_string(m);
            break;
        }
        const json out = json::parse(classify.output, nullptr, false);
        if (out.is_discarded() || out["dim_H2_alpha"] != m * (m - 1) ||
            out["dim_H2_alpha_star"] != m * (m - 1) / 2) {
            pass = false;
            detail = "wrong dimensions at m=" + std::to_string(m);
            break;
        }
    }
    if (pass) {
        detail = "dim pairs (0,0) (2,1) (6,3) (12,6) as reported";
    }
    std::filesystem::remove_all(dir);
    verdict(7, "tool reports the class-dimension formulas", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>\n";
        return 2;
    }
    criterion_associativity();
    criterion_projection();
    criterion_classification();
    criterion_commutator();
    criterion_equivalence();
    criterion_structural();
    criterion_cli(argv[1]);

    if (g_failures == 0) {
        std::cout << "acceptance: all 7 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
    return 1;
}
