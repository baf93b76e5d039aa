#pragma once

#include "starprod/cocycle.hpp"
#include "starprod/equivalence.hpp"
#include "starprod/matrix.hpp"
#include "starprod/modefield.hpp"

#include <cstdint>
#include <string>

namespace starprod {

/// Groenewold-Moyal cocycle for a real antisymmetric theta_a:
/// alpha(p, q) = i q^T theta_a p, stored as the harmonic cocycle with
/// Theta = -i theta_a. ValidationError if theta_a is not real antisymmetric.
StarCocycle moyal(const CMatrix& theta_a);

/// Wick-Voros-type cocycle: the Moyal harmonic part for theta_a plus the
/// coboundary of beta(p) = -1/2 p^T theta_s p. ValidationError if theta_a is
/// not real antisymmetric or theta_s not real symmetric.
StarCocycle wick_voros(const CMatrix& theta_a, const CMatrix& theta_s);

/// The gauge connecting the Wick-Voros product to its Moyal representative:
/// beta(p) = -1/2 p^T theta_s p.
GaugeCochain wick_voros_gauge(const CMatrix& theta_s);

/// Random structured cocycle: pure-imaginary antisymmetric theta with
/// entries i*U[-1,1] drawn from theta_seed, plus a sparse polynomial beta
/// (at most 8 terms, total degree in [1, beta_degree], beta_degree <= 6)
/// drawn from rng_seed. Each beta coefficient is U[-1,1] scaled by
/// 8^(-degree of its term), which bounds |beta| by 8 on the box [-8,8]^m
/// reachable by chains of catalog fields, keeping exp() overflow-free.
/// With even_beta_only, terms are restricted to even total degree so the
/// product satisfies the complex-conjugation property.
StarCocycle random_cocycle(int m, std::uint64_t theta_seed, int beta_degree,
                           std::uint64_t rng_seed, bool even_beta_only = false);

/// Random polynomial gauge with the same sparsity and scaling as
/// random_cocycle's beta part.
GaugeCochain random_gauge(int m, int degree, std::uint64_t rng_seed);

/// Random field with exactly mode_count distinct modes, frequencies in
/// [-freq_box, freq_box]^m with denominators <= 8, coefficients in the
/// complex unit box. mode_count <= 64. freq_box = 0 degenerates to the
/// constant field (a single zero mode).
ModeField random_modefield(int m, int mode_count, double freq_box, std::uint64_t rng_seed);

/// Named example products for the command-line tool and the test suites:
/// "moyal" (theta_a pairing axes (0,1) and (2,3) when present),
/// "wick-voros" (same theta_a, theta_s = identity), and "random"
/// (random_cocycle seeded from `seed`). InputError on unknown names,
/// 1 <= m <= 4.
StarCocycle preset_cocycle(const std::string& name, int m, std::uint64_t seed = 1);

/// The gauge associated with a preset: its beta part as a GaugeCochain
/// ("moyal" gives the zero gauge; "wick-voros" gives wick_voros_gauge(I)).
GaugeCochain preset_gauge(const std::string& name, int m, std::uint64_t seed = 1);

}  // namespace starprod
