#pragma once

#include "starprod/momentum.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace starprod {

using PairSample = std::array<MomentumVector, 2>;
using TripleSample = std::array<MomentumVector, 3>;

/// Deterministic sampler of rational momenta in the box [-bound, bound]^m
/// with denominators up to denominator_cap. Every coordinate is k/d with
/// d ~ U{1..cap} and k ~ U{-bound*d .. bound*d}, so the samples are exact
/// rationals and reproducible for a fixed seed.
class MomentumSampler {
public:
    MomentumSampler(int dimension, std::uint64_t seed, int bound = 2, int denominator_cap = 8);

    MomentumVector next();
    /// A momentum guaranteed nonzero (redraws on the zero vector).
    MomentumVector next_nonzero();

    std::vector<MomentumVector> take(int count);
    std::vector<PairSample> take_pairs(int count);
    std::vector<TripleSample> take_triples(int count);
    /// Tuples of `arity` momenta each, as used by cochain sampling.
    std::vector<std::vector<MomentumVector>> take_tuples(int count, int arity);

    std::mt19937_64& engine() { return rng_; }

private:
    int dim_;
    int bound_;
    int denominator_cap_;
    std::mt19937_64 rng_;
};

/// Convenience wrappers used by the verification entry points.
std::vector<MomentumVector> sample_box(int dimension, int count, std::uint64_t seed,
                                       int bound = 2, int denominator_cap = 8);
std::vector<PairSample> sample_pairs(int dimension, int count, std::uint64_t seed,
                                     int bound = 2, int denominator_cap = 8);
std::vector<TripleSample> sample_triples(int dimension, int count, std::uint64_t seed,
                                         int bound = 2, int denominator_cap = 8);

}  // namespace starprod
