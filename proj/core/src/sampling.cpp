#include "starprod/sampling.hpp"

#include "starprod/errors.hpp"

#include <string>

namespace starprod {

MomentumSampler::MomentumSampler(int dimension, std::uint64_t seed, int bound,
                                 int denominator_cap)
    : dim_(dimension), bound_(bound), denominator_cap_(denominator_cap), rng_(seed) {
    if (dimension < 1) {
        throw InputError("sampler dimension must be positive, got " +
                         std::to_string(dimension));
    }
    if (bound < 0 || denominator_cap < 1) {
        throw InputError("sampler bound must be >= 0 and denominator cap >= 1");
    }
}

MomentumVector MomentumSampler::next() {
    std::uniform_int_distribution<int> den_dist(1, denominator_cap_);
    std::vector<Rational> coords;
    coords.reserve(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        const int den = den_dist(rng_);
        std::uniform_int_distribution<int> num_dist(-bound_ * den, bound_ * den);
        coords.emplace_back(num_dist(rng_), den);
    }
    return MomentumVector(std::move(coords));
}

MomentumVector MomentumSampler::next_nonzero() {
    if (bound_ == 0) {
        throw InputError("cannot sample a nonzero momentum from a zero-width box");
    }
    for (;;) {
        MomentumVector v = next();
        if (!v.is_zero()) {
            return v;
        }
    }
}

std::vector<MomentumVector> MomentumSampler::take(int count) {
    std::vector<MomentumVector> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        out.push_back(next());
    }
    return out;
}

std::vector<PairSample> MomentumSampler::take_pairs(int count) {
    std::vector<PairSample> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        out.push_back({next(), next()});
    }
    return out;
}

std::vector<TripleSample> MomentumSampler::take_triples(int count) {
    std::vector<TripleSample> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        out.push_back({next(), next(), next()});
    }
    return out;
}

std::vector<std::vector<MomentumVector>> MomentumSampler::take_tuples(int count, int arity) {
    std::vector<std::vector<MomentumVector>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        std::vector<MomentumVector> tuple;
        tuple.reserve(static_cast<std::size_t>(arity));
        for (int k = 0; k < arity; ++k) {
            tuple.push_back(next());
        }
        out.push_back(std::move(tuple));
    }
    return out;
}

std::vector<MomentumVector> sample_box(int dimension, int count, std::uint64_t seed,
                                       int bound, int denominator_cap) {
    return MomentumSampler(dimension, seed, bound, denominator_cap).take(count);
}

std::vector<PairSample> sample_pairs(int dimension, int count, std::uint64_t seed, int bound,
                                     int denominator_cap) {
    return MomentumSampler(dimension, seed, bound, denominator_cap).take_pairs(count);
}

std::vector<TripleSample> sample_triples(int dimension, int count, std::uint64_t seed,
                                         int bound, int denominator_cap) {
    return MomentumSampler(dimension, seed, bound, denominator_cap).take_triples(count);
}

}  // namespace starprod
