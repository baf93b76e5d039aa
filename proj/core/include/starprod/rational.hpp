#pragma once

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace starprod {

using Complex = std::complex<double>;

/// Exact rational scalar. Frequencies and finite-difference steps are kept
/// rational so that sums of mode frequencies collide exactly (p + q as a map
/// key) instead of drifting apart in floating point.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Parses "n" or "n/d" (optional sign, decimal digits). Throws InputError on
/// anything else, including a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical form "n/d" with d > 0 and gcd(n, d) = 1; e.g. "-3/2", "0/1".
std::string format_rational(const Rational& r);

}  // namespace starprod
