#include "starprod/rational.hpp"

#include "starprod/errors.hpp"

#include <cctype>
#include <charconv>

namespace starprod {

namespace {

std::int64_t parse_integer(const std::string& text, const std::string& whole) {
    if (text.empty()) {
        throw InputError("empty integer in rational '" + whole + "'");
    }
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (*first == '+') {
        ++first;  // std::from_chars rejects a leading '+'
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw InputError("invalid integer '" + text + "' in rational '" + whole + "'");
    }
    return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(text, text));
    }
    const std::int64_t num = parse_integer(text.substr(0, slash), text);
    const std::int64_t den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw InputError("zero denominator in rational '" + text + "'");
    }
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace starprod
