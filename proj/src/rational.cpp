#include "billiard/rational.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

namespace billiard {

namespace {

std::int64_t parse_int(std::string_view text, const char* what) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw std::domain_error(std::string("not an integer: '") + std::string(text) + "' in " + what);
    return value;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::domain_error("empty rational literal");
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text, "rational literal"));
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (num.empty() || den.empty())
        throw std::domain_error(std::string("malformed rational literal: '") + std::string(text) + "'");
    return Rational(parse_int(num, "numerator"), parse_int(den, "denominator"));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace billiard
