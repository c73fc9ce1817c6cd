#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <iosfwd>

namespace billiard {

/// Raised when a result no longer fits in 64 bits after reduction.
/// Distinct from std::overflow_error so callers can tell a numeric-range
/// failure apart from anything a library routine might throw.
class arithmetic_overflow : public std::overflow_error {
public:
    explicit arithmetic_overflow(const std::string& what)
        : std::overflow_error(what) {}
};

namespace detail {

using int128 = __int128;
using uint128 = unsigned __int128;

inline uint128 uabs128(int128 v) {
    return v < 0 ? static_cast<uint128>(-(v + 1)) + 1 : static_cast<uint128>(v);
}

inline uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t narrow_checked(int128 v, const char* what) {
    if (v > static_cast<int128>(INT64_MAX) || v < static_cast<int128>(INT64_MIN))
        throw arithmetic_overflow(what);
    return static_cast<std::int64_t>(v);
}

} // namespace detail

/// Exact fraction over checked 64-bit integers.
///
/// Invariants: denominator > 0 and gcd(|numerator|, denominator) == 1, so
/// equality is plain structural equality. The sign lives on the numerator.
/// Every operation reduces in 128-bit intermediates first and throws
/// arithmetic_overflow only if the *reduced* result leaves the 64-bit range.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design

    Rational(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        detail::int128 nn = n, dd = d;
        if (dd < 0) { nn = -nn; dd = -dd; }
        normalize_from(nn, dd);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Largest integer <= value.
    std::int64_t floor() const {
        if (num_ >= 0) return num_ / den_;
        return -(((-static_cast<detail::int128>(num_)) + den_ - 1) / den_);
    }

    Rational abs() const { return num_ < 0 ? Rational(-*this) : *this; }

    Rational reciprocal() const {
        if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = detail::narrow_checked(-static_cast<detail::int128>(a.num_), "negate");
        r.den_ = a.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(static_cast<detail::int128>(a.num_) * b.den_ +
                           static_cast<detail::int128>(b.num_) * a.den_,
                       static_cast<detail::int128>(a.den_) * b.den_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(static_cast<detail::int128>(a.num_) * b.den_ -
                           static_cast<detail::int128>(b.num_) * a.den_,
                       static_cast<detail::int128>(a.den_) * b.den_);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(static_cast<detail::int128>(a.num_) * b.num_,
                       static_cast<detail::int128>(a.den_) * b.den_);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        detail::int128 nn = static_cast<detail::int128>(a.num_) * b.den_;
        detail::int128 dd = static_cast<detail::int128>(a.den_) * b.num_;
        if (dd < 0) { nn = -nn; dd = -dd; }
        return from128(nn, dd);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // Cross-multiplication is exact in 128 bits for any pair of stored values.
        detail::int128 lhs = static_cast<detail::int128>(a.num_) * b.den_;
        detail::int128 rhs = static_cast<detail::int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    /// "n/d", or just "n" for integers.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) {
            s += '/';
            s += std::to_string(den_);
        }
        return s;
    }

    /// Parses "A/B" or a bare integer literal. Throws std::domain_error on
    /// malformed input or a zero denominator.
    static Rational parse(std::string_view text);

private:
    static Rational from128(detail::int128 n, detail::int128 d) {
        Rational r;
        r.normalize_from(n, d);
        return r;
    }

    void normalize_from(detail::int128 n, detail::int128 d) {
        // d > 0 guaranteed by callers.
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        detail::uint128 g = detail::gcd128(detail::uabs128(n), static_cast<detail::uint128>(d));
        n /= static_cast<detail::int128>(g);
        d /= static_cast<detail::int128>(g);
        num_ = detail::narrow_checked(n, "Rational: numerator overflow");
        den_ = detail::narrow_checked(d, "Rational: denominator overflow");
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace billiard
