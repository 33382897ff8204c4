// quarter_rational.hpp - exact rationals whose denominator divides 4
#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace szeged {

/*
 * Every revised-Szeged edge term is a product of two half-integers, so sums
 * of them live in (1/4)Z. We store 4x the value as a single integer; all
 * arithmetic that stays inside (1/4)Z is exact and comparisons are integer
 * comparisons.
 */
class QuarterRational {
public:
    constexpr QuarterRational() = default;
    constexpr QuarterRational(std::int64_t integer) : quadrupled_(integer * 4) {}  // NOLINT

    static constexpr QuarterRational from_quadrupled(std::int64_t q) {
        QuarterRational r;
        r.quadrupled_ = q;
        return r;
    }

    constexpr std::int64_t quadrupled() const noexcept { return quadrupled_; }

    /// Numerator and denominator in lowest terms, denominator in {1, 2, 4}.
    constexpr std::int64_t numerator() const noexcept { return quadrupled_ / reduced_gcd(); }
    constexpr std::int64_t denominator() const noexcept { return 4 / reduced_gcd(); }

    constexpr bool is_integer() const noexcept { return quadrupled_ % 4 == 0; }

    constexpr QuarterRational operator-() const { return from_quadrupled(-quadrupled_); }
    constexpr QuarterRational& operator+=(QuarterRational o) {
        quadrupled_ += o.quadrupled_;
        return *this;
    }
    constexpr QuarterRational& operator-=(QuarterRational o) {
        quadrupled_ -= o.quadrupled_;
        return *this;
    }
    friend constexpr QuarterRational operator+(QuarterRational a, QuarterRational b) { return a += b; }
    friend constexpr QuarterRational operator-(QuarterRational a, QuarterRational b) { return a -= b; }
    friend constexpr QuarterRational operator*(std::int64_t k, QuarterRational a) {
        return from_quadrupled(k * a.quadrupled_);
    }

    friend constexpr bool operator==(QuarterRational, QuarterRational) = default;
    friend constexpr auto operator<=>(QuarterRational, QuarterRational) = default;

    /// "p/q" in lowest terms, always with a denominator ("3636/1", "125/4").
    std::string to_fraction_string() const {
        return std::to_string(numerator()) + "/" + std::to_string(denominator());
    }

    /// Exact decimal: "3636", "31.25", "-0.5".
    std::string to_decimal_string() const {
        const bool neg = quadrupled_ < 0;
        const std::uint64_t mag = neg ? 0 - static_cast<std::uint64_t>(quadrupled_)
                                      : static_cast<std::uint64_t>(quadrupled_);
        std::string s = (neg ? "-" : "") + std::to_string(mag / 4);
        switch (mag % 4) {
            case 1: s += ".25"; break;
            case 2: s += ".5"; break;
            case 3: s += ".75"; break;
            default: break;
        }
        return s;
    }

    /// Integer form when exact, otherwise "p/q" ("20", "125/4").
    std::string to_string() const {
        return is_integer() ? std::to_string(quadrupled_ / 4) : to_fraction_string();
    }

    friend std::ostream& operator<<(std::ostream& os, QuarterRational r) { return os << r.to_string(); }

private:
    constexpr std::int64_t reduced_gcd() const noexcept {
        const std::int64_t g = std::gcd(quadrupled_, std::int64_t{4});
        return g == 0 ? 4 : g;
    }

    std::int64_t quadrupled_ = 0;
};

/// Halves an integer that must be even (ordered-pair sums of symmetric terms).
inline std::int64_t exact_half(std::int64_t twice) {
    if (twice % 2 != 0) throw std::logic_error("odd value where an even sum was required");
    return twice / 2;
}

}  // namespace szeged
