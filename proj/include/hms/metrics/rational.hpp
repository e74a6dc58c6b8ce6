#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hms {

/// Exact fraction kept in lowest terms with a positive denominator. Used for
/// throughput and efficiency so that T_state == T_raw * eta holds exactly.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den)
    {
        if (den_ == 0) throw std::domain_error("zero denominator");
        normalize();
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend constexpr Rational operator*(const Rational& a, const Rational& b)
    {
        // cross-reduce first to keep intermediates small
        const std::int64_t g1 = std::gcd(a.num_, b.den_);
        const std::int64_t g2 = std::gcd(b.num_, a.den_);
        const std::int64_t n1 = g1 ? a.num_ / g1 : a.num_;
        const std::int64_t d2 = g1 ? b.den_ / g1 : b.den_;
        const std::int64_t n2 = g2 ? b.num_ / g2 : b.num_;
        const std::int64_t d1 = g2 ? a.den_ / g2 : a.den_;
        return Rational(n1 * n2, d1 * d2);
    }

    friend constexpr Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0) throw std::domain_error("division by zero");
        return a * Rational(b.den_, b.num_);
    }

    friend constexpr Rational operator+(const Rational& a, const Rational& b)
    {
        const std::int64_t l = std::lcm(a.den_, b.den_);
        return Rational(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
    }

    friend constexpr Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num_, b.den_); }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;

    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }

private:
    constexpr void normalize()
    {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace hms
