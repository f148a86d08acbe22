#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace accfn {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; arithmetic and comparison never round.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}                  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    Rational(BigInt num, BigInt den);

    /// Parses "p/q", an integer, or a decimal literal ("0.35" is exactly 7/20).
    /// Throws std::invalid_argument on anything else (including "p/0").
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_negative() const { return value_ < 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
        if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Canonical rendering: "p/q" in lowest terms, or plain "p" when q == 1.
    std::string str() const;

private:
    using Backend = boost::multiprecision::cpp_rational;
    explicit Rational(Backend v) : value_(std::move(v)) {}

    Backend value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace accfn
