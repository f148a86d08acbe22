#include "accfn/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace accfn {
namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

BigInt parse_digits(std::string_view s) {
    return BigInt(std::string(s));
}

}  // namespace

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(BigInt num, BigInt den) {
    if (den.is_zero()) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {  // the backend requires the sign on the numerator
        num = -num;
        den = -den;
    }
    value_ = Backend(std::move(num), std::move(den));
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.value_.is_zero()) throw std::invalid_argument("division of rational by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    if (rest.empty()) throw std::invalid_argument("empty rational literal");

    Rational result;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        std::string_view num = rest.substr(0, slash);
        std::string_view den = rest.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed fraction literal");
        BigInt d = parse_digits(den);
        if (d.is_zero()) throw std::invalid_argument("fraction with zero denominator");
        result = Rational(parse_digits(num), std::move(d));
    } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        std::string_view whole = rest.substr(0, dot);
        std::string_view frac = rest.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac))
            throw std::invalid_argument("malformed decimal literal");
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        result = Rational(parse_digits(whole) * scale + parse_digits(frac), std::move(scale));
    } else {
        if (!all_digits(rest)) throw std::invalid_argument("malformed integer literal");
        result = Rational(parse_digits(rest), BigInt(1));
    }
    return negative ? -result : result;
}

std::string Rational::str() const {
    if (denominator() == 1) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace accfn
