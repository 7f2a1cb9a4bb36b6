#include "locsig/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace locsig {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty())
        throw std::invalid_argument("invalid rational \"" + std::string(whole) + "\": empty integer part");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("invalid rational \"" + std::string(whole) + "\": unexpected character '" + c + "'");
    }
    return BigInt(std::string(text));
}

} // namespace

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero())
        throw std::domain_error("rational with zero denominator");
    value_ = Backend(num, den);   // cpp_rational canonicalizes
}

Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    BigInt num, den = 1;
    auto slash = rest.find('/');
    if (slash == std::string_view::npos) {
        num = parse_integer(rest, text);
    } else {
        num = parse_integer(rest.substr(0, slash), text);
        den = parse_integer(rest.substr(slash + 1), text);
        if (den.is_zero())
            throw std::domain_error("invalid rational \"" + std::string(text) + "\": zero denominator");
    }
    if (negative)
        num = -num;
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string out = numerator().str();
    BigInt den = denominator();
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

Rational Rational::operator-() const { return Rational(Backend(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
Rational& Rational::operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
Rational& Rational::operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(Rational::Backend(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(Rational::Backend(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(Rational::Backend(a.value_ * b.value_)); }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        throw std::domain_error("rational division by zero");
    return Rational(Rational::Backend(a.value_ / b.value_));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::string to_string(const Rational& r) { return r.str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace locsig
