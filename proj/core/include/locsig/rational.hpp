#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar used throughout the library.
 *
 * Invariants: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
 * Backed by an arbitrary-precision integer type, so no computation
 * ever overflows or rounds.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace locsig {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}
    Rational(long long num, long long den);
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p/q" or an integer string, with optional leading sign.
    /// Throws std::invalid_argument on malformed text and
    /// std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    /// Lowest terms, sign on the numerator, "/q" omitted when q = 1.
    std::string str() const;

    Rational operator-() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    using Backend = boost::multiprecision::cpp_rational;
    explicit Rational(Backend v) : value_(std::move(v)) {}

    Backend value_;
};

Rational abs(const Rational& r);
std::string to_string(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace locsig
