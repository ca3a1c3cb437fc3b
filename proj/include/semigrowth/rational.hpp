#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semigrowth {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator, so equality is field-wise and ordering is the real-number
/// order. Text form is "p/q" with "/q" omitted when q == 1; decimals are
/// rejected on parse.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(const Int& v) : num_(v), den_(1) {}
    Rational(Int num, Int den);

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    /// Largest integer <= *this.
    Int floor() const;
    /// Smallest integer >= *this.
    Int ceil() const;

    Rational reciprocal() const;

    double to_double() const;

    std::string to_string() const;
    /// Parses "p/q" (ASCII, optional leading '-', no whitespace, no decimals).
    static Rational parse(std::string_view text);

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    Int num_;
    Int den_;  // > 0

    void canonicalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
/// Integer power; negative exponents invert (base must be nonzero).
Rational pow(const Rational& base, long long exponent);

/// Parses a separator-delimited list of "p/q" values, e.g. "1,9/2,65/4".
std::vector<Rational> parse_rational_list(std::string_view text, char sep = ',');

}  // namespace semigrowth
