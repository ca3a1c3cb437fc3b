#include "semigrowth/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <ostream>
#include <sstream>

namespace semigrowth {

namespace {

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

Int parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        i = 1;
        if (i == text.size()) throw std::invalid_argument("sign without digits");
    }
    Int value = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9')
            throw std::invalid_argument("invalid digit in integer literal: '" +
                                        std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return neg ? Int(-value) : value;
}

}  // namespace

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    canonicalize();
}

void Rational::canonicalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = gcd_int(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Int Rational::floor() const {
    Int q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
}

Int Rational::ceil() const {
    Int q = num_ / den_;
    if (num_ > 0 && q * den_ != num_) ++q;
    return q;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw std::domain_error("reciprocal of zero");
    return Rational(den_, num_);
}

double Rational::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text), 1);
    if (text.find('/', slash + 1) != std::string_view::npos)
        throw std::invalid_argument("multiple '/' in rational literal: '" +
                                    std::string(text) + "'");
    Int num = parse_integer(text.substr(0, slash));
    Int den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" +
                                    std::string(text) + "'");
    return Rational(std::move(num), std::move(den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational abs(const Rational& r) {
    return r.is_negative() ? -r : r;
}

Rational pow(const Rational& base, long long exponent) {
    if (exponent == 0) return Rational(1);
    if (exponent < 0) return pow(base.reciprocal(), -exponent);
    Rational acc(1);
    Rational b = base;
    unsigned long long e = static_cast<unsigned long long>(exponent);
    while (e > 0) {
        if (e & 1ULL) acc *= b;
        b *= b;
        e >>= 1ULL;
    }
    return acc;
}

std::vector<Rational> parse_rational_list(std::string_view text, char sep) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(sep, start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view token = text.substr(start, end - start);
        // Trim surrounding spaces so "1, 9/2" parses.
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
            token.remove_prefix(1);
        while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
            token.remove_suffix(1);
        if (token.empty())
            throw std::invalid_argument("empty entry in rational list");
        out.push_back(Rational::parse(token));
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

}  // namespace semigrowth
