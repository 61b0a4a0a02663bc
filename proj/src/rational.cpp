#include "gqm/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace gqm {

namespace mp = boost::multiprecision;

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    // The backend rejects negative denominators; carry the sign on the numerator.
    value_ = den < 0 ? Backend(-num, -den) : Backend(num, den);
}

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
    if (text.empty()) return false;
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') i = 1;
    if (i == text.size()) return false;
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
    }
    out = BigInt(std::string(text));
    return true;
}

}  // namespace

std::optional<Rational> Rational::try_parse(std::string_view text) {
    const auto slash = text.find('/');
    BigInt num;
    if (slash == std::string_view::npos) {
        if (!parse_integer(text, num)) return std::nullopt;
        return Rational(num);
    }
    BigInt den;
    if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
    if (den.is_zero()) return std::nullopt;
    return Rational(num, den);
}

Rational Rational::parse(std::string_view text) {
    auto r = try_parse(text);
    if (!r) {
        throw std::invalid_argument("Rational: cannot parse \"" + std::string(text) +
                                    "\" (expected \"p\" or \"p/q\")");
    }
    return *r;
}

std::string Rational::str() const {
    return numerator().str() + "/" + denominator().str();
}

BigInt Rational::floor() const {
    BigInt q = numerator() / denominator();
    if (numerator() < 0 && q * denominator() != numerator()) --q;
    return q;
}

BigInt Rational::ceil() const {
    return -Rational(-*this).floor();
}

Rational Rational::pow(const Rational& base, unsigned exponent) {
    return Rational(BigInt(mp::pow(base.numerator(), exponent)),
                    BigInt(mp::pow(base.denominator(), exponent)));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(Rational::Backend(a.value_ / b.value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace gqm
