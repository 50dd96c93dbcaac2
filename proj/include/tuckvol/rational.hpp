#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tuckvol {

// Exact arbitrary-precision rational number. Always kept in canonical form
// (denominator > 0, gcd(num, den) = 1) by the backend, so operator== is
// structural equality. No floating point anywhere in the core.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(num) / Rational(den);
}

inline Rational make_rational(long long num, long long den) {
    return make_rational(BigInt(num), BigInt(den));
}

inline int sign_of(const Rational& r) { return r.sign(); }

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Serialized form used in every JSON file: "p/q", or just "p" when q = 1.
inline std::string rational_str(const Rational& r) { return r.str(); }

// Strict parser for the "p/q" syntax. Rejects whitespace, floats and empty
// fields; a parsed value is canonicalized by the backend.
inline Rational parse_rational(const std::string& text) {
    const auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("rational: cannot parse '" + text + "'");
    };
    if (text.empty()) throw bad();
    const auto is_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string num = text;
    std::string den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string digits = num;
    if (!digits.empty() && digits[0] == '-') digits = digits.substr(1);
    if (!is_digits(digits) || !is_digits(den)) throw bad();
    BigInt d(den);
    if (d == 0) throw bad();
    return make_rational(BigInt(num), d);
}

}  // namespace tuckvol
