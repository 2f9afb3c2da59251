#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trop {

// expression templates are off: every operation yields a value, so auto and
// deduced lambda returns can never dangle
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// floor(p/q) with the usual round-toward-minus-infinity convention.
inline Int floor_int(const Rational& x) {
    Int n = numerator(x), d = denominator(x);  // d > 0 canonically
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline Rational floor_rat(const Rational& x) { return Rational(floor_int(x)); }

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

// fractional part in [0, 1)
inline Rational frac(const Rational& x) { return x - floor_rat(x); }

// base^k for integer k of either sign; base must be nonzero when k < 0
inline Rational pow_int(const Rational& base, Int k) {
    if (k == 0) return Rational(1);
    bool inv = k < 0;
    if (inv) {
        if (base == 0) throw DomainError("pow_int: zero base with negative exponent");
        k = -k;
    }
    Rational acc(1), b = base;
    Int e = k;
    while (e > 0) {
        if ((e & 1) != 0) acc *= b;
        b *= b;
        e >>= 1;
    }
    if (inv) acc = Rational(1) / acc;
    return acc;
}

// natural log of a positive rational; safe for values far outside double range
inline double log_rational(const Rational& x) {
    if (x <= 0) throw DomainError("log_rational: nonpositive argument");
    auto log_int = [](const Int& z) -> double {
        // z >= 1
        unsigned bits = msb(z);  // msb(1) == 0
        if (bits <= 900) return std::log(z.convert_to<double>());
        Int top = z >> (bits - 63);
        return std::log(top.convert_to<double>()) + static_cast<double>(bits - 63) * std::log(2.0);
    };
    return log_int(numerator(x)) - log_int(denominator(x));
}

inline double to_double(const Rational& x) {
    return x.convert_to<double>();
}

// "p/q" with the "/q" omitted for integers; this is the wire format everywhere
inline std::string format_rational(const Rational& x) {
    Int n = numerator(x), d = denominator(x);
    std::string s = n.str();
    if (d != 1) {
        s += '/';
        s += d.str();
    }
    return s;
}

inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw ParseError("bad rational: '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Int(std::string(text)));
        }
        Int n{std::string(text.substr(0, slash))};
        Int d{std::string(text.substr(slash + 1))};
        if (d == 0) fail();
        return Rational(n, d);
    } catch (const std::exception&) {
        fail();
    }
    return Rational(0);  // unreachable
}

// exact square root test; returns true and sets r when x == r*r with r >= 0
inline bool rational_sqrt(const Rational& x, Rational& r) {
    if (x < 0) return false;
    if (x == 0) {
        r = 0;
        return true;
    }
    Int n = numerator(x), d = denominator(x), rem;
    Int sn = sqrt(n, rem);
    if (rem != 0) return false;
    Int sd = sqrt(d, rem);
    if (rem != 0) return false;
    r = Rational(sn, sd);
    return true;
}

}  // namespace trop
