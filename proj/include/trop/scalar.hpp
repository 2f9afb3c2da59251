#pragma once

#include <compare>
#include <optional>
#include <string>

#include "trop/rational.hpp"

namespace trop {

// Element of the max-plus semiring: a rational value or the bottom element
// (-infinity, the neutral element of tropical addition). The multiplicative
// identity is the rational 0.
class TropScalar {
  public:
    TropScalar() : v_(Rational(0)) {}
    TropScalar(Rational v) : v_(std::move(v)) {}
    TropScalar(int v) : v_(Rational(v)) {}

    static TropScalar bottom() {
        TropScalar s;
        s.v_.reset();
        return s;
    }
    static TropScalar one() { return TropScalar(Rational(0)); }

    bool is_bottom() const { return !v_.has_value(); }
    bool is_finite() const { return v_.has_value(); }

    const Rational& value() const {
        if (!v_) throw DomainError("TropScalar: bottom has no finite value");
        return *v_;
    }

    bool operator==(const TropScalar& o) const { return v_ == o.v_; }

    friend TropScalar oplus(const TropScalar& a, const TropScalar& b) {
        if (a.is_bottom()) return b;
        if (b.is_bottom()) return a;
        return TropScalar(a.value() >= b.value() ? a.value() : b.value());
    }

    friend TropScalar otimes(const TropScalar& a, const TropScalar& b) {
        if (a.is_bottom() || b.is_bottom()) return bottom();
        return TropScalar(a.value() + b.value());
    }

    // a - b; undefined when b is bottom
    friend TropScalar oslash(const TropScalar& a, const TropScalar& b) {
        if (b.is_bottom()) throw DomainError("oslash: division by bottom (-inf)");
        if (a.is_bottom()) return bottom();
        return TropScalar(a.value() - b.value());
    }

    // tropical exponentiation x^(*alpha) = alpha * x; bottom stays bottom
    friend TropScalar power(const TropScalar& a, const Rational& alpha) {
        if (a.is_bottom()) return bottom();
        return TropScalar(alpha * a.value());
    }

    std::string str() const { return is_bottom() ? "-inf" : format_rational(*v_); }

  private:
    std::optional<Rational> v_;
};

inline TropScalar parse_trop_scalar(std::string_view text) {
    if (text == "-inf" || text == "-Inf" || text == "-infinity") return TropScalar::bottom();
    return TropScalar(parse_rational(text));
}

}  // namespace trop
