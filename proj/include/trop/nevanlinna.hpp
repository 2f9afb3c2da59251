#pragma once

#include <vector>

#include "trop/function.hpp"

namespace trop {

// m(r, f) = (f^+(r) + f^+(-r)) / 2 with f^+ = max(f, 0)
inline Rational proximity(const PLFunction& f, const Rational& r) {
    if (r <= 0) throw DomainError("proximity: radius must be positive");
    auto plus = [](const TropScalar& v) {
        if (v.is_bottom() || v.value() < 0) return Rational(0);
        return v.value();
    };
    return (plus(f.eval(r)) + plus(f.eval(-r))) / 2;
}

// N(r, f) = (1/2) sum over poles b in (-r, r) of tau(b) (r - |b|)
inline Rational counting(const PLFunction& f, const Rational& r) {
    if (r <= 0) throw DomainError("counting: radius must be positive");
    Rational acc(0);
    for (const auto& e : f.events_in(-r, r)) {
        if (e.kind != BreakpointEvent::Kind::Pole) continue;
        acc += e.multiplicity * (r - abs(e.location));
    }
    return acc / 2;
}

inline Rational characteristic(const PLFunction& f, const Rational& r) {
    return proximity(f, r) + counting(f, r);
}

struct NevanlinnaReport {
    std::vector<Rational> radii;
    std::vector<Rational> m_values, n_values, t_values;
    double order = 0.0;
    double hyper_order = 0.0;
    bool hyper_meaningful = false;
    bool bounded_characteristic = false;
    std::pair<Rational, Rational> fit_window{Rational(0), Rational(0)};
};

namespace detail {

// least-squares slope of y against x
inline double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double den = n * sxx - sx * sx;
    if (den == 0) return 0.0;
    return (n * sxy - sx * sy) / den;
}

}  // namespace detail

// T is computed exactly; only the regression against log r is floating point.
// The fit uses the top half of the grid, where limsup behavior dominates. The
// slopes are an engineering proxy for the order and hyper-order limsups.
inline NevanlinnaReport nevanlinna_report(const PLFunction& f, std::vector<Rational> radii) {
    if (radii.size() < 8) throw DomainError("nevanlinna_report: need at least 8 radii");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (radii[i - 1] >= radii[i]) throw DomainError("nevanlinna_report: radii must increase");

    NevanlinnaReport rep;
    rep.radii = std::move(radii);
    for (const auto& r : rep.radii) {
        Rational m = proximity(f, r), n = counting(f, r);
        rep.m_values.push_back(m);
        rep.n_values.push_back(n);
        rep.t_values.push_back(m + n);
    }

    std::size_t first = rep.radii.size() / 2;
    rep.fit_window = {rep.radii[first], rep.radii.back()};

    bool constant_t = true;
    for (const auto& t : rep.t_values)
        if (t != rep.t_values.front()) constant_t = false;
    if (constant_t) {
        // bounded characteristic: order 0 by convention
        rep.bounded_characteristic = true;
        return rep;
    }

    std::vector<double> lx, ly, hy;
    bool all_above_one = true;
    for (std::size_t i = first; i < rep.radii.size(); ++i) {
        const Rational& t = rep.t_values[i];
        if (t <= 1) all_above_one = false;
        if (t <= 0) continue;
        lx.push_back(log_rational(rep.radii[i]));
        ly.push_back(log_rational(t));
        if (t > 1) hy.push_back(std::log(log_rational(t)));
    }
    if (lx.size() >= 2) rep.order = detail::ls_slope(lx, ly);
    if (all_above_one && hy.size() == lx.size() && lx.size() >= 2) {
        rep.hyper_order = detail::ls_slope(lx, hy);
        rep.hyper_meaningful = true;
    }
    return rep;
}

inline std::vector<Rational> geometric_radii(int kmin = 3, int kmax = 13) {
    std::vector<Rational> radii;
    for (int k = kmin; k <= kmax; ++k) radii.push_back(pow_int(Rational(2), Int(k)));
    return radii;
}

inline std::pair<double, double> order_estimate(const PLFunction& f,
                                                std::vector<Rational> radii) {
    auto rep = nevanlinna_report(f, std::move(radii));
    return {rep.order, rep.hyper_order};
}

}  // namespace trop
