#pragma once

#include <utility>
#include <vector>

#include "trop/function.hpp"

namespace trop {

// pi^(a,b): the 1-periodic sawtooth with slopes a/(a+b) and -b/(a+b), value 0
// at the integers and peak ab/(a+b)^2 at b/(a+b).
inline PLFunction sawtooth(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) throw DomainError("sawtooth: parameters must be positive");
    Profile p;
    p.points.emplace_back(Rational(0), Rational(0));
    p.points.emplace_back(b / (a + b), a * b / ((a + b) * (a + b)));
    return PLFunction::periodic(std::move(p));
}

inline Profile sawtooth_profile(const Rational& a, const Rational& b) {
    Profile p;
    p.points.emplace_back(Rational(0), Rational(0));
    p.points.emplace_back(b / (a + b), a * b / ((a + b) * (a + b)));
    return p;
}

// anti-periodic tent of the given anti-period: 0 at 0, peak T/2 at T/2
inline AntiProfile tent_antiprofile(const Rational& anti_period = Rational(1)) {
    AntiProfile p;
    p.anti_period = anti_period;
    p.points.emplace_back(Rational(0), Rational(0));
    p.points.emplace_back(anti_period / 2, anti_period / 2);
    return p;
}

inline PLFunction xi_triangle() { return PLFunction::antiperiodic(tent_antiprofile()); }

inline PLFunction trop_exp(const Rational& base) { return PLFunction::trop_exp(base); }

// sum_j beta_j e_base(x - b_j) with shifts b_j in [0, 1); an empty term list is
// the zero function. step rescales the argument: e_base(x/step - b_j).
inline PLFunction exp_combination(const Rational& base,
                                  const std::vector<std::pair<Rational, Rational>>& terms,
                                  const Rational& step = Rational(1)) {
    std::vector<PLFunction> parts;
    for (const auto& [coeff, b] : terms) {
        if (b < 0 || b >= 1)
            throw DomainError("exp_combination: shift " + format_rational(b) +
                              " outside [0,1); reduce it with e_c(x+1-b) = c*e_c(x-b)");
        parts.push_back(PLFunction::scale(
            coeff, PLFunction::shift_arg(-step * b, PLFunction::trop_exp(base, step))));
    }
    return PLFunction::sum_of(std::move(parts));
}

inline PLFunction psi() { return PLFunction::psi(); }

// q-step variant: breakpoints at qZ, satisfies f(x) - f(x-q) = x
inline PLFunction psi_dilated(const Rational& q) { return PLFunction::psi(q); }

inline PLFunction upsilon() { return PLFunction::upsilon(); }

// Phi(x, Pi) = [x](Pi(x) - Pi(0))
inline PLFunction phi(Profile p) { return PLFunction::ladder(1, std::move(p)); }

// Theta(x, Pi) = (1 + [x]([x]-1)/2)(Pi(x) - Pi(0))
inline PLFunction theta(Profile p) { return PLFunction::ladder(2, std::move(p)); }

// Omega(x, Pi) = ([x-1] + [x][x-1][x-2]/6)(Pi(x) - Pi(0))
inline PLFunction omega_special(Profile p) { return PLFunction::ladder(3, std::move(p)); }

inline PLFunction periodic_from_profile(Profile p) { return PLFunction::periodic(std::move(p)); }

inline PLFunction antiperiodic_from_profile(AntiProfile p) {
    return PLFunction::antiperiodic(std::move(p));
}

inline PLFunction bracket(const PLFunction& g, const Rational& x0,
                          const Rational& window_lo = Rational(-64),
                          const Rational& window_hi = Rational(64)) {
    return PLFunction::bracket(g, x0, window_lo, window_hi);
}

// value of the periodic extension of a profile at 0
inline Rational profile_value_at_zero(const Profile& p) {
    return PLFunction::periodic(p).eval(Rational(0)).value();
}

// Phi(x, Pi) + Pi(0) x, the full particular solution of f(x+1) - f(x) = Pi(x)
inline PLFunction phi_bundle(const Profile& p) {
    Rational d = profile_value_at_zero(p);
    return phi(p) + PLFunction::linear(d, Rational(0));
}

// a zero of the anti-periodic extension inside [0, 2T); one always exists
inline Rational antiprofile_zero(const AntiProfile& p) {
    auto block = detail::make_antiperiodic_block(p);
    for (std::size_t i = 0; i + 1 < block.pts.size(); ++i) {
        const auto& [x0, v0] = block.pts[i];
        const auto& [x1, v1] = block.pts[i + 1];
        if (v0 == 0) return x0;
        if ((v0 < 0) != (v1 < 0) || v1 == 0) {
            if (v1 == 0) return x1 < 2 * p.anti_period ? x1 : block.pts.front().first;
            return x0 + (x1 - x0) * v0 / (v0 - v1);
        }
    }
    throw DomainError("antiprofile_zero: no sign change found");  // unreachable by continuity
}

// One-period trough wave: 0 at the integers, trough -a(1-a) at a
inline PLFunction trough_wave(const Rational& a) {
    if (a < 0 || a >= 1) throw DomainError("trough_wave: parameter must lie in [0,1)");
    Profile p;
    p.points.emplace_back(Rational(0), Rational(0));
    if (a != 0) p.points.emplace_back(a, -a * (1 - a));
    return PLFunction::periodic(std::move(p));
}

// roots of e_base lie on x0 + Z with x0 = 1/(1 - base); only bases < 0 have roots
inline Rational exp_root_offset(const Rational& base) { return 1 / (1 - base); }

}  // namespace trop
