#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trop/function.hpp"
#include "trop/special.hpp"

namespace trop {

namespace detail_analysis {

// certification points for a PL function on [lo, hi]: endpoints, every
// breakpoint, and a fixed off-lattice sample comb. A PL function that takes
// one value on all of these is that constant on the whole interval.
inline std::vector<Rational> certification_points(const PLFunction& f, const Rational& lo,
                                                  const Rational& hi) {
    std::vector<Rational> pts = f.breakpoints_in(lo, hi);
    pts.push_back(lo);
    pts.push_back(hi);
    for (int i = 1; i < 23; ++i) pts.push_back(lo + (hi - lo) * Rational(i, 23));
    detail::sort_unique(pts);
    return pts;
}

inline Rational max_value_on(const PLFunction& f, const Rational& lo, const Rational& hi) {
    Rational best = f.eval(lo).value();
    for (const Rational& x : certification_points(f, lo, hi)) {
        Rational v = f.eval(x).value();
        if (v > best) best = v;
    }
    return best;
}

}  // namespace detail_analysis

// ---------------------------------------------------------------------------
// max-combinations equal to the constant 1

struct FermatVerdict {
    bool holds = false;
    Rational window_lo, window_hi;           // the window actually certified
    std::optional<Rational> witness_x;       // set when holds is false
    std::optional<Rational> witness_value;
};

// Checks max_j(alpha_j f_j) == 1 on [lo, hi] exactly. When the identity holds
// the window is doubled (about its midpoint) and rechecked, up to the
// half-width cap: for nonconstant entire inputs with positive exponents a
// violation must eventually appear.
inline FermatVerdict fermat_sum_check(const std::vector<PLFunction>& fs,
                                      const std::vector<Rational>& alphas, Rational lo,
                                      Rational hi, const Rational& halfwidth_cap = Rational(1024)) {
    if (fs.empty()) throw DomainError("fermat_sum_check: no input functions");
    if (fs.size() != alphas.size())
        throw DomainError("fermat_sum_check: one exponent per function required");
    if (!(lo < hi)) throw DomainError("fermat_sum_check: empty window");
    std::vector<PLFunction> scaled;
    for (std::size_t i = 0; i < fs.size(); ++i)
        scaled.push_back(PLFunction::scale(alphas[i], fs[i]));
    PLFunction g = PLFunction::max_of(std::move(scaled));

    FermatVerdict verdict;
    while (true) {
        for (const Rational& x : detail_analysis::certification_points(g, lo, hi)) {
            TropScalar v = g.eval(x);
            if (v.is_bottom() || v.value() != 1) {
                verdict.holds = false;
                verdict.window_lo = lo;
                verdict.window_hi = hi;
                verdict.witness_x = x;
                if (!v.is_bottom()) verdict.witness_value = v.value();
                return verdict;
            }
        }
        Rational half = (hi - lo) / 2;
        if (half >= halfwidth_cap) break;
        Rational mid = (lo + hi) / 2;
        lo = mid - 2 * half;
        hi = mid + 2 * half;
    }
    verdict.holds = true;
    verdict.window_lo = lo;
    verdict.window_hi = hi;
    return verdict;
}

// ---------------------------------------------------------------------------
// products alpha f(x) + f(x+c)

inline PLFunction hayman_product(const PLFunction& f, const Rational& alpha, const Rational& c) {
    return PLFunction::scale(alpha, f) + shift(f, c);
}

struct RootCensus {
    Rational lo, hi;
    std::vector<BreakpointEvent> roots;
    std::size_t count = 0;
    Rational total_multiplicity{0};
    bool linear_input = false;  // the nonlinearity hypothesis was violated
};

inline RootCensus hayman_census(const PLFunction& f, const Rational& alpha, const Rational& c,
                                const Rational& lo, const Rational& hi) {
    RootCensus census;
    census.lo = lo;
    census.hi = hi;
    census.linear_input = f.events_in(lo, hi).empty();
    // the census window is closed: pad the open event enumeration and filter
    for (const auto& e : hayman_product(f, alpha, c).events_in(lo - 1, hi + 1)) {
        if (e.kind != BreakpointEvent::Kind::Root) continue;
        if (e.location < lo || e.location > hi) continue;
        census.total_multiplicity += e.multiplicity;
        census.roots.push_back(e);
    }
    census.count = census.roots.size();
    return census;
}

struct LinearityResult {
    bool is_linear = false;
    Rational a, b;                      // the line a x + b when is_linear
    std::optional<Rational> witness_x;  // a point off the candidate line otherwise
};

// Decides whether alpha f(x) + f(x+c) is an affine function on [lo, hi],
// exactly: a candidate line is fitted through two samples and then verified
// on every breakpoint, both endpoints and a third sample.
inline LinearityResult hayman_linearity_check(const PLFunction& f, const Rational& alpha,
                                              const Rational& c, const Rational& lo,
                                              const Rational& hi) {
    if (!(lo < hi)) throw DomainError("hayman_linearity_check: empty window");
    PLFunction g = hayman_product(f, alpha, c);
    Rational x1 = lo + (hi - lo) / 7, x2 = lo + 2 * (hi - lo) / 7;
    LinearityResult res;
    res.a = (g.eval(x2).value() - g.eval(x1).value()) / (x2 - x1);
    res.b = g.eval(x1).value() - res.a * x1;
    for (const Rational& x : detail_analysis::certification_points(g, lo, hi)) {
        if (g.eval(x).value() != res.a * x + res.b) {
            res.is_linear = false;
            res.witness_x = x;
            return res;
        }
    }
    res.is_linear = true;
    return res;
}

// operational stand-in for "transcendental": the breakpoint count keeps
// growing under window doubling up to the cap
inline bool is_transcendental_proxy(const PLFunction& f) {
    std::size_t prev = f.events_in(-(1 << 9), 1 << 9).size();
    std::size_t last = f.events_in(-(1 << 10), 1 << 10).size();
    return last > prev;
}

// ---------------------------------------------------------------------------
// shared-root value distribution of max(f(x+1), a) vs max(f(x), a)

struct BruckReport {
    enum class Alternative { NegTail, PosTail, BothTails, Inconclusive } alternative =
        Alternative::Inconclusive;
    Rational A, B;  // the fitted linear growth max(f(x+1),a) - max(f(x),a) = Ax + B
    bool shared_root_check = false;
    bool periodic_residue_verified = false;
    Rational tail_lo, tail_hi;
    std::string note;
};

// Verifies the shared-root hypothesis for max(f(x+1), a) and max(f(x), a) on
// the window, fits the linear growth A x + B, and classifies which tails
// carry a 1-periodic residue f - A Psi - (B - A) x. The tails are
// [tail_lo, tail_hi] and its mirror image; tails are finite, so the
// classification certifies those intervals only.
inline BruckReport bruck_check(const PLFunction& f, const Rational& a, const Rational& window_lo,
                               const Rational& window_hi, const Rational& tail_lo,
                               const Rational& tail_hi) {
    if (!(window_lo < window_hi) || tail_lo <= 0 || !(tail_hi - tail_lo > 1))
        throw DomainError("bruck_check: bad window or tails (need 0 < T1 < T1 + 1 < T2)");
    if (!f.is_entire_on(window_lo, window_hi))
        throw DomainError("bruck_check: input must be tropical entire on the window");

    BruckReport rep;
    rep.tail_lo = tail_lo;
    rep.tail_hi = tail_hi;

    PLFunction g0 = oplus(f, PLFunction::constant(TropScalar(a)));
    PLFunction g1 = oplus(shift(f, 1), PLFunction::constant(TropScalar(a)));

    if (a >= detail_analysis::max_value_on(f, window_lo, window_hi)) {
        rep.note = "threshold lies above the function on the whole window";
        return rep;
    }

    auto e0 = g0.events_in(window_lo, window_hi);
    auto e1 = g1.events_in(window_lo, window_hi);
    if (e0.size() != e1.size()) {
        rep.note = "shared-root hypothesis fails: differing root counts";
        return rep;
    }
    for (std::size_t i = 0; i < e0.size(); ++i) {
        if (e0[i].location != e1[i].location || e0[i].omega != e1[i].omega) {
            rep.note = "shared-root hypothesis fails near x = " +
                       format_rational(e0[i].location);
            return rep;
        }
    }
    rep.shared_root_check = true;

    PLFunction diff = g1 - g0;
    Rational x1 = window_lo + (window_hi - window_lo) / 5;
    Rational x2 = window_lo + 3 * (window_hi - window_lo) / 5;
    rep.A = (diff.eval(x2).value() - diff.eval(x1).value()) / (x2 - x1);
    rep.B = diff.eval(x1).value() - rep.A * x1;
    for (const Rational& x : detail_analysis::certification_points(diff, window_lo, window_hi)) {
        if (diff.eval(x).value() != rep.A * x + rep.B) {
            rep.note = "growth of max(f(x+1),a) - max(f(x),a) is not linear on the window";
            return rep;
        }
    }

    // residue periodicity on each tail, certified via its difference function
    PLFunction residue = f - PLFunction::scale(rep.A, psi()) -
                         PLFunction::linear(rep.B - rep.A, 0);
    PLFunction step = shift(residue, 1) - residue;
    auto periodic_on = [&](const Rational& lo, const Rational& hi) -> bool {
        for (const Rational& x : detail_analysis::certification_points(step, lo, hi))
            if (step.eval(x).value() != 0) return false;
        return true;
    };
    bool right = periodic_on(tail_lo, tail_hi - 1);
    bool left = periodic_on(-tail_hi, -tail_lo - 1);
    using Alt = BruckReport::Alternative;
    if (left && right)
        rep.alternative = Alt::BothTails;
    else if (left)
        rep.alternative = Alt::NegTail;
    else if (right)
        rep.alternative = Alt::PosTail;
    rep.periodic_residue_verified = left || right;
    return rep;
}

}  // namespace trop
