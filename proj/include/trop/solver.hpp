#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trop/function.hpp"
#include "trop/special.hpp"

namespace trop {

// The difference equation sum_j coeffs[j] * y(x + j) = rhs_slope * x + rhs_const.
// The affine right-hand side is a strict superset of the constant-rhs
// equations; the solver itself only dispatches on constant rhs.
struct EquationSpec {
    std::vector<Rational> coeffs;
    Rational rhs_const{1};
    Rational rhs_slope{0};
};

// exact maximum absolute residual of f against the equation over the grid
inline Rational residual_max(const PLFunction& f, const EquationSpec& eq,
                             std::span<const Rational> grid) {
    if (grid.empty()) throw DomainError("residual_max: empty grid");
    Rational worst(0);
    for (const Rational& x : grid) {
        Rational acc(0);
        for (std::size_t j = 0; j < eq.coeffs.size(); ++j) {
            if (eq.coeffs[j] == 0) continue;
            TropScalar v = f.eval(x + Rational(static_cast<long>(j)));
            acc += eq.coeffs[j] * v.value();  // throws DomainError on bottom
        }
        Rational r = abs(acc - (eq.rhs_slope * x + eq.rhs_const));
        if (r > worst) worst = r;
    }
    return worst;
}

// a mixed lattice / non-lattice verification grid, deterministic in the seed
inline std::vector<Rational> verification_grid(std::size_t points = 64, long span = 8,
                                               unsigned long seed = 1) {
    std::vector<Rational> grid;
    unsigned long state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    auto next = [&]() -> unsigned long {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    for (std::size_t i = 0; i < points; ++i) {
        if (i % 2 == 0) {
            grid.emplace_back(static_cast<long>(next() % (2 * span + 1)) - span);
        } else {
            long den = static_cast<long>(next() % 11) + 2;
            long num = static_cast<long>(next() % static_cast<unsigned long>(2 * span * den)) -
                       span * den;
            grid.emplace_back(Rational(num, den));
        }
    }
    return grid;
}

enum class FamilyStatus { Complete, PartialKnown, Open };

inline const char* to_string(FamilyStatus s) {
    switch (s) {
        case FamilyStatus::Complete:
            return "Complete";
        case FamilyStatus::PartialKnown:
            return "PartialKnown";
        default:
            return "Open";
    }
}

enum class TermKind {
    Constant,        // coeff
    Linear,          // coeff * x, or a free slope when free_coeff is set
    PeriodicSlot,    // 1-periodic free function
    AntiPeriodicSlot,// anti-periodic free function of the stored anti-period
    Phi,             // coeff * ([x](Pi(x)-Pi(0)) + Pi(0) x) for a profile slot
    Theta,           // coeff * Theta(x, Pi)
    Omega,           // coeff * Omega(x, Pi)
    Psi,             // coeff * Psi(x)
    Upsilon,         // coeff * Upsilon(x)
    ExpComb,         // coeff * sum_j beta_j e_base(x/step - b_j)
    BracketExp,      // coeff * sum_j beta_j [x - b_j - 1/(1-base)] e_base(x - b_j)
    BracketXi,       // coeff * [x - x0] Xi(x), x0 a zero of the slot
};

inline const char* to_string(TermKind k) {
    switch (k) {
        case TermKind::Constant: return "const";
        case TermKind::Linear: return "linear";
        case TermKind::PeriodicSlot: return "periodic_slot";
        case TermKind::AntiPeriodicSlot: return "antiperiodic_slot";
        case TermKind::Phi: return "phi";
        case TermKind::Theta: return "theta";
        case TermKind::Omega: return "omega";
        case TermKind::Psi: return "psi";
        case TermKind::Upsilon: return "upsilon";
        case TermKind::ExpComb: return "exp_comb";
        case TermKind::BracketExp: return "bracket_exp";
        default: return "bracket_xi";
    }
}

struct Term {
    TermKind kind{};
    Rational coeff{1};
    bool free_coeff{false};     // instantiation chooses the multiplier
    Rational base{};            // ExpComb / BracketExp
    Rational step{1};           // argument dilation of the exponential
    Rational anti_period{1};    // AntiPeriodicSlot / BracketXi
    std::string slot;           // free-parameter id

    static Term constant(Rational v) { return {TermKind::Constant, std::move(v)}; }
    static Term linear(Rational slope) { return {TermKind::Linear, std::move(slope)}; }
    static Term free_linear(std::string id) {
        Term t{TermKind::Linear, Rational(1), true};
        t.slot = std::move(id);
        return t;
    }
    static Term periodic(std::string id, Rational coeff = Rational(1)) {
        Term t{TermKind::PeriodicSlot, std::move(coeff)};
        t.slot = std::move(id);
        return t;
    }
    static Term antiperiodic(std::string id, Rational coeff = Rational(1),
                             Rational anti_period = Rational(1)) {
        Term t{TermKind::AntiPeriodicSlot, std::move(coeff)};
        t.anti_period = std::move(anti_period);
        t.slot = std::move(id);
        return t;
    }
    static Term ladder(TermKind kind, std::string id, Rational coeff = Rational(1)) {
        Term t{kind, std::move(coeff)};
        t.slot = std::move(id);
        return t;
    }
    static Term psi_term(Rational coeff) { return {TermKind::Psi, std::move(coeff)}; }
    static Term upsilon_term(Rational coeff) { return {TermKind::Upsilon, std::move(coeff)}; }
    static Term exp_comb(Rational base, std::string id, Rational coeff = Rational(1),
                         Rational step = Rational(1)) {
        Term t{TermKind::ExpComb, std::move(coeff)};
        t.base = std::move(base);
        t.step = std::move(step);
        t.slot = std::move(id);
        return t;
    }
    static Term bracket_exp(Rational base, std::string id, Rational coeff = Rational(1)) {
        Term t{TermKind::BracketExp, std::move(coeff)};
        t.base = std::move(base);
        t.slot = std::move(id);
        return t;
    }
    static Term bracket_xi(std::string id, Rational coeff = Rational(1)) {
        Term t{TermKind::BracketXi, std::move(coeff)};
        t.slot = std::move(id);
        return t;
    }
};

struct SolutionFamily {
    FamilyStatus status{FamilyStatus::Complete};
    std::string case_label;
    std::vector<Term> terms;
    std::string open_note;
};

// profile assignments and exponential coefficient/shift lists per slot;
// anything missing falls back to the documented defaults
struct Instantiation {
    std::map<std::string, Profile> periodic;
    std::map<std::string, AntiProfile> antiperiodic;
    std::map<std::string, std::vector<std::pair<Rational, Rational>>> exp_terms;
    std::map<std::string, Rational> free_coeffs;
    Rational bracket_window_lo{-64};
    Rational bracket_window_hi{64};
};

namespace detail_solver {

inline Profile default_profile() { return sawtooth_profile(1, 1); }

inline AntiProfile default_antiprofile(const Rational& anti_period) {
    return tent_antiprofile(anti_period);
}

inline std::vector<std::pair<Rational, Rational>> default_exp_terms() {
    return {{Rational(1), Rational(0)}};
}

}  // namespace detail_solver

inline PLFunction instantiate(const SolutionFamily& family, const Instantiation& params = {}) {
    if (family.status == FamilyStatus::Open)
        throw DomainError("instantiate: family '" + family.case_label +
                          "' has no instantiable closed form: " + family.open_note);
    std::vector<PLFunction> parts;
    for (const Term& t : family.terms) {
        Rational coeff = t.coeff;
        if (t.free_coeff) {
            auto it = params.free_coeffs.find(t.slot);
            coeff = it == params.free_coeffs.end() ? Rational(1) : it->second;
        }
        auto profile_for = [&](const std::string& slot) -> Profile {
            auto it = params.periodic.find(slot);
            return it == params.periodic.end() ? detail_solver::default_profile() : it->second;
        };
        auto antiprofile_for = [&](const std::string& slot,
                                   const Rational& anti_period) -> AntiProfile {
            auto it = params.antiperiodic.find(slot);
            return it == params.antiperiodic.end()
                       ? detail_solver::default_antiprofile(anti_period)
                       : it->second;
        };
        auto exp_terms_for = [&](const std::string& slot) {
            auto it = params.exp_terms.find(slot);
            return it == params.exp_terms.end() ? detail_solver::default_exp_terms() : it->second;
        };

        PLFunction piece;
        switch (t.kind) {
            case TermKind::Constant:
                piece = PLFunction::constant(TropScalar(Rational(1)));
                break;
            case TermKind::Linear:
                piece = PLFunction::linear(1, 0);
                break;
            case TermKind::PeriodicSlot:
                piece = PLFunction::periodic(profile_for(t.slot));
                break;
            case TermKind::AntiPeriodicSlot:
                piece = PLFunction::antiperiodic(antiprofile_for(t.slot, t.anti_period));
                break;
            case TermKind::Phi:
                piece = phi_bundle(profile_for(t.slot));
                break;
            case TermKind::Theta:
                piece = theta(profile_for(t.slot));
                break;
            case TermKind::Omega:
                piece = omega_special(profile_for(t.slot));
                break;
            case TermKind::Psi:
                piece = psi();
                break;
            case TermKind::Upsilon:
                piece = upsilon();
                break;
            case TermKind::ExpComb:
                piece = exp_combination(t.base, exp_terms_for(t.slot), t.step);
                break;
            case TermKind::BracketExp: {
                // the roots of e_base(x - b) form b + 1/(1-base) + Z
                Rational x0 = exp_root_offset(t.base);
                std::vector<PLFunction> terms;
                for (const auto& [beta, b] : exp_terms_for(t.slot)) {
                    PLFunction e = PLFunction::shift_arg(-b, PLFunction::trop_exp(t.base));
                    terms.push_back(PLFunction::scale(
                        beta, PLFunction::bracket(e, b + x0, params.bracket_window_lo,
                                                  params.bracket_window_hi)));
                }
                piece = PLFunction::sum_of(std::move(terms));
                break;
            }
            case TermKind::BracketXi: {
                AntiProfile p = antiprofile_for(t.slot, t.anti_period);
                Rational x0 = antiprofile_zero(p);
                piece = PLFunction::bracket(PLFunction::antiperiodic(p), x0,
                                            params.bracket_window_lo, params.bracket_window_hi);
                break;
            }
        }
        parts.push_back(PLFunction::scale(coeff, std::move(piece)));
    }
    return PLFunction::sum_of(std::move(parts));
}

// ---------------------------------------------------------------------------
// case dispatch

namespace detail_solver {

inline SolutionFamily family(FamilyStatus status, std::string label, std::vector<Term> terms,
                             std::string note = "") {
    return SolutionFamily{status, std::move(label), std::move(terms), std::move(note)};
}

// roots of lambda^2 + b*lambda + c; empty when irrational or complex
struct QuadraticRoots {
    bool real = false;
    bool rational = false;
    Rational r1, r2;  // valid when rational
};

inline QuadraticRoots solve_quadratic(const Rational& b, const Rational& c) {
    QuadraticRoots out;
    Rational disc = b * b - 4 * c;
    if (disc < 0) return out;
    out.real = true;
    Rational s;
    if (!rational_sqrt(disc, s)) return out;
    out.rational = true;
    out.r1 = (-b + s) / 2;
    out.r2 = (-b - s) / 2;
    return out;
}

}  // namespace detail_solver

inline SolutionFamily solve_two_term(const Rational& alpha, const Rational& beta,
                                     const Rational& c);

// Homogeneous F(x+1) - c F(x) + d F(x-1) = 0. Every rational (c, d) with
// d != 0 lands in exactly one case; the two open cases surface as statuses.
inline SolutionFamily solve_second_order_homogeneous(const Rational& c, const Rational& d) {
    using detail_solver::family;
    if (d == 0) {
        // F(x+1) = c F(x): first order in disguise
        SolutionFamily f = solve_two_term(-c, 1, 0);
        f.case_label = "second-order/" + f.case_label;
        return f;
    }
    if (c == 2 && d == 1) {
        return family(FamilyStatus::Complete, "second-order/double-root-one",
                      {Term::periodic("Pi"), Term::free_linear("L"), Term::ladder(TermKind::Phi, "Pi0")});
    }
    if (c == -2 && d == 1) {
        return family(FamilyStatus::Complete, "second-order/double-root-neg-one",
                      {Term::antiperiodic("Xi"), Term::bracket_xi("Xi0")});
    }
    Rational disc = c * c - 4 * d;
    if (disc == 0) {
        // repeated root c/2 (never 0 or +-1 here)
        if (c < 0)
            return family(FamilyStatus::Complete, "second-order/repeated-root-negative",
                          {Term::exp_comb(c / 2, "E"), Term::bracket_exp(c / 2, "B")});
        return family(FamilyStatus::PartialKnown, "second-order/repeated-root-positive",
                      {Term::exp_comb(c / 2, "E")},
                      "whether exponential combinations exhaust the solutions of the repeated "
                      "positive root case is not established");
    }
    if (disc > 0) {
        auto roots = detail_solver::solve_quadratic(-c, d);
        if (!roots.rational)
            return family(FamilyStatus::Open, "second-order/distinct-real-roots-irrational", {},
                          "characteristic roots are irrational; exact rational instantiation is "
                          "not available");
        std::vector<Term> terms;
        int idx = 0;
        for (const Rational& r : {roots.r1, roots.r2}) {
            std::string id = "E" + std::to_string(++idx);
            if (r == 1)
                terms.push_back(Term::periodic("Pi" + std::to_string(idx)));
            else if (r == -1)
                terms.push_back(Term::antiperiodic("Xi" + std::to_string(idx)));
            else
                terms.push_back(Term::exp_comb(r, id));
        }
        return family(FamilyStatus::Complete, "second-order/distinct-real-roots",
                      std::move(terms));
    }
    return family(FamilyStatus::Open, "second-order/complex-roots", {},
                  "no tropical meromorphic closed form is known when the characteristic roots "
                  "are complex");
}

namespace detail_solver {

// first-order cascade for the homogeneous four-term equation with nonzero
// coefficient sum: factor the characteristic cubic and push particular
// solutions stage by stage
struct CascadeOutcome {
    std::vector<Term> terms;
    bool blocked = false;
    std::string blocker;
};

inline CascadeOutcome run_cascade(const std::vector<Rational>& ordered_roots) {
    CascadeOutcome out;
    std::vector<Term> current;  // family of the innermost solved stage
    int slot_counter = 0;
    auto fresh = [&](const char* prefix) {
        return std::string(prefix) + std::to_string(++slot_counter);
    };

    for (const Rational& a : ordered_roots) {
        std::vector<Term> next;
        // homogeneous part of this stage
        if (a == -1)
            next.push_back(Term::antiperiodic(fresh("X")));
        else
            next.push_back(Term::exp_comb(a, fresh("E")));
        // particular solutions for the previous stage's terms
        for (const Term& r : current) {
            if (r.kind == TermKind::ExpComb) {
                if (r.base != a) {
                    next.push_back(Term::exp_comb(r.base, r.slot, r.coeff / (r.base - a)));
                } else if (a < 0) {
                    next.push_back(Term::bracket_exp(r.base, r.slot, r.coeff / a));
                } else {
                    out.blocked = true;
                    out.blocker =
                        "existence of solutions for f(x+1)-a f(x)=e_a(x) with positive a is "
                        "not established";
                }
            } else if (r.kind == TermKind::AntiPeriodicSlot) {
                if (a == -1) {
                    next.push_back(Term::bracket_xi(r.slot, -r.coeff));
                } else {
                    out.blocked = true;
                    out.blocker =
                        "no closed form is known for f(x+1)-a f(x) equal to an anti-periodic "
                        "right-hand side when a is not -1";
                }
            } else {  // BracketExp or BracketXi
                out.blocked = true;
                out.blocker =
                    "pushing a bracket right-hand side through a further difference stage has "
                    "no known closed form";
            }
        }
        current = std::move(next);
    }
    out.terms = std::move(current);
    return out;
}

// pick a stage order that defers the delicate roots to the outermost stage
inline std::vector<Rational> order_cascade_roots(std::vector<Rational> roots) {
    std::sort(roots.begin(), roots.end());
    if (roots[0] == roots[1] && roots[1] == roots[2]) return roots;
    if (roots[0] == roots[1] || roots[1] == roots[2]) {
        Rational twice = roots[1];
        Rational single = roots[0] == roots[1] ? roots[2] : roots[0];
        // a repeated -1 resolves via consecutive anti-periodic stages;
        // any other resonance is best placed in the final stage
        if (twice == -1) return {single, twice, twice};
        return {twice, single, twice};
    }
    // distinct: -1 (if present) goes last
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        if (roots[i] == -1) std::swap(roots[i], roots.back());
    return roots;
}

// rational roots of a cubic with rational coefficients, by rational root
// search plus exact quadratic deflation
struct CubicRoots {
    bool all_rational = false;
    bool complex_pair = false;
    std::vector<Rational> roots;
};

inline CubicRoots solve_cubic(const Rational& a3, const Rational& a2, const Rational& a1,
                              const Rational& a0) {
    CubicRoots out;
    // integerize
    Int l = lcm(lcm(denominator(a3), denominator(a2)), lcm(denominator(a1), denominator(a0)));
    Int c3 = numerator(a3 * Rational(l)), c2 = numerator(a2 * Rational(l)),
        c1 = numerator(a1 * Rational(l)), c0 = numerator(a0 * Rational(l));
    Int g = gcd(gcd(abs(c3), abs(c2)), gcd(abs(c1), abs(c0)));
    if (g > 1) {
        c3 /= g;
        c2 /= g;
        c1 /= g;
        c0 /= g;
    }
    auto eval = [&](const Rational& x) -> Rational {
        return ((Rational(c3) * x + Rational(c2)) * x + Rational(c1)) * x + Rational(c0);
    };
    std::optional<Rational> found;
    auto divisors = [](Int n) {
        std::vector<Int> ds;
        n = abs(n);
        for (Int i = 1; i * i <= n; ++i) {
            if (n % i == 0) {
                ds.push_back(i);
                ds.push_back(n / i);
            }
        }
        return ds;
    };
    for (const Int& p : divisors(c0)) {
        if (found) break;
        for (const Int& q : divisors(c3)) {
            Rational cand(p, q);
            if (eval(cand) == 0) {
                found = cand;
                break;
            }
            cand = -cand;
            if (eval(cand) == 0) {
                found = cand;
                break;
            }
        }
    }
    if (!found) {
        // no rational root: distinguish one-real-two-complex from three
        // irrational reals via the cubic discriminant
        Rational A(c3), B(c2), C(c1), D(c0);
        Rational disc = 18 * A * B * C * D - 4 * B * B * B * D + B * B * C * C -
                        4 * A * C * C * C - 27 * A * A * D * D;
        out.complex_pair = disc < 0;
        return out;
    }
    // deflate: c3 x^3 + ... = (x - r)(c3 x^2 + e1 x + e0)
    Rational r = *found;
    Rational e1 = Rational(c2) + Rational(c3) * r;
    Rational e0 = Rational(c1) + e1 * r;
    auto q = solve_quadratic(e1 / Rational(c3), e0 / Rational(c3));
    if (!q.real) {
        out.complex_pair = true;
        out.roots = {r};
        return out;
    }
    if (!q.rational) {
        out.roots = {r};
        return out;
    }
    out.all_rational = true;
    out.roots = {r, q.r1, q.r2};
    return out;
}

}  // namespace detail_solver

// Vieta data for the four-term reduction; the cascade stage order is recorded
// for reporting
struct CubicReduction {
    std::vector<Rational> roots;        // xi1, xi2, xi3 (unordered)
    std::vector<Rational> stage_order;  // innermost first
};

// ---------------------------------------------------------------------------

inline SolutionFamily solve_trimmed(std::vector<Rational> n, const Rational& c);

// Solve sum n_j y(x+j) = c. Leading and trailing zero coefficients are
// trimmed first; an index shift does not change the solution set.
inline SolutionFamily solve(const EquationSpec& eq) {
    if (eq.rhs_slope != 0)
        throw DomainError("solve: only constant right-hand sides are dispatched symbolically");
    std::vector<Rational> n = eq.coeffs;
    while (!n.empty() && n.back() == 0) n.pop_back();
    std::size_t lead = 0;
    while (lead < n.size() && n[lead] == 0) ++lead;
    n.erase(n.begin(), n.begin() + static_cast<long>(lead));
    if (n.empty()) throw DomainError("solve: all coefficients are zero");
    if (n.size() > 4) throw DomainError("solve: only orders up to three are supported");
    return solve_trimmed(std::move(n), eq.rhs_const);
}

inline SolutionFamily solve_trimmed(std::vector<Rational> n, const Rational& c) {
    using detail_solver::family;

    if (n.size() == 1) {
        return family(FamilyStatus::Complete, "constant", {Term::constant(c / n[0])});
    }

    if (n.size() == 2) {
        const Rational &alpha = n[0], &beta = n[1];
        if (alpha == beta)
            return family(FamilyStatus::Complete, "two-term/anti-periodic",
                          {Term::antiperiodic("Xi"), Term::constant(c / (2 * beta))});
        if (alpha == -beta)
            return family(FamilyStatus::Complete, "two-term/periodic",
                          {Term::periodic("Pi"), Term::linear(c / beta)});
        return family(FamilyStatus::Complete, "two-term/exponential",
                      {Term::exp_comb(-alpha / beta, "E"), Term::constant(c / (alpha + beta))});
    }

    if (n.size() == 3) {
        const Rational &n0 = n[0], &m = n[1], &p = n[2];
        if (n0 + m + p == 0) {
            if (n0 == p) {
                // y(x+1)-y(x) reduces to a periodic plus linear right-hand side
                return family(FamilyStatus::Complete, "three-term/zero-sum/equal-ends",
                              {Term::periodic("Pi~"), Term::ladder(TermKind::Phi, "Pi"),
                               Term::psi_term(c / p), Term::linear(-c / p)});
            }
            if (n0 == -p) {  // equivalently m == 0
                return family(FamilyStatus::Complete, "three-term/zero-sum/middle-free",
                              {Term::periodic("Pi"), Term::antiperiodic("Xi", Rational(-1, 2)),
                               Term::linear(c / (2 * p))});
            }
            return family(FamilyStatus::Complete, "three-term/zero-sum/exponential",
                          {Term::periodic("Pi"), Term::exp_comb(n0 / p, "E", p / (n0 - p)),
                           Term::linear(c / (p - n0))});
        }
        SolutionFamily hom = solve_second_order_homogeneous(-m / p, n0 / p);
        hom.case_label = "three-term/" + hom.case_label;
        hom.terms.push_back(Term::constant(c / (n0 + m + p)));
        return hom;
    }

    // four terms
    const Rational &n0 = n[0], &m = n[1], &p = n[2], &q = n[3];
    Rational sum = n0 + m + p + q;

    if (sum == 0 && 3 * n0 + 2 * m + p == 0) {
        // iterated reduction to (2n+m) H(x) + n H(x-1) = c; note q = 2n+m != 0
        Rational key = 2 * n0 + m;
        if (key == n0) {
            return family(FamilyStatus::Complete, "four-term/zero-sum/iterated/anti-periodic",
                          {Term::periodic("Pi~"), Term::ladder(TermKind::Phi, "Pi"),
                           Term::antiperiodic("Xi", Rational(-1, 4)),
                           Term::psi_term(c / (2 * n0)), Term::linear(-c / (2 * n0))});
        }
        if (key == -n0) {
            return family(FamilyStatus::Complete, "four-term/zero-sum/iterated/periodic",
                          {Term::periodic("Pi^"), Term::ladder(TermKind::Phi, "Pi~"),
                           Term::ladder(TermKind::Theta, "Pi", Rational(-1)),
                           Term::upsilon_term(-c / n0), Term::psi_term(3 * c / n0),
                           Term::linear(-3 * c / n0)});
        }
        Rational gamma = -n0 / key;
        return family(FamilyStatus::Complete, "four-term/zero-sum/iterated/exponential",
                      {Term::periodic("Pi~"), Term::ladder(TermKind::Phi, "Pi"),
                       Term::psi_term(c / (3 * n0 + m)), Term::linear(-2 * c / (3 * n0 + m)),
                       Term::exp_comb(gamma, "E")});
    }

    if (sum == 0) {
        // 3n+2m+p != 0 here
        Rational denom = 3 * n0 + 2 * m + p;
        if (n0 + m == 0) {
            if (n0 == p) {
                // y(x+2) + y(x) carries the recursion: the free anti-periodic
                // part has anti-period two
                return family(FamilyStatus::Complete, "four-term/zero-sum/pair-sum",
                              {Term::antiperiodic("Xi", Rational(1), Rational(2)),
                               Term::periodic("Pi"), Term::linear(-c / (2 * n0))});
            }
            // n != +-p: step-two exponential
            return family(FamilyStatus::Complete, "four-term/zero-sum/step-two-exponential",
                          {Term::exp_comb(-n0 / p, "E", Rational(1), Rational(2)),
                           Term::periodic("Pi"), Term::linear(-c / (n0 + p))});
        }
        Rational A = (n0 + m) / (n0 + m + p);  // n+m+p = -q != 0
        Rational B = n0 / (n0 + m + p);
        if (A == 2 && B == 1) {
            return family(FamilyStatus::Complete, "four-term/zero-sum/bracket-anti-periodic",
                          {Term::periodic("Pi"), Term::antiperiodic("Xi~"),
                           Term::bracket_xi("Xi", Rational(-1, 2)), Term::linear(-c / denom)});
        }
        Rational disc = A * A - 4 * B;
        if (disc == 0) {
            return family(FamilyStatus::PartialKnown, "four-term/zero-sum/repeated-root",
                          {Term::periodic("Pi"), Term::linear(-c / denom),
                           Term::exp_comb(-A / 2, "E")},
                          "completing the family needs a closed form for f(x+1)-f(x) equal to a "
                          "bracket-exponential right-hand side, which is not known");
        }
        if (disc > 0) {
            auto roots = detail_solver::solve_quadratic(A, B);
            if (!roots.rational)
                return family(FamilyStatus::Open,
                              "four-term/zero-sum/distinct-real-roots-irrational", {},
                              "characteristic roots are irrational; exact rational instantiation "
                              "is not available");
            std::vector<Term> terms{Term::periodic("Pi"), Term::linear(-c / denom)};
            int idx = 0;
            for (const Rational& r : {roots.r1, roots.r2}) {
                ++idx;
                if (r == -1)
                    terms.push_back(Term::antiperiodic("Xi" + std::to_string(idx)));
                else  // r == 1 cannot occur: it would force 3n+2m+p = 0
                    terms.push_back(Term::exp_comb(r, "E" + std::to_string(idx)));
            }
            return family(FamilyStatus::Complete, "four-term/zero-sum/distinct-real-roots",
                          std::move(terms));
        }
        return family(FamilyStatus::Open, "four-term/zero-sum/complex-roots", {},
                      "no tropical meromorphic closed form is known when the characteristic "
                      "roots are complex");
    }

    // nonzero coefficient sum: shift by the constant particular solution and
    // factor the characteristic cubic of the homogeneous part
    auto cubic = detail_solver::solve_cubic(q, p, m, n0);
    if (!cubic.all_rational) {
        return family(FamilyStatus::Open,
                      cubic.complex_pair ? "four-term/cascade/complex-roots"
                                         : "four-term/cascade/irrational-roots",
                      {},
                      cubic.complex_pair
                          ? "the characteristic cubic has a complex root pair; only real "
                            "characteristic roots admit the first-order reduction"
                          : "the characteristic cubic has irrational real roots; exact rational "
                            "instantiation is not available");
    }
    auto order = detail_solver::order_cascade_roots(cubic.roots);
    auto outcome = detail_solver::run_cascade(order);
    outcome.terms.push_back(Term::constant(c / sum));
    if (outcome.blocked)
        return family(FamilyStatus::PartialKnown, "four-term/cascade/open-resonance",
                      std::move(outcome.terms), outcome.blocker);
    return family(FamilyStatus::Complete, "four-term/cascade/complete",
                  std::move(outcome.terms));
}

inline SolutionFamily solve_two_term(const Rational& alpha, const Rational& beta,
                                     const Rational& c) {
    EquationSpec eq;
    eq.coeffs = {alpha, beta};
    eq.rhs_const = c;
    return solve(eq);
}

inline SolutionFamily solve_three_term(const Rational& n, const Rational& m, const Rational& p,
                                       const Rational& c) {
    EquationSpec eq;
    eq.coeffs = {n, m, p};
    eq.rhs_const = c;
    return solve(eq);
}

inline SolutionFamily solve_four_term(const Rational& n, const Rational& m, const Rational& p,
                                      const Rational& q, const Rational& c) {
    EquationSpec eq;
    eq.coeffs = {n, m, p, q};
    eq.rhs_const = c;
    return solve(eq);
}

inline std::string classify(const EquationSpec& eq) { return solve(eq).case_label; }

// Vieta data for the four-term nonzero-sum reduction, exposed for inspection
inline CubicReduction cubic_reduction(const EquationSpec& eq) {
    std::vector<Rational> n = eq.coeffs;
    if (n.size() != 4 || n[3] == 0)
        throw DomainError("cubic_reduction: needs a genuine four-term equation");
    auto cubic = detail_solver::solve_cubic(n[3], n[2], n[1], n[0]);
    if (!cubic.all_rational)
        throw DomainError("cubic_reduction: characteristic roots are not all rational");
    CubicReduction red;
    red.roots = cubic.roots;
    red.stage_order = detail_solver::order_cascade_roots(cubic.roots);
    return red;
}

}  // namespace trop
