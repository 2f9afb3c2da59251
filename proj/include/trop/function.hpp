#pragma once

#include <algorithm>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "trop/rational.hpp"
#include "trop/scalar.hpp"

namespace trop {

// One period of a 1-periodic piecewise linear function, as breakpoints with
// values on [0, 1). The extension interpolates cyclically, so the seam at the
// period boundary is continuous by construction.
struct Profile {
    std::vector<std::pair<Rational, Rational>> points;  // (x, value), sorted, x in [0,1)
};

// One anti-period of a function with f(x + T) = -f(x) (hence period 2T).
struct AntiProfile {
    std::vector<std::pair<Rational, Rational>> points;  // x in [0, T)
    Rational anti_period{1};
};

struct BreakpointEvent {
    Rational location;
    Rational omega;  // right slope minus left slope
    enum class Kind { Root, Pole } kind;
    Rational multiplicity;  // |omega|
};

class PLFunction;

namespace detail {

// value plus one-sided slopes at a point
struct Jet {
    TropScalar value;
    Rational left;
    Rational right;
};

// Breakpoints with values spanning exactly one period [x0, x0 + period]; the
// first and last entries are the same point one period apart.
struct Block {
    std::vector<std::pair<Rational, Rational>> pts;
    Rational period;

    // index of the segment containing t, where pts[i].first <= t < pts[i+1].first
    std::size_t segment(const Rational& t) const {
        std::size_t lo = 0, hi = pts.size() - 1;
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            if (pts[mid].first <= t)
                lo = mid;
            else
                hi = mid;
        }
        return lo;
    }

    Rational seg_slope(std::size_t i) const {
        return (pts[i + 1].second - pts[i].second) / (pts[i + 1].first - pts[i].first);
    }

    // reduce x into [x0, x0 + period)
    Rational reduce(const Rational& x) const {
        Rational t = x - pts.front().first;
        Rational k = floor_rat(t / period);
        return x - k * period;
    }

    Jet jet(const Rational& x) const {
        Rational t = reduce(x);
        std::size_t i = segment(t);
        Rational s = seg_slope(i);
        Rational v = pts[i].second + s * (t - pts[i].first);
        if (t == pts[i].first) {
            // left slope wraps to the previous segment (periodicity)
            Rational ls = i == 0 ? seg_slope(pts.size() - 2) : seg_slope(i - 1);
            return {TropScalar(v), ls, s};
        }
        return {TropScalar(v), s, s};
    }
};

struct ConstNode {
    TropScalar value;
};
struct LinearNode {
    Rational slope, intercept;
};
struct FinitePLNode {
    std::vector<std::pair<Rational, Rational>> points;  // nonempty, strictly increasing x
    Rational left_slope, right_slope;
};
struct PeriodicNode {
    Profile profile;
    Block block;
};
struct AntiPeriodicNode {
    AntiProfile profile;
    Block block;  // spans one full period 2T
};
// e_base(x / step); base not in {-1, 0, 1}, step > 0
struct ExpNode {
    Rational base, step;
};
// slope k+1 on (k*period, (k+1)*period), value 0 at 0
struct PsiNode {
    Rational period;
};
struct UpsilonNode {};
// P([x]) * (Pi(x) - Pi(0)) for a 1-periodic Pi; level 1/2/3 picks the factor
// polynomial of the phi/theta/omega ladder
struct LadderNode {
    int level;
    Profile profile;
    Block block;
    Rational d;  // Pi(0)
};
struct BracketNode;
struct MaxNode;
struct SumNode;
struct ScaleNode;
struct ShiftNode;

using Node = std::variant<ConstNode, LinearNode, FinitePLNode, PeriodicNode, AntiPeriodicNode,
                          ExpNode, PsiNode, UpsilonNode, LadderNode, BracketNode, MaxNode, SumNode,
                          ScaleNode, ShiftNode>;

}  // namespace detail

// Immutable continuous piecewise-linear function of one rational variable,
// represented as an expression tree over closed-form generators. Evaluation,
// one-sided slopes and windowed breakpoint enumeration are all exact.
class PLFunction {
  public:
    PLFunction() : PLFunction(constant(TropScalar::one())) {}

    static PLFunction constant(TropScalar v);
    static PLFunction linear(Rational slope, Rational intercept);
    static PLFunction finite_pl(std::vector<std::pair<Rational, Rational>> points,
                                Rational left_slope, Rational right_slope);
    static PLFunction periodic(Profile p);
    static PLFunction antiperiodic(AntiProfile p);
    static PLFunction trop_exp(Rational base, Rational step = Rational(1));
    static PLFunction psi(Rational period = Rational(1));
    static PLFunction upsilon();
    static PLFunction ladder(int level, Profile p);
    static PLFunction bracket(PLFunction g, Rational x0, Rational window_lo = Rational(-64),
                              Rational window_hi = Rational(64));
    static PLFunction max_of(std::vector<PLFunction> children);
    static PLFunction sum_of(std::vector<PLFunction> children);
    static PLFunction scale(Rational factor, PLFunction child);
    static PLFunction shift_arg(Rational offset, PLFunction child);  // x -> f(x + offset)

    TropScalar eval(const Rational& x) const;
    Rational slope_left(const Rational& x) const;
    Rational slope_right(const Rational& x) const;
    Rational omega_jump(const Rational& x) const;

    // candidate slope-change locations within [lo, hi], sorted and unique
    std::vector<Rational> breakpoints_in(const Rational& lo, const Rational& hi) const;
    // events with nonzero jump in the open interval (lo, hi)
    std::vector<BreakpointEvent> events_in(const Rational& lo, const Rational& hi) const;
    bool is_entire_on(const Rational& lo, const Rational& hi) const;

    bool is_bottom() const;

    const detail::Node& node() const;

  private:
    explicit PLFunction(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}
    static PLFunction wrap(detail::Node n);

    detail::Jet jet(const Rational& x) const;
    void collect_breakpoints(const Rational& lo, const Rational& hi,
                             std::vector<Rational>& out) const;

    std::shared_ptr<const detail::Node> node_;
};

namespace detail {

struct BracketNode {
    Rational x0;  // lattice offset: factor is floor(x - x0)
    PLFunction child;
    Rational window_lo, window_hi;  // where the vanishing precondition was checked
};
struct MaxNode {
    std::vector<PLFunction> children;
};
struct SumNode {
    std::vector<PLFunction> children;
};
struct ScaleNode {
    Rational factor;
    PLFunction child;
};
struct ShiftNode {
    Rational offset;
    PLFunction child;
};

inline Block make_periodic_block(const Profile& p) {
    Block b;
    b.period = 1;
    b.pts = p.points;
    b.pts.emplace_back(p.points.front().first + 1, p.points.front().second);
    return b;
}

inline Block make_antiperiodic_block(const AntiProfile& p) {
    Block b;
    b.period = 2 * p.anti_period;
    b.pts = p.points;
    for (const auto& [u, v] : p.points) b.pts.emplace_back(u + p.anti_period, -v);
    b.pts.emplace_back(p.points.front().first + b.period, p.points.front().second);
    return b;
}

inline void validate_profile_points(const std::vector<std::pair<Rational, Rational>>& pts,
                                    const Rational& span) {
    if (pts.empty()) throw DomainError("profile: needs at least one breakpoint");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].first < 0 || pts[i].first >= span)
            throw DomainError("profile: breakpoint " + format_rational(pts[i].first) +
                              " outside [0, " + format_rational(span) + ")");
        if (i > 0 && pts[i - 1].first >= pts[i].first)
            throw DomainError("profile: breakpoints must be strictly increasing");
    }
}

// factor polynomial of the phi/theta/omega ladder, as a function of k = [x]
inline Rational ladder_factor(int level, const Int& k) {
    Rational kk(k);
    switch (level) {
        case 1:
            return kk;
        case 2:
            return 1 + kk * (kk - 1) / 2;
        case 3:
            return (kk - 1) + kk * (kk - 1) * (kk - 2) / 6;
        default:
            throw DomainError("ladder: level must be 1, 2 or 3");
    }
}

// all points u + period*k inside [lo, hi]
inline void lattice_points(const Rational& u, const Rational& period, const Rational& lo,
                           const Rational& hi, std::vector<Rational>& out) {
    Int k0 = floor_int((lo - u) / period);
    if (u + Rational(k0) * period < lo) ++k0;
    for (Rational x = u + Rational(k0) * period; x <= hi; x += period) out.push_back(x);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// construction

inline PLFunction PLFunction::wrap(detail::Node n) {
    return PLFunction(std::make_shared<const detail::Node>(std::move(n)));
}

inline const detail::Node& PLFunction::node() const { return *node_; }

inline PLFunction PLFunction::constant(TropScalar v) {
    return wrap(detail::ConstNode{std::move(v)});
}

inline PLFunction PLFunction::linear(Rational slope, Rational intercept) {
    return wrap(detail::LinearNode{std::move(slope), std::move(intercept)});
}

inline PLFunction PLFunction::finite_pl(std::vector<std::pair<Rational, Rational>> points,
                                        Rational left_slope, Rational right_slope) {
    if (points.empty()) throw DomainError("finite_pl: needs at least one breakpoint");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i - 1].first >= points[i].first)
            throw DomainError("finite_pl: breakpoints must be strictly increasing");
    return wrap(detail::FinitePLNode{std::move(points), std::move(left_slope),
                                     std::move(right_slope)});
}

inline PLFunction PLFunction::periodic(Profile p) {
    detail::validate_profile_points(p.points, Rational(1));
    auto block = detail::make_periodic_block(p);
    return wrap(detail::PeriodicNode{std::move(p), std::move(block)});
}

inline PLFunction PLFunction::antiperiodic(AntiProfile p) {
    if (p.anti_period <= 0) throw DomainError("antiperiodic: anti-period must be positive");
    detail::validate_profile_points(p.points, p.anti_period);
    auto block = detail::make_antiperiodic_block(p);
    return wrap(detail::AntiPeriodicNode{std::move(p), std::move(block)});
}

inline PLFunction PLFunction::trop_exp(Rational base, Rational step) {
    if (base == 0 || base == 1 || base == -1)
        throw DomainError(
            "trop_exp: base must not be -1, 0 or 1 (the periodic and anti-periodic "
            "families cover those equations)");
    if (step <= 0) throw DomainError("trop_exp: step must be positive");
    return wrap(detail::ExpNode{std::move(base), std::move(step)});
}

inline PLFunction PLFunction::psi(Rational period) {
    if (period <= 0) throw DomainError("psi: period must be positive");
    return wrap(detail::PsiNode{std::move(period)});
}

inline PLFunction PLFunction::upsilon() { return wrap(detail::UpsilonNode{}); }

inline PLFunction PLFunction::ladder(int level, Profile p) {
    detail::validate_profile_points(p.points, Rational(1));
    auto block = detail::make_periodic_block(p);
    Rational d = block.jet(Rational(0)).value.value();
    return wrap(detail::LadderNode{level, std::move(p), std::move(block), std::move(d)});
}

inline PLFunction PLFunction::max_of(std::vector<PLFunction> children) {
    std::vector<PLFunction> kept;
    for (auto& c : children)
        if (!c.is_bottom()) kept.push_back(std::move(c));  // bottom is the oplus identity
    if (kept.empty()) return constant(TropScalar::bottom());
    if (kept.size() == 1) return kept.front();
    return wrap(detail::MaxNode{std::move(kept)});
}

inline PLFunction PLFunction::sum_of(std::vector<PLFunction> children) {
    if (children.empty()) return constant(TropScalar::one());
    if (children.size() == 1) return children.front();
    return wrap(detail::SumNode{std::move(children)});
}

inline PLFunction PLFunction::scale(Rational factor, PLFunction child) {
    return wrap(detail::ScaleNode{std::move(factor), std::move(child)});
}

inline PLFunction PLFunction::shift_arg(Rational offset, PLFunction child) {
    if (offset == 0) return child;
    return wrap(detail::ShiftNode{std::move(offset), std::move(child)});
}

inline PLFunction PLFunction::bracket(PLFunction g, Rational x0, Rational window_lo,
                                      Rational window_hi) {
    if (g.is_bottom()) throw DomainError("bracket: factor function is identically -inf");
    // continuity of floor(x - x0) * g(x) needs g to vanish on the lattice x0 + Z;
    // checked on the construction window only
    for (Rational lam = x0 + floor_rat(window_lo - x0) + 1; lam <= window_hi; lam += 1) {
        if (lam < window_lo) continue;
        TropScalar v = g.eval(lam);
        if (v.is_bottom() || v.value() != 0)
            throw DomainError("bracket: factor does not vanish at lattice point " +
                              format_rational(lam) + " (value " + v.str() + ")");
    }
    return wrap(detail::BracketNode{std::move(x0), std::move(g), std::move(window_lo),
                                    std::move(window_hi)});
}

// ---------------------------------------------------------------------------
// bottom detection (a function is -inf either everywhere or nowhere)

inline bool PLFunction::is_bottom() const {
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, detail::ConstNode>) return n.value.is_bottom();
            else if constexpr (std::is_same_v<T, detail::MaxNode>) {
                for (const auto& c : n.children)
                    if (!c.is_bottom()) return false;
                return true;
            } else if constexpr (std::is_same_v<T, detail::SumNode>) {
                for (const auto& c : n.children)
                    if (c.is_bottom()) return true;
                return false;
            } else if constexpr (std::is_same_v<T, detail::ScaleNode>)
                return n.child.is_bottom();
            else if constexpr (std::is_same_v<T, detail::ShiftNode>)
                return n.child.is_bottom();
            else if constexpr (std::is_same_v<T, detail::BracketNode>)
                return false;  // bottom children are rejected at construction
            else
                return false;
        },
        *node_);
}

// ---------------------------------------------------------------------------
// evaluation

inline TropScalar PLFunction::eval(const Rational& x) const {
    using namespace detail;
    return std::visit(
        [&](const auto& n) -> TropScalar {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ConstNode>) {
                return n.value;
            } else if constexpr (std::is_same_v<T, LinearNode>) {
                return TropScalar(n.slope * x + n.intercept);
            } else if constexpr (std::is_same_v<T, FinitePLNode>) {
                const auto& pts = n.points;
                if (x <= pts.front().first)
                    return TropScalar(pts.front().second + n.left_slope * (x - pts.front().first));
                if (x >= pts.back().first)
                    return TropScalar(pts.back().second + n.right_slope * (x - pts.back().first));
                std::size_t lo = 0, hi = pts.size() - 1;
                while (hi - lo > 1) {
                    std::size_t mid = (lo + hi) / 2;
                    if (pts[mid].first <= x)
                        lo = mid;
                    else
                        hi = mid;
                }
                Rational s = (pts[hi].second - pts[lo].second) / (pts[hi].first - pts[lo].first);
                return TropScalar(pts[lo].second + s * (x - pts[lo].first));
            } else if constexpr (std::is_same_v<T, PeriodicNode> ||
                                 std::is_same_v<T, AntiPeriodicNode>) {
                return n.block.jet(x).value;
            } else if constexpr (std::is_same_v<T, ExpNode>) {
                Rational t = x / n.step;
                Int k = floor_int(t);
                Rational bk = pow_int(n.base, k);
                if (abs(n.base) > 1)
                    return TropScalar(bk * (t - Rational(k) + 1 / (n.base - 1)));
                return TropScalar(bk * (1 / (1 - n.base) - t + Rational(k)));
            } else if constexpr (std::is_same_v<T, PsiNode>) {
                Int k = floor_int(x / n.period);
                Rational kk(k);
                return TropScalar((kk + 1) * x - n.period / 2 * kk * (kk + 1));
            } else if constexpr (std::is_same_v<T, UpsilonNode>) {
                Rational kk(floor_int(x));
                return TropScalar(kk * (kk + 1) * (3 * x - 2 * kk - 1) / 6);
            } else if constexpr (std::is_same_v<T, LadderNode>) {
                Rational f = ladder_factor(n.level, floor_int(x));
                return TropScalar(f * (n.block.jet(x).value.value() - n.d));
            } else if constexpr (std::is_same_v<T, BracketNode>) {
                TropScalar g = n.child.eval(x);
                if (g.is_bottom()) return TropScalar::bottom();
                return TropScalar(Rational(floor_int(x - n.x0)) * g.value());
            } else if constexpr (std::is_same_v<T, MaxNode>) {
                TropScalar acc = TropScalar::bottom();
                for (const auto& c : n.children) acc = oplus(acc, c.eval(x));
                return acc;
            } else if constexpr (std::is_same_v<T, SumNode>) {
                TropScalar acc = TropScalar::one();
                for (const auto& c : n.children) acc = otimes(acc, c.eval(x));
                return acc;
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                return power(n.child.eval(x), n.factor);
            } else {  // ShiftNode
                return n.child.eval(x + n.offset);
            }
        },
        *node_);
}

// ---------------------------------------------------------------------------
// one-sided slopes

inline detail::Jet PLFunction::jet(const Rational& x) const {
    using namespace detail;
    return std::visit(
        [&](const auto& n) -> Jet {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ConstNode>) {
                return {n.value, Rational(0), Rational(0)};
            } else if constexpr (std::is_same_v<T, LinearNode>) {
                return {TropScalar(n.slope * x + n.intercept), n.slope, n.slope};
            } else if constexpr (std::is_same_v<T, FinitePLNode>) {
                const auto& pts = n.points;
                auto seg = [&](std::size_t i) -> Rational {
                    return (pts[i + 1].second - pts[i].second) /
                           (pts[i + 1].first - pts[i].first);
                };
                if (x < pts.front().first || (x == pts.front().first && pts.size() == 1)) {
                    Rational v = pts.front().second + n.left_slope * (x - pts.front().first);
                    Rational rs = x == pts.front().first ? n.right_slope : n.left_slope;
                    return {TropScalar(v), n.left_slope, rs};
                }
                if (x == pts.front().first)
                    return {TropScalar(pts.front().second), n.left_slope, seg(0)};
                if (x > pts.back().first) {
                    Rational v = pts.back().second + n.right_slope * (x - pts.back().first);
                    return {TropScalar(v), n.right_slope, n.right_slope};
                }
                if (x == pts.back().first)
                    return {TropScalar(pts.back().second), seg(pts.size() - 2), n.right_slope};
                std::size_t lo = 0, hi = pts.size() - 1;
                while (hi - lo > 1) {
                    std::size_t mid = (lo + hi) / 2;
                    if (pts[mid].first <= x)
                        lo = mid;
                    else
                        hi = mid;
                }
                Rational s = seg(lo);
                Rational v = pts[lo].second + s * (x - pts[lo].first);
                if (x == pts[lo].first) return {TropScalar(v), seg(lo - 1), s};
                return {TropScalar(v), s, s};
            } else if constexpr (std::is_same_v<T, PeriodicNode> ||
                                 std::is_same_v<T, AntiPeriodicNode>) {
                return n.block.jet(x);
            } else if constexpr (std::is_same_v<T, ExpNode>) {
                Rational t = x / n.step;
                Int k = floor_int(t);
                Rational bk = pow_int(n.base, k);
                Rational sign = abs(n.base) > 1 ? Rational(1) : Rational(-1);
                Rational v = abs(n.base) > 1 ? bk * (t - Rational(k) + 1 / (n.base - 1))
                                             : bk * (1 / (1 - n.base) - t + Rational(k));
                Rational sr = sign * bk / n.step;
                Rational sl = is_integer(t) ? sign * bk / n.base / n.step : sr;
                return {TropScalar(v), sl, sr};
            } else if constexpr (std::is_same_v<T, PsiNode>) {
                Rational t = x / n.period;
                Int k = floor_int(t);
                Rational kk(k);
                Rational v = (kk + 1) * x - n.period / 2 * kk * (kk + 1);
                Rational sl = is_integer(t) ? kk : kk + 1;
                return {TropScalar(v), sl, kk + 1};
            } else if constexpr (std::is_same_v<T, UpsilonNode>) {
                Int k = floor_int(x);
                Rational kk(k);
                Rational v = kk * (kk + 1) * (3 * x - 2 * kk - 1) / 6;
                Rational sr = kk * (kk + 1) / 2;
                Rational sl = is_integer(x) ? (kk - 1) * kk / 2 : sr;
                return {TropScalar(v), sl, sr};
            } else if constexpr (std::is_same_v<T, LadderNode>) {
                Jet pj = n.block.jet(x);
                Int k = floor_int(x);
                Rational fr = ladder_factor(n.level, k);
                Rational fl = is_integer(x) ? ladder_factor(n.level, k - 1) : fr;
                Rational v = fr * (pj.value.value() - n.d);
                return {TropScalar(v), fl * pj.left, fr * pj.right};
            } else if constexpr (std::is_same_v<T, BracketNode>) {
                Jet gj = n.child.jet(x);
                Rational y = x - n.x0;
                Int k = floor_int(y);
                Rational kr(k);
                Rational kl = is_integer(y) ? kr - 1 : kr;
                Rational v = kr * gj.value.value();
                return {TropScalar(v), kl * gj.left, kr * gj.right};
            } else if constexpr (std::is_same_v<T, MaxNode>) {
                bool have = false;
                Jet acc;
                for (const auto& c : n.children) {
                    if (c.is_bottom()) continue;
                    Jet j = c.jet(x);
                    if (!have || j.value.value() > acc.value.value()) {
                        acc = j;
                        have = true;
                    } else if (j.value.value() == acc.value.value()) {
                        // on a tie the left winner has the smaller left slope,
                        // the right winner the larger right slope
                        acc.left = std::min(acc.left, j.left);
                        acc.right = std::max(acc.right, j.right);
                    }
                }
                if (!have) throw DomainError("jet: function is identically -inf");
                return acc;
            } else if constexpr (std::is_same_v<T, SumNode>) {
                Jet acc{TropScalar::one(), Rational(0), Rational(0)};
                for (const auto& c : n.children) {
                    Jet j = c.jet(x);
                    acc.value = otimes(acc.value, j.value);
                    acc.left += j.left;
                    acc.right += j.right;
                }
                return acc;
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                Jet j = n.child.jet(x);
                return {power(j.value, n.factor), n.factor * j.left, n.factor * j.right};
            } else {  // ShiftNode
                return n.child.jet(x + n.offset);
            }
        },
        *node_);
}

inline Rational PLFunction::slope_left(const Rational& x) const {
    if (is_bottom()) throw DomainError("slope_left: function is identically -inf");
    return jet(x).left;
}

inline Rational PLFunction::slope_right(const Rational& x) const {
    if (is_bottom()) throw DomainError("slope_right: function is identically -inf");
    return jet(x).right;
}

inline Rational PLFunction::omega_jump(const Rational& x) const {
    if (is_bottom()) return Rational(0);
    detail::Jet j = jet(x);
    return j.right - j.left;
}

// ---------------------------------------------------------------------------
// breakpoint enumeration

namespace detail {

inline void sort_unique(std::vector<Rational>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

inline void PLFunction::collect_breakpoints(const Rational& lo, const Rational& hi,
                                            std::vector<Rational>& out) const {
    using namespace detail;
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ConstNode> || std::is_same_v<T, LinearNode>) {
                // no breakpoints
            } else if constexpr (std::is_same_v<T, FinitePLNode>) {
                for (const auto& [u, v] : n.points)
                    if (lo <= u && u <= hi) out.push_back(u);
            } else if constexpr (std::is_same_v<T, PeriodicNode>) {
                for (const auto& [u, v] : n.profile.points)
                    lattice_points(u, Rational(1), lo, hi, out);
            } else if constexpr (std::is_same_v<T, AntiPeriodicNode>) {
                for (const auto& [u, v] : n.profile.points)
                    lattice_points(u, n.profile.anti_period, lo, hi, out);
            } else if constexpr (std::is_same_v<T, ExpNode>) {
                lattice_points(Rational(0), n.step, lo, hi, out);
            } else if constexpr (std::is_same_v<T, PsiNode>) {
                lattice_points(Rational(0), n.period, lo, hi, out);
            } else if constexpr (std::is_same_v<T, UpsilonNode>) {
                lattice_points(Rational(0), Rational(1), lo, hi, out);
            } else if constexpr (std::is_same_v<T, LadderNode>) {
                lattice_points(Rational(0), Rational(1), lo, hi, out);
                for (const auto& [u, v] : n.profile.points)
                    lattice_points(u, Rational(1), lo, hi, out);
            } else if constexpr (std::is_same_v<T, BracketNode>) {
                lattice_points(n.x0, Rational(1), lo, hi, out);
                n.child.collect_breakpoints(lo, hi, out);
            } else if constexpr (std::is_same_v<T, MaxNode>) {
                std::vector<Rational> pts;
                for (const auto& c : n.children)
                    if (!c.is_bottom()) c.collect_breakpoints(lo, hi, pts);
                sort_unique(pts);
                // between consecutive candidates every child is affine; add the
                // upper-envelope crossings inside each open segment
                std::vector<Rational> bounds;
                bounds.push_back(lo);
                for (const auto& p : pts)
                    if (p > lo && p < hi) bounds.push_back(p);
                bounds.push_back(hi);
                std::vector<std::pair<Rational, Rational>> lines;  // (value at u, slope)
                for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
                    const Rational& u = bounds[i];
                    const Rational& v = bounds[i + 1];
                    if (u == v) continue;
                    lines.clear();
                    for (const auto& c : n.children) {
                        if (c.is_bottom()) continue;
                        Jet j = c.jet(u);
                        lines.emplace_back(j.value.value(), j.right);
                    }
                    // walk the envelope; winners have strictly increasing slope
                    std::size_t cur = 0;
                    for (std::size_t j = 1; j < lines.size(); ++j) {
                        if (lines[j].first > lines[cur].first ||
                            (lines[j].first == lines[cur].first &&
                             lines[j].second > lines[cur].second))
                            cur = j;
                    }
                    Rational xcur = u;
                    while (true) {
                        bool found = false;
                        Rational best;
                        std::size_t bestj = 0;
                        for (std::size_t j = 0; j < lines.size(); ++j) {
                            if (lines[j].second <= lines[cur].second) continue;
                            Rational cross =
                                u + (lines[cur].first - lines[j].first) /
                                        (lines[j].second - lines[cur].second);
                            if (cross <= xcur || cross >= v) continue;
                            if (!found || cross < best ||
                                (cross == best && lines[j].second > lines[bestj].second)) {
                                best = cross;
                                bestj = j;
                                found = true;
                            }
                        }
                        if (!found) break;
                        out.push_back(best);
                        xcur = best;
                        cur = bestj;
                    }
                }
                out.insert(out.end(), pts.begin(), pts.end());
            } else if constexpr (std::is_same_v<T, SumNode>) {
                for (const auto& c : n.children) c.collect_breakpoints(lo, hi, out);
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                if (n.factor != 0) n.child.collect_breakpoints(lo, hi, out);
            } else {  // ShiftNode
                std::vector<Rational> inner;
                n.child.collect_breakpoints(lo + n.offset, hi + n.offset, inner);
                for (auto& p : inner) out.push_back(p - n.offset);
            }
        },
        *node_);
}

inline std::vector<Rational> PLFunction::breakpoints_in(const Rational& lo,
                                                        const Rational& hi) const {
    if (lo >= hi) throw DomainError("breakpoints_in: empty window");
    std::vector<Rational> out;
    if (is_bottom()) return out;
    collect_breakpoints(lo, hi, out);
    detail::sort_unique(out);
    return out;
}

inline std::vector<BreakpointEvent> PLFunction::events_in(const Rational& lo,
                                                          const Rational& hi) const {
    std::vector<BreakpointEvent> events;
    if (is_bottom()) return events;
    for (const Rational& x : breakpoints_in(lo, hi)) {
        if (x <= lo || x >= hi) continue;
        detail::Jet j = jet(x);
        Rational w = j.right - j.left;
        if (w == 0) continue;
        events.push_back({x, w, w > 0 ? BreakpointEvent::Kind::Root : BreakpointEvent::Kind::Pole,
                          abs(w)});
    }
    return events;
}

inline bool PLFunction::is_entire_on(const Rational& lo, const Rational& hi) const {
    for (const auto& e : events_in(lo, hi))
        if (e.kind == BreakpointEvent::Kind::Pole) return false;
    return true;
}

// ---------------------------------------------------------------------------
// the pointwise algebra

inline PLFunction oplus(const PLFunction& f, const PLFunction& g) {
    return PLFunction::max_of({f, g});
}

inline PLFunction otimes(const PLFunction& f, const PLFunction& g) {
    return PLFunction::sum_of({f, g});
}

inline PLFunction oslash(const PLFunction& f, const PLFunction& g) {
    if (g.is_bottom()) throw DomainError("oslash: divisor is identically -inf");
    return PLFunction::sum_of({f, PLFunction::scale(Rational(-1), g)});
}

inline PLFunction power(const PLFunction& f, const Rational& alpha) {
    return PLFunction::scale(alpha, f);
}

inline PLFunction shift(const PLFunction& f, const Rational& c) {
    return PLFunction::shift_arg(c, f);
}

inline PLFunction operator+(const PLFunction& f, const PLFunction& g) { return otimes(f, g); }
inline PLFunction operator-(const PLFunction& f, const PLFunction& g) { return oslash(f, g); }
inline PLFunction operator*(const Rational& a, const PLFunction& f) {
    return PLFunction::scale(a, f);
}

}  // namespace trop
