#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "trop/analysis.hpp"
#include "trop/function.hpp"
#include "trop/nevanlinna.hpp"
#include "trop/solver.hpp"
#include "trop/special.hpp"

namespace trop {

// ordered_json keeps field order stable, which the CLI output contract needs
using json = nlohmann::ordered_json;

namespace detail_json {

inline json num(const Rational& r) { return format_rational(r); }

inline Rational as_rational(const json& j, const char* what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError(std::string("expected an exact number for ") + what);
}

inline json profile_to_json(const Profile& p) {
    json arr = json::array();
    for (const auto& [u, v] : p.points) arr.push_back(json::array({num(u), num(v)}));
    return arr;
}

inline Profile profile_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("profile: expected a nonempty array");
    Profile p;
    for (const auto& pt : j) {
        if (!pt.is_array() || pt.size() != 2) throw ParseError("profile: expected [x, value]");
        p.points.emplace_back(as_rational(pt[0], "profile x"), as_rational(pt[1], "profile value"));
    }
    return p;
}

inline const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

}  // namespace detail_json

inline PLFunction function_from_json(const json& j);

namespace detail_json {

inline std::vector<PLFunction> children_from_json(const json& j) {
    std::vector<PLFunction> out;
    for (const auto& c : field(j, "children")) out.push_back(function_from_json(c));
    return out;
}

}  // namespace detail_json

inline PLFunction function_from_json(const json& j) {
    using namespace detail_json;
    if (!j.is_object()) throw ParseError("function spec: expected an object");
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "const") {
        const json& v = field(j, "value");
        if (v.is_string() && v.get<std::string>() == "-inf")
            return PLFunction::constant(TropScalar::bottom());
        return PLFunction::constant(TropScalar(as_rational(v, "value")));
    }
    if (kind == "linear")
        return PLFunction::linear(as_rational(field(j, "slope"), "slope"),
                                  as_rational(field(j, "intercept"), "intercept"));
    if (kind == "finite_pl") {
        std::vector<std::pair<Rational, Rational>> pts;
        for (const auto& pt : field(j, "points")) {
            if (!pt.is_array() || pt.size() != 2) throw ParseError("finite_pl: expected [x, value]");
            pts.emplace_back(as_rational(pt[0], "x"), as_rational(pt[1], "value"));
        }
        return PLFunction::finite_pl(std::move(pts),
                                     as_rational(field(j, "left_slope"), "left_slope"),
                                     as_rational(field(j, "right_slope"), "right_slope"));
    }
    if (kind == "periodic")
        return PLFunction::periodic(profile_from_json(field(j, "profile")));
    if (kind == "antiperiodic") {
        AntiProfile p;
        p.anti_period =
            j.contains("anti_period") ? as_rational(j["anti_period"], "anti_period") : Rational(1);
        Profile q = profile_from_json(field(j, "profile"));
        p.points = std::move(q.points);
        return PLFunction::antiperiodic(std::move(p));
    }
    if (kind == "sawtooth")
        return sawtooth(as_rational(field(j, "a"), "a"), as_rational(field(j, "b"), "b"));
    if (kind == "exp") {
        Rational step = j.contains("step") ? as_rational(j["step"], "step") : Rational(1);
        return PLFunction::trop_exp(as_rational(field(j, "base"), "base"), step);
    }
    if (kind == "psi") {
        Rational period = j.contains("period") ? as_rational(j["period"], "period") : Rational(1);
        return PLFunction::psi(period);
    }
    if (kind == "upsilon") return upsilon();
    if (kind == "phi") return phi(profile_from_json(field(j, "profile")));
    if (kind == "theta") return theta(profile_from_json(field(j, "profile")));
    if (kind == "omega") return omega_special(profile_from_json(field(j, "profile")));
    if (kind == "bracket") {
        Rational wlo(-64), whi(64);
        if (j.contains("window")) {
            const json& w = j["window"];
            if (!w.is_array() || w.size() != 2) throw ParseError("bracket: window is [lo, hi]");
            wlo = as_rational(w[0], "window lo");
            whi = as_rational(w[1], "window hi");
        }
        return PLFunction::bracket(function_from_json(field(j, "child")),
                                   as_rational(field(j, "x0"), "x0"), wlo, whi);
    }
    if (kind == "max") return PLFunction::max_of(detail_json::children_from_json(j));
    if (kind == "sum") return PLFunction::sum_of(detail_json::children_from_json(j));
    if (kind == "scale")
        return PLFunction::scale(as_rational(field(j, "factor"), "factor"),
                                 function_from_json(field(j, "child")));
    if (kind == "shift")
        return PLFunction::shift_arg(as_rational(field(j, "offset"), "offset"),
                                     function_from_json(field(j, "child")));
    throw ParseError("unknown function kind '" + kind + "'");
}

inline json function_to_json(const PLFunction& f) {
    using namespace detail_json;
    using namespace detail;
    return std::visit(
        [&](const auto& n) -> json {
            using T = std::decay_t<decltype(n)>;
            json j;
            if constexpr (std::is_same_v<T, ConstNode>) {
                j["kind"] = "const";
                j["value"] = n.value.is_bottom() ? json("-inf") : num(n.value.value());
            } else if constexpr (std::is_same_v<T, LinearNode>) {
                j["kind"] = "linear";
                j["slope"] = num(n.slope);
                j["intercept"] = num(n.intercept);
            } else if constexpr (std::is_same_v<T, FinitePLNode>) {
                j["kind"] = "finite_pl";
                json pts = json::array();
                for (const auto& [x, v] : n.points) pts.push_back(json::array({num(x), num(v)}));
                j["points"] = std::move(pts);
                j["left_slope"] = num(n.left_slope);
                j["right_slope"] = num(n.right_slope);
            } else if constexpr (std::is_same_v<T, PeriodicNode>) {
                j["kind"] = "periodic";
                j["profile"] = profile_to_json(n.profile);
            } else if constexpr (std::is_same_v<T, AntiPeriodicNode>) {
                j["kind"] = "antiperiodic";
                Profile q;
                q.points = n.profile.points;
                j["profile"] = profile_to_json(q);
                j["anti_period"] = num(n.profile.anti_period);
            } else if constexpr (std::is_same_v<T, ExpNode>) {
                j["kind"] = "exp";
                j["base"] = num(n.base);
                j["step"] = num(n.step);
            } else if constexpr (std::is_same_v<T, PsiNode>) {
                j["kind"] = "psi";
                j["period"] = num(n.period);
            } else if constexpr (std::is_same_v<T, UpsilonNode>) {
                j["kind"] = "upsilon";
            } else if constexpr (std::is_same_v<T, LadderNode>) {
                j["kind"] = n.level == 1 ? "phi" : n.level == 2 ? "theta" : "omega";
                j["profile"] = profile_to_json(n.profile);
            } else if constexpr (std::is_same_v<T, BracketNode>) {
                j["kind"] = "bracket";
                j["x0"] = num(n.x0);
                j["child"] = function_to_json(n.child);
                j["window"] = json::array({num(n.window_lo), num(n.window_hi)});
            } else if constexpr (std::is_same_v<T, MaxNode> || std::is_same_v<T, SumNode>) {
                j["kind"] = std::is_same_v<T, MaxNode> ? "max" : "sum";
                json kids = json::array();
                for (const auto& c : n.children) kids.push_back(function_to_json(c));
                j["children"] = std::move(kids);
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                j["kind"] = "scale";
                j["factor"] = num(n.factor);
                j["child"] = function_to_json(n.child);
            } else {  // ShiftNode
                j["kind"] = "shift";
                j["offset"] = num(n.offset);
                j["child"] = function_to_json(n.child);
            }
            return j;
        },
        f.node());
}

// ---------------------------------------------------------------------------
// solution families

inline json term_to_json(const Term& t) {
    using detail_json::num;
    json j;
    j["kind"] = to_string(t.kind);
    if (t.free_coeff)
        j["coeff"] = "free";
    else
        j["coeff"] = num(t.coeff);
    switch (t.kind) {
        case TermKind::ExpComb:
            j["base"] = num(t.base);
            if (t.step != 1) j["step"] = num(t.step);
            break;
        case TermKind::BracketExp:
            j["base"] = num(t.base);
            j["lattice_rule"] = "b + 1/(1-base)";
            j["lattice_offset"] = num(exp_root_offset(t.base));
            break;
        case TermKind::BracketXi:
            j["lattice_rule"] = "zero of the anti-periodic factor";
            break;
        case TermKind::AntiPeriodicSlot:
            if (t.anti_period != 1) j["anti_period"] = num(t.anti_period);
            break;
        default:
            break;
    }
    if (!t.slot.empty()) j["slot"] = t.slot;
    return j;
}

inline json family_to_json(const SolutionFamily& fam) {
    json j;
    j["status"] = to_string(fam.status);
    j["case_label"] = fam.case_label;
    json terms = json::array();
    for (const Term& t : fam.terms) terms.push_back(term_to_json(t));
    j["terms"] = std::move(terms);
    if (!fam.open_note.empty()) j["open_note"] = fam.open_note;
    return j;
}

// ---------------------------------------------------------------------------
// reports

inline json nevanlinna_to_json(const NevanlinnaReport& rep) {
    using detail_json::num;
    json j;
    json rows = json::array();
    for (std::size_t i = 0; i < rep.radii.size(); ++i) {
        json row;
        row["r"] = num(rep.radii[i]);
        row["m"] = num(rep.m_values[i]);
        row["N"] = num(rep.n_values[i]);
        row["T"] = num(rep.t_values[i]);
        rows.push_back(std::move(row));
    }
    j["samples"] = std::move(rows);
    j["order_estimate"] = rep.order;
    if (rep.hyper_meaningful)
        j["hyper_order_estimate"] = rep.hyper_order;
    else
        j["hyper_order_estimate"] = nullptr;
    j["hyper_order_meaningful"] = rep.hyper_meaningful;
    j["bounded_characteristic"] = rep.bounded_characteristic;
    j["fit_window"] = json::array(
        {num(rep.fit_window.first), num(rep.fit_window.second)});
    j["note"] = "least-squares slopes over the top half of the radius grid";
    return j;
}

inline json census_to_json(const RootCensus& census) {
    using detail_json::num;
    json j;
    j["window"] = json::array({num(census.lo), num(census.hi)});
    j["count"] = census.count;
    j["total_multiplicity"] = num(census.total_multiplicity);
    json roots = json::array();
    for (const auto& e : census.roots) {
        json r;
        r["x"] = num(e.location);
        r["omega"] = num(e.omega);
        r["multiplicity"] = num(e.multiplicity);
        roots.push_back(std::move(r));
    }
    j["roots"] = std::move(roots);
    if (census.linear_input) j["note"] = "hypothesis violated (linear input)";
    return j;
}

inline json events_to_json(const std::vector<BreakpointEvent>& events) {
    using detail_json::num;
    json arr = json::array();
    for (const auto& e : events) {
        json r;
        r["x"] = num(e.location);
        r["omega"] = num(e.omega);
        r["kind"] = e.kind == BreakpointEvent::Kind::Root ? "root" : "pole";
        r["multiplicity"] = num(e.multiplicity);
        arr.push_back(std::move(r));
    }
    return arr;
}

inline json fermat_to_json(const FermatVerdict& v) {
    using detail_json::num;
    json j;
    j["verdict"] = v.holds ? "holds_on_window" : "witness";
    j["window"] = json::array({num(v.window_lo), num(v.window_hi)});
    if (!v.holds) {
        j["witness_x"] = num(*v.witness_x);
        j["witness_value"] = v.witness_value ? json(num(*v.witness_value)) : json("-inf");
    }
    return j;
}

inline json linearity_to_json(const LinearityResult& r) {
    using detail_json::num;
    json j;
    if (r.is_linear) {
        j["verdict"] = "is_linear";
        j["a"] = num(r.a);
        j["b"] = num(r.b);
    } else {
        j["verdict"] = "not_linear";
        j["witness_x"] = num(*r.witness_x);
    }
    return j;
}

inline json bruck_to_json(const BruckReport& rep) {
    using detail_json::num;
    using Alt = BruckReport::Alternative;
    json j;
    switch (rep.alternative) {
        case Alt::NegTail: j["alternative"] = "neg_tail"; break;
        case Alt::PosTail: j["alternative"] = "pos_tail"; break;
        case Alt::BothTails: j["alternative"] = "both_tails"; break;
        default: j["alternative"] = "inconclusive"; break;
    }
    j["A"] = num(rep.A);
    j["B"] = num(rep.B);
    j["shared_root_check"] = rep.shared_root_check;
    j["periodic_residue_verified"] = rep.periodic_residue_verified;
    j["tails"] = json::array({num(rep.tail_lo), num(rep.tail_hi)});
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

}  // namespace trop
